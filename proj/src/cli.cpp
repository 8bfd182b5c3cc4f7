#include "delseq/cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdint>
#include <functional>
#include <ostream>
#include <sstream>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "delseq/clustering.hpp"
#include "delseq/embeddings.hpp"
#include "delseq/entropy.hpp"
#include "delseq/hws.hpp"
#include "delseq/superspace.hpp"
#include "delseq/verify.hpp"

namespace delseq {

namespace {

using Json = nlohmann::ordered_json;
using Cell = std::variant<std::string, BigCount, double, std::int64_t, bool>;

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

std::string cell_text(const Cell& c) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::string>)
                return v;
            else if constexpr (std::is_same_v<T, BigCount>)
                return to_decimal(v);
            else if constexpr (std::is_same_v<T, double>)
                return format_double(v);
            else if constexpr (std::is_same_v<T, bool>)
                return v ? "true" : "false";
            else
                return std::to_string(v);
        },
        c);
}

Json cell_json(const Cell& c) {
    return std::visit(
        [](const auto& v) -> Json {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, BigCount>)
                return to_decimal(v);
            else if constexpr (std::is_same_v<T, double>)
                return std::isfinite(v) ? Json(v) : Json(nullptr);
            else
                return v;
        },
        c);
}

struct Table {
    std::string schema;
    Json params = Json::object();
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add(std::vector<Cell> row) { rows.push_back(std::move(row)); }
};

struct Settings {
    std::string format = "csv";
    std::size_t max_bits = kDefaultMaxBits;
};

void emit(const Table& t, const Settings& s, std::ostream& out) {
    if (s.format == "json") {
        Json doc;
        doc["schema"] = t.schema;
        doc["params"] = t.params;
        Json rows = Json::array();
        for (const auto& row : t.rows) {
            Json obj = Json::object();
            for (std::size_t i = 0; i < t.columns.size(); ++i) obj[t.columns[i]] = cell_json(row[i]);
            rows.push_back(std::move(obj));
        }
        doc["rows"] = std::move(rows);
        out << doc.dump(2) << '\n';
        return;
    }
    for (std::size_t i = 0; i < t.columns.size(); ++i) out << (i ? "," : "") << csv_field(t.columns[i]);
    out << '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(cell_text(row[i]));
        out << '\n';
    }
}

std::int64_t as_int(std::size_t v) { return static_cast<std::int64_t>(v); }

void require_cap(std::size_t n, const Settings& s) {
    if (n > s.max_bits)
        throw SizeError("n = " + std::to_string(n) + " exceeds the enumeration cap of " + std::to_string(s.max_bits) +
                        " bits (raise with --max-bits or DELSEQ_MAX_BITS)");
}

BitString parse_x(const std::string& text, std::size_t n) {
    BitString x = BitString::parse(text);
    if (x.size() > n)
        throw DomainError("|x| = " + std::to_string(x.size()) + " exceeds n = " + std::to_string(n));
    return x;
}

// ---------------------------------------------------------------------------

Table cmd_posterior(const std::string& xs, std::size_t n, const Settings& s) {
    const BitString x = parse_x(xs, n);
    require_cap(n, s);
    const Posterior p = build_posterior(x, n, s.max_bits);
    Table t{"posterior", Json::object(), {"y", "omega", "prob", "strings"}, {}};
    t.params["x"] = x.to_string();
    t.params["n"] = n;
    const double mu = to_double(p.mu);
    for (std::size_t i = 0; i < p.size(); ++i) {
        const auto w = p.entries[i].weight;
        t.add({p.y(i).to_string(), BigCount(w), static_cast<double>(w) / mu, std::int64_t{1}});
    }
    t.add({std::string("total"), p.mu, 1.0, BigCount(p.size())});
    return t;
}

Table cmd_entropy_scan(std::size_t n, std::size_t m, const std::vector<std::string>& names, const Settings& s) {
    if (m > n) throw DomainError("m exceeds n");
    require_cap(n, s);
    std::vector<EntropyMeasure> measures;
    for (const auto& name : names) measures.push_back(EntropyMeasure::parse(name));
    Table t{"entropy-scan", Json::object(), {"x", "kappa2"}, {}};
    t.params["n"] = n;
    t.params["m"] = m;
    Json list = Json::array();
    for (const auto& me : measures) {
        t.columns.push_back(me.name());
        list.push_back(me.name());
    }
    t.params["measures"] = list;
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << m); ++v) {
        const BitString x = BitString::from_integer(v, m);
        const WeightClasses w = weight_classes(build_posterior(x, n, s.max_bits));
        std::vector<Cell> row{x.to_string(), m > 0 ? Cell(kappa_squared(x)) : Cell(std::string())};
        for (const auto& me : measures) row.emplace_back(entropy(w, me));
        t.add(std::move(row));
    }
    return t;
}

Table cmd_kappa(std::size_t m, std::optional<std::size_t> n, const Settings& s) {
    if (m == 0) throw DomainError("m must be positive");
    Table t{"kappa", Json::object(), {"x", "kappa2", "kappa2_max"}, {}};
    t.params["m"] = m;
    const BigCount kmax = kappa_max(m);
    if (n) {
        if (m > *n) throw DomainError("m exceeds n");
        require_cap(*n, s);
        t.params["n"] = *n;
        t.columns.push_back("entropy");
        for (const auto& row : kappa_entropy_table(*n, m, s.max_bits))
            t.add({row.x.to_string(), row.kappa2, kmax, row.entropy});
        return t;
    }
    if (m > 24) throw SizeError("m exceeds 24 for a full kappa listing");
    std::vector<std::pair<BigCount, BitString>> rows;
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << m); ++v) {
        BitString x = BitString::from_integer(v, m);
        rows.emplace_back(kappa_squared(x), std::move(x));
    }
    std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first > b.first;
        return a.second < b.second;
    });
    for (const auto& [k, x] : rows) t.add({x.to_string(), k, kmax});
    return t;
}

Table cmd_clusters(const std::string& xs, std::size_t n, const Settings& s) {
    const BitString x = parse_x(xs, n);
    require_cap(n, s);
    const std::size_t m = x.size();
    const std::size_t hx = hamming_weight(x);
    const ClusterCensus census = census_clusters(build_posterior(x, n, s.max_bits));
    Table t{"clusters",
            Json::object(),
            {"c", "size_closed", "size_stars_bars", "size_recurrence", "size_bruteforce", "maximal_initials",
             "maximal_bruteforce"},
            {}};
    t.params["x"] = x.to_string();
    t.params["n"] = n;
    for (std::size_t c = 0; c <= n - m; ++c) {
        const Cell maximal = m > 0 ? Cell(maximal_initials_cluster(n, m, hx, c)) : Cell(std::string());
        t.add({as_int(c), cluster_size_closed(n, m, hx, c), cluster_size_stars_bars(n, m, hx, c),
               cluster_size_recurrence(n, x, c), census.sizes[c], maximal, census.maximal[c]});
    }
    return t;
}

Table cmd_singletons(const std::string& xs, std::size_t n, const Settings& s) {
    const BitString x = parse_x(xs, n);
    if (x.empty()) throw DomainError("x must be nonempty");
    require_cap(n, s);
    const RhoProfile r = rho(x);
    const ClusterCensus census = census_clusters(build_posterior(x, n, s.max_bits));
    Table t{"singletons", Json::object(), {"rho0", "rho1", "count_formula", "count_bruteforce"}, {}};
    t.params["x"] = x.to_string();
    t.params["n"] = n;
    t.add({as_int(r.rho0), as_int(r.rho1), count_singletons(n, x), census.singletons});
    return t;
}

Table cmd_classes(const std::string& rle_text, std::size_t deletions) {
    const Rle r = Rle::parse(rle_text);
    if (r.runs.empty()) throw DomainError("--x-rle needs at least one run");
    if (deletions != 1 && deletions != 2) throw DomainError("--deletions must be 1 or 2");
    const DeletionClasses dc = deletions == 1 ? single_deletion_classes(r) : double_deletion_classes(r);
    Table t{"classes",
            Json::object(),
            {"weight", "multiplicity", "string_count", "expected_string_count", "weight_sum", "expected_weight_sum",
             "identities_ok"},
            {}};
    t.params["x"] = rle_decode(r).to_string();
    t.params["x_rle"] = r.to_string();
    t.params["deletions"] = deletions;
    for (const auto& [w, c] : dc.classes.classes)
        t.add({w, c, dc.string_count, dc.expected_string_count, dc.weight_sum, dc.expected_weight_sum,
               dc.identities_hold()});
    return t;
}

Table cmd_gchain(const std::string& xs, std::size_t n, const std::string& measure_name, const Settings& s) {
    const BitString x = parse_x(xs, n);
    const EntropyMeasure measure = EntropyMeasure::parse(measure_name);
    require_cap(n, s);
    Table t{"gchain", Json::object(), {"step", "x", "x_rle", "entropy"}, {}};
    t.params["x"] = x.to_string();
    t.params["n"] = n;
    t.params["measure"] = measure.name();
    std::int64_t step = 0;
    for (const auto& st : g_chain_entropies(x, n, measure, s.max_bits))
        t.add({step++, st.x.to_string(), rle_encode(st.x).to_string(), st.entropy});
    return t;
}

Table cmd_estimate(const std::string& xs, std::size_t n, const Settings& s) {
    const BitString x = parse_x(xs, n);
    require_cap(n, s);
    const EntropyEstimate e = entropy_estimate_from_moments(x, n, s.max_bits);
    Table t{"estimate",
            Json::object(),
            {"exact_H", "moment_estimate", "abs_error", "error_bound", "mean", "variance", "third_moment"},
            {}};
    t.params["x"] = x.to_string();
    t.params["n"] = n;
    t.add({e.exact, e.estimate, std::fabs(e.estimate - e.exact), e.bound, e.mean, e.variance, e.third});
    return t;
}

Table cmd_verify(std::size_t max_n, const std::vector<std::string>& suites, const Settings& s, bool& failed) {
    require_cap(max_n, s);
    std::vector<SuiteReport> reports;
    if (suites.empty()) {
        reports = run_all_suites(max_n);
    } else {
        for (const auto& name : suites) reports.push_back(run_suite(name, max_n));
    }
    Table t{"verify", Json::object(), {"suite", "checks", "failures", "status", "details"}, {}};
    t.params["max_n"] = max_n;
    failed = false;
    for (const auto& r : reports) {
        std::string details;
        for (const auto& msg : r.messages) details += (details.empty() ? "" : "; ") + msg;
        for (const auto& obs : r.observations) details += (details.empty() ? "" : "; ") + obs;
        t.add({r.name, as_int(r.checks), as_int(r.failures), std::string(r.ok() ? "PASS" : "FAIL"), details});
        failed = failed || !r.ok();
    }
    return t;
}

std::string suite_help() {
    std::string text = "Suites:\n";
    for (const auto& info : verification_suites()) text += "  " + info.name + ": " + info.description + "\n";
    return text;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact combinatorics of the binary deletion channel", "delseq"};
    app.require_subcommand(1);
    app.fallthrough();

    Settings settings;
    app.add_option("--format", settings.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--max-bits", settings.max_bits, "Largest n that may be enumerated exhaustively")
        ->envname("DELSEQ_MAX_BITS")
        ->check(CLI::Range(std::size_t{0}, std::size_t{62}));

    std::string x, x_rle, measure = "shannon";
    std::size_t n = 0, m = 0, deletions = 1, max_n = 10;
    std::optional<std::size_t> kappa_n;
    std::vector<std::string> measures{"shannon", "renyi2", "min"};
    std::vector<std::string> suites;

    auto* posterior = app.add_subcommand("posterior", "Posterior over supersequences of x (one row per y)");
    posterior->add_option("--x", x, "Subsequence as a bit string")->required();
    posterior->add_option("--n", n, "Supersequence length")->required();

    auto* scan = app.add_subcommand("entropy-scan", "Entropies of every x of length m");
    scan->add_option("--n", n, "Supersequence length")->required();
    scan->add_option("--m", m, "Subsequence length")->required();
    scan->add_option("--measures", measures, "Comma-separated measures: shannon, renyi2, renyi:A, min, hartley")
        ->delimiter(',');

    auto* kappa = app.add_subcommand("kappa", "Autocorrelation coefficient for every x of length m");
    kappa->add_option("--m", m, "Subsequence length")->required();
    kappa->add_option("--n", kappa_n, "Also compute the Shannon entropy at this length");

    auto* clusters = app.add_subcommand("clusters", "Cluster sizes and maximal initials per extra-ones count c");
    clusters->add_option("--x", x, "Subsequence as a bit string")->required();
    clusters->add_option("--n", n, "Supersequence length")->required();

    auto* singletons = app.add_subcommand("singletons", "Supersequences with exactly one embedding");
    singletons->add_option("--x", x, "Subsequence as a bit string")->required();
    singletons->add_option("--n", n, "Supersequence length")->required();

    auto* classes = app.add_subcommand("classes", "Weight classes after one or two deletions");
    classes->add_option("--x-rle", x_rle, "Run lengths, e.g. 2,1,3 or s=0:2,1,3 (first symbol defaults to 1)")
        ->required();
    classes->add_option("--deletions", deletions, "1 or 2");

    auto* gchain = app.add_subcommand("gchain", "Entropy along x, g(x), g(g(x)), ...");
    gchain->add_option("--x", x, "Subsequence as a bit string")->required();
    gchain->add_option("--n", n, "Supersequence length")->required();
    gchain->add_option("--measure", measure, "shannon, renyi2, renyi:A, min or hartley");

    auto* estimate = app.add_subcommand("estimate", "Shannon entropy estimated from moments of the embedding count");
    estimate->add_option("--x", x, "Subsequence as a bit string")->required();
    estimate->add_option("--n", n, "Supersequence length")->required();

    auto* verify = app.add_subcommand("verify", "Run the oracle and property suites");
    verify->add_option("--max-n", max_n, "Largest exhaustive length");
    verify->add_option("--suite", suites, "Run only these suites (repeatable)");
    verify->footer(suite_help());

    std::vector<std::string> argv_store{"delseq"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_store) argv.push_back(a.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitBadArgs;
    }

    try {
        Table table;
        bool failed = false;
        if (*posterior) table = cmd_posterior(x, n, settings);
        else if (*scan) table = cmd_entropy_scan(n, m, measures, settings);
        else if (*kappa) table = cmd_kappa(m, kappa_n, settings);
        else if (*clusters) table = cmd_clusters(x, n, settings);
        else if (*singletons) table = cmd_singletons(x, n, settings);
        else if (*classes) table = cmd_classes(x_rle, deletions);
        else if (*gchain) table = cmd_gchain(x, n, measure, settings);
        else if (*estimate) table = cmd_estimate(x, n, settings);
        else if (*verify) table = cmd_verify(max_n, suites, settings, failed);
        emit(table, settings, out);
        return failed ? kExitVerifyFailed : kExitOk;
    } catch (const SizeError& e) {
        err << "delseq: " << e.what() << '\n';
        return kExitSizeCap;
    } catch (const DomainError& e) {
        err << "delseq: " << e.what() << '\n';
        return kExitBadArgs;
    }
}

}  // namespace delseq
