#include "delseq/entropy.hpp"

#include <charconv>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <set>

#include "delseq/embeddings.hpp"

namespace delseq {

namespace {

using i64 = std::int64_t;

double tidy(double v) { return v == 0.0 ? 0.0 : v; }

double xlog2x(double t) { return t > 0.0 ? t * std::log2(t) : 0.0; }

using RleKey = std::pair<Bit, std::vector<std::size_t>>;

// Every encoding obtained from r by inserting one symbol.
void single_insertions(const RleKey& r, std::set<RleKey>& out) {
    const auto& [first, runs] = r;
    const Bit other = static_cast<Bit>(first ^ 1U);
    // new run at the front
    {
        std::vector<std::size_t> v{1};
        v.insert(v.end(), runs.begin(), runs.end());
        out.emplace(other, std::move(v));
    }
    // new run at the back
    {
        std::vector<std::size_t> v = runs;
        v.push_back(1);
        out.emplace(first, std::move(v));
    }
    for (std::size_t i = 0; i < runs.size(); ++i) {
        std::vector<std::size_t> lengthened = runs;
        ++lengthened[i];
        out.emplace(first, std::move(lengthened));
        for (std::size_t p = 1; p < runs[i]; ++p) {
            std::vector<std::size_t> split(runs.begin(), runs.begin() + static_cast<std::ptrdiff_t>(i));
            split.push_back(p);
            split.push_back(1);
            split.push_back(runs[i] - p);
            split.insert(split.end(), runs.begin() + static_cast<std::ptrdiff_t>(i) + 1, runs.end());
            out.emplace(first, std::move(split));
        }
    }
}

void check_nonempty(const Rle& r) {
    if (r.runs.empty() || !r.valid()) throw DomainError("deletion classes need a nonempty valid RLE");
}

WeightClasses classes_from_map(const std::map<BigCount, BigCount, std::greater<>>& hist) {
    WeightClasses out;
    for (const auto& [w, c] : hist) out.classes.emplace_back(w, c);
    return out;
}

void fill_totals(DeletionClasses& out, std::size_t m) {
    out.string_count = out.classes.string_count();
    out.weight_sum = out.classes.weight_sum();
    out.expected_string_count = uncertainty_cardinality(m + out.deletions, m);
    out.expected_weight_sum = total_masks(m + out.deletions, m);
}

}  // namespace

EntropyMeasure EntropyMeasure::renyi(double alpha) {
    if (!(alpha > 0.0) || alpha == 1.0 || !std::isfinite(alpha))
        throw DomainError("Renyi order must be positive, finite and different from 1");
    return EntropyMeasure(Kind::renyi, alpha);
}

EntropyMeasure EntropyMeasure::parse(std::string_view text) {
    if (text == "shannon") return shannon();
    if (text == "min") return min();
    if (text == "hartley") return hartley();
    if (text.starts_with("renyi")) {
        std::string_view rest = text.substr(5);
        if (rest.starts_with(":") || rest.starts_with("=")) rest.remove_prefix(1);
        double alpha = 0.0;
        const auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), alpha);
        if (rest.empty() || ec != std::errc{} || ptr != rest.data() + rest.size())
            throw DomainError("invalid Renyi order in '" + std::string(text) + "'");
        return renyi(alpha);
    }
    throw DomainError("unknown entropy measure '" + std::string(text) + "'");
}

std::string EntropyMeasure::name() const {
    switch (kind_) {
        case Kind::shannon: return "shannon";
        case Kind::min: return "min";
        case Kind::hartley: return "hartley";
        case Kind::renyi: break;
    }
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, alpha_);
    const std::string a(buf, res.ptr);
    if (a.find('.') == std::string::npos && a.find('e') == std::string::npos) return "renyi" + a;
    return "renyi:" + a;
}

double entropy(const WeightClasses& classes, const EntropyMeasure& measure) {
    if (classes.classes.empty()) throw DomainError("entropy of an empty distribution");
    const double mu = to_double(classes.weight_sum());
    switch (measure.kind()) {
        case EntropyMeasure::Kind::shannon: {
            double h = 0.0;
            for (const auto& [w, c] : classes.classes) {
                const double p = to_double(w) / mu;
                h -= to_double(c) * xlog2x(p);
            }
            return tidy(h);
        }
        case EntropyMeasure::Kind::renyi: {
            const double a = measure.alpha();
            double sum = 0.0;
            for (const auto& [w, c] : classes.classes) sum += to_double(c) * std::pow(to_double(w) / mu, a);
            return tidy(std::log2(sum) / (1.0 - a));
        }
        case EntropyMeasure::Kind::min: {
            BigCount top = 0;
            for (const auto& [w, c] : classes.classes) top = std::max(top, w);
            const BigCount mu_big = classes.weight_sum();
            // exact when mu / top is an integer, as for the constant strings
            if (mu_big % top == 0) return tidy(log2_big(mu_big / top));
            return tidy(log2_big(mu_big) - log2_big(top));
        }
        case EntropyMeasure::Kind::hartley: return tidy(log2_big(classes.string_count()));
    }
    return 0.0;
}

double entropy(const Posterior& p, const EntropyMeasure& measure) { return entropy(weight_classes(p), measure); }

double min_shannon_closed(std::size_t n, std::size_t m) {
    const double mu = to_double(total_masks(n, m));
    double h = 0.0;
    for (std::size_t j = 0; j <= n - m; ++j) {
        const double count = to_double(binomial(static_cast<i64>(n), static_cast<i64>(j)));
        const double p = to_double(binomial(static_cast<i64>(n - j), static_cast<i64>(m))) / mu;
        h -= count * xlog2x(p);
    }
    return tidy(h);
}

double min_renyi2_closed(std::size_t n, std::size_t m) {
    const double mu = to_double(total_masks(n, m));
    double sum = 0.0;
    for (std::size_t j = 0; j <= n - m; ++j) {
        const double count = to_double(binomial(static_cast<i64>(n), static_cast<i64>(j)));
        const double p = to_double(binomial(static_cast<i64>(n - j), static_cast<i64>(m))) / mu;
        sum += count * p * p;
    }
    return tidy(-std::log2(sum));
}

double min_minentropy_closed(std::size_t n, std::size_t m) {
    if (m > n) throw DomainError("m exceeds n");
    return static_cast<double>(n - m);
}

DeletionClasses single_deletion_classes(const Rle& x_rle) {
    check_nonempty(x_rle);
    const std::size_t m = x_rle.length();
    const std::size_t l = x_rle.blocks();
    std::map<BigCount, BigCount, std::greater<>> hist;
    for (std::size_t k : x_rle.runs) hist[BigCount(k + 1)] += 1;
    hist[BigCount(1)] += BigCount(m - l + 2);
    DeletionClasses out;
    out.deletions = 1;
    out.classes = classes_from_map(hist);
    fill_totals(out, m);
    return out;
}

DeletionClasses double_deletion_classes(const Rle& x_rle) {
    check_nonempty(x_rle);
    const std::size_t m = x_rle.length();
    std::set<RleKey> once;
    single_insertions(RleKey{*x_rle.first_symbol, x_rle.runs}, once);
    std::set<RleKey> twice;
    for (const RleKey& r : once) single_insertions(r, twice);

    const BitString x = rle_decode(x_rle);
    std::map<BigCount, BigCount, std::greater<>> hist;
    for (const auto& [first, runs] : twice) {
        Rle y;
        y.first_symbol = first;
        y.runs = runs;
        hist[count_embeddings_runs(x, rle_decode(y))] += 1;
    }
    DeletionClasses out;
    out.deletions = 2;
    out.classes = classes_from_map(hist);
    fill_totals(out, m);
    return out;
}

double delta1(std::size_t k1, std::size_t k2) {
    if (k1 == 0 || k2 == 0) throw DomainError("run lengths must be positive");
    const auto e = [](double t) { return -xlog2x(t); };
    return e(static_cast<double>(k1 + 1)) + e(static_cast<double>(k2 + 1)) - e(static_cast<double>(k1 + k2 + 1));
}

std::vector<GChainStep> g_chain_entropies(const BitString& x, std::size_t n, const EntropyMeasure& measure,
                                          std::size_t max_bits) {
    std::vector<GChainStep> out;
    BitString current = x;
    while (true) {
        out.push_back({current, entropy(build_posterior(current, n, max_bits), measure)});
        if (rle_encode(current).blocks() <= 1) break;
        current = apply_g(current);
    }
    return out;
}

EntropyEstimate entropy_estimate_from_moments(const BitString& x, std::size_t n, std::size_t max_bits) {
    const WeightClasses classes = weight_classes(build_posterior(x, n, max_bits));
    const BigCount mu = classes.weight_sum();
    const long double count = static_cast<long double>(to_double(classes.string_count()));
    const long double mean = static_cast<long double>(to_double(mu)) / count;
    long double m2 = 0, m3 = 0, m4 = 0;
    for (const auto& [w, c] : classes.classes) {
        const long double d = static_cast<long double>(to_double(w)) - mean;
        const long double share = static_cast<long double>(to_double(c)) / count;
        m2 += share * d * d;
        m3 += share * d * d * d;
        m4 += share * d * d * d * d;
    }
    const long double ln2 = std::numbers::ln2_v<long double>;
    EntropyEstimate out;
    out.exact = entropy(classes, EntropyMeasure::shannon());
    out.mean = static_cast<double>(mean);
    out.variance = static_cast<double>(m2);
    out.third = static_cast<double>(m3);
    out.fourth = static_cast<double>(m4);
    const long double correction = m2 / (2 * mean * mean) - m3 / (6 * mean * mean * mean);
    out.estimate = tidy(static_cast<double>(static_cast<long double>(log2_big(mu)) - std::log2(mean) - correction / ln2));
    out.bound = static_cast<double>((5.0L / 3.0L) * m4 / (mean * mean * mean * mean * ln2));
    return out;
}

}  // namespace delseq
