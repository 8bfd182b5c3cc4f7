#include "delseq/verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "delseq/clustering.hpp"
#include "delseq/embeddings.hpp"
#include "delseq/entropy.hpp"
#include "delseq/hws.hpp"
#include "delseq/superspace.hpp"

namespace delseq {

namespace {

constexpr std::size_t kMaxMessages = 8;
constexpr std::uint64_t kSeed = 0x5eed'0f'de1e7e;

class Checker {
public:
    explicit Checker(SuiteReport& report) : report_(report) {}

    template <typename Describe>
    void check(bool condition, Describe&& describe) {
        ++report_.checks;
        if (condition) return;
        ++report_.failures;
        if (report_.messages.size() < kMaxMessages) report_.messages.push_back(describe());
    }

    void observe(std::string note) { report_.observations.push_back(std::move(note)); }

private:
    SuiteReport& report_;
};

std::vector<BitString> all_strings(std::size_t len) {
    std::vector<BitString> out;
    out.reserve(std::size_t{1} << len);
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << len); ++v) out.push_back(BitString::from_integer(v, len));
    return out;
}

BitString random_string(std::mt19937_64& rng, std::size_t len) {
    std::vector<Bit> bits(len);
    for (auto& b : bits) b = static_cast<Bit>(rng() & 1U);
    return BitString(std::move(bits));
}

Rle random_composition(std::mt19937_64& rng, std::size_t m) {
    // each of the m-1 gaps is a run boundary with probability 1/2
    Rle r;
    r.first_symbol = static_cast<Bit>(rng() & 1U);
    std::size_t run = 1;
    for (std::size_t i = 1; i < m; ++i) {
        if (rng() & 1U) {
            r.runs.push_back(run);
            run = 1;
        } else {
            ++run;
        }
    }
    r.runs.push_back(run);
    return r;
}

std::string str(const BigCount& v) { return to_decimal(v); }

bool close(double a, double b, double tol) { return std::fabs(a - b) <= tol; }

double shannon_of(const BitString& x, std::size_t n) { return entropy(build_posterior(x, n), EntropyMeasure::shannon()); }

// ---------------------------------------------------------------------------

void suite_core(Checker& c, std::size_t max_n) {
    c.check(binomial(5, 3) == 10 && binomial(4, 7) == 0 && binomial(9, 5) == 126 && binomial(0, 0) == 1,
            [] { return std::string("binomial spot values"); });
    const std::size_t top = std::min<std::size_t>(max_n, 16);
    for (std::size_t len = 0; len <= top; ++len) {
        for (const BitString& s : all_strings(len)) {
            const Rle r = rle_encode(s);
            c.check(rle_decode(r) == s, [&] { return "round trip fails for " + s.to_string(); });
            bool alternate = r.valid();
            c.check(alternate && r.length() == len, [&] { return "invalid encoding of " + s.to_string(); });
            const Rle rc = rle_encode(s.complement());
            c.check(rc.runs == r.runs && (len == 0 || rc.first_symbol != r.first_symbol),
                    [&] { return "complement changes runs of " + s.to_string(); });
            if (len == 0 || len > 12) continue;
            const Rle g = apply_g(r);
            const std::size_t expect = r.blocks() > 1 ? r.blocks() - 1 : 1;
            c.check(g.blocks() == expect && g.length() == r.length(),
                    [&] { return "apply_g block count wrong for " + s.to_string(); });
            Rle cur = r;
            std::size_t steps = 0;
            while (cur.blocks() > 1) {
                cur = apply_g(cur);
                ++steps;
            }
            c.check(steps + 1 == r.blocks(), [&] { return "g-chain length wrong for " + s.to_string(); });
        }
    }
}

void suite_embeddings(Checker& c, std::size_t max_n) {
    const std::size_t exhaustive = std::min<std::size_t>(max_n, 8);
    for (std::size_t n = 0; n <= exhaustive; ++n) {
        const auto ys = all_strings(n);
        for (std::size_t m = 0; m <= n; ++m) {
            const auto xs = all_strings(m);
            for (const BitString& y : ys) {
                for (const BitString& x : xs) {
                    const auto masks = enumerate_masks(x, y);
                    const BigCount dp = count_embeddings_dp(x, y);
                    const BigCount runs = count_embeddings_runs(x, y);
                    c.check(dp == masks.size() && runs == dp, [&] {
                        return "count mismatch x=" + x.to_string() + " y=" + y.to_string() + ": masks " +
                               std::to_string(masks.size()) + " dp " + str(dp) + " runs " + str(runs);
                    });
                    c.check(std::is_sorted(masks.begin(), masks.end()),
                            [&] { return "masks out of order for x=" + x.to_string(); });
                    c.check(count_embeddings_dp(x.complement(), y.complement()) == dp &&
                                count_embeddings_dp(x.reversed(), y.reversed()) == dp,
                            [&] { return "symmetry fails x=" + x.to_string() + " y=" + y.to_string(); });
                    if (m >= 1 && m < n) {
                        const BigCount cap = binomial(static_cast<std::int64_t>(n), static_cast<std::int64_t>(m));
                        const bool equal_expected = y.is_constant() && x.is_constant() && x[0] == y[0];
                        c.check(dp <= cap && ((dp == cap) == equal_expected),
                                [&] { return "binomial bound fails x=" + x.to_string() + " y=" + y.to_string(); });
                    }
                    // partition into block-map classes
                    if (n <= 12 && !masks.empty() && m > 0) {
                        const RunDecomposition d = decompose_embeddings(x, y);
                        std::map<BlockMap, std::size_t> per_map;
                        for (const Mask& mask : masks) ++per_map[block_map_of(x, y, mask)];
                        bool ok = true;
                        for (std::size_t i = 0; i < d.maps.size(); ++i) {
                            auto it = per_map.find(d.maps[i]);
                            const std::size_t got = it == per_map.end() ? 0 : it->second;
                            if (d.weights[i] != got) ok = false;
                            if (it != per_map.end()) per_map.erase(it);
                        }
                        c.check(ok && per_map.empty(),
                                [&] { return "block-map partition fails x=" + x.to_string() + " y=" + y.to_string(); });
                    }
                }
            }
        }
    }
    std::mt19937_64 rng(kSeed);
    const std::size_t top = std::min<std::size_t>(max_n, 14);
    for (int trial = 0; trial < 2000; ++trial) {
        const std::size_t n = rng() % (top + 1);
        const std::size_t m = rng() % (n + 1);
        const BitString y = random_string(rng, n);
        const BitString x = random_string(rng, m);
        const std::size_t masks = enumerate_masks(x, y).size();
        c.check(count_embeddings_dp(x, y) == masks && count_embeddings_runs(x, y) == masks,
                [&] { return "random count mismatch x=" + x.to_string() + " y=" + y.to_string(); });
    }
    c.check(block_maps(2, 4).size() == 3 && block_maps(3, 3).size() == 1 && block_maps(3, 2).empty(),
            [] { return std::string("block map counts"); });
}

void suite_superspace(Checker& c, std::size_t max_n) {
    const std::size_t top = std::min<std::size_t>(max_n, 12);
    for (std::size_t n = 0; n <= top; ++n) {
        for (std::size_t m = 0; m <= n; ++m) {
            const BigCount card = uncertainty_cardinality(n, m);
            const BigCount mu = total_masks(n, m);
            BigCount per_cluster = 0;
            for (std::size_t a = 0; a <= n - m; ++a) per_cluster += masks_per_cluster(n, m, a);
            c.check(per_cluster == mu, [&] { return "masks_per_cluster sum n=" + std::to_string(n); });
            for (const BitString& x : all_strings(m)) {
                const Posterior p = build_posterior(x, n);
                BigCount sum = 0;
                for (const auto& e : p.entries) sum += e.weight;
                const WeightClasses w = weight_classes(p);
                c.check(p.size() == card && sum == mu && p.mu == mu && w.string_count() == card && w.weight_sum() == mu,
                        [&] { return "cardinality law fails x=" + x.to_string() + " n=" + std::to_string(n); });
                if (n <= 8) {
                    std::vector<PosteriorEntry> brute;
                    for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
                        const std::uint64_t wgt = count_embeddings_u64(x, BitString::from_integer(v, n));
                        if (wgt > 0) brute.push_back({v, wgt});
                    }
                    bool same = brute.size() == p.entries.size();
                    for (std::size_t i = 0; same && i < brute.size(); ++i)
                        same = brute[i].code == p.entries[i].code && brute[i].weight == p.entries[i].weight;
                    c.check(same, [&] { return "posterior differs from brute force x=" + x.to_string(); });
                }
            }
        }
        // expected distinct subsequences against the average over all strings
        std::vector<BigCount> totals(n + 1, 0);
        for (const BitString& y : all_strings(n)) {
            const auto profile = distinct_subsequence_profile(y);
            for (std::size_t k = 0; k <= n; ++k) totals[k] += profile[k];
        }
        for (std::size_t t = 0; t <= n; ++t) {
            using boost::multiprecision::cpp_rational;
            const double avg = cpp_rational(totals[n - t], pow2(n)).convert_to<double>();
            const double formula = expected_distinct_subsequences(n, t);
            c.check(close(avg, formula, 1e-9), [&] {
                return "E_t(n) mismatch n=" + std::to_string(n) + " t=" + std::to_string(t);
            });
        }
    }
}

void suite_clustering(Checker& c, std::size_t max_n) {
    const std::size_t top = std::min<std::size_t>(max_n, 12);
    for (std::size_t n = 0; n <= top; ++n) {
        for (std::size_t m = 0; m <= n; ++m) {
            for (const BitString& x : all_strings(m)) {
                const std::size_t hx = hamming_weight(x);
                const Posterior p = build_posterior(x, n);
                const ClusterCensus census = census_clusters(p);
                BigCount total = 0, maximal = 0;
                for (std::size_t cl = 0; cl <= n - m; ++cl) {
                    const BigCount closed = cluster_size_closed(n, m, hx, cl);
                    total += closed;
                    c.check(closed == census.sizes[cl] && closed == cluster_size_stars_bars(n, m, hx, cl) &&
                                closed == cluster_size_recurrence(n, x, cl),
                            [&] {
                                return "cluster size mismatch x=" + x.to_string() + " n=" + std::to_string(n) +
                                       " c=" + std::to_string(cl);
                            });
                    if (m >= 1) {
                        const BigCount mi = maximal_initials_cluster(n, m, hx, cl);
                        maximal += mi;
                        c.check(mi == census.maximal[cl], [&] {
                            return "maximal initials mismatch x=" + x.to_string() + " c=" + std::to_string(cl);
                        });
                    }
                }
                c.check(total == uncertainty_cardinality(n, m), [&] { return "cluster sizes do not sum to |U|"; });
                if (m >= 1)
                    c.check(maximal == maximal_initials_total(n, m),
                            [&] { return "maximal initials total fails x=" + x.to_string(); });
                c.check(count_singletons(n, x) == census.singletons,
                        [&] { return "singleton count fails x=" + x.to_string() + " n=" + std::to_string(n); });
                if (n <= 8) {
                    for (std::size_t i = 0; i < p.size(); ++i) {
                        const BitString y = p.y(i);
                        const auto masks = enumerate_masks(x, y);
                        const auto canon = canonical_embedding(x, y);
                        c.check(canon && !masks.empty() && *canon == masks.front(),
                                [&] { return "canonical embedding is not the first mask for y=" + y.to_string(); });
                    }
                }
            }
        }
    }
    // singleton extremization
    for (std::size_t m = 1; m <= std::min<std::size_t>(8, top); ++m) {
        for (std::size_t n = m + 1; n <= top; ++n) {
            BigCount best = 0, worst = 0;
            std::set<BitString> argmax, argmin;
            bool first = true;
            for (const BitString& x : all_strings(m)) {
                const BigCount v = count_singletons(n, x);
                if (first || v > best) { best = v; argmax = {x}; }
                else if (v == best) argmax.insert(x);
                if (first || v < worst) { worst = v; argmin = {x}; }
                else if (v == worst) argmin.insert(x);
                first = false;
            }
            const std::set<BitString> constants{BitString::constant(0, m), BitString::constant(1, m)};
            const std::set<BitString> alternating{BitString::alternating(0, m), BitString::alternating(1, m)};
            c.check(argmax == constants && argmin == alternating, [&] {
                return "singleton extremizers wrong at n=" + std::to_string(n) + " m=" + std::to_string(m);
            });
        }
    }
}

void suite_entropy(Checker& c, std::size_t max_n) {
    const auto shannon = EntropyMeasure::shannon();
    const auto renyi2 = EntropyMeasure::renyi(2.0);
    const auto minent = EntropyMeasure::min();

    // closed forms for the constant string
    for (std::size_t n = 0; n <= std::min<std::size_t>(max_n, 14); ++n)
        for (std::size_t m = 0; m <= n; ++m) {
            const Posterior p = build_posterior(BitString::constant(0, m), n);
            c.check(close(entropy(p, shannon), min_shannon_closed(n, m), 1e-9) &&
                        close(entropy(p, renyi2), min_renyi2_closed(n, m), 1e-9) &&
                        entropy(p, minent) == min_minentropy_closed(n, m),
                    [&] { return "closed-form minimum mismatch n=" + std::to_string(n) + " m=" + std::to_string(m); });
        }

    // ordering and symmetries
    const std::size_t sym_top = std::min<std::size_t>(max_n, 10);
    for (std::size_t n = 1; n <= sym_top; ++n)
        for (std::size_t m = 0; m <= n; ++m)
            for (const BitString& x : all_strings(m)) {
                const WeightClasses w = weight_classes(build_posterior(x, n));
                const double h = entropy(w, shannon), h2 = entropy(w, renyi2), hinf = entropy(w, minent);
                c.check(h >= h2 - 1e-12 && h2 >= hinf - 1e-12,
                        [&] { return "measure ordering fails x=" + x.to_string() + " n=" + std::to_string(n); });
                c.check(weight_classes(build_posterior(x.complement(), n)) == w &&
                            weight_classes(build_posterior(x.reversed(), n)) == w,
                        [&] { return "complement/reversal invariance fails x=" + x.to_string(); });
            }

    // g decreases entropy for one and two deletions; extremizers
    const std::size_t g_top = std::min<std::size_t>(max_n, 12);
    const std::vector<double> alphas{0.5, 2.0, 4.0};
    for (std::size_t n = 2; n <= g_top; ++n) {
        for (std::size_t d = 1; d <= 2 && d < n; ++d) {
            const std::size_t m = n - d;
            std::map<BitString, double> h;
            for (const BitString& x : all_strings(m)) h[x] = shannon_of(x, n);
            for (const auto& [x, hx] : h) {
                if (x.is_constant()) continue;
                const BitString gx = apply_g(x);
                c.check(hx > h.at(gx), [&] {
                    return "g does not decrease entropy for x=" + x.to_string() + " n=" + std::to_string(n);
                });
                if (d == 1) {
                    const Rle r = rle_encode(x);
                    const double gap = 2.0 * static_cast<double>(n) * (hx - h.at(gx));
                    c.check(close(gap, delta1(r.runs[0], r.runs[1]), 1e-9),
                            [&] { return "2n times entropy gap differs from delta1 for x=" + x.to_string(); });
                    for (double a : alphas) {
                        const auto measure = EntropyMeasure::renyi(a);
                        c.check(entropy(build_posterior(x, n), measure) > entropy(build_posterior(gx, n), measure),
                                [&] { return "Renyi decrease fails for x=" + x.to_string(); });
                    }
                }
            }
            const auto [lo, hi] = std::minmax_element(h.begin(), h.end(),
                                                      [](const auto& a, const auto& b) { return a.second < b.second; });
            std::set<BitString> argmin, argmax;
            for (const auto& [x, hx] : h) {
                if (close(hx, lo->second, 1e-12)) argmin.insert(x);
                if (close(hx, hi->second, 1e-12)) argmax.insert(x);
            }
            c.check(argmin == std::set<BitString>{BitString::constant(0, m), BitString::constant(1, m)},
                    [&] { return "entropy minimizers are not constant at n=" + std::to_string(n); });
            if (d == 1)
                c.check(argmax == std::set<BitString>{BitString::alternating(0, m), BitString::alternating(1, m)},
                        [&] { return "entropy maximizers are not alternating at n=" + std::to_string(n); });
        }
    }

    // extremizers for more deletions: reported
    std::size_t min_ok = 0, max_ok = 0, cases = 0;
    for (std::size_t m = 1; m <= std::min<std::size_t>(8, g_top); ++m)
        for (std::size_t n = m + 3; n <= g_top; ++n) {
            std::vector<std::pair<double, BitString>> hs;
            for (const BitString& x : all_strings(m)) hs.emplace_back(shannon_of(x, n), x);
            std::sort(hs.begin(), hs.end());
            const double lo = hs.front().first, hi = hs.back().first;
            std::set<BitString> argmin, argmax;
            for (const auto& [v, x] : hs) {
                if (close(v, lo, 1e-12)) argmin.insert(x);
                if (close(v, hi, 1e-12)) argmax.insert(x);
            }
            ++cases;
            if (argmin == std::set<BitString>{BitString::constant(0, m), BitString::constant(1, m)}) ++min_ok;
            if (argmax == std::set<BitString>{BitString::alternating(0, m), BitString::alternating(1, m)}) ++max_ok;
        }
    if (cases > 0) {
        std::ostringstream note;
        note << "three or more deletions: constant strings minimize entropy in " << min_ok << "/" << cases
             << " (n,m) cases, alternating strings maximize in " << max_ok << "/" << cases;
        c.observe(note.str());
    }

    // deletion classes
    std::mt19937_64 rng(kSeed + 1);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t m = 1 + rng() % 20;
        const Rle r = random_composition(rng, m);
        const DeletionClasses one = single_deletion_classes(r);
        const DeletionClasses two = double_deletion_classes(r);
        c.check(one.identities_hold() && two.identities_hold(),
                [&] { return "deletion-class identities fail for " + r.to_string(); });
    }
    const std::size_t class_top = max_n >= 2 ? std::min<std::size_t>(max_n - 2, 12) : 0;
    for (std::size_t m = 1; m <= class_top; ++m)
        for (const BitString& x : all_strings(m)) {
            const Rle r = rle_encode(x);
            c.check(single_deletion_classes(r).classes == weight_classes(build_posterior(x, m + 1)),
                    [&] { return "single-deletion classes differ from census for x=" + x.to_string(); });
            c.check(double_deletion_classes(r).classes == weight_classes(build_posterior(x, m + 2)),
                    [&] { return "double-deletion classes differ from census for x=" + x.to_string(); });
            if (x.is_alternating() && m >= 2) {
                const WeightClasses expect{{{BigCount(2), BigCount(m)}, {BigCount(1), BigCount(2)}}};
                c.check(single_deletion_classes(r).classes == expect,
                        [&] { return "alternating single-deletion census wrong for x=" + x.to_string(); });
            }
        }
    // two deletions on random compositions
    for (int trial = 0; trial < 100 && max_n >= 4; ++trial) {
        const std::size_t n = 4 + rng() % (std::min<std::size_t>(max_n, 12) - 3);
        const Rle r = random_composition(rng, n - 2);
        if (r.blocks() < 2) continue;
        const BitString x = rle_decode(r);
        c.check(shannon_of(x, n) - shannon_of(apply_g(x), n) > 0,
                [&] { return "two-deletion entropy gap not positive for " + r.to_string(); });
    }

    // moment estimate
    for (std::size_t n = 1; n <= std::min<std::size_t>(max_n, 16); ++n)
        for (std::size_t m = 1; m <= std::min<std::size_t>(4, n); ++m)
            for (const BitString& x : all_strings(m)) {
                const EntropyEstimate e = entropy_estimate_from_moments(x, n);
                c.check(std::fabs(e.estimate - e.exact) <= e.bound + 1e-12, [&] {
                    return "moment estimate outside its bound for x=" + x.to_string() + " n=" + std::to_string(n);
                });
            }
}

void suite_hws(Checker& c, std::size_t max_n) {
    const std::size_t top = std::min<std::size_t>(max_n, 12);
    for (std::size_t m = 1; m <= top; ++m) {
        const BigCount kmax = kappa_max(m);
        BigCount lowest = -1;
        std::set<BitString> argmin;
        for (const BitString& x : all_strings(m)) {
            const BigCount k = kappa_squared(x);
            c.check(k == kappa_squared(x.complement()) && k == kappa_squared(x.reversed()),
                    [&] { return "kappa symmetry fails for x=" + x.to_string(); });
            c.check(k <= kmax && ((k == kmax) == x.is_constant()),
                    [&] { return "kappa maximum fails for x=" + x.to_string(); });
            if (lowest < 0 || k < lowest) {
                lowest = k;
                argmin = {x};
            } else if (k == lowest) {
                argmin.insert(x);
            }
            if (m <= 6) {
                const KappaMatrices km = kappa_matrices(x);
                BigCount sum = 0;
                bool shape = true;
                for (std::size_t r = 0; r < m; ++r) {
                    shape = shape && km.B[r][r] == 1;
                    for (std::size_t s = 0; s < m; ++s) {
                        shape = shape && km.B[r][s] == km.B[s][r] && km.M[r][s] == km.M[s][r];
                        if (km.B[r][s]) sum += km.M[r][s];
                    }
                }
                c.check(shape && sum == k, [&] { return "kappa matrices inconsistent for x=" + x.to_string(); });
            }
        }
        const std::set<BitString> alternating{BitString::alternating(0, m), BitString::alternating(1, m)};
        if (m >= 2)
            c.observe("m=" + std::to_string(m) + ": minimum kappa^2 " + str(lowest) +
                      (argmin == alternating ? " attained by the alternating pair only"
                                             : " attained by " + std::to_string(argmin.size()) + " strings"));
    }
    for (std::size_t n = 1; n <= std::min<std::size_t>(max_n, 16); ++n) {
        const OmegaMoments mo = exact_omega_moments(BitString::parse("0"), n);
        const double dn = static_cast<double>(n);
        c.check(close(mo.mean, dn / 2, 1e-12) && close(omega_mean_asymptotic(n, 1), dn / 2, 1e-9) &&
                    close(mo.variance, dn / 4, 1e-12) &&
                    close(omega_variance_asymptotic(n, BitString::parse("0")), dn / 4, 1e-9),
                [&] { return "single-symbol moments differ from Binomial(n,1/2) at n=" + std::to_string(n); });
    }
    if (max_n >= 8) {
        const auto rows = kappa_entropy_table(8, 5);
        std::size_t inversions = 0;
        std::string first;
        for (std::size_t i = 1; i < rows.size(); ++i)
            if (rows[i].entropy < rows[i - 1].entropy - 1e-12) {
                if (inversions++ == 0) first = rows[i - 1].x.to_string() + " before " + rows[i].x.to_string();
            }
        c.observe("(n,m)=(8,5): kappa^2 order has " + std::to_string(inversions) + " entropy inversion(s)" +
                  (inversions ? ", first: " + first : std::string()));
    }
}

using SuiteFn = void (*)(Checker&, std::size_t);

const std::vector<std::pair<SuiteInfo, SuiteFn>>& registry() {
    static const std::vector<std::pair<SuiteInfo, SuiteFn>> suites{
        {{"core", "RLE round trip, complement symmetry, g-chain length"}, suite_core},
        {{"embeddings", "enumeration = DP = run-based counts, symmetries, binomial bound, block-map partition"},
         suite_embeddings},
        {{"superspace", "|U| and mu laws, posterior vs brute force, E_t(n) vs average"}, suite_superspace},
        {{"clustering", "cluster sizes (3 methods + census), maximal initials, singletons, canonical masks"},
         suite_clustering},
        {{"entropy", "closed-form minima, measure ordering, g-decrease, extremizers, deletion classes, estimate"},
         suite_entropy},
        {{"hws", "kappa symmetries and maximum, single-symbol moments, kappa/entropy ordering"}, suite_hws},
    };
    return suites;
}

}  // namespace

const std::vector<SuiteInfo>& verification_suites() {
    static const std::vector<SuiteInfo> infos = [] {
        std::vector<SuiteInfo> out;
        for (const auto& [info, fn] : registry()) out.push_back(info);
        return out;
    }();
    return infos;
}

SuiteReport run_suite(const std::string& name, std::size_t max_n) {
    for (const auto& [info, fn] : registry()) {
        if (info.name != name) continue;
        SuiteReport report;
        report.name = name;
        Checker checker(report);
        fn(checker, max_n);
        return report;
    }
    throw DomainError("unknown verification suite '" + name + "'");
}

std::vector<SuiteReport> run_all_suites(std::size_t max_n) {
    std::vector<SuiteReport> out;
    for (const auto& [info, fn] : registry()) out.push_back(run_suite(info.name, max_n));
    return out;
}

}  // namespace delseq
