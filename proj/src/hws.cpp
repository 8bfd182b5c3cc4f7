#include "delseq/hws.hpp"

#include <algorithm>
#include <cmath>

#include "delseq/entropy.hpp"
#include "delseq/superspace.hpp"

namespace delseq {

namespace {

using i64 = std::int64_t;

BigCount m_entry(std::size_t m, std::size_t r, std::size_t s) {
    const auto mm = static_cast<i64>(m);
    const auto rr = static_cast<i64>(r);
    const auto ss = static_cast<i64>(s);
    return binomial(rr + ss - 2, rr - 1) * binomial(2 * mm - rr - ss, mm - rr);
}

}  // namespace

KappaMatrices kappa_matrices(const BitString& x) {
    const std::size_t m = x.size();
    KappaMatrices k;
    k.B.assign(m, std::vector<Bit>(m, 0));
    k.M.assign(m, std::vector<BigCount>(m, 0));
    for (std::size_t r = 1; r <= m; ++r)
        for (std::size_t s = 1; s <= m; ++s) {
            k.B[r - 1][s - 1] = (x[r - 1] == x[s - 1]) ? 1 : 0;
            k.M[r - 1][s - 1] = m_entry(m, r, s);
        }
    return k;
}

BigCount kappa_squared(const BitString& x) {
    if (x.empty()) throw DomainError("kappa_squared: x must be nonempty");
    const std::size_t m = x.size();
    BigCount total = 0;
    for (std::size_t r = 1; r <= m; ++r)
        for (std::size_t s = 1; s <= m; ++s)
            if (x[r - 1] == x[s - 1]) total += m_entry(m, r, s);
    return total;
}

BigCount kappa_max(std::size_t m) {
    if (m == 0) throw DomainError("kappa_max: m must be positive");
    return BigCount(m) * binomial(2 * static_cast<i64>(m) - 1, static_cast<i64>(m));
}

BigCount variance_coefficient(const BitString& x) { return 2 * kappa_squared(x) - kappa_max(x.size()); }

double omega_mean_asymptotic(std::size_t n, std::size_t m) {
    if (m > n) throw DomainError("m exceeds n");
    const double dm = static_cast<double>(m);
    return std::exp(dm * std::log(static_cast<double>(n)) - dm * std::log(2.0) - std::lgamma(dm + 1.0));
}

namespace {

double variance_leading(std::size_t n, std::size_t m, const BigCount& coefficient) {
    const double dm = static_cast<double>(m);
    const double scale = std::exp((2 * dm - 1) * std::log(static_cast<double>(n)) - 2 * dm * std::log(2.0) -
                                  std::lgamma(2 * dm));
    return to_double(coefficient) * scale;
}

}  // namespace

double omega_variance_asymptotic(std::size_t n, const BitString& x) {
    if (x.size() > n) throw DomainError("|x| exceeds n");
    return variance_leading(n, x.size(), variance_coefficient(x));
}

double omega_variance_kappa_only(std::size_t n, const BitString& x) {
    if (x.size() > n) throw DomainError("|x| exceeds n");
    return variance_leading(n, x.size(), kappa_squared(x));
}

OmegaMoments exact_omega_moments(const BitString& x, std::size_t n, std::size_t max_bits) {
    const Posterior p = build_posterior(x, n, max_bits);
    BigCount squares = 0;
    for (const auto& e : p.entries) squares += BigCount(e.weight) * e.weight;
    using boost::multiprecision::cpp_rational;
    const BigCount strings = pow2(n);
    const cpp_rational mean(p.mu, strings);
    const cpp_rational second(squares, strings);
    return {mean.convert_to<double>(), cpp_rational(second - mean * mean).convert_to<double>()};
}

std::vector<KappaEntropyRow> kappa_entropy_table(std::size_t n, std::size_t m, std::size_t max_bits) {
    if (m > n) throw DomainError("m exceeds n");
    if (m == 0) throw DomainError("kappa table needs m >= 1");
    if (n > max_bits) throw SizeError("n exceeds the enumeration cap");
    std::vector<KappaEntropyRow> rows;
    rows.reserve(std::size_t{1} << m);
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << m); ++v) {
        BitString x = BitString::from_integer(v, m);
        const double h = entropy(build_posterior(x, n, max_bits), EntropyMeasure::shannon());
        rows.push_back({x, kappa_squared(x), h});
    }
    std::stable_sort(rows.begin(), rows.end(), [](const KappaEntropyRow& a, const KappaEntropyRow& b) {
        if (a.kappa2 != b.kappa2) return a.kappa2 > b.kappa2;
        return a.x < b.x;
    });
    return rows;
}

}  // namespace delseq
