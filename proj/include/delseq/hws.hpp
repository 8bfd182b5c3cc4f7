#pragma once

#include <cstddef>
#include <vector>

#include "delseq/core.hpp"
#include "delseq/errors.hpp"

namespace delseq {

struct KappaMatrices {
    std::vector<std::vector<Bit>> B;       // B[r][s] = [x_r == x_s]
    std::vector<std::vector<BigCount>> M;  // C(r+s-2, r-1) C(2m-r-s, m-r), 1-based r, s
};

KappaMatrices kappa_matrices(const BitString& x);

/// Autocorrelation coefficient: sum of B o M.
BigCount kappa_squared(const BitString& x);

/// m C(2m-1, m), attained by the constant strings.
BigCount kappa_max(std::size_t m);

/// Leading-order coefficient of the variance of the embedding count:
/// 2 kappa^2(x) - kappa_max(m). Equals kappa^2 for constant x.
BigCount variance_coefficient(const BitString& x);

/// (2^-m / m!) n^m.
double omega_mean_asymptotic(std::size_t n, std::size_t m);

/// (2^-2m / (2m-1)!) (2 kappa^2(x) - kappa_max(m)) n^(2m-1).
double omega_variance_asymptotic(std::size_t n, const BitString& x);

/// The same leading term with kappa^2(x) alone as coefficient. Only accurate
/// for constant x; kept for comparison.
double omega_variance_kappa_only(std::size_t n, const BitString& x);

/// Exact mean and variance of the embedding count over all 2^n strings.
struct OmegaMoments {
    double mean = 0.0;
    double variance = 0.0;
};

OmegaMoments exact_omega_moments(const BitString& x, std::size_t n, std::size_t max_bits = kDefaultMaxBits);

struct KappaEntropyRow {
    BitString x;
    BigCount kappa2;
    double entropy = 0.0;
};

/// One row per x of length m: kappa^2 descending, ties by x ascending.
std::vector<KappaEntropyRow> kappa_entropy_table(std::size_t n, std::size_t m,
                                                 std::size_t max_bits = kDefaultMaxBits);

}  // namespace delseq
