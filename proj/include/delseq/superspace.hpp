#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "delseq/core.hpp"
#include "delseq/errors.hpp"

namespace delseq {

/// |Upsilon_{n,x}| = sum_{r=m}^{n} C(n,r); independent of x.
BigCount uncertainty_cardinality(std::size_t n, std::size_t m);

/// mu_{n,m} = C(n,m) 2^{n-m}: masks summed over all supersequences.
BigCount total_masks(std::size_t n, std::size_t m);

struct PosteriorEntry {
    std::uint64_t code;    // y read most significant bit first
    std::uint64_t weight;  // omega_x(y) >= 1
};

/// The supersequences of x of length n weighted by their embedding counts,
/// in ascending binary order of y.
struct Posterior {
    BitString x;
    std::size_t n = 0;
    std::vector<PosteriorEntry> entries;
    BigCount mu;

    std::size_t size() const noexcept { return entries.size(); }
    BitString y(std::size_t index) const { return BitString::from_integer(entries[index].code, n); }
};

/// Enumerates Upsilon_{n,x}. Throws DomainError when |x| > n and SizeError when
/// n exceeds `max_bits`.
Posterior build_posterior(const BitString& x, std::size_t n, std::size_t max_bits = kDefaultMaxBits);

/// Histogram of weights, heaviest class first.
struct WeightClasses {
    std::vector<std::pair<BigCount, BigCount>> classes;  // (weight, multiplicity)

    BigCount string_count() const;
    BigCount weight_sum() const;
    bool operator==(const WeightClasses&) const = default;
};

WeightClasses weight_classes(const Posterior& p);

/// Builds classes from raw weights (any order).
WeightClasses weight_classes_of(std::vector<std::uint64_t> weights);

/// Masks of Upsilon_{n,x} whose supersequence has h(x)+a ones: C(n,m) C(n-m,a).
BigCount masks_per_cluster(std::size_t n, std::size_t m, std::size_t a);

/// Distinct subsequences of y with length m.
BigCount count_distinct_subsequences(const BitString& y, std::size_t m);

/// Counts of distinct subsequences of y for every length 0..|y|.
std::vector<BigCount> distinct_subsequence_profile(const BitString& y);

/// Mean number of distinct length-(n-t) subsequences of a uniform random
/// binary string of length n: sum_{i=0}^{t} C(n-t-1+i, i) 2^{-i}.
double expected_distinct_subsequences(std::size_t n, std::size_t t);

}  // namespace delseq
