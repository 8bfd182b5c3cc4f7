#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace delseq {

/// Exact nonnegative integer of arbitrary magnitude.
using BigCount = boost::multiprecision::cpp_int;

/// C(n, k); zero when k < 0 or k > n (including negative n), C(0,0) = 1.
BigCount binomial(std::int64_t n, std::int64_t k);

/// Number of multisets of `items` elements drawn from `bins` kinds, i.e.
/// C(bins + items - 1, items), with multichoose(0, 0) = 1.
BigCount multichoose(std::int64_t bins, std::int64_t items);

/// 2^e as an exact integer.
BigCount pow2(std::size_t e);

/// Decimal representation, no separators.
std::string to_decimal(const BigCount& value);

double to_double(const BigCount& value);

/// log2 of a positive integer, accurate for values beyond double range.
double log2_big(const BigCount& value);

}  // namespace delseq
