#pragma once

#include <stdexcept>
#include <string>

namespace delseq {

// Argument outside an operation's domain (m > n, empty x where a run is needed, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Request would enumerate more than the configured number of bits.
class SizeError : public std::length_error {
public:
    using std::length_error::length_error;
};

inline constexpr std::size_t kDefaultMaxBits = 22;

}  // namespace delseq
