#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "delseq/bigcount.hpp"
#include "delseq/errors.hpp"

namespace delseq {

using Bit = std::uint8_t;

/// Ordered binary string. Positions are 1-based in masks and documentation;
/// `operator[]` takes a 0-based offset.
class BitString {
public:
    BitString() = default;
    explicit BitString(std::vector<Bit> bits);

    /// Parses a string over {'0','1'}; throws DomainError on any other character.
    static BitString parse(std::string_view text);
    /// Constant string sym^len.
    static BitString constant(Bit sym, std::size_t len);
    /// Alternating string of length len starting with `first`.
    static BitString alternating(Bit first, std::size_t len);
    /// The `len` low bits of `value`, most significant bit first.
    static BitString from_integer(std::uint64_t value, std::size_t len);

    std::size_t size() const noexcept { return bits_.size(); }
    bool empty() const noexcept { return bits_.empty(); }
    Bit operator[](std::size_t offset) const { return bits_[offset]; }
    std::span<const Bit> bits() const noexcept { return bits_; }

    std::string to_string() const;
    /// Value read most significant bit first (requires size() <= 64).
    std::uint64_t to_integer() const;

    BitString complement() const;
    BitString reversed() const;
    bool is_constant() const noexcept;
    bool is_alternating() const noexcept;

    void push_back(Bit b) { bits_.push_back(b); }

    auto operator<=>(const BitString&) const = default;
    bool operator==(const BitString&) const = default;

private:
    std::vector<Bit> bits_;
};

/// Run-length encoding (first symbol; b1, ..., bl). The empty string has no
/// runs and no first symbol.
struct Rle {
    std::optional<Bit> first_symbol;
    std::vector<std::size_t> runs;

    std::size_t blocks() const noexcept { return runs.size(); }
    std::size_t length() const noexcept;
    /// Symbol of run i (0-based).
    Bit symbol_of(std::size_t run) const { return static_cast<Bit>((*first_symbol + run) & 1U); }
    bool valid() const noexcept;

    /// Parses "2,2,1" or "s=0:2,2,1" / "s=0,2,2,1"; the first symbol defaults to 1.
    static Rle parse(std::string_view text);
    std::string to_string() const;

    bool operator==(const Rle&) const = default;
};

Rle rle_encode(const BitString& s);
BitString rle_decode(const Rle& r);

std::size_t hamming_weight(const BitString& s) noexcept;

/// Merges the first two runs by flipping the first run: (k1+k2, k3, ..., kl)
/// with the second run's symbol. Identity on strings with at most one run.
Rle apply_g(const Rle& r);
BitString apply_g(const BitString& s);

}  // namespace delseq
