#include "delseq/core.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>

namespace delseq {

// ---------------------------------------------------------------------------
// BigCount helpers
// ---------------------------------------------------------------------------

BigCount binomial(std::int64_t n, std::int64_t k) {
    if (n < 0 || k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigCount result = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        result *= (n - k + i);
        result /= i;
    }
    return result;
}

BigCount multichoose(std::int64_t bins, std::int64_t items) {
    if (items < 0 || bins < 0) return 0;
    if (items == 0) return 1;
    if (bins == 0) return 0;
    return binomial(bins + items - 1, items);
}

BigCount pow2(std::size_t e) {
    BigCount r = 1;
    r <<= e;
    return r;
}

std::string to_decimal(const BigCount& value) { return value.str(); }

double to_double(const BigCount& value) { return value.convert_to<double>(); }

double log2_big(const BigCount& value) {
    if (value <= 0) throw DomainError("log2 of a nonpositive integer");
    const std::size_t bits = boost::multiprecision::msb(value);
    if (bits < 16000) return static_cast<double>(std::log2(value.convert_to<long double>()));
    // beyond long double range: keep the top 64 bits
    const std::size_t shift = bits - 63;
    std::uint64_t top = 0;
    for (std::size_t b = bits + 1; b-- > shift;) top = (top << 1U) | (boost::multiprecision::bit_test(value, b) ? 1U : 0U);
    return std::log2(static_cast<double>(top)) + static_cast<double>(shift);
}

// ---------------------------------------------------------------------------
// BitString
// ---------------------------------------------------------------------------

BitString::BitString(std::vector<Bit> bits) : bits_(std::move(bits)) {
    for (Bit b : bits_)
        if (b > 1) throw DomainError("BitString: symbols must be 0 or 1");
}

BitString BitString::parse(std::string_view text) {
    std::vector<Bit> bits;
    bits.reserve(text.size());
    for (char c : text) {
        if (c != '0' && c != '1')
            throw DomainError("invalid bit string '" + std::string(text) + "'");
        bits.push_back(static_cast<Bit>(c - '0'));
    }
    BitString s;
    s.bits_ = std::move(bits);
    return s;
}

BitString BitString::constant(Bit sym, std::size_t len) {
    return BitString(std::vector<Bit>(len, sym));
}

BitString BitString::alternating(Bit first, std::size_t len) {
    std::vector<Bit> bits(len);
    for (std::size_t i = 0; i < len; ++i) bits[i] = static_cast<Bit>((first + i) & 1U);
    return BitString(std::move(bits));
}

BitString BitString::from_integer(std::uint64_t value, std::size_t len) {
    std::vector<Bit> bits(len);
    for (std::size_t i = 0; i < len; ++i) bits[len - 1 - i] = static_cast<Bit>((value >> i) & 1U);
    BitString s;
    s.bits_ = std::move(bits);
    return s;
}

std::string BitString::to_string() const {
    std::string out(bits_.size(), '0');
    for (std::size_t i = 0; i < bits_.size(); ++i) out[i] = static_cast<char>('0' + bits_[i]);
    return out;
}

std::uint64_t BitString::to_integer() const {
    std::uint64_t v = 0;
    for (Bit b : bits_) v = (v << 1U) | b;
    return v;
}

BitString BitString::complement() const {
    BitString out = *this;
    for (Bit& b : out.bits_) b ^= 1U;
    return out;
}

BitString BitString::reversed() const {
    BitString out = *this;
    std::reverse(out.bits_.begin(), out.bits_.end());
    return out;
}

bool BitString::is_constant() const noexcept {
    return std::adjacent_find(bits_.begin(), bits_.end(), std::not_equal_to<>()) == bits_.end();
}

bool BitString::is_alternating() const noexcept {
    return std::adjacent_find(bits_.begin(), bits_.end()) == bits_.end();
}

// ---------------------------------------------------------------------------
// Rle
// ---------------------------------------------------------------------------

std::size_t Rle::length() const noexcept {
    return std::accumulate(runs.begin(), runs.end(), std::size_t{0});
}

bool Rle::valid() const noexcept {
    if (runs.empty()) return !first_symbol.has_value();
    if (!first_symbol || *first_symbol > 1) return false;
    return std::all_of(runs.begin(), runs.end(), [](std::size_t k) { return k >= 1; });
}

Rle Rle::parse(std::string_view text) {
    Rle r;
    Bit first = 1;
    if (text.starts_with("s=")) {
        if (text.size() < 3 || (text[2] != '0' && text[2] != '1'))
            throw DomainError("invalid RLE symbol prefix in '" + std::string(text) + "'");
        first = static_cast<Bit>(text[2] - '0');
        text.remove_prefix(3);
        if (!text.empty()) {
            if (text.front() != ':' && text.front() != ',' && text.front() != ';')
                throw DomainError("invalid RLE separator after symbol prefix");
            text.remove_prefix(1);
        }
    }
    while (!text.empty()) {
        const auto comma = text.find(',');
        const std::string_view item = text.substr(0, comma);
        std::size_t value = 0;
        const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
        if (ec != std::errc{} || ptr != item.data() + item.size() || value == 0)
            throw DomainError("invalid run length '" + std::string(item) + "'");
        r.runs.push_back(value);
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
        if (text.empty()) throw DomainError("trailing comma in RLE");
    }
    if (!r.runs.empty()) r.first_symbol = first;
    return r;
}

std::string Rle::to_string() const {
    if (runs.empty()) return "()";
    std::string out = "(" + std::to_string(*first_symbol) + ";";
    for (std::size_t i = 0; i < runs.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(runs[i]);
    }
    return out + ")";
}

Rle rle_encode(const BitString& s) {
    Rle r;
    if (s.empty()) return r;
    r.first_symbol = s[0];
    std::size_t run = 1;
    for (std::size_t i = 1; i < s.size(); ++i) {
        if (s[i] == s[i - 1]) {
            ++run;
        } else {
            r.runs.push_back(run);
            run = 1;
        }
    }
    r.runs.push_back(run);
    return r;
}

BitString rle_decode(const Rle& r) {
    if (!r.valid()) throw DomainError("rle_decode: invalid RLE " + r.to_string());
    std::vector<Bit> bits;
    bits.reserve(r.length());
    for (std::size_t i = 0; i < r.runs.size(); ++i) bits.insert(bits.end(), r.runs[i], r.symbol_of(i));
    return BitString(std::move(bits));
}

std::size_t hamming_weight(const BitString& s) noexcept {
    return static_cast<std::size_t>(std::count(s.bits().begin(), s.bits().end(), Bit{1}));
}

Rle apply_g(const Rle& r) {
    if (r.runs.size() <= 1) return r;
    Rle out;
    out.first_symbol = static_cast<Bit>(*r.first_symbol ^ 1U);
    out.runs.reserve(r.runs.size() - 1);
    out.runs.push_back(r.runs[0] + r.runs[1]);
    out.runs.insert(out.runs.end(), r.runs.begin() + 2, r.runs.end());
    return out;
}

BitString apply_g(const BitString& s) { return rle_decode(apply_g(rle_encode(s))); }

}  // namespace delseq
