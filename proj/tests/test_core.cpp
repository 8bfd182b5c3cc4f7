#include <doctest.h>

#include <random>

#include "delseq/core.hpp"
#include "oracles.hpp"

using namespace delseq;

TEST_CASE("rle_encode examples") {
    const Rle r = rle_encode(BitString::parse("0011010001"));
    CHECK(r.first_symbol == Bit{0});
    CHECK(r.runs == std::vector<std::size_t>{2, 2, 1, 1, 3, 1});

    const Rle empty = rle_encode(BitString{});
    CHECK_FALSE(empty.first_symbol.has_value());
    CHECK(empty.runs.empty());

    const Rle ones = rle_encode(BitString::parse("11111"));
    CHECK(ones.first_symbol == Bit{1});
    CHECK(ones.runs == std::vector<std::size_t>{5});
}

TEST_CASE("rle_decode examples") {
    CHECK(rle_decode(Rle{Bit{0}, {2, 2, 1, 1, 3, 1}}).to_string() == "0011010001");
    CHECK(rle_decode(Rle{Bit{1}, {5}}).to_string() == "11111");
    CHECK(rle_decode(Rle{Bit{0}, {1, 1, 1}}).to_string() == "010");
}

TEST_CASE("Rle::parse accepts bare and prefixed run lists") {
    CHECK(Rle::parse("2,2,1") == Rle{Bit{1}, {2, 2, 1}});
    CHECK(Rle::parse("s=0:2,2,1") == Rle{Bit{0}, {2, 2, 1}});
    CHECK(Rle::parse("s=0,2,2,1") == Rle{Bit{0}, {2, 2, 1}});
    CHECK_THROWS_AS(Rle::parse("2,0,1"), DomainError);
    CHECK_THROWS_AS(Rle::parse("2,,1"), DomainError);
    CHECK_THROWS_AS(Rle::parse("2,1,"), DomainError);
    CHECK_THROWS_AS(Rle::parse("s=2:1"), DomainError);
    CHECK_THROWS_AS(Rle::parse("a"), DomainError);
}

TEST_CASE("BitString parsing and conversions") {
    CHECK_THROWS_AS(BitString::parse("0120"), DomainError);
    CHECK(BitString::parse("").empty());
    CHECK(BitString::from_integer(6, 4).to_string() == "0110");
    CHECK(BitString::parse("0110").to_integer() == 6);
    CHECK(BitString::alternating(1, 5).to_string() == "10101");
    CHECK(BitString::constant(0, 3).to_string() == "000");
    CHECK(BitString::parse("0011").complement().to_string() == "1100");
    CHECK(BitString::parse("0010").reversed().to_string() == "0100");
}

TEST_CASE("hamming_weight") {
    CHECK(hamming_weight(BitString::parse("110")) == 2);
    CHECK(hamming_weight(BitString::parse("00000")) == 0);
    CHECK(hamming_weight(BitString::parse("0011010001")) == 4);
}

TEST_CASE("binomial and multichoose") {
    CHECK(binomial(5, 3) == 10);
    CHECK(binomial(4, 7) == 0);
    CHECK(binomial(9, 5) == 126);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(-1, 0) == 0);
    CHECK(binomial(3, -1) == 0);
    CHECK(to_decimal(binomial(100, 50)) == "100891344545564193334812497256");
    CHECK(multichoose(0, 0) == 1);
    CHECK(multichoose(0, 2) == 0);
    CHECK(multichoose(3, 2) == 6);
    for (std::int64_t n = 0; n <= 30; ++n)
        for (std::int64_t k = 0; k <= n; ++k) CHECK(binomial(n, k) == oracle::choose(n, k));
}

TEST_CASE("log2_big stays accurate past double range") {
    CHECK(log2_big(pow2(10)) == doctest::Approx(10.0));
    CHECK(log2_big(pow2(5000) * 3) == doctest::Approx(5000.0 + std::log2(3.0)));
    CHECK(log2_big(pow2(20000)) == doctest::Approx(20000.0));
    CHECK_THROWS_AS(log2_big(BigCount(0)), DomainError);
}

TEST_CASE("apply_g examples") {
    CHECK(apply_g(rle_encode(BitString::parse("1001110"))) == Rle{Bit{0}, {3, 3, 1}});
    CHECK(apply_g(BitString::parse("1001110")).to_string() == "0001110");
    CHECK(apply_g(Rle{Bit{0}, {7}}) == Rle{Bit{0}, {7}});
    CHECK(apply_g(BitString::parse("101010")).to_string() == "001010");
}

TEST_CASE("property: round trip, g-chain length, complement symmetry") {
    for (std::size_t len = 0; len <= 16; ++len) {
        const std::uint64_t count = std::uint64_t{1} << len;
        // all strings up to 12, a fixed sample beyond
        std::mt19937_64 rng(len);
        const std::uint64_t trials = len <= 12 ? count : 4096;
        for (std::uint64_t t = 0; t < trials; ++t) {
            const BitString s = len <= 12 ? BitString::from_integer(t, len) : oracle::random_string(rng, len);
            const Rle r = rle_encode(s);
            REQUIRE(rle_decode(r) == s);
            for (std::size_t i = 0; i < r.runs.size(); ++i) REQUIRE(r.runs[i] >= 1);
            const Rle rc = rle_encode(s.complement());
            REQUIRE(rc.runs == r.runs);
            if (len == 0) continue;
            REQUIRE(rc.first_symbol != r.first_symbol);
            const Rle g = apply_g(r);
            REQUIRE(g.length() == r.length());
            REQUIRE(g.blocks() == (r.blocks() > 1 ? r.blocks() - 1 : 1));
            std::size_t steps = 0;
            for (Rle cur = r; cur.blocks() > 1; cur = apply_g(cur)) ++steps;
            REQUIRE(steps == r.blocks() - 1);
        }
    }
}
