#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>

#include "munchausen/powersum.hpp"

using munch::Base;
using munch::DigitVec;
using munch::Nat;
using munch::PowerTable;
using munch::ZeroPowerConvention;

namespace {

// Independent route for d^d: plain 64-bit repeated multiplication, valid
// through d = 15 (15^15 < 2^63).
std::uint64_t self_power_u64(std::uint32_t d) {
    std::uint64_t r = 1;
    for (std::uint32_t i = 0; i < d; ++i) r *= d;
    return r;
}

}  // namespace

TEST_CASE("power table entries") {
    PowerTable t4(Base{4}, ZeroPowerConvention::One);
    CHECK(t4.entries() == std::vector<Nat>{Nat{1}, Nat{1}, Nat{4}, Nat{27}});

    PowerTable t2(Base{2}, ZeroPowerConvention::Zero);
    CHECK(t2.entries() == std::vector<Nat>{Nat{0}, Nat{1}});

    PowerTable t10(Base{10}, ZeroPowerConvention::One);
    CHECK(t10.term(8) == Nat{16777216});
    CHECK(t10.term(9) == Nat{387420489});
    for (std::uint32_t d = 0; d <= 9; ++d)
        if (d > 0) CHECK(t10.term(d) == Nat{self_power_u64(d)});
}

TEST_CASE("power table entries nondecreasing from 1 upward") {
    for (std::uint32_t b = 2; b <= 36; ++b) {
        for (auto conv : {ZeroPowerConvention::One, ZeroPowerConvention::Zero}) {
            PowerTable t(Base{b}, conv);
            REQUIRE(t.entries().size() == b);
            for (std::uint32_t d = 2; d < b; ++d) CHECK(t.term(d - 1) < t.term(d));
        }
    }
}

TEST_CASE("table lookup rejects out-of-base digits") {
    PowerTable t(Base{10}, ZeroPowerConvention::One);
    CHECK_THROWS_AS(t.term(10), std::out_of_range);
}

TEST_CASE("digit power sum known values") {
    CHECK(munch::digit_power_sum(Nat{3435}, Base{10}, ZeroPowerConvention::One) == Nat{3435});
    CHECK(munch::digit_power_sum(Nat{2}, Base{2}, ZeroPowerConvention::One) == Nat{2});
    for (std::uint32_t b = 2; b <= 36; ++b)
        CHECK(munch::digit_power_sum(Nat{1}, Base{b}, ZeroPowerConvention::One) == Nat{1});
}

TEST_CASE("digit power sum of 20082009") {
    // longhand oracle: walk the decimal digits, accumulate d^d via plain
    // 64-bit multiplication
    std::uint64_t expected = 0;
    for (char c : std::string("20082009"))
        expected += self_power_u64(static_cast<std::uint32_t>(c - '0'));
    CHECK(expected == 404197717);  // frozen
    CHECK(munch::digit_power_sum(Nat{20082009}, Base{10}, ZeroPowerConvention::One) ==
          Nat{expected});
}

TEST_CASE("digit power sum of digit vectors") {
    PowerTable t4(Base{4}, ZeroPowerConvention::One);
    CHECK(munch::digit_power_sum_of_digits(DigitVec{{1, 3, 1}, Base{4}}, t4) == Nat{29});
    CHECK(munch::digit_power_sum_of_digits(DigitVec{{0}, Base{10}},
                                           ZeroPowerConvention::One) == Nat{1});
    CHECK(munch::digit_power_sum_of_digits(DigitVec{{0}, Base{10}},
                                           ZeroPowerConvention::Zero) == Nat{0});
    CHECK_THROWS(munch::digit_power_sum_of_digits(DigitVec{{1}, Base{2}}, t4));
}

TEST_CASE("sum over digits agrees with sum over the number") {
    std::mt19937_64 rng{777};
    for (int i = 0; i < 1500; ++i) {
        std::uint32_t b = 2 + static_cast<std::uint32_t>(rng() % 35);
        Nat n{rng() >> (rng() % 48)};
        for (auto conv : {ZeroPowerConvention::One, ZeroPowerConvention::Zero}) {
            CHECK(munch::digit_power_sum_of_digits(munch::to_digits(n, Base{b}), conv) ==
                  munch::digit_power_sum(n, Base{b}, conv));
        }
    }
}

TEST_CASE("sum is permutation invariant") {
    std::mt19937_64 rng{31337};
    for (int i = 0; i < 1000; ++i) {
        std::uint32_t b = 2 + static_cast<std::uint32_t>(rng() % 35);
        Nat n{rng() >> (rng() % 48)};
        DigitVec d = munch::to_digits(n, Base{b});
        DigitVec shuffled = d;
        std::shuffle(shuffled.digits.begin(), shuffled.digits.end(), rng);
        PowerTable t(Base{b}, ZeroPowerConvention::One);
        CHECK(munch::digit_power_sum_of_digits(d, t) ==
              munch::digit_power_sum_of_digits(shuffled, t));
    }
}

TEST_CASE("convention delta equals the number of zero digits") {
    std::mt19937_64 rng{5150};
    for (int i = 0; i < 1000; ++i) {
        std::uint32_t b = 2 + static_cast<std::uint32_t>(rng() % 35);
        Nat n{rng() >> (rng() % 48)};
        DigitVec d = munch::to_digits(n, Base{b});
        auto zeros = static_cast<std::uint64_t>(
            std::count(d.digits.begin(), d.digits.end(), std::uint8_t{0}));
        Nat with_one = munch::digit_power_sum(n, Base{b}, ZeroPowerConvention::One);
        Nat with_zero = munch::digit_power_sum(n, Base{b}, ZeroPowerConvention::Zero);
        CHECK(with_one - with_zero == Nat{zeros});
    }
}

TEST_CASE("every term is at most (b-1)^(b-1)") {
    std::mt19937_64 rng{2718};
    for (std::uint32_t b : {2u, 3u, 7u, 10u, 16u}) {
        PowerTable t(Base{b}, ZeroPowerConvention::One);
        Nat cap = Nat::pow(b - 1, b - 1);
        for (std::uint32_t d = 0; d < b; ++d) CHECK(t.term(d) <= cap);
        for (int i = 0; i < 200; ++i) {
            Nat n{rng()};
            for (std::uint8_t digit : munch::to_digits(n, Base{b}).digits)
                CHECK(t.term(digit) <= cap);
        }
    }
}
