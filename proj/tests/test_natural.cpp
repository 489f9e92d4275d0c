#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <random>

#include "wakes/natural.hpp"

using wakes::Natural;

TEST_CASE("small value round trips") {
    CHECK(Natural{0}.to_decimal() == "0");
    CHECK(Natural{1}.to_decimal() == "1");
    CHECK(Natural{123456789}.to_decimal() == "123456789");
    CHECK(Natural{UINT64_MAX}.to_decimal() == "18446744073709551615");
    CHECK(Natural::from_decimal("18446744073709551615") == Natural{UINT64_MAX});
}

TEST_CASE("arithmetic agrees with u64 on random small operands") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 2000; ++i) {
        uint64_t a = rng() >> 34, b = rng() >> 34;
        CHECK((Natural{a} + Natural{b}).to_u64() == a + b);
        CHECK((Natural{a} * Natural{b}).to_u64() == a * b);
        if (a < b) std::swap(a, b);
        CHECK((Natural{a} - Natural{b}).to_u64() == a - b);
        if (b != 0) {
            auto [q, r] = Natural::divmod(Natural{a}, Natural{b});
            CHECK(q.to_u64() == a / b);
            CHECK(r.to_u64() == a % b);
        }
    }
}

TEST_CASE("multi-limb multiplication and division") {
    // (2^64 - 1)^2 = 2^128 - 2^65 + 1
    Natural m{UINT64_MAX};
    Natural sq = m * m;
    CHECK(sq.to_decimal() == "340282366920938463426481119284349108225");
    auto [q, r] = Natural::divmod(sq, m);
    CHECK(q == m);
    CHECK(r.is_zero());
    CHECK((sq + Natural{1}) % m == Natural{1});
}

TEST_CASE("divmod identity n = q*d + r on random multi-limb values") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 500; ++i) {
        Natural n = Natural{rng()} * Natural{rng()} + Natural{rng()};
        Natural d = Natural{rng() % 1000000 + 1};
        auto [q, r] = Natural::divmod(n, d);
        CHECK(r < d);
        CHECK(q * d + r == n);
    }
}

TEST_CASE("gcd basics and shifts") {
    CHECK(Natural::gcd(Natural{12}, Natural{18}) == Natural{6});
    CHECK(Natural::gcd(Natural{0}, Natural{5}) == Natural{5});
    CHECK(Natural::gcd(Natural{7}, Natural{13}) == Natural{1});
    CHECK(Natural::lcm(Natural{4}, Natural{6}) == Natural{12});
    CHECK(Natural{1}.shl(100).shr(100) == Natural{1});
    CHECK(Natural{1}.shl(100).to_decimal() == "1267650600228229401496703205376");
    std::mt19937_64 rng(13);
    for (int i = 0; i < 500; ++i) {
        uint64_t a = rng() >> 30, b = rng() >> 30;
        uint64_t g = a, h = b;
        while (h) {
            uint64_t t = g % h;
            g = h;
            h = t;
        }
        CHECK(Natural::gcd(Natural{a}, Natural{b}).to_u64() == g);
    }
}

TEST_CASE("comparison ordering") {
    CHECK(Natural{3} < Natural{5});
    CHECK(Natural{5} > Natural{3});
    CHECK(Natural{1}.shl(64) > Natural{UINT64_MAX});
    CHECK(Natural{0} < Natural{1});
}
