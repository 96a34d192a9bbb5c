#include "chromatic/arith.hpp"
#include "doctest.h"

#include <random>

using namespace chromatic;

TEST_CASE("prime validation")
{
    CHECK_THROWS_AS(PrimeContext::make(4), ValidationError);
    CHECK_THROWS_AS(PrimeContext::make(3), ValidationError);
    CHECK_THROWS_AS(PrimeContext::make(25), ValidationError);
    auto c7 = PrimeContext::make(7);
    CHECK(c7.q == 12);
    CHECK(c7.v2deg == 96);
    auto c5 = PrimeContext::make(5);
    CHECK(c5.q == 8);
    CHECK(c5.v2deg == 48);
    try {
        PrimeContext::make(9);
    } catch (const ValidationError& e) {
        CHECK(std::string(e.what()).find("p is a prime greater than or equal to 5") != std::string::npos);
    }
}

TEST_CASE("valuation")
{
    auto c5 = PrimeContext::make(5);
    auto c7 = PrimeContext::make(7);
    CHECK(nu_p(c5, 25) == 2);
    CHECK(nu_p(c5, 7) == 0);
    CHECK(nu_p(c7, -98) == 2);
    CHECK_THROWS_AS(nu_p(c5, 0), InfiniteValuation);

    std::mt19937_64 rng(7);
    for (int it = 0; it < 500; ++it) {
        long long m = static_cast<long long>(rng() % 100000) + 1;
        if (m % 5 == 0)
            continue;
        if (rng() & 1)
            m = -m;
        int k = static_cast<int>(rng() % 30);
        CHECK(nu_p(c5, ipow(5, k) * m) == k + nu_p(c5, m));
    }
}

TEST_CASE("index constants")
{
    auto c5 = PrimeContext::make(5);
    CHECK(index_a(c5, 0) == 1);
    CHECK(index_a(c5, 1) == 5);
    CHECK(index_a(c5, 2) == 29);
    CHECK(index_a(c5, 1) % 5 == 0);
    CHECK(index_A(c5, 0) == 0);
    CHECK(index_A(c5, 1) == 6);
    CHECK(index_A(c5, 2) == 36);
    CHECK(g_offset(c5, 0) == 0);
    CHECK(g_offset(c5, 1) == 0);
    CHECK(g_offset(c5, 2) == 1);
    CHECK(g_offset(c5, 3) == 6);

    for (int p : {5, 7, 11, 13}) {
        auto c = PrimeContext::make(p);
        for (int n = 0; n <= 25; ++n) {
            CHECK(index_a(c, n) == index_a_rec(c, n));
            CHECK(index_A(c, n) == index_A_rec(c, n));
            CHECK(g_offset(c, n) == g_offset_rec(c, n));
            if (n >= 1)
                CHECK(index_a(c, n) + 1 == ipow(p, n - 1) * (p + 1));
            if (n >= 2)
                CHECK(mod(index_a(c, n), p) == p - 1);
        }
    }
    // a_4 at p=7 is beyond 32 bits once multiplied by degrees
    auto c7 = PrimeContext::make(7);
    CHECK(index_a(c7, 4) == 2743);
    CHECK(index_a(c7, 20) * c7.v2deg > Int(1) << 62);
}

TEST_CASE("truncated p-adics")
{
    auto c5 = PrimeContext::make(5);
    auto c7 = PrimeContext::make(7);
    CHECK(geometric_inverse(c5, 3).residue() == 31);
    CHECK(geometric_inverse(c5, 1).residue() == 1);
    CHECK(geometric_inverse(c7, 2).residue() == 8);
    for (auto c : {c5, c7})
        for (int N = 1; N <= 20; ++N) {
            auto g = geometric_inverse(c, N);
            CHECK((g * TruncatedPadic(c, 1 - c.p, N)).residue() == 1);
            CHECK(g.residue() < g.modulus());
        }

    TruncatedPadic a(c5, 100, 3), b(c5, -7, 5);
    auto s = a + b;
    CHECK(s.precision() == 3);
    CHECK(s.residue() == 93);
    CHECK((a * b).residue() == mod(Int(-700), 125));
    CHECK((-a + a).is_zero());
    CHECK((a - a).is_zero());
    CHECK(TruncatedPadic(c5, -1, 2).centered() == -1);
    CHECK_THROWS_AS(TruncatedPadic(c5, 1, 0), ValidationError);
    CHECK_THROWS(a + TruncatedPadic(c7, 1, 3));
}
