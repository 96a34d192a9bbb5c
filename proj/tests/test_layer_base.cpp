#include "chromatic/layer_base.hpp"
#include "chromatic/v1_bockstein.hpp"
#include "doctest.h"

#include <map>
#include <set>

using namespace chromatic;

namespace {
Window at(Int t, int cmin = 0, int cmax = 4) { return {t, t, cmin, cmax}; }
}  // namespace

TEST_CASE("generator bidegrees")
{
    CHECK(coh_degree(Symbol::One) == 0);
    CHECK(coh_degree(Symbol::H0) == 1);
    CHECK(coh_degree(Symbol::H1) == 1);
    CHECK(coh_degree(Symbol::G0) == 2);
    CHECK(coh_degree(Symbol::G1) == 2);
    CHECK(coh_degree(Symbol::H0G1) == 3);
    CHECK(q_units(Symbol::H0G1) == q_units(Symbol::H0) + q_units(Symbol::G1));
    CHECK(parse_symbol("h0g1") == Symbol::H0G1);
    CHECK(!parse_symbol("h2"));
}

TEST_CASE("enumerate M2 examples")
{
    auto c5 = PrimeContext::make(5);
    auto a = enumerate_M2(c5, at(48, 0, 0));
    REQUIRE(a.size() == 1);
    CHECK(a[0] == M2Class{Symbol::One, false, 1});
    auto az = enumerate_M2(c5, at(48, 0, 1));
    REQUIRE(az.size() == 2);
    CHECK(az[1] == M2Class{Symbol::One, true, 1});

    auto b = enumerate_M2(c5, at(56, 1, 1));
    REQUIRE(b.size() == 1);
    CHECK(b[0] == M2Class{Symbol::H0, false, 1});

    auto z = enumerate_M2(c5, at(0));
    std::set<M2Class> got(z.begin(), z.end());
    std::set<M2Class> want = {{Symbol::One, false, 0}, {Symbol::One, true, 0}, {Symbol::H0G1, false, 0},
                              {Symbol::H0G1, true, 0}};
    CHECK(got == want);

    CHECK(enumerate_M2(c5, {10, 5}).empty());
}

TEST_CASE("M2 window is complete and at most two-dimensional per bidegree")
{
    for (int p : {5, 7}) {
        auto c = PrimeContext::make(p);
        Int lo = -40 * c.v2deg, hi = 40 * c.v2deg;
        auto all = enumerate_M2(c, {lo, hi, 0, 4});
        std::set<M2Class> uniq(all.begin(), all.end());
        CHECK(uniq.size() == all.size());
        std::map<std::pair<Int, int>, int> dim;
        for (const auto& x : all) {
            CHECK(x.t(c) >= lo);
            CHECK(x.t(c) <= hi);
            ++dim[{x.t(c), x.coh()}];
        }
        for (auto& [k, d] : dim)
            CHECK(d <= 2);
        // brute force over a box of exponents
        size_t count = 0;
        for (int s = -60; s <= 60; ++s)
            for (Symbol sym : kSymbols)
                for (bool zt : {false, true}) {
                    M2Class x{sym, zt, s};
                    if (x.t(c) >= lo && x.t(c) <= hi)
                        ++count;
                }
        CHECK(count == all.size());
    }
}

TEST_CASE("M2 restricted to a vicinity")
{
    auto c5 = PrimeContext::make(5);
    Vicinity v{3, 2};
    auto mem = vicinity_members(c5, v);
    std::set<Int> ms(mem.begin(), mem.end());
    CHECK(ms == std::set<Int>{75, 74, 70, 69});
    auto all = enumerate_M2(c5, {60 * 48, 80 * 48, 0, 4});
    int inside = 0;
    for (const auto& x : all)
        if (in_vicinity(c5, v, x.s))
            ++inside;
    CHECK(inside == 4 * 12);
}

TEST_CASE("enumerate M01")
{
    auto c5 = PrimeContext::make(5);
    auto five = enumerate_M01(c5, {40, 40, 0, 0}, 8);
    std::set<AlphaClass> s5(five.begin(), five.end());
    CHECK(s5.count({AlphaKind::Alpha, 5, 1}));
    CHECK(s5.count({AlphaKind::Alpha, 5, 2}));
    CHECK(!s5.count({AlphaKind::Alpha, 5, 3}));
    auto one = enumerate_M01(c5, {8, 8, 0, 0}, 8);
    REQUIRE(one.size() == 1);
    CHECK(one[0] == AlphaClass{AlphaKind::Alpha, 1, 1});
    auto top = enumerate_M01(c5, {0, 0, 1, 1}, 5);
    std::set<AlphaClass> st(top.begin(), top.end());
    CHECK(st.count({AlphaKind::AlphaTop, -1, 3}));
    CHECK(st.size() == 5);
    for (const auto& a : enumerate_M01(c5, {-800, 800, 0, 1}, 4))
        if (a.kind == AlphaKind::Alpha && a.s != 0)
            CHECK(a.s % ipow(5, a.k - 1) == 0);
}

TEST_CASE("enumerate M10 and M00")
{
    auto c5 = PrimeContext::make(5);
    auto a = enumerate_M10(c5, {8, 8, 0, 0});
    REQUIRE(a.size() == 1);
    CHECK(a[0] == M10Class{1, false});
    auto b = enumerate_M10(c5, {16, 16, 1, 1});
    REQUIRE(b.size() == 1);
    CHECK(b[0] == M10Class{1, true});
    CHECK(enumerate_M00({0, 0, 0, 0}) == 1);
    CHECK(enumerate_M00({1, 9, 0, 0}) == 0);
}
