#include "chromatic/v1_bockstein.hpp"
#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>

using namespace chromatic;

namespace {

V1Differential diff(Symbol a, Int sa, Symbol b, Int sb, Int len) { return {{a, false, sa}, {b, false, sb}, len}; }

std::vector<V1Differential> plain(const std::vector<V1Differential>& d)
{
    std::vector<V1Differential> out;
    for (const auto& e : d)
        if (!e.source.zeta)
            out.push_back(e);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("vicinity handling")
{
    auto c5 = PrimeContext::make(5);
    auto v = make_vicinity(c5, 10, 1);
    CHECK(v == Vicinity{2, 2});
    CHECK_THROWS_AS(make_vicinity(c5, 4, 1), ValidationError);
    CHECK(vicinity_of(c5, 24) == Vicinity{1, 2});
    CHECK(vicinity_of(c5, 5) == Vicinity{1, 1});
    CHECK(vicinity_of(c5, 0) == Vicinity{0, 0});
    CHECK(vicinity_of(c5, -1) == Vicinity{0, 1});
    CHECK(vicinity_of(c5, -6) == Vicinity{0, 2});
    CHECK(vicinity_of(c5, -5) == Vicinity{0, 2});
    CHECK(vicinity_of(c5, -3) == Vicinity{-3, 0});
    for (int m = -300; m <= 300; ++m) {
        auto w = vicinity_of(c5, m);
        CHECK(in_vicinity(c5, w, m));
    }
}

TEST_CASE("G and Y1 bookkeeping")
{
    auto c5 = PrimeContext::make(5);
    auto g = g_info(c5, Symbol::G1, 24);  // (G_2)_{25}
    REQUIRE(g);
    CHECK(g->N == 2);
    CHECK(g->named == 25);
    CHECK(g->S == 1);
    auto g1 = g_info(c5, Symbol::G1, 5);
    REQUIRE(g1);
    CHECK(g1->N == 1);
    auto g0 = g_info(c5, Symbol::G1, -1);  // (G_2)_0 in the zero vicinity
    REQUIRE(g0);
    CHECK(g0->N == 2);
    CHECK(g0->S == 0);
    CHECK(g_class(c5, 2, 25) == M2Class{Symbol::G1, false, 24});
    CHECK(g_class(c5, 3, 125) == M2Class{Symbol::G1, false, 119});
    CHECK(!g_info(c5, Symbol::G1, 3));
    auto y = y1_info(c5, 24);
    REQUIRE(y);
    CHECK(y->N == 2);
    CHECK(y->S == 1);
    CHECK(!y1_info(c5, 25));
}

TEST_CASE("six differentials at v2^{sp}")
{
    auto c5 = PrimeContext::make(5);
    auto got = plain(v1_differentials_formula(c5, {1, 1}));
    std::vector<V1Differential> want = {
        diff(Symbol::One, 5, Symbol::H0, 4, 5),  diff(Symbol::One, 4, Symbol::H1, 4, 1),
        diff(Symbol::H0, 5, Symbol::G1, 4, 8),   diff(Symbol::H1, 5, Symbol::G0, 4, 4),
        diff(Symbol::G0, 5, Symbol::H0G1, 5, 1), diff(Symbol::G1, 5, Symbol::H0G1, 4, 5),
    };
    std::sort(want.begin(), want.end());
    CHECK(got == want);
}

TEST_CASE("formula examples")
{
    auto c5 = PrimeContext::make(5);
    auto n0 = plain(v1_differentials_formula(c5, {2, 0}));
    CHECK(std::find(n0.begin(), n0.end(), diff(Symbol::One, 2, Symbol::H1, 2, 1)) != n0.end());
    auto n2 = plain(v1_differentials_formula(c5, {1, 2}));
    CHECK(std::find(n2.begin(), n2.end(), diff(Symbol::H0, 24, Symbol::G1, 20, 26)) != n2.end());
    for (const auto& e : v1_differentials_formula(c5, {1, 2}))
        CHECK(e.source.zeta == e.target.zeta);
}

TEST_CASE("formula and inductive generators agree, matchings are perfect")
{
    for (int p : {5, 7}) {
        auto c = PrimeContext::make(p);
        for (int n = 0; n <= 3; ++n)
            for (int s = -6; s <= 6; ++s) {
                if (mod(s, p) == 0 || mod(s, p) == p - 1)
                    continue;
                Vicinity v{s, n};
                auto f = v1_differentials_formula(c, v);
                CHECK_NOTHROW(check_matching(c, v, f));
                CHECK(f == v1_differentials_inductive(c, v));
            }
    }
}

TEST_CASE("zero vicinity matching leaves only the exponent-0 towers")
{
    for (int p : {5, 7}) {
        auto c = PrimeContext::make(p);
        for (int n = 0; n <= 4; ++n)
            CHECK_NOTHROW(check_matching(c, {0, n}, v1_differentials_formula(c, {0, n})));
    }
}

TEST_CASE("M11 examples")
{
    auto c5 = PrimeContext::make(5);
    Caps caps{40, 4};
    auto t = compute_M11_towers(c5, {1, 0}, caps);
    std::set<std::pair<M2Class, Int>> got;
    for (const auto& x : t)
        got.insert({x.source, x.length});
    std::set<std::pair<M2Class, Int>> want;
    for (bool z : {false, true}) {
        want.insert({{Symbol::One, z, 1}, 1});
        want.insert({{Symbol::H0, z, 1}, 2});
        want.insert({{Symbol::G0, z, 1}, 1});
    }
    CHECK(got == want);

    auto cls = compute_M11(c5, {1, 1}, caps);
    std::set<std::pair<Int, Int>> coh0;
    for (const auto& x : cls)
        if (x.coh() == 0)
            coh0.insert({x.base.s, x.j});
    std::set<std::pair<Int, Int>> w0 = {{5, 1}, {5, 2}, {5, 3}, {5, 4}, {5, 5}, {4, 1}};
    CHECK(coh0 == w0);
    CHECK(cls.size() == 48);

    auto zero = compute_M11(c5, {0, 0}, caps);
    int ones = 0, h0s = 0;
    for (const auto& x : zero) {
        if (x.base.zeta)
            continue;
        if (x.base.symbol == Symbol::One && x.base.s == 0)
            ++ones;
        if (x.base.symbol == Symbol::H0 && x.base.s == 0)
            ++h0s;
    }
    CHECK(ones == 40);
    CHECK(h0s == 41);
}

TEST_CASE("closed form M11 examples and oracle agreement")
{
    auto c5 = PrimeContext::make(5);
    Caps caps{60, 4};
    auto len = [&](Vicinity v, Symbol s, Int m) {
        for (const auto& t : closed_form_M11_towers(c5, v, caps))
            if (t.source == M2Class{s, false, m})
                return t.length;
        return Int(0);
    };
    CHECK(len({1, 1}, Symbol::H0, 5) == 8);
    CHECK(len({1, 1}, Symbol::H1, 5) == 4);
    CHECK(len({1, 2}, Symbol::H0, 24) == 26);
    for (int p : {5, 7}) {
        auto c = PrimeContext::make(p);
        for (int n = 0; n <= 3; ++n)
            for (int s = -6; s <= 6; ++s) {
                if (mod(s, p) == p - 1 || (s != 0 && mod(s, p) == 0))
                    continue;
                Vicinity v{s, n};
                CHECK(compute_M11_towers(c, v, caps) == closed_form_M11_towers(c, v, caps));
            }
    }
}

TEST_CASE("connecting map")
{
    auto c5 = PrimeContext::make(5);
    CHECK(connecting_delta(c5, {{Symbol::One, false, 5}, 5}) == M2Class{Symbol::H0, false, 4});
    CHECK(connecting_delta(c5, {{Symbol::H0, false, 1}, 2}) == M2Class{Symbol::G1, false, 1});
    CHECK(connecting_delta(c5, {{Symbol::H1, false, 5}, 4}) == M2Class{Symbol::G0, false, 4});
    CHECK(connecting_delta(c5, {{Symbol::One, true, 5}, 5}) == M2Class{Symbol::H0, true, 4});
    CHECK_THROWS_AS(connecting_delta(c5, {{Symbol::One, false, 0}, 5}), ValidationError);
    CHECK_THROWS_AS(connecting_delta(c5, {{Symbol::One, false, 5}, 3}), ValidationError);
}
