#include "chromatic/v0_bockstein.hpp"
#include "doctest.h"

#include <algorithm>
#include <set>
#include <tuple>

using namespace chromatic;

namespace {

const PrimeContext c5 = PrimeContext::make(5);

M11Class cls(Symbol s, Int m, Int j) { return M11Class{M2Class{s, false, m}, j}; }

bool has(const std::vector<M02Element>& v, const M11Class& c, int k)
{
    for (const auto& e : v)
        if (e.base == c && e.k == k)
            return true;
    return false;
}

using Key = std::tuple<int, Int, int>;
std::multiset<Key> shape(const PrimeContext& ctx, const std::vector<M02Element>& v)
{
    std::multiset<Key> out;
    for (const auto& e : v)
        out.insert({e.coh(), e.t(ctx), e.k});
    return out;
}

std::vector<Vicinity> vicinities(const PrimeContext& ctx, int nmax, int smax)
{
    std::vector<Vicinity> out;
    for (int n = 0; n <= nmax; ++n)
        for (int s = -smax; s <= smax; ++s)
            if (s != 0 && mod(s, ctx.p) != 0 && mod(s, ctx.p) != ctx.p - 1)
                out.push_back({s, n});
    return out;
}

}  // namespace

TEST_CASE("tower heights")
{
    CHECK(tower_height(c5, 8 * 145) == 2);
    CHECK(tower_height(c5, 12) == 0);
    CHECK(!tower_height(c5, 0));
    CHECK(tower_height(c5, -8 * 250) == 4);
    CHECK(cls(Symbol::One, 25, 5).t(c5) == 8 * 145);
}

TEST_CASE("v0 differentials at (1,2)")
{
    Caps caps{120, 6};
    auto d = v0_differentials(c5, {1, 2}, caps);
    bool found = false;
    for (const auto& e : d) {
        CHECK(e.source.t(c5) == e.target.t(c5));
        CHECK(e.target.coh() == e.source.coh() + 1);
        if (e.source == cls(Symbol::One, 25, 10)) {
            CHECK(e.target == cls(Symbol::H0, 24, 5));
            CHECK(e.length == 1);
            found = true;
        }
        CHECK(e.source.base.symbol != Symbol::H1);
        CHECK(!(e.source == cls(Symbol::One, 25, 5)));
    }
    CHECK(found);
    for (const auto& e : v0_differentials(c5, {0, 2}, caps))
        CHECK(e.source.base.s != 0);
    for (const auto& e : v0_differentials(c5, {1, 1}, caps))
        CHECK(!(e.source == cls(Symbol::H1, 5, 3)));
}

TEST_CASE("compute M02 examples")
{
    Caps caps{120, 6};
    auto h = compute_M02(c5, {1, 2}, caps);
    CHECK(has(h, cls(Symbol::One, 25, 5), 2));
    CHECK(has(h, cls(Symbol::One, 25, 10), 1));
    for (const auto& e : h)
        CHECK(!(e.base == cls(Symbol::One, 25, 10) && e.k == 2));

    auto z = compute_M02(c5, {0, 1}, caps);
    M11Class y = cls(Symbol::H0, 0, 1), zy = y;
    zy.base.zeta = true;
    CHECK(has(z, y, caps.k_cap));
    CHECK(has(z, zy, caps.k_cap));
}

TEST_CASE("closed form M20 examples")
{
    Caps caps{120, 6};
    auto all = closed_form_M20(c5, {1, 2}, caps, true);
    CHECK(has(all, cls(Symbol::One, 25, 5), 1));
    CHECK(has(all, cls(Symbol::One, 25, 5), 2));
    CHECK(has(all, cls(Symbol::H1, 25, 4), 2));
    auto g = closed_form_M20(c5, {1, 1}, caps, true);
    CHECK(has(g, M11Class{g_class(c5, 0, 5), 1}, 2));
    CHECK(!has(g, M11Class{g_class(c5, 0, 5), 1}, 3));
    for (const auto& e : all) {
        auto th = tower_height(c5, e.t(c5));
        if (th)
            CHECK(e.k <= *th);
    }
}

TEST_CASE("M20new examples")
{
    Caps caps{120, 6};
    auto v4 = closed_form_M20new(c5, {1, 2}, caps);
    auto v1 = closed_form_M20new(c5, {1, 0}, caps);
    auto hit = [](const std::vector<NewElement>& v, Family20New f, Int s, Int j, int k) {
        for (const auto& e : v)
            if (e.family == f && e.s == s && e.j == j && e.k == k)
                return true;
        return false;
    };
    CHECK(hit(v1, Family20New::Y0, 1, 1, 1));
    for (const auto& e : v1)
        CHECK(e.family != Family20New::Y1);
    CHECK(!hit(v4, Family20New::Y0, 24, 1, 1));
    CHECK(hit(v4, Family20New::Y0, 25, 1, 1));
    for (const auto& e : v4)
        if (e.family == Family20New::Y1)
            CHECK(divides(ipow(5, e.k - 1), e.j + 1));
    auto z = closed_form_M20new(c5, {0, 1}, caps);
    for (int k = 1; k <= caps.k_cap; ++k)
        CHECK(hit(z, Family20New::Ginf, 0, 1, k));

    NewElement h1{Family20New::Y1, Symbol::H1, 0, false, 5, 2, 1};
    auto m = dictionary_new(c5, h1, caps);
    CHECK(m.base == cls(Symbol::H1, 5, 2));
    NewElement x{Family20New::X, Symbol::One, 0, false, 25, 5, 2};
    CHECK(dictionary_new(c5, x, caps).base == cls(Symbol::One, 25, 5));
}

TEST_CASE("homology agrees with the closed forms")
{
    for (int p : {5, 7}) {
        auto c = PrimeContext::make(p);
        Caps caps{3 * index_a(c, 4), 8};
        for (const auto& v : vicinities(c, 3, 6)) {
            auto r = compute_M02_full(c, v, caps);
            auto cf = closed_form_M20(c, v, caps);
            CHECK_MESSAGE(shape(c, r.elements) == shape(c, cf), "p=", p, " ", v.label());
            for (auto& [key, e1] : r.e1_exponent)
                if (key.first % 2 == 0) {
                    Int lhs = 0, rhs = 0;
                    for (int co = 0; co <= 4; ++co) {
                        int sg = co % 2 ? -1 : 1;
                        if (r.e1_exponent.count({co, key.second}))
                            lhs += sg * r.e1_exponent.at({co, key.second});
                        if (r.h_exponent.count({co, key.second}))
                            rhs += sg * r.h_exponent.at({co, key.second});
                    }
                    CHECK(lhs == rhs);
                }
        }
    }
}

TEST_CASE("zero vicinity homology")
{
    Caps caps{200, 8};
    for (int n = 0; n <= 3; ++n) {
        Vicinity v{0, n};
        auto h = compute_M02(c5, v, caps);
        auto cf = closed_form_M20(c5, v, caps);
        CHECK_MESSAGE(shape(c5, h) == shape(c5, cf), "n=", n);
    }
}

TEST_CASE("dictionary is a bijection")
{
    for (int p : {5, 7}) {
        auto c = PrimeContext::make(p);
        Caps caps{3 * index_a(c, 4), 8};
        auto vs = vicinities(c, 3, 6);
        for (int n = 0; n <= 3; ++n)
            vs.push_back({0, n});
        for (const auto& v : vs) {
            std::vector<M02Element> img;
            for (const auto& e : closed_form_M20new(c, v, caps)) {
                auto m = dictionary_new(c, e, caps);
                CHECK(m.t(c) == e.t(c));
                CHECK(m.coh() == e.coh());
                img.push_back(m);
            }
            auto all = closed_form_M20(c, v, caps, true);
            std::sort(img.begin(), img.end());
            CHECK(std::adjacent_find(img.begin(), img.end()) == img.end());
            CHECK_MESSAGE(img == all, "p=", p, " ", v.label());
        }
    }
}
