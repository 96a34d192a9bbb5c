#include "chromatic/sy_compat.hpp"
#include "doctest.h"

#include <algorithm>
#include <set>

using namespace chromatic;

namespace {

const PrimeContext c5 = PrimeContext::make(5);

std::vector<Vicinity> vicinities(const PrimeContext& ctx, int nmax, int smax)
{
    std::vector<Vicinity> out;
    for (int n = 0; n <= nmax; ++n) {
        for (int s = -smax; s <= smax; ++s)
            if (s != 0 && mod(s, ctx.p) != 0 && mod(s, ctx.p) != ctx.p - 1)
                out.push_back({s, n});
        out.push_back({0, n});
    }
    return out;
}

bool contains(const std::vector<sy::Element>& v, const sy::Element& e)
{
    return std::binary_search(v.begin(), v.end(), e);
}

}  // namespace

TEST_CASE("remark generators appear only in corrected mode")
{
    Caps caps{120, 8};
    for (int s : {1, 2, 3, 6, -4}) {
        Vicinity v{s, 2};
        const int n = 2;
        Int m = s * ipow(5, n) - ipow(5, n - 2);
        sy::Element g{sy::Family::Y1CG, M2Class{Symbol::H0, true, m}, ipow(5, n) - ipow(5, n - 2) + 1, n - 1};
        CHECK(contains(sy::closed_form_SY(c5, v, caps, sy::Mode::Corrected), g));
        CHECK(!contains(sy::closed_form_SY(c5, v, caps, sy::Mode::Legacy), g));
        bool found = false;
        for (const auto& r : sy::errata_report(c5, v, caps))
            if (r.element == g) {
                CHECK(r.corrected_present);
                CHECK(!r.legacy_present);
                found = true;
            }
        CHECK(found);
    }
}

TEST_CASE("X rows agree with the projective basis")
{
    Caps caps{120, 8};
    for (const auto& v : vicinities(c5, 3, 6)) {
        std::set<std::tuple<Int, Int, int>> a, b;
        for (const auto& e : closed_form_M20(c5, v, caps))
            if (e.family == Family20::X)
                a.insert({e.base.base.s, e.base.j, e.k});
        for (const auto& e : sy::closed_form_SY(c5, v, caps))
            if (e.family == sy::Family::X)
                b.insert({e.gen.s, e.j, e.k});
        CHECK(a == b);
    }
}

TEST_CASE("dictionary examples")
{
    Caps caps{120, 8};
    // (h0)_{sp^n/1,n+1} stays in Y0C
    M02Element y0{M11Class{M2Class{Symbol::H0, false, 25}, 1}, 3, Family20::Y0};
    auto i0 = sy::sy_dictionary(c5, y0, caps);
    CHECK(i0.family == sy::Family::Y0C);
    CHECK(i0.gen.s == 25);
    CHECK(i0.j == 1);
    CHECK(i0.k == 3);
    // (h1)_{sp/p-1,1}, p does not divide s
    M02Element y{M11Class{M2Class{Symbol::H1, false, 5}, 4}, 1, Family20::Y};
    auto iy = sy::sy_dictionary(c5, y, caps);
    CHECK(iy.family == sy::Family::XzetaC);
    CHECK(iy.gen == M2Class{Symbol::One, true, 5});
    CHECK(iy.j == 5);
    // (G_0)_{s/1,i+1}
    M02Element g{M11Class{g_class(c5, 0, 5), 1}, 2, Family20::G};
    auto ig = sy::sy_dictionary(c5, g, caps);
    CHECK(ig.family == sy::Family::GC);
    CHECK(ig.k == 2);
}

TEST_CASE("dictionary is a bijection onto the corrected presentation")
{
    for (int p : {5, 7}) {
        auto c = PrimeContext::make(p);
        Caps caps{3 * index_a(c, 4), 8};
        for (const auto& v : vicinities(c, 3, 10)) {
            std::vector<sy::Element> img;
            for (const auto& e : sy::m20_preimage(c, v, caps)) {
                auto x = sy::sy_dictionary(c, e, caps);
                CHECK(x.coh() == e.coh());
                CHECK(x.t(c) == e.t(c));
                img.push_back(x);
            }
            std::sort(img.begin(), img.end());
            CHECK(std::adjacent_find(img.begin(), img.end()) == img.end());
            CHECK_MESSAGE(img == sy::closed_form_SY(c, v, caps), "p=", p, " ", v.label());
            CHECK(sy::compare_orders(c, v, caps, sy::Mode::Corrected).empty());
        }
    }
}

TEST_CASE("legacy mode disagrees")
{
    Caps caps{120, 8};
    CHECK(!sy::compare_orders(c5, {1, 2}, caps, sy::Mode::Legacy).empty());
    CHECK(sy::compare_orders(c5, {1, 2}, caps, sy::Mode::Corrected).empty());
    CHECK(sy::errata_report(c5, {1, 0}, caps).empty());
}
