#include "chromatic/picard.hpp"
#include "doctest.h"

#include <random>
#include <set>

using namespace chromatic;

namespace {

const PrimeContext c5 = PrimeContext::make(5);

std::set<std::pair<std::string, std::string>> pair_set(const AmbigramBlock& b)
{
    std::set<std::pair<std::string, std::string>> out;
    for (const auto& p : b.pairs)
        out.insert(std::minmax(p.a, p.b));
    return out;
}

}  // namespace

TEST_CASE("generators")
{
    CHECK(pic_of_sphere(c5, 2, 8) == make_picard(c5, 2, 0, 2, 8));
    CHECK(pic_of_sphere(c5, 0, 8) == make_picard(c5, 0, 0, 0, 8));
    CHECK(pic_of_sphere(c5, 48, 8) == make_picard(c5, 48, 0, 48, 8));
    CHECK(pic_of_sphere(c5, 48, 8).c == 0);
    CHECK(pic_det(c5, 8) == make_picard(c5, 0, 1, 12, 8));
    CHECK(pic_det(PrimeContext::make(7), 8) == make_picard(PrimeContext::make(7), 0, 1, 16, 8));
    CHECK(pic_det(c5, 8) + pic_of_sphere(c5, 0, 8) == pic_det(c5, 8));
    CHECK(pic_det(c5, 8).str() == "(0, 1, 12)");
}

TEST_CASE("interpolation identity")
{
    for (int p : {5, 7}) {
        auto c = PrimeContext::make(p);
        for (int N = 1; N <= 20; ++N) {
            CHECK(verify_interpolation_identity(c, N));
            CHECK((geometric_inverse(c, N).scaled(1 - p)) == TruncatedPadic(c, 1, N));
        }
        CHECK(!verify_interpolation_identity(c, 8, 5));
        CHECK(interpolated_sphere(c, 8) == make_picard(c, 0, 0, 2 * (p + 1), 8));
    }
}

TEST_CASE("duality shift")
{
    for (int p : {5, 7, 11})
        for (int N : {1, 8, 20}) {
            auto c = PrimeContext::make(p);
            CHECK(duality_shift(c, N) == TruncatedPadic(c, 1, N));
            CHECK(duality_shift(c, N, true).is_zero());
        }
}

TEST_CASE("group laws on random elements")
{
    std::mt19937_64 rng(20261014);
    std::uniform_int_distribution<long long> d(-1000000, 1000000);
    for (int i = 0; i < 1000; ++i) {
        auto c = PrimeContext::make(i % 2 ? 5 : 7);
        const int N = 1 + i % 12;
        auto r = [&] { return make_picard(c, d(rng), d(rng), d(rng), N); };
        auto x = r(), y = r(), z = r();
        CHECK((x + y) + z == x + (y + z));
        CHECK(x + y == y + x);
        CHECK(x - x == make_picard(c, 0, 0, 0, N));
        const long long m = d(rng), n = d(rng);
        CHECK(pic_of_sphere(c, m + n, N) == pic_of_sphere(c, m, N) + pic_of_sphere(c, n, N));
        CHECK(x.scaled(m) + x.scaled(n) == x.scaled(m + n));
        CHECK((x + y).scaled(m) == x.scaled(m) + y.scaled(m));
    }
}

TEST_CASE("ambigram at v2^1")
{
    auto b = pure_component(c5, {1, 0}, Pairing::Full, default_caps(c5));
    REQUIRE(b.center);
    CHECK(b.unmatched.empty());
    std::set<std::pair<std::string, std::string>> want{
        std::minmax<std::string>("1_{1/1}", "(G_0)_{1/1}"), std::minmax<std::string>("(h0)_{1/1}", "(h0)_{1/2}")};
    CHECK(pair_set(b) == want);
}

TEST_CASE("ambigram at v2^5")
{
    auto b = pure_component(c5, {1, 1}, Pairing::Full, default_caps(c5));
    REQUIRE(b.center);
    std::set<std::pair<std::string, std::string>> want;
    auto s = [](int j) { return std::to_string(j); };
    for (int j = 1; j <= 5; ++j)
        want.insert(std::minmax("1_{5/" + s(j) + "}", "(G_1)_{5/" + s(6 - j) + "}"));
    for (int j = 3; j <= 6; ++j)
        want.insert(std::minmax("(h0)_{5/" + s(j) + "}", "(h1)_{5/" + s(7 - j) + "}"));
    want.insert(std::minmax<std::string>("(h0)_{5/1}", "(h0)_{5/8}"));
    want.insert(std::minmax<std::string>("(h0)_{5/2}", "(h0)_{5/7}"));
    CHECK(pair_set(b) == want);

    auto xg = pure_component(c5, {1, 1}, Pairing::XG, default_caps(c5));
    CHECK(xg.pairs.size() == 5);
    auto y0 = pure_component(c5, {1, 1}, Pairing::Y0Internal, default_caps(c5));
    CHECK(y0.pairs.size() == 6);
}

TEST_CASE("full vicinity of v2^5 splits into two blocks")
{
    auto rep = ambigram_report(c5, {1, 1}, Pairing::Full, default_caps(c5));
    CHECK(!rep.single_center);
    REQUIRE(rep.blocks.size() == 2);
    CHECK(rep.blocks[0].exponent == 5);
    CHECK(rep.blocks[1].exponent == 4);
    CHECK(rep.blocks[0].center);
    CHECK(rep.blocks[1].center);
    CHECK(rep.unmatched.empty());
}

TEST_CASE("every pure component with n <= 1 has a center")
{
    for (int p : {5, 7}) {
        auto c = PrimeContext::make(p);
        for (int n = 0; n <= 1; ++n)
            for (int s = -10; s <= 10; ++s) {
                if (s == 0 || mod(s, p) == 0 || mod(s, p) == p - 1)
                    continue;
                auto b = pure_component(c, {s, n}, Pairing::Full, default_caps(c));
                CHECK_MESSAGE(b.center.has_value(), "p=", p, " s=", s, " n=", n);
                CHECK(b.unmatched.empty());
            }
    }
}
