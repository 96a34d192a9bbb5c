#pragma once

#include "chromatic/v1_bockstein.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace chromatic {

// nu_p(t/q)+1 for q | t, t != 0; 0 if q ∤ t; nullopt (infinite) at t = 0.
std::optional<int> tower_height(const PrimeContext& ctx, const Int& t);

struct V0Differential {
    M11Class source;
    M11Class target;
    int length = 1;

    auto operator<=>(const V0Differential& o) const
    {
        if (auto c = source <=> o.source; c != 0)
            return c;
        if (auto c = target <=> o.target; c != 0)
            return c;
        return length <=> o.length;
    }
    bool operator==(const V0Differential& o) const
    {
        return source == o.source && target == o.target && length == o.length;
    }
};

// zeta-free M11 classes the v0 computation of a vicinity works on.  For the zero vicinity this is
// the next larger zero vicinity, so that boundary targets exist.
std::vector<M11Class> v0_pool(const PrimeContext& ctx, const Vicinity& v, const Caps& caps);

// Leading terms of the projective v0-BSS differentials with source in the vicinity.
std::vector<V0Differential> v0_differentials(const PrimeContext& ctx, const Vicinity& v, const Caps& caps);

enum class Family20 { X, Xinf, Y0, Y0inf, zY0inf, Y, Y1, G, Ginf, zGinf };
std::string family_name(Family20 f);

struct M02Element {
    M11Class base;  // zeta only in the t = 0 column
    int k = 1;
    Family20 family = Family20::X;

    int coh() const { return base.coh(); }
    Int t(const PrimeContext& ctx) const { return base.t(ctx); }
    std::string name(const PrimeContext& ctx) const;

    auto operator<=>(const M02Element& o) const
    {
        if (auto c = base <=> o.base; c != 0)
            return c;
        return k <=> o.k;
    }
    bool operator==(const M02Element& o) const { return base == o.base && k == o.k; }
};

struct M02Result {
    std::vector<M02Element> elements;  // one per cyclic summand, order p^k
    std::vector<V0Differential> differentials;
    // total p-exponent of E1 towers per (coh, t), t != 0
    std::map<std::pair<int, Int>, Int> e1_exponent;
    // same for the homology, over every tower in the complex (boundary targets included)
    std::map<std::pair<int, Int>, Int> h_exponent;
};

M02Result compute_M02_full(const PrimeContext& ctx, const Vicinity& v, const Caps& caps);
std::vector<M02Element> compute_M02(const PrimeContext& ctx, const Vicinity& v, const Caps& caps);

// all_k lists every admissible k; otherwise only the maximal k per class (basis).
std::vector<M02Element> closed_form_M20(const PrimeContext& ctx, const Vicinity& v, const Caps& caps,
                                        bool all_k = false);

enum class Family20New { X, Y0, Y1, G, Xinf, Y0inf, zY0inf, Ginf, zGinf };
std::string family_name(Family20New f);

// x(j,k)_s in the simplified presentation.
struct NewElement {
    Family20New family = Family20New::X;
    Symbol symbol = Symbol::One;  // One, H0, H1, or G0/G1 for G_i
    int gi = 0;                   // i of G_i
    bool zeta = false;
    Int s;  // named exponent
    Int j;
    int k = 1;

    int coh() const;
    Int t(const PrimeContext& ctx) const;
    std::string name() const;

    auto operator<=>(const NewElement&) const = default;
    bool operator==(const NewElement&) const = default;
};

std::vector<NewElement> closed_form_M20new(const PrimeContext& ctx, const Vicinity& v, const Caps& caps);
M02Element dictionary_new(const PrimeContext& ctx, const NewElement& e, const Caps& caps);

// p-exponent multiset per (coh, t).
using OrderTable = std::map<std::pair<int, Int>, std::vector<int>>;
OrderTable order_table(const PrimeContext& ctx, const std::vector<M02Element>& els);

}  // namespace chromatic
