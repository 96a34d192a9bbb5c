#pragma once

#include "chromatic/layer_base.hpp"

#include <optional>
#include <string>
#include <vector>

namespace chromatic {

// Exponents s p^n - sum eps_i p^i.  s = 0 is the zero vicinity: exponents -sum eps_i p^i,
// which carries the infinite towers at exponent 0.
struct Vicinity {
    Int s = 1;
    int n = 0;

    bool is_zero() const { return s == 0; }
    Int top(const PrimeContext& ctx) const { return s * ppow(ctx, n); }
    std::string label() const;

    auto operator<=>(const Vicinity&) const = default;
    bool operator==(const Vicinity&) const = default;
};

// Renormalizes p | s to (s/p, n+1); rejects s ≡ -1 mod p (such exponents belong to a larger vicinity).
Vicinity make_vicinity(const PrimeContext& ctx, const Int& s, int n);
std::vector<Int> vicinity_members(const PrimeContext& ctx, const Vicinity& v);  // descending
bool in_vicinity(const PrimeContext& ctx, const Vicinity& v, const Int& m);
// The smallest vicinity containing exponent m.
Vicinity vicinity_of(const PrimeContext& ctx, const Int& m);

// Infinite towers at exponent 0 are kept while t >= -j_cap q; t = 0 towers of the v0 layer have height k_cap.
struct Caps {
    Int j_cap = 200;
    int k_cap = 8;
};

Caps default_caps(const PrimeContext& ctx);

// A class (G_N)_{S p^N}: the symbol g0 (N = 0) or g1 (N >= 1) at exponent S p^N - g_offset(N).
struct GInfo {
    int N = 0;
    Int S;
    Int named;  // S p^N
};
std::optional<GInfo> g_info(const PrimeContext& ctx, Symbol sym, const Int& e);
M2Class g_class(const PrimeContext& ctx, int N, const Int& named, bool zeta = false);
M2Class h0g_class(const PrimeContext& ctx, int N, const Int& named, bool zeta = false);  // (h0 G_N), N >= 1

// (h0) at m = S p^N - p^{N-2}, N >= 2.
struct Y1Info {
    int N = 2;
    Int S;
};
std::optional<Y1Info> y1_info(const PrimeContext& ctx, const Int& m);

struct V1Differential {
    M2Class source;
    M2Class target;
    Int length;
    int row = 0;  // which family of formulas produced it (1..5)

    auto operator<=>(const V1Differential& o) const
    {
        if (auto c = source <=> o.source; c != 0)
            return c;
        if (auto c = target <=> o.target; c != 0)
            return c;
        return length <=> o.length;
    }
    bool operator==(const V1Differential& o) const
    {
        return source == o.source && target == o.target && length == o.length;
    }
};

std::vector<V1Differential> v1_differentials_formula(const PrimeContext& ctx, const Vicinity& v);
std::vector<V1Differential> v1_differentials_inductive(const PrimeContext& ctx, const Vicinity& v);

// Every class of the vicinity sits on exactly one differential, targets outside the zero vicinity
// allowed and exponent-0 permanent classes excepted.  Throws ConsistencyError otherwise.
void check_matching(const PrimeContext& ctx, const Vicinity& v, const std::vector<V1Differential>& d);

enum class Family11 { X, Y0, Y, Y1, G, Xinf, Yinf };
std::string family_name(Family11 f);

struct M11Class {
    M2Class base;
    Int j = 1;
    Family11 family = Family11::X;

    int coh() const { return base.coh(); }
    Int t_units(const PrimeContext& ctx) const { return base.t_units(ctx) - j; }
    Int t(const PrimeContext& ctx) const { return t_units(ctx) * ctx.q; }
    std::string name(const PrimeContext& ctx) const;

    auto operator<=>(const M11Class& o) const
    {
        if (auto c = base <=> o.base; c != 0)
            return c;
        return j <=> o.j;
    }
    bool operator==(const M11Class& o) const { return base == o.base && j == o.j; }
};

struct Tower {
    M2Class source;
    Int length;
    Family11 family = Family11::X;
    bool infinite = false;  // capped exponent-0 tower

    auto operator<=>(const Tower& o) const
    {
        if (auto c = source <=> o.source; c != 0)
            return c;
        return length <=> o.length;
    }
    bool operator==(const Tower& o) const { return source == o.source && length == o.length; }
};

std::vector<Tower> compute_M11_towers(const PrimeContext& ctx, const Vicinity& v, const Caps& caps);
std::vector<Tower> closed_form_M11_towers(const PrimeContext& ctx, const Vicinity& v, const Caps& caps);
std::vector<M11Class> expand_towers(const std::vector<Tower>& towers);

std::vector<M11Class> compute_M11(const PrimeContext& ctx, const Vicinity& v, const Caps& caps);
std::vector<M11Class> closed_form_M11(const PrimeContext& ctx, const Vicinity& v, const Caps& caps);

// Boundary of the top class of a finite tower.
M2Class connecting_delta(const PrimeContext& ctx, const M11Class& top);

}  // namespace chromatic
