#pragma once

#include "chromatic/arith.hpp"

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace chromatic {

enum class Symbol { One, H0, H1, G0, G1, H0G1 };

inline constexpr Symbol kSymbols[] = {Symbol::One, Symbol::H0, Symbol::H1, Symbol::G0, Symbol::G1, Symbol::H0G1};

int coh_degree(Symbol s);
int q_units(Symbol s);  // internal degree in units of q
std::string symbol_name(Symbol s);
std::optional<Symbol> parse_symbol(const std::string& name);

// Window over bidegrees.  Internal degrees are absolute (not in units of q).
struct Window {
    Int t_min = 0;
    Int t_max = 0;
    int coh_min = 0;
    int coh_max = 4;

    bool contains(const Int& t, int coh) const
    {
        return t_min <= t && t <= t_max && coh_min <= coh && coh <= coh_max;
    }
    bool empty() const { return t_min > t_max || coh_min > coh_max; }
};

// v2^s x zeta^e in H*M_2^0.
struct M2Class {
    Symbol symbol = Symbol::One;
    bool zeta = false;
    Int s = 0;

    int coh() const { return coh_degree(symbol) + (zeta ? 1 : 0); }
    Int t_units(const PrimeContext& ctx) const { return s * (ctx.p + 1) + q_units(symbol); }
    Int t(const PrimeContext& ctx) const { return t_units(ctx) * ctx.q; }
    std::string name() const;

    auto operator<=>(const M2Class&) const = default;
    bool operator==(const M2Class&) const = default;
};

std::vector<M2Class> enumerate_M2(const PrimeContext& ctx, const Window& w);

enum class AlphaKind { Alpha, AlphaTop };

// 1_{s/k} (t = sq, coh 0) or (h0)_{-1/k} (t = 0, coh 1) in H*M_0^1.
struct AlphaClass {
    AlphaKind kind = AlphaKind::Alpha;
    Int s = 0;
    int k = 1;

    int coh() const { return kind == AlphaKind::Alpha ? 0 : 1; }
    Int t(const PrimeContext& ctx) const { return kind == AlphaKind::Alpha ? s * ctx.q : Int(0); }
    std::string name() const;

    auto operator<=>(const AlphaClass&) const = default;
    bool operator==(const AlphaClass&) const = default;
};

// k is unbounded when s = 0 and for (h0)_{-1/k}; k_cap truncates those.
std::vector<AlphaClass> enumerate_M01(const PrimeContext& ctx, const Window& w, int k_cap);

// v1^s h0^e in H*M_1^0.
struct M10Class {
    Int s = 0;
    bool h0 = false;

    int coh() const { return h0 ? 1 : 0; }
    Int t(const PrimeContext& ctx) const { return (s + (h0 ? 1 : 0)) * ctx.q; }
    std::string name() const;

    auto operator<=>(const M10Class&) const = default;
    bool operator==(const M10Class&) const = default;
};

std::vector<M10Class> enumerate_M10(const PrimeContext& ctx, const Window& w);

// H*M_0^0 is a single Q in bidegree (0,0); returns the number of rational summands.
int enumerate_M00(const Window& w);

}  // namespace chromatic
