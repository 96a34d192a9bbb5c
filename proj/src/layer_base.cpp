#include "chromatic/layer_base.hpp"

#include <algorithm>

namespace chromatic {

int coh_degree(Symbol s)
{
    switch (s) {
    case Symbol::One: return 0;
    case Symbol::H0:
    case Symbol::H1: return 1;
    case Symbol::G0:
    case Symbol::G1: return 2;
    case Symbol::H0G1: return 3;
    }
    return 0;
}

int q_units(Symbol s)
{
    switch (s) {
    case Symbol::H0:
    case Symbol::G0: return 1;
    case Symbol::H1:
    case Symbol::G1: return -1;
    default: return 0;
    }
}

std::string symbol_name(Symbol s)
{
    switch (s) {
    case Symbol::One: return "1";
    case Symbol::H0: return "h0";
    case Symbol::H1: return "h1";
    case Symbol::G0: return "g0";
    case Symbol::G1: return "g1";
    case Symbol::H0G1: return "h0g1";
    }
    return "?";
}

std::optional<Symbol> parse_symbol(const std::string& name)
{
    for (Symbol s : kSymbols)
        if (symbol_name(s) == name)
            return s;
    return std::nullopt;
}

std::string M2Class::name() const
{
    std::string base = symbol == Symbol::One ? "1_" + to_string(s) : "(" + symbol_name(symbol) + ")_" + to_string(s);
    return zeta ? "zeta" + base : base;
}

std::vector<M2Class> enumerate_M2(const PrimeContext& ctx, const Window& w)
{
    std::vector<M2Class> out;
    if (w.empty())
        return out;
    for (Symbol sym : kSymbols) {
        for (int z = 0; z < 2; ++z) {
            int coh = coh_degree(sym) + z;
            if (coh < w.coh_min || coh > w.coh_max)
                continue;
            Int c = Int(q_units(sym)) * ctx.q;
            Int lo = ceil_div(w.t_min - c, ctx.v2deg);
            Int hi = floor_div(w.t_max - c, ctx.v2deg);
            for (Int s = lo; s <= hi; ++s)
                out.push_back({sym, z == 1, s});
        }
    }
    std::sort(out.begin(), out.end(), [&](const M2Class& a, const M2Class& b) {
        Int ta = a.t(ctx), tb = b.t(ctx);
        if (ta != tb)
            return ta < tb;
        if (a.coh() != b.coh())
            return a.coh() < b.coh();
        return a < b;
    });
    return out;
}

std::string AlphaClass::name() const
{
    if (kind == AlphaKind::Alpha)
        return "1_{" + to_string(s) + "/" + std::to_string(k) + "}";
    return "(h0)_{-1/" + std::to_string(k) + "}";
}

std::vector<AlphaClass> enumerate_M01(const PrimeContext& ctx, const Window& w, int k_cap)
{
    std::vector<AlphaClass> out;
    if (w.empty())
        return out;
    if (w.coh_min <= 0 && 0 <= w.coh_max) {
        Int lo = ceil_div(w.t_min, ctx.q), hi = floor_div(w.t_max, ctx.q);
        for (Int s = lo; s <= hi; ++s) {
            int kmax = s == 0 ? k_cap : nu_p(ctx, s) + 1;
            for (int k = 1; k <= kmax; ++k)
                out.push_back({AlphaKind::Alpha, s, k});
        }
    }
    if (w.contains(0, 1))
        for (int k = 1; k <= k_cap; ++k)
            out.push_back({AlphaKind::AlphaTop, -1, k});
    return out;
}

std::string M10Class::name() const
{
    std::string b = "v1^" + to_string(s);
    return h0 ? b + " h0" : b;
}

std::vector<M10Class> enumerate_M10(const PrimeContext& ctx, const Window& w)
{
    std::vector<M10Class> out;
    if (w.empty())
        return out;
    for (int e = 0; e < 2; ++e) {
        if (e < w.coh_min || e > w.coh_max)
            continue;
        Int lo = ceil_div(w.t_min, ctx.q) - e, hi = floor_div(w.t_max, ctx.q) - e;
        for (Int s = lo; s <= hi; ++s)
            out.push_back({s, e == 1});
    }
    std::sort(out.begin(), out.end(), [&](const M10Class& a, const M10Class& b) {
        Int ta = a.t(ctx), tb = b.t(ctx);
        return ta != tb ? ta < tb : a.h0 < b.h0;
    });
    return out;
}

int enumerate_M00(const Window& w) { return w.contains(0, 0) ? 1 : 0; }

}  // namespace chromatic
