#include "chromatic/v1_bockstein.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace chromatic {

std::string Vicinity::label() const { return "(" + to_string(s) + "," + std::to_string(n) + ")"; }

Vicinity make_vicinity(const PrimeContext& ctx, const Int& s, int n)
{
    if (n < 0)
        throw ValidationError("vicinity depth must be non-negative");
    Vicinity v{s, n};
    if (s == 0)
        return v;
    while (v.s % ctx.p == 0) {
        v.s /= ctx.p;
        ++v.n;
    }
    if (mod(v.s, ctx.p) == ctx.p - 1)
        throw ValidationError("vicinity top s must satisfy s != -1 mod p (got s = " + to_string(v.s) + ")");
    return v;
}

std::vector<Int> vicinity_members(const PrimeContext& ctx, const Vicinity& v)
{
    if (v.n > 24)
        throw ValidationError("vicinity depth too large");
    std::vector<Int> out;
    Int top = v.top(ctx);
    for (unsigned long mask = 0; mask < (1ul << v.n); ++mask) {
        Int m = top;
        for (int i = 0; i < v.n; ++i)
            if (mask >> i & 1)
                m -= ppow(ctx, i);
        out.push_back(m);
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

bool in_vicinity(const PrimeContext& ctx, const Vicinity& v, const Int& m)
{
    Int u = v.top(ctx) - m;
    if (u < 0)
        return false;
    for (int i = 0; i < v.n; ++i) {
        if (u % ctx.p > 1)
            return false;
        u /= ctx.p;
    }
    return u == 0;
}

Vicinity vicinity_of(const PrimeContext& ctx, const Int& m)
{
    Int x = m;
    int i = 0;
    while (x != 0) {
        Int r = mod(x, ctx.p);
        if (r == 0)
            x /= ctx.p;
        else if (r == ctx.p - 1)
            x = (x + 1) / ctx.p;
        else
            return {x, i};
        ++i;
    }
    return {0, i};
}

Caps default_caps(const PrimeContext& ctx) { return {3 * index_a(ctx, 4), 8}; }

std::optional<GInfo> g_info(const PrimeContext& ctx, Symbol sym, const Int& e)
{
    if (sym == Symbol::G0)
        return GInfo{0, e, e};
    if (sym != Symbol::G1)
        return std::nullopt;
    if (e % ctx.p == 0)
        return GInfo{1, e / ctx.p, e};
    // N >= 2 needs e ≡ -off(N) mod p^N; at most one N works.
    Int bound = abs(e) * ctx.p + ctx.p;
    for (int N = 2; ppow(ctx, N - 2) <= bound; ++N) {
        Int named = e + g_offset(ctx, N);
        Int pn = ppow(ctx, N);
        if (named % pn == 0)
            return GInfo{N, named / pn, named};
    }
    return std::nullopt;
}

M2Class g_class(const PrimeContext& ctx, int N, const Int& named, bool zeta)
{
    if (N == 0)
        return {Symbol::G0, zeta, named};
    return {Symbol::G1, zeta, named - g_offset(ctx, N)};
}

M2Class h0g_class(const PrimeContext& ctx, int N, const Int& named, bool zeta)
{
    if (N < 1)
        throw std::invalid_argument("h0 G_N needs N >= 1");
    return {Symbol::H0G1, zeta, named - g_offset(ctx, N)};
}

std::optional<Y1Info> y1_info(const PrimeContext& ctx, const Int& m)
{
    if (m == 0)
        return std::nullopt;
    int nu = nu_p(ctx, m);
    const int N = nu + 2;
    Int shifted = m + ppow(ctx, nu);
    Int pn = ppow(ctx, N);
    if (shifted % pn != 0)
        return std::nullopt;
    return Y1Info{N, shifted / pn};
}

namespace {

std::vector<V1Differential> with_zeta(std::vector<V1Differential> d)
{
    size_t n = d.size();
    for (size_t i = 0; i < n; ++i) {
        V1Differential z = d[i];
        z.source.zeta = z.target.zeta = true;
        d.push_back(z);
    }
    std::sort(d.begin(), d.end());
    return d;
}

std::vector<V1Differential> formula_plain(const PrimeContext& ctx, const Vicinity& v)
{
    const int p = ctx.p;
    std::vector<V1Differential> D;
    for (const Int& m : vicinity_members(ctx, v)) {
        if (m != 0) {
            Decomp d = decompose(ctx, m);
            if (d.N >= 1)
                D.push_back({{Symbol::One, false, m}, {Symbol::H0, false, m - ppow(ctx, d.N - 1)}, index_a(ctx, d.N), 1});
            else
                D.push_back({{Symbol::One, false, m}, {Symbol::H1, false, m}, 1, 1});
            if (mod(d.S, p) != p - 1)
                D.push_back({{Symbol::H0, false, m}, g_class(ctx, d.N + 1, m), index_A(ctx, d.N) + 2, 2});
        }
        if (auto y = y1_info(ctx, m)) {
            Int pN = ppow(ctx, y->N), pN1 = ppow(ctx, y->N - 1), pN2 = ppow(ctx, y->N - 2);
            D.push_back({{Symbol::H0, false, m}, g_class(ctx, y->N - 1, m + pN2 - pN1),
                         pN - pN2 + index_A(ctx, y->N - 2) + 2, 3});
        }
        if (m % p == 0)
            D.push_back({{Symbol::H1, false, m}, {Symbol::G0, false, m - 1}, Int(p - 1), 4});
        if (mod(m, p) != p - 1)
            D.push_back({{Symbol::G0, false, m}, h0g_class(ctx, 1, m), 1, 5});
        if (auto g = g_info(ctx, Symbol::G1, m); g && mod(g->S, p) != p - 1)
            D.push_back({{Symbol::G1, false, m}, h0g_class(ctx, g->N + 1, g->named), index_a(ctx, g->N), 5});
    }
    return D;
}

Int tq(const PrimeContext& ctx, const M2Class& c) { return c.t_units(ctx); }

std::vector<V1Differential> inductive_plain(const PrimeContext& ctx, const Vicinity& v)
{
    if (v.n == 0) {
        auto D = formula_plain(ctx, v);
        std::sort(D.begin(), D.end());
        return D;
    }
    auto prev = inductive_plain(ctx, {v.s, v.n - 1});
    const Int d1 = v.s * ppow(ctx, v.n - 1) * (ctx.p - 1);
    const Int d2 = d1 - ppow(ctx, v.n - 1);

    std::vector<V1Differential> D;
    for (const Int& shift : {d1, d2})
        for (auto e : prev) {
            e.source.s += shift;
            e.target.s += shift;
            D.push_back(e);
        }

    auto longest = [&](int line) {
        std::vector<size_t> idx;
        Int best = -1;
        for (size_t i = 0; i < D.size(); ++i) {
            if (coh_degree(D[i].source.symbol) != line)
                continue;
            if (D[i].length > best) {
                best = D[i].length;
                idx.clear();
            }
            if (D[i].length == best)
                idx.push_back(i);
        }
        std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return tq(ctx, D[a].source) < tq(ctx, D[b].source); });
        return idx;
    };
    std::vector<size_t> doomed;
    {
        auto l0 = longest(0), l1 = longest(1), l2 = longest(2);
        if (l0.empty() || l2.empty() || l1.size() != 2)
            throw ConsistencyError("inductive step " + v.label() + ": unexpected longest differentials");
        if (l0.size() > 1 && tq(ctx, D[l0[l0.size() - 2]].source) == tq(ctx, D[l0.back()].source))
            throw ConsistencyError("inductive step " + v.label() + ": tie on the 0-line");
        if (l2.size() > 1 && tq(ctx, D[l2[0]].source) == tq(ctx, D[l2[1]].source))
            throw ConsistencyError("inductive step " + v.label() + ": tie on the 2-line");
        doomed = {l0.back(), l1[0], l1[1], l2.front()};
    }
    std::set<M2Class> pool;
    for (const auto& e : D) {
        pool.insert(e.source);
        pool.insert(e.target);
    }
    std::vector<V1Differential> kept;
    for (size_t i = 0; i < D.size(); ++i)
        if (std::find(doomed.begin(), doomed.end(), i) == doomed.end())
            kept.push_back(D[i]);

    const Int top = v.top(ctx);
    const Int an = index_a(ctx, v.n);
    std::set<M2Class> used;
    for (const auto& e : kept) {
        used.insert(e.source);
        used.insert(e.target);
    }
    std::vector<M2Class> fresh = {{Symbol::One, false, top}, g_class(ctx, v.n, top)};
    for (const auto& c : fresh) {
        pool.insert(c);
        used.insert(c);
    }
    std::vector<M2Class> free;
    for (const auto& c : pool)
        if (!used.count(c))
            free.push_back(c);
    for (int f = 0; f < 2; ++f) {
        const M2Class& x = fresh[f];
        std::vector<size_t> cand;
        for (size_t i = 0; i < free.size(); ++i)
            if (free[i].coh() == x.coh() + 1 && tq(ctx, free[i]) == tq(ctx, x) - an)
                cand.push_back(i);
        if (cand.size() != 1)
            throw ConsistencyError("inductive step " + v.label() + ": no unique target for " + x.name());
        kept.push_back({x, free[cand[0]], an, f == 0 ? 1 : 5});
        free.erase(free.begin() + static_cast<long>(cand[0]));
    }
    if (free.size() != 4)
        throw ConsistencyError("inductive step " + v.label() + ": " + std::to_string(free.size()) +
                               " unmatched classes, expected four");
    std::sort(free.begin(), free.end(), [&](const M2Class& a, const M2Class& b) { return tq(ctx, a) < tq(ctx, b); });
    for (auto [a, b] : {std::pair{free[0], free[3]}, std::pair{free[1], free[2]}}) {
        const M2Class& hi = tq(ctx, a) > tq(ctx, b) ? a : b;
        const M2Class& lo = tq(ctx, a) > tq(ctx, b) ? b : a;
        if (lo.coh() != hi.coh() + 1)
            throw ConsistencyError("inductive step " + v.label() + ": coupling " + hi.name() + " with " + lo.name());
        kept.push_back({hi, lo, tq(ctx, hi) - tq(ctx, lo), 0});
    }
    std::sort(kept.begin(), kept.end());
    return kept;
}

}  // namespace

std::vector<V1Differential> v1_differentials_formula(const PrimeContext& ctx, const Vicinity& v)
{
    return with_zeta(formula_plain(ctx, v));
}

std::vector<V1Differential> v1_differentials_inductive(const PrimeContext& ctx, const Vicinity& v)
{
    if (v.is_zero())
        throw ValidationError("the inductive generator needs s != 0");
    return with_zeta(inductive_plain(ctx, v));
}

void check_matching(const PrimeContext& ctx, const Vicinity& v, const std::vector<V1Differential>& d)
{
    std::map<M2Class, int> seen;
    for (const auto& e : d) {
        if (e.target.coh() != e.source.coh() + 1 || e.source.zeta != e.target.zeta)
            throw ConsistencyError("differential " + e.source.name() + " -> " + e.target.name() + " changes coh wrongly");
        if (e.length < 1 || tq(ctx, e.source) != tq(ctx, e.target) + e.length)
            throw ConsistencyError("differential " + e.source.name() + " -> " + e.target.name() + " breaks degree");
        if (!in_vicinity(ctx, v, e.source.s))
            throw ConsistencyError("source " + e.source.name() + " outside vicinity " + v.label());
        if (!v.is_zero() && !in_vicinity(ctx, v, e.target.s))
            throw ConsistencyError("target " + e.target.name() + " outside vicinity " + v.label());
        ++seen[e.source];
        ++seen[e.target];
    }
    for (const Int& m : vicinity_members(ctx, v))
        for (Symbol sym : kSymbols)
            for (bool z : {false, true}) {
                M2Class c{sym, z, m};
                int want = (m == 0 && (sym == Symbol::One || sym == Symbol::H0)) ? 0 : 1;
                auto it = seen.find(c);
                int got = it == seen.end() ? 0 : it->second;
                if (got != want)
                    throw ConsistencyError("class " + c.name() + " in vicinity " + v.label() + " meets " +
                                           std::to_string(got) + " differentials");
            }
}

std::string family_name(Family11 f)
{
    switch (f) {
    case Family11::X: return "X";
    case Family11::Y0: return "Y0";
    case Family11::Y: return "Y";
    case Family11::Y1: return "Y1";
    case Family11::G: return "G";
    case Family11::Xinf: return "Xinf";
    case Family11::Yinf: return "Yinf";
    }
    return "?";
}

std::string M11Class::name(const PrimeContext& ctx) const
{
    std::string idx = "_{" + to_string(base.s) + "/" + to_string(j) + "}";
    std::string core;
    if (family == Family11::G) {
        auto g = g_info(ctx, base.symbol, base.s);
        core = "(G_" + std::to_string(g ? g->N : -1) + ")_{" + to_string(g ? g->named : base.s) + "/" + to_string(j) + "}";
    } else if (base.symbol == Symbol::One) {
        core = "1" + idx;
    } else {
        core = "(" + symbol_name(base.symbol) + ")" + idx;
    }
    return base.zeta ? "zeta" + core : core;
}

namespace {

Family11 row_family(int row)
{
    switch (row) {
    case 1: return Family11::X;
    case 2: return Family11::Y0;
    case 3: return Family11::Y1;
    case 4: return Family11::Y;
    default: return Family11::G;
    }
}

void add_infinite(std::vector<Tower>& out, const Vicinity& v, const Caps& caps)
{
    if (!v.is_zero())
        return;
    for (bool z : {false, true}) {
        out.push_back({{Symbol::One, z, 0}, caps.j_cap, Family11::Xinf, true});
        out.push_back({{Symbol::H0, z, 0}, caps.j_cap + 1, Family11::Yinf, true});
    }
}

}  // namespace

std::vector<Tower> compute_M11_towers(const PrimeContext& ctx, const Vicinity& v, const Caps& caps)
{
    auto D = v1_differentials_formula(ctx, v);
    check_matching(ctx, v, D);
    std::vector<Tower> out;
    for (const auto& e : D)
        out.push_back({e.source, e.length, row_family(e.row), false});
    add_infinite(out, v, caps);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Tower> closed_form_M11_towers(const PrimeContext& ctx, const Vicinity& v, const Caps& caps)
{
    const int p = ctx.p;
    std::vector<Tower> out;
    for (const Int& m : vicinity_members(ctx, v))
        for (bool z : {false, true}) {
            if (m != 0) {
                Decomp d = decompose(ctx, m);
                out.push_back({{Symbol::One, z, m}, index_a(ctx, d.N), Family11::X});
                if (mod(d.S, p) != p - 1)
                    out.push_back({{Symbol::H0, z, m}, index_A(ctx, d.N) + 2, Family11::Y0});
            }
            if (auto y = y1_info(ctx, m))
                out.push_back({{Symbol::H0, z, m},
                               ppow(ctx, y->N) - ppow(ctx, y->N - 2) + index_A(ctx, y->N - 2) + 2, Family11::Y1});
            if (m % p == 0)
                out.push_back({{Symbol::H1, z, m}, Int(p - 1), Family11::Y});
            if (mod(m, p) != p - 1)
                out.push_back({{Symbol::G0, z, m}, index_a(ctx, 0), Family11::G});
            if (auto g = g_info(ctx, Symbol::G1, m); g && mod(g->S, p) != p - 1)
                out.push_back({{Symbol::G1, z, m}, index_a(ctx, g->N), Family11::G});
        }
    add_infinite(out, v, caps);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<M11Class> expand_towers(const std::vector<Tower>& towers)
{
    std::vector<M11Class> out;
    for (const auto& t : towers)
        for (Int j = 1; j <= t.length; ++j)
            out.push_back({t.source, j, t.family});
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<M11Class> compute_M11(const PrimeContext& ctx, const Vicinity& v, const Caps& caps)
{
    return expand_towers(compute_M11_towers(ctx, v, caps));
}

std::vector<M11Class> closed_form_M11(const PrimeContext& ctx, const Vicinity& v, const Caps& caps)
{
    return expand_towers(closed_form_M11_towers(ctx, v, caps));
}

M2Class connecting_delta(const PrimeContext& ctx, const M11Class& top)
{
    if (top.base.s == 0 && (top.base.symbol == Symbol::One || top.base.symbol == Symbol::H0))
        throw ValidationError("connecting map is undefined on the infinite tower of " + top.base.name());
    Vicinity v = vicinity_of(ctx, top.base.s);
    for (const auto& e : v1_differentials_formula(ctx, v)) {
        if (e.source != top.base)
            continue;
        if (e.length != top.j)
            throw ValidationError(top.name(ctx) + " is not the top of its tower (length " + to_string(e.length) + ")");
        return e.target;
    }
    throw ValidationError(top.base.name() + " supports no v1 differential");
}

}  // namespace chromatic
