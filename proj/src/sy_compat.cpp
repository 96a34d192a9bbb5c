#include "chromatic/sy_compat.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace chromatic::sy {

namespace {

constexpr int kInf = 1 << 20;

// A_n with A_{<0} + 2 := 0
Int Am(const PrimeContext& ctx, long long n) { return n < 0 ? Int(-2) : index_A(ctx, n); }

int nu_inf(const PrimeContext& ctx, const Int& x) { return nu_or(ctx, x, kInf); }

M2Class one(const Int& m, bool z = false) { return {Symbol::One, z, m}; }
M2Class h0(const Int& m, bool z = false) { return {Symbol::H0, z, m}; }
M2Class h1(const Int& m) { return {Symbol::H1, false, m}; }

}  // namespace

std::string family_name(Family f)
{
    switch (f) {
    case Family::X: return "X";
    case Family::Xinf: return "Xinf";
    case Family::XzetaC: return "XzetaC";
    case Family::YC: return "YC";
    case Family::Y0C: return "Y0C";
    case Family::Y1C: return "Y1C";
    case Family::YinfC: return "YinfC";
    case Family::GC: return "GC";
    case Family::G0: return "G0";
    case Family::Y0CG: return "Y0CG";
    case Family::Y1CG: return "Y1CG";
    }
    return "?";
}

std::string Element::name(const PrimeContext& ctx) const
{
    std::string g;
    Int s = gen.s;
    switch (family) {
    case Family::X:
    case Family::Xinf: g = gen.zeta ? "zeta" : "1"; break;
    case Family::XzetaC: g = "zeta"; break;
    case Family::YC: g = "h1"; break;
    case Family::Y0C:
    case Family::Y1C: g = "h0"; break;
    case Family::YinfC: g = gen.zeta ? "zeta.h" : "h"; break;
    case Family::Y0CG:
    case Family::Y1CG: g = "h0zeta"; break;
    case Family::GC:
    case Family::G0: {
        auto gi = g_info(ctx, gen.symbol, gen.s);
        g = "G" + std::to_string(gi ? gi->N : 0);
        if (gi)
            s = gi->named;
        if (gen.zeta)
            g = "zeta.G0";
        break;
    }
    }
    return family_name(family) + ":" + g + "_{" + to_string(s) + "/" + to_string(j) + "," + std::to_string(k) + "}";
}

std::vector<Element> closed_form_SY(const PrimeContext& ctx, const Vicinity& v, const Caps& caps, Mode mode)
{
    const int p = ctx.p;
    const bool legacy = mode == Mode::Legacy;
    std::set<Element> out;
    auto P = [&](long long e) { return ppow(ctx, e); };
    auto a = [&](long long n) { return index_a(ctx, n); };
    auto A = [&](long long n) { return index_A(ctx, n); };
    auto add = [&](Family f, M2Class g, const Int& j, int k) { out.insert({f, g, j, k}); };

    for (const Int& m : vicinity_members(ctx, v)) {
        if (m == 0) {
            for (Int j = 1; j <= caps.j_cap; ++j) {
                add(Family::Xinf, one(0), j, nu_p(ctx, j) + 1);
                add(Family::Xinf, one(0, true), j, nu_p(ctx, j) + 1);
            }
            for (bool z : {false, true}) {
                add(Family::YinfC, h0(0, z), 1, caps.k_cap);
                add(Family::G0, g_class(ctx, 0, 0, z), 1, caps.k_cap);
            }
        } else {
            Decomp d = decompose(ctx, m);
            const Int& S = d.S;
            const int N = d.N;
            auto xline = [&](const Int& j, int k) {
                return divides(P(k - 1), j) && (!divides(P(k), j) || j > a(N - k));
            };
            for (int k = 1; k <= N + 1; ++k)
                for (Int j = 1; j <= a(N - k + 1); ++j)
                    if (xline(j, k))
                        add(Family::X, one(m), j, k);
            const int i = mod(S + 1, p) != 0 ? 0 : nu_inf(ctx, S + 1);
            for (int k = 1; k <= N + 1; ++k)
                for (Int j = 1; j <= a(N - k + 1); ++j) {
                    bool ok;
                    if (i == 0 || k <= i - 1)
                        ok = xline(j, k);
                    else if (k <= N)
                        ok = a(N - k) < j && divides(P(k), j);
                    else
                        ok = false;
                    if (ok)
                        add(Family::XzetaC, one(m, true), j, k);
                }
            if (mod(S, p) != 0 && mod(S, p) != p - 1) {
                for (int k = 1; k <= N; ++k)
                    for (Int j = A(N - k) + 3; j <= A(N - k + 1) + 2; ++j)
                        if (divides(P(k - 1), j - 1) && (divides(P(k), j - 1) || j - 1 > a(N - k + 1)))
                            add(Family::Y0C, h0(m), j, k);
                add(Family::Y0C, h0(m), 1, N + 1);
                for (int k = 1; k <= N; ++k)
                    for (Int j = A(N - k) + 3; j <= A(N - k + 1) + 2; ++j)
                        if (divides(P(k), j - 1) && j != 1)
                            add(Family::Y0CG, h0(m, true), j, k);
            }
        }
        if (divides(p, m)) {
            for (Int j = 1; j < p - 1; ++j)
                add(Family::YC, h1(m), j, 1);
            if (divides(p, m / p))
                add(Family::YC, h1(m), p - 1, 2);
        }
        auto y = y1_info(ctx, m);
        if (!y)
            continue;
        const int n = y->N;
        const int mm = nu_inf(ctx, y->S);
        const Int B = P(n) - P(n - 2);
        const Int an1 = a(n - 1);
        for (Int j = 1; j <= B + Am(ctx, n - 2) + 2 + P(n); ++j)
            for (int k = 1; k <= n + 1; ++k) {
                bool ok = false;
                if (j == 1) {
                    ok = k == n - 1 && (legacy || n <= mm + 2);
                } else if (!divides(p, j + an1)) {
                    ok = k == 1 && a(n - 2) + 1 < j && j <= B + Am(ctx, n - 2) + 2;
                } else if (j > B + 1) {
                    int e = legacy ? k : k - 1;
                    if (divides(P(e), j - 1)) {
                        Int t = (j - 1) / P(e);
                        ok = j <= B + Am(ctx, n - k - 1) + 2 && (mod(t, p) != 0 || j > B + Am(ctx, n - k - 2) + 2);
                    }
                } else if (k <= n - 1) {
                    ok = 2 <= k && nu_p(ctx, j + an1) == k - 1 && j > a(n - k - 1) + 1 && (legacy || k <= mm + 1);
                    if (k == n - 1)
                        ok = ok || j == B + 1;
                } else if (k == n) {
                    if (divides(P(n - 1), j - 1 + P(n - 2))) {
                        Int t = (j - 1 + P(n - 2)) / P(n - 1);
                        ok = t != p && t != p - 1 && (legacy || n <= mm + 1);
                    }
                } else if (k == n + 1) {
                    ok = j == P(n) - P(n - 1) - P(n - 2) + 1 && (legacy || n <= mm);
                }
                if (ok)
                    add(Family::Y1C, h0(m), j, k);
            }
        for (int k = 1; k < n; ++k)
            for (Int j = B + Am(ctx, n - k - 2) + 3; j <= B + Am(ctx, n - k - 1) + 2; ++j) {
                bool cond = legacy ? divides(P(k), j - 1) : divides(P(k), j + an1);
                if (cond)
                    add(Family::Y1CG, h0(m, true), j, k);
            }
    }

    for (const auto& c : closed_form_M11(ctx, v, caps)) {
        const Symbol sym = c.base.symbol;
        if (c.base.zeta || (sym != Symbol::G0 && sym != Symbol::G1))
            continue;
        auto g = g_info(ctx, sym, c.base.s);
        if (!g)
            throw ConsistencyError("unrecognised G class " + c.name(ctx));
        const Int& j = c.j;
        if (g->S == 0) {
            if (g->N >= 1)
                add(Family::GC, c.base, j, nu_p(ctx, j + A(g->N - 1) + 1) + 1);
            continue;
        }
        const int i = nu_p(ctx, g->S);
        const Int t = g->S / P(i);
        const bool neg = mod(t, p) == p - 1;
        if (g->N == 0) {
            if (!neg)
                add(Family::GC, c.base, j, i + 1);
            continue;
        }
        const int k = nu_p(ctx, j + A(g->N - 1) + 1) + 1;
        bool ok;
        if (!legacy)
            ok = neg ? k <= i : k <= i + 1;
        else if (!neg)
            ok = !divides(P(i + 1), j + Am(ctx, g->N - i - 1) + 1);
        else if (mod(t, p * p) == p * p - 1)
            ok = !divides(P(i), j + Am(ctx, g->N - i) + 1);
        else
            ok = true;
        if (ok)
            add(Family::GC, c.base, j, k);
    }
    return {out.begin(), out.end()};
}

Element sy_dictionary(const PrimeContext& ctx, const M02Element& e, const Caps& caps)
{
    const int p = ctx.p;
    const M11Class& c = e.base;
    const Int& m = c.base.s;
    const Int& j = c.j;
    const int k = e.k;
    auto P = [&](long long x) { return ppow(ctx, x); };
    auto a = [&](long long n) { return index_a(ctx, n); };
    auto A = [&](long long n) { return index_A(ctx, n); };
    switch (e.family) {
    case Family20::X: return {Family::X, one(m), j, k};
    case Family20::Xinf: return {Family::Xinf, one(0), j, k};
    case Family20::Y0inf:
        if (j >= 2)
            return {Family::Xinf, one(0, true), j - 1, k};
        return {Family::YinfC, h0(0), 1, k};
    case Family20::zY0inf: return {Family::YinfC, h0(0, true), 1, k};
    case Family20::Ginf: {
        auto g = g_info(ctx, c.base.symbol, m);
        if (g && g->N == 0)
            return {Family::G0, c.base, 1, k};
        return {Family::GC, c.base, j, k};
    }
    case Family20::zGinf: return {Family::G0, c.base, 1, k};
    case Family20::Y0: {
        Decomp d = decompose(ctx, m);
        if (2 <= j && j <= a(d.N - k + 1) + 1 && nu_p(ctx, j - 1) == k - 1)
            return {Family::XzetaC, one(m, true), j - 1, k};
        return {Family::Y0C, h0(m), j, k};
    }
    case Family20::Y:
        if (j == p - 1 && !divides(p, m / p))
            return {Family::XzetaC, one(m, true), p, 1};
        return {Family::YC, h1(m), j, k};
    case Family20::Y1: {
        auto y = y1_info(ctx, m);
        if (!y)
            break;
        const int N = y->N;
        const Int an1 = a(N - 1);
        if (j <= P(N) - P(N - 2) && divides(P(k), j + an1))
            return {Family::XzetaC, one(m + P(N - 2), true), j + an1, k};
        if (j >= 2 && N - k - 1 >= 0 && nu_p(ctx, j + an1) == k - 1 && j <= a(N - k - 1) + 1)
            return {Family::XzetaC, one(m, true), j - 1, k};
        return {Family::Y1C, h0(m), j, k};
    }
    case Family20::G: {
        auto g = g_info(ctx, c.base.symbol, m);
        if (!g || g->S == 0)
            break;
        const int i = nu_p(ctx, g->S);
        const Int t = g->S / P(i);
        const bool neg = mod(t, p) == p - 1;
        if (g->N == 0) {
            if (!neg)
                return {Family::GC, c.base, j, k};
            Int tp = (t + 1) / p;
            return {Family::Y1CG, h0(tp * P(i + 1) - P(i - 1), true), P(i + 1) - P(i - 1) + 1, i};
        }
        if (!divides(P(k), j + A(g->N - 1) + 1))
            return {Family::GC, c.base, j, k};
        if (!neg)
            return {Family::Y0CG, h0(t * P(g->N + i), true), j + A(g->N - 1) + 2, k};
        Int tp = (t + 1) / p;
        const int ex = g->N + i;
        return {Family::Y1CG, h0(tp * P(ex + 1) - P(ex - 1), true), j + P(ex + 1) - P(ex - 1) + A(g->N - 1) + 2, k};
    }
    }
    (void)caps;
    throw ConsistencyError("no dictionary row for " + e.name(ctx));
}

std::vector<M02Element> m20_preimage(const PrimeContext& ctx, const Vicinity& v, const Caps& caps)
{
    if (!v.is_zero())
        return closed_form_M20(ctx, v, caps);
    std::vector<M02Element> out;
    for (const auto& e : closed_form_M20(ctx, {0, v.n + 1}, caps))
        if (in_vicinity(ctx, v, sy_dictionary(ctx, e, caps).gen.s))
            out.push_back(e);
    return out;
}

std::vector<Mismatch> compare_orders(const PrimeContext& ctx, const Vicinity& v, const Caps& caps, Mode mode)
{
    std::map<std::pair<int, Int>, Mismatch> rows;
    auto row = [&](int coh, const Int& t) -> Mismatch& {
        auto [it, fresh] = rows.try_emplace({coh, t}, Mismatch{coh, t, 0, 0, {}, {}});
        return it->second;
    };
    for (const auto& e : m20_preimage(ctx, v, caps)) {
        auto& r = row(e.coh(), e.t(ctx));
        r.m20_total += e.k;
        r.m20.push_back(e.name(ctx));
    }
    for (const auto& e : closed_form_SY(ctx, v, caps, mode)) {
        auto& r = row(e.coh(), e.t(ctx));
        r.sy_total += e.k;
        r.sy.push_back(e.name(ctx));
    }
    std::vector<Mismatch> out;
    for (auto& [key, r] : rows)
        if (r.m20_total != r.sy_total)
            out.push_back(std::move(r));
    return out;
}

std::vector<ErrataRecord> errata_report(const PrimeContext& ctx, const Vicinity& v, const Caps& caps)
{
    auto cor = closed_form_SY(ctx, v, caps, Mode::Corrected);
    auto leg = closed_form_SY(ctx, v, caps, Mode::Legacy);
    std::vector<Element> only_c, only_l;
    std::set_difference(cor.begin(), cor.end(), leg.begin(), leg.end(), std::back_inserter(only_c));
    std::set_difference(leg.begin(), leg.end(), cor.begin(), cor.end(), std::back_inserter(only_l));
    std::vector<ErrataRecord> out;
    for (auto& e : only_c)
        out.push_back({e, true, false});
    for (auto& e : only_l)
        out.push_back({e, false, true});
    std::sort(out.begin(), out.end(), [](const ErrataRecord& x, const ErrataRecord& y) { return x.element < y.element; });
    return out;
}

}  // namespace chromatic::sy
