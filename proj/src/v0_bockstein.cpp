#include "chromatic/v0_bockstein.hpp"

#include "fp_linear.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <set>
#include <tuple>

namespace chromatic {

std::optional<int> tower_height(const PrimeContext& ctx, const Int& t)
{
    if (t == 0)
        return std::nullopt;
    if (t % ctx.q != 0)
        return 0;
    return nu_p(ctx, t / ctx.q) + 1;
}

std::string family_name(Family20 f)
{
    switch (f) {
    case Family20::X: return "X";
    case Family20::Xinf: return "Xinf";
    case Family20::Y0: return "Y0";
    case Family20::Y0inf: return "Y0inf";
    case Family20::zY0inf: return "zetaY0inf";
    case Family20::Y: return "Y";
    case Family20::Y1: return "Y1";
    case Family20::G: return "G";
    case Family20::Ginf: return "Ginf";
    case Family20::zGinf: return "zetaGinf";
    }
    return "?";
}

std::string M02Element::name(const PrimeContext& ctx) const
{
    std::string n = base.name(ctx);
    // x_{s/j} -> x_{s/j,k}
    n.insert(n.size() - 1, "," + std::to_string(k));
    return n;
}

namespace {

bool is_G_symbol(Symbol s) { return s == Symbol::G0 || s == Symbol::G1; }

Family20 family_of(const PrimeContext& ctx, const M11Class& c)
{
    switch (c.family) {
    case Family11::X: return Family20::X;
    case Family11::Xinf: return Family20::Xinf;
    case Family11::Y0: return Family20::Y0;
    case Family11::Yinf: return c.base.zeta ? Family20::zY0inf : Family20::Y0inf;
    case Family11::Y: return Family20::Y;
    case Family11::Y1: return Family20::Y1;
    case Family11::G: {
        auto g = g_info(ctx, c.base.symbol, c.base.s);
        if (g && g->S == 0)
            return c.base.zeta ? Family20::zGinf : Family20::Ginf;
        return Family20::G;
    }
    }
    return Family20::X;
}

int height_of(const PrimeContext& ctx, const M11Class& c, const Caps& caps)
{
    auto h = tower_height(ctx, c.t(ctx));
    return h ? *h : caps.k_cap;
}

std::vector<V0Differential> leading_terms(const PrimeContext& ctx, const Vicinity& v, const std::vector<M11Class>& pool)
{
    const int p = ctx.p;
    std::set<M11Class> have(pool.begin(), pool.end());
    std::vector<V0Differential> D;
    auto emit = [&](const M11Class& x, M2Class tb, const Int& tj, int k) {
        M11Class y{tb, tj};
        auto it = have.find(y);
        if (it == have.end())
            throw ConsistencyError("v0 target " + y.name(ctx) + " of " + x.name(ctx) + " is not a class");
        if (x.t(ctx) != it->t(ctx))
            throw ConsistencyError("v0 differential on " + x.name(ctx) + " changes internal degree");
        D.push_back({x, *it, k});
    };
    for (const auto& x : pool) {
        const Int& m = x.base.s;
        const Int& j = x.j;
        if (!in_vicinity(ctx, v, m) || m == 0)
            continue;
        if (x.base.symbol == Symbol::One) {
            Decomp d = decompose(ctx, m);
            if (d.N == 0 && j == 1 && mod(d.S, p) == 1)
                emit(x, {Symbol::H0, false, m}, 2, 1);
            else if (d.N == 1 && j == p)
                emit(x, {Symbol::H1, false, m}, p - 1, 1);
            else if (d.N >= 2)
                for (int k = 1; k < d.N; ++k)
                    if (divides(ppow(ctx, k), j) && index_a(ctx, d.N - k) < j && j <= index_a(ctx, d.N - k + 1))
                        emit(x, {Symbol::H0, false, m - ppow(ctx, d.N - k - 1)}, j - index_a(ctx, d.N - k), k);
        }
        if (x.base.symbol == Symbol::H0) {
            Decomp d = decompose(ctx, m);
            if (mod(d.S, p) != p - 1)
                for (int k = 1; k <= d.N; ++k)
                    if (index_A(ctx, d.N - k) + 2 < j && j <= index_A(ctx, d.N - k + 1) + 2 &&
                        divides(ppow(ctx, k), j - 1))
                        emit(x, g_class(ctx, d.N - k + 1, m), j - index_A(ctx, d.N - k) - 2, k);
            if (auto y = y1_info(ctx, m)) {
                const int N = y->N;
                const Int B = ppow(ctx, N) - ppow(ctx, N - 2);
                const Int base = m + ppow(ctx, N - 2) - ppow(ctx, N - 1);
                for (int k = 1; k <= N - 2; ++k) {
                    Int lo = B + index_A(ctx, N - k - 2) + 2, hi = B + index_A(ctx, N - k - 1) + 2;
                    if (lo < j && j <= hi && divides(ppow(ctx, k), j + index_a(ctx, N - 1)))
                        emit(x, g_class(ctx, N - k - 1, base), j - B - index_A(ctx, N - k - 2) - 2, k);
                }
                if (j == B + 1)
                    emit(x, g_class(ctx, 0, base), 1, N - 1);
            }
        }
    }
    std::sort(D.begin(), D.end());
    return D;
}

struct Slice {
    std::vector<M11Class> towers;
    std::vector<int> height;
    std::vector<std::array<int, 3>> edges;  // source, target, length
};

// Jordan type of the level shift on the homology of one internal degree: p-exponents per coh.
std::map<int, std::vector<int>> slice_homology(const PrimeContext& ctx, const Slice& sl)
{
    const int p = ctx.p;
    std::map<int, std::vector<std::pair<int, int>>> basis;  // coh -> (tower, level)
    std::map<std::pair<int, int>, std::pair<int, int>> where;
    for (size_t a = 0; a < sl.towers.size(); ++a)
        for (int i = 1; i <= sl.height[a]; ++i) {
            int c = sl.towers[a].coh();
            where[{static_cast<int>(a), i}] = {c, static_cast<int>(basis[c].size())};
            basis[c].push_back({static_cast<int>(a), i});
        }
    auto dim = [&](int c) { return basis.count(c) ? basis.at(c).size() : size_t(0); };
    // image of each basis vector of C_c in C_{c+1}
    auto dmap = [&](int c) {
        std::vector<fp::Vec> img(dim(c), fp::Vec(dim(c + 1), 0));
        for (size_t b = 0; b < dim(c); ++b) {
            auto [a, i] = basis[c][b];
            for (const auto& e : sl.edges) {
                if (e[0] != a || i <= e[2])
                    continue;
                int lvl = i - e[2];
                if (lvl > sl.height[e[1]])
                    throw ConsistencyError("v0 differential from " + sl.towers[a].name(ctx) +
                                           " overshoots the tower of " + sl.towers[e[1]].name(ctx));
                auto w = where.at({e[1], lvl});
                img[b][w.second] = (img[b][w.second] + 1) % p;
            }
        }
        return img;
    };
    auto shift = [&](int c, const fp::Vec& v) {
        fp::Vec out(v.size(), 0);
        for (size_t b = 0; b < v.size(); ++b) {
            if (!v[b])
                continue;
            auto [a, i] = basis[c][b];
            if (i > 1)
                out[where.at({a, i - 1}).second] = v[b];
        }
        return out;
    };
    std::map<int, std::vector<int>> out;
    for (auto& [c, bs] : basis) {
        auto Z = fp::kernel(dmap(c), dim(c + 1), p);
        std::vector<fp::Vec> B;
        if (dim(c - 1)) {
            for (auto& col : dmap(c - 1))
                B.push_back(col);
        }
        const int rB = fp::rank(B, p);
        int hmax = 0;
        for (auto [a, i] : bs)
            hmax = std::max(hmax, i);
        std::vector<int> dims;  // dim S^r H
        std::vector<fp::Vec> cur = Z;
        for (int r = 0; r <= hmax + 1; ++r) {
            std::vector<fp::Vec> all = cur;
            all.insert(all.end(), B.begin(), B.end());
            dims.push_back(fp::rank(all, p) - rB);
            for (auto& v : cur)
                v = shift(c, v);
        }
        std::vector<int>& orders = out[c];
        for (int m = 1; m + 1 < static_cast<int>(dims.size()); ++m) {
            int atleast = dims[m - 1] - dims[m];
            int atleast_next = dims[m] - dims[m + 1];
            for (int u = 0; u < atleast - atleast_next; ++u)
                orders.push_back(m);
        }
        std::sort(orders.begin(), orders.end());
    }
    return out;
}

void check_echelon(const PrimeContext& ctx, const std::vector<V0Differential>& D)
{
    std::map<std::tuple<int, Int, int>, std::vector<std::pair<Int, Int>>> groups;
    for (const auto& e : D)
        groups[{e.source.coh(), e.source.t(ctx), e.length}].push_back({e.source.j, e.target.j});
    for (auto& [key, v] : groups) {
        std::sort(v.begin(), v.end());
        bool inc = true, dec = true;
        for (size_t i = 1; i < v.size(); ++i) {
            inc = inc && v[i].second > v[i - 1].second;
            dec = dec && v[i].second < v[i - 1].second;
        }
        if (!inc && !dec)
            throw ConsistencyError("v0 differentials of length " + std::to_string(std::get<2>(key)) +
                                   " are not in echelon form at t = " + to_string(std::get<1>(key)));
    }
}

}  // namespace

std::vector<M11Class> v0_pool(const PrimeContext& ctx, const Vicinity& v, const Caps& caps)
{
    Vicinity w = v.is_zero() ? Vicinity{0, v.n + 1} : v;
    std::vector<M11Class> out;
    for (const auto& c : compute_M11(ctx, w, caps))
        if (!c.base.zeta)
            out.push_back(c);
    return out;
}

std::vector<V0Differential> v0_differentials(const PrimeContext& ctx, const Vicinity& v, const Caps& caps)
{
    return leading_terms(ctx, v, v0_pool(ctx, v, caps));
}

M02Result compute_M02_full(const PrimeContext& ctx, const Vicinity& v, const Caps& caps)
{
    M02Result res;
    auto pool = v0_pool(ctx, v, caps);
    res.differentials = leading_terms(ctx, v, pool);
    check_echelon(ctx, res.differentials);

    std::set<M11Class> cls;
    for (const auto& c : pool)
        if (in_vicinity(ctx, v, c.base.s))
            cls.insert(c);
    std::map<M11Class, int> nsrc, ntgt;
    for (const auto& e : res.differentials) {
        cls.insert(e.target);
        ++nsrc[e.source];
        ++ntgt[e.target];
    }
    for (const auto& [c, n] : nsrc)
        if (n > 1 || ntgt.count(c))
            throw ConsistencyError("tower " + c.name(ctx) + " meets several v0 differentials");
    for (const auto& [c, n] : ntgt)
        if (n > 1)
            throw ConsistencyError("tower " + c.name(ctx) + " is hit twice");

    // matching shortcut
    std::map<M11Class, int> h, left;
    for (const auto& c : cls)
        left[c] = h[c] = height_of(ctx, c, caps);
    for (const auto& e : res.differentials) {
        int hx = h[e.source];
        if (hx > e.length) {
            left[e.source] = e.length;
            left[e.target] = h[e.target] - (hx - e.length);
            if (left[e.target] < 0)
                throw ConsistencyError("v0 differential from " + e.source.name(ctx) + " overshoots");
        }
    }

    // exact homology per internal degree
    std::map<Int, Slice> slices;
    std::map<M11Class, std::pair<Int, int>> pos;
    for (const auto& c : cls) {
        Slice& sl = slices[c.t(ctx)];
        pos[c] = {c.t(ctx), static_cast<int>(sl.towers.size())};
        sl.towers.push_back(c);
        sl.height.push_back(h[c]);
    }
    for (const auto& e : res.differentials)
        slices[e.source.t(ctx)].edges.push_back({pos[e.source].second, pos[e.target].second, e.length});
    for (auto& [t, sl] : slices) {
        auto exact = slice_homology(ctx, sl);
        std::map<int, std::vector<int>> quick;
        for (size_t a = 0; a < sl.towers.size(); ++a) {
            int c = sl.towers[a].coh();
            if (t != 0) {
                res.e1_exponent[{c, t}] += sl.height[a];
                res.h_exponent[{c, t}] += std::max(left[sl.towers[a]], 0);
            }
            if (left[sl.towers[a]] > 0)
                quick[c].push_back(left[sl.towers[a]]);
            else
                quick[c];
        }
        for (auto& [c, v] : quick)
            std::sort(v.begin(), v.end());
        for (auto& [c, v] : exact)
            if (v != quick[c])
                throw ConsistencyError("homology at t = " + to_string(t) + ", coh " + std::to_string(c) +
                                       " disagrees with the matching shortcut");
    }

    for (const auto& c : cls) {
        if (!in_vicinity(ctx, v, c.base.s) || left[c] <= 0)
            continue;
        res.elements.push_back({c, left[c], family_of(ctx, c)});
        if (c.t(ctx) == 0) {
            M11Class z = c;
            z.base.zeta = true;
            res.elements.push_back({z, left[c], family_of(ctx, z)});
        }
    }
    std::sort(res.elements.begin(), res.elements.end());
    return res;
}

std::vector<M02Element> compute_M02(const PrimeContext& ctx, const Vicinity& v, const Caps& caps)
{
    return compute_M02_full(ctx, v, caps).elements;
}

namespace {

struct KSet {
    Family20 family;
    std::vector<int> ks;
};

std::vector<int> range_k(int lo, int hi, const std::function<bool(int)>& ok)
{
    std::vector<int> v;
    for (int k = lo; k <= hi; ++k)
        if (ok(k))
            v.push_back(k);
    return v;
}

KSet m20_kset(const PrimeContext& ctx, const M11Class& c, const Caps& caps)
{
    const int p = ctx.p;
    const Int& m = c.base.s;
    const Int& j = c.j;
    auto pk1 = [&](int k) { return ppow(ctx, k - 1); };
    switch (c.base.symbol) {
    case Symbol::One: {
        if (m == 0)
            return {Family20::Xinf, range_k(1, nu_p(ctx, j) + 1, [&](int k) { return divides(pk1(k), j); })};
        Decomp d = decompose(ctx, m);
        return {Family20::X, range_k(1, d.N + 1, [&](int k) {
                    return j <= index_a(ctx, d.N - k + 1) && divides(pk1(k), j);
                })};
    }
    case Symbol::H1: {
        Int s = m / p;
        std::vector<int> ks;
        if (j <= p - 1)
            ks.push_back(1);
        if (s % p == 0 && j == p - 1)
            ks.push_back(2);
        return {Family20::Y, ks};
    }
    case Symbol::H0: {
        if (m == 0) {
            int top = j == 1 ? caps.k_cap : nu_p(ctx, j - 1) + 1;
            return {Family20::Y0inf, range_k(1, top, [](int) { return true; })};
        }
        Decomp d = decompose(ctx, m);
        if (mod(d.S, p) != p - 1)
            return {Family20::Y0, range_k(1, d.N + 1, [&](int k) {
                        return j <= index_A(ctx, d.N - k + 1) + 2 && divides(pk1(k), j - 1);
                    })};
        auto y = y1_info(ctx, m);
        if (!y)
            throw ConsistencyError("class " + c.name(ctx) + " belongs to no family");
        const int N = y->N;
        const Int B = ppow(ctx, N) - ppow(ctx, N - 2);
        const Int an1 = index_a(ctx, N - 1);
        if (j <= B) {
            int i = nu_or(ctx, y->S, 1 << 20);
            return {Family20::Y1, range_k(1, std::min(i + 1, N + 1), [&](int k) { return divides(pk1(k), j + an1); })};
        }
        return {Family20::Y1, range_k(1, N - 1, [&](int k) {
                    return j <= B + index_A(ctx, N - k - 1) + 2 && divides(pk1(k), j + an1);
                })};
    }
    case Symbol::G0:
    case Symbol::G1: {
        auto g = g_info(ctx, c.base.symbol, m);
        if (!g)
            throw ConsistencyError("class " + c.name(ctx) + " is not a G class");
        if (g->S == 0) {
            if (g->N == 0)
                return {Family20::Ginf, range_k(1, caps.k_cap, [](int) { return true; })};
            Int An1 = index_A(ctx, g->N - 1);
            return {Family20::Ginf, range_k(1, g->N + 1, [&](int k) { return divides(pk1(k), j + An1 + 1); })};
        }
        int i = nu_p(ctx, g->S);
        Int t = g->S / ppow(ctx, i);
        int bound = mod(t, p) != p - 1 ? i + 1 : i;
        if (g->N == 0)
            return {Family20::G, range_k(1, bound, [](int) { return true; })};
        Int An1 = index_A(ctx, g->N - 1);
        return {Family20::G,
                range_k(1, std::min(g->N + 1, bound), [&](int k) { return divides(pk1(k), j + An1 + 1); })};
    }
    default: break;
    }
    throw ConsistencyError("class " + c.name(ctx) + " belongs to no family");
}

}  // namespace

std::vector<M02Element> closed_form_M20(const PrimeContext& ctx, const Vicinity& v, const Caps& caps, bool all_k)
{
    std::vector<M02Element> out;
    for (const auto& c : closed_form_M11(ctx, v, caps)) {
        if (c.base.zeta)
            continue;
        KSet ks = m20_kset(ctx, c, caps);
        if (ks.ks.empty())
            continue;
        const int K = ks.ks.back();
        if (static_cast<int>(ks.ks.size()) != K)
            throw ConsistencyError("admissible orders of " + c.name(ctx) + " are not an initial segment");
        auto th = tower_height(ctx, c.t(ctx));
        if (th && K > *th)
            throw ConsistencyError(c.name(ctx) + " exceeds its tower height");
        std::vector<int> put = all_k ? ks.ks : std::vector<int>{K};
        M11Class cc = c;
        for (int k : put)
            out.push_back({cc, k, ks.family});
        if (c.t(ctx) == 0) {
            M11Class z = c;
            z.base.zeta = true;
            Family20 zf = ks.family == Family20::Ginf ? Family20::zGinf : Family20::zY0inf;
            for (int k : put)
                out.push_back({z, k, zf});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string family_name(Family20New f)
{
    switch (f) {
    case Family20New::X: return "X";
    case Family20New::Y0: return "Y(0)";
    case Family20New::Y1: return "Y(1)";
    case Family20New::G: return "G";
    case Family20New::Xinf: return "Xinf";
    case Family20New::Y0inf: return "Y(0)inf";
    case Family20New::zY0inf: return "zetaY(0)inf";
    case Family20New::Ginf: return "Ginf";
    case Family20New::zGinf: return "zetaGinf";
    }
    return "?";
}

int NewElement::coh() const { return coh_degree(symbol) + (zeta ? 1 : 0); }

Int NewElement::t(const PrimeContext& ctx) const
{
    M2Class b{symbol, zeta, s};
    if (is_G_symbol(symbol))
        b = g_class(ctx, gi, s, zeta);
    return b.t(ctx) - j * ctx.q;
}

std::string NewElement::name() const
{
    std::string g = symbol == Symbol::One ? "1" : is_G_symbol(symbol) ? "G_" + std::to_string(gi) : symbol_name(symbol);
    return std::string(zeta ? "zeta" : "") + g + "(" + to_string(j) + "," + std::to_string(k) + ")_" + to_string(s);
}

std::vector<NewElement> closed_form_M20new(const PrimeContext& ctx, const Vicinity& v, const Caps& caps)
{
    const int p = ctx.p;
    std::vector<NewElement> out;
    auto pk1 = [&](int k) { return ppow(ctx, k - 1); };
    auto Gsym = [](int i) { return i == 0 ? Symbol::G0 : Symbol::G1; };
    // the reorganisation moves some zero-column classes down one digit, so the zero vicinity is
    // enumerated one level deeper and cut back by image exponent
    const Vicinity w = v.is_zero() ? Vicinity{0, v.n + 1} : v;
    for (const Int& m : vicinity_members(ctx, w)) {
        if (m == 0) {
            for (Int j = 1; j <= caps.j_cap; ++j)
                for (int k = 1; k <= nu_p(ctx, j) + 1; ++k)
                    out.push_back({Family20New::Xinf, Symbol::One, 0, false, 0, j, k});
            for (Int j = 1; j <= caps.j_cap + 1; ++j) {
                int top = j == 1 ? caps.k_cap : nu_p(ctx, j - 1) + 1;
                for (int k = 1; k <= top; ++k)
                    out.push_back({Family20New::Y0inf, Symbol::H0, 0, false, 0, j, k});
            }
            for (int k = 1; k <= caps.k_cap; ++k) {
                out.push_back({Family20New::zY0inf, Symbol::H0, 0, true, 0, 1, k});
                out.push_back({Family20New::Ginf, Symbol::G0, 0, false, 0, 1, k});
                out.push_back({Family20New::zGinf, Symbol::G0, 0, true, 0, 1, k});
            }
            // h1(j,k)_0: the bracket a_{i-1} < j+1 <= a_i fixes both the image and k <= i+1
            for (Int j = 1; j + 1 <= index_a(ctx, v.n + 1); ++j) {
                int i = 1;
                while (j + 1 > index_a(ctx, i))
                    ++i;
                for (int k = 1; k <= i + 1; ++k)
                    if (divides(pk1(k), j + 1))
                        out.push_back({Family20New::Y1, Symbol::H1, 0, false, 0, j, k});
            }
            // G_i at 0 for i >= 1 lives at exponent -off(i), inside V(0,n) for i <= n+1
            for (int i = 1; i <= v.n + 1; ++i) {
                Int Ai1 = index_A(ctx, i - 1);
                for (Int j = 1; j <= index_a(ctx, i); ++j)
                    for (int k = 1; k <= i + 1; ++k)
                        if (divides(pk1(k), j + Ai1 + 1))
                            out.push_back({Family20New::Ginf, Symbol::G1, i, false, 0, j, k});
            }
            continue;
        }
        Decomp d = decompose(ctx, m);
        const int n = d.N;
        const bool neg = mod(d.S, p) == p - 1;
        for (int k = 1; k <= n + 1; ++k)
            for (Int j = 1; j <= index_a(ctx, n - k + 1); ++j)
                if (divides(pk1(k), j))
                    out.push_back({Family20New::X, Symbol::One, 0, false, m, j, k});
        if (!neg) {
            for (int k = 1; k <= n + 1; ++k)
                for (Int j = 1; j <= index_A(ctx, n - k + 1) + 2; ++j)
                    if (divides(pk1(k), j - 1))
                        out.push_back({Family20New::Y0, Symbol::H0, 0, false, m, j, k});
        } else if (n >= 1) {
            for (int k = 1; k <= n; ++k)
                for (Int j = 1; j <= index_A(ctx, n - k) + 2; ++j)
                    if (divides(pk1(k), j - 1))
                        out.push_back({Family20New::Y0, Symbol::H0, 0, false, m, j, k});
        }
        if (n >= 1)
            for (int k = 1; k <= n; ++k)
                for (Int j = 1; j + 1 <= index_a(ctx, n - k + 1); ++j)
                    if (divides(pk1(k), j + 1))
                        out.push_back({Family20New::Y1, Symbol::H1, 0, false, m, j, k});
        for (int i = 0; i <= (neg ? n - 1 : n); ++i) {
            Int Ai1 = i == 0 ? Int(0) : index_A(ctx, i - 1);
            int kmax = i == 0 ? (neg ? n : n + 1) : (neg ? std::min(i + 1, n - i) : std::min(i + 1, n - i + 1));
            for (Int j = 1; j <= index_a(ctx, i); ++j)
                for (int k = 1; k <= kmax; ++k)
                    if (i == 0 || divides(pk1(k), j + Ai1 + 1))
                        out.push_back({Family20New::G, Gsym(i), i, false, m, j, k});
        }
    }
    if (v.is_zero())
        std::erase_if(out, [&](const NewElement& e) {
            return !in_vicinity(ctx, v, dictionary_new(ctx, e, caps).base.base.s);
        });
    std::sort(out.begin(), out.end());
    return out;
}

M02Element dictionary_new(const PrimeContext& ctx, const NewElement& e, const Caps& caps)
{
    const int p = ctx.p;
    auto finish = [&](M2Class b, Int j, int k) {
        M11Class c{b, j};
        bool z = c.base.zeta;
        c.base.zeta = false;
        KSet ks = m20_kset(ctx, c, caps);
        c.base.zeta = z;
        Family20 f = ks.family;
        if (z)
            f = f == Family20::Ginf ? Family20::zGinf : Family20::zY0inf;
        if (std::find(ks.ks.begin(), ks.ks.end(), k) == ks.ks.end())
            throw ConsistencyError(e.name() + " maps to " + c.name(ctx) + " with inadmissible k");
        return M02Element{c, k, f};
    };
    switch (e.family) {
    case Family20New::X:
    case Family20New::Xinf:
    case Family20New::Y0inf:
    case Family20New::zY0inf:
        return finish({e.symbol, e.zeta, e.s}, e.j, e.k);
    case Family20New::G:
    case Family20New::Ginf:
    case Family20New::zGinf:
        return finish(g_class(ctx, e.gi, e.s, e.zeta), e.j, e.k);
    case Family20New::Y0: {
        Decomp d = decompose(ctx, e.s);
        if (mod(d.S, p) != p - 1)
            return finish({Symbol::H0, false, e.s}, e.j, e.k);
        const int n = d.N;
        return finish({Symbol::H0, false, e.s + ppow(ctx, n) - ppow(ctx, n - 1)},
                      e.j + ppow(ctx, n + 1) - ppow(ctx, n - 1), e.k);
    }
    case Family20New::Y1: {
        const int N = e.s == 0 ? 1 << 20 : decompose(ctx, e.s).N;
        if (e.j + 1 <= index_a(ctx, 1))
            return finish({Symbol::H1, false, e.s}, e.j, e.k);
        for (int i = 2; i <= N; ++i)
            if (index_a(ctx, i - 1) < e.j + 1 && e.j + 1 <= index_a(ctx, i))
                return finish({Symbol::H0, false, e.s - ppow(ctx, i - 2)}, e.j - index_a(ctx, i - 1) + 1, e.k);
        break;
    }
    }
    throw ConsistencyError(e.name() + " lies outside every dictionary row");
}

OrderTable order_table(const PrimeContext& ctx, const std::vector<M02Element>& els)
{
    OrderTable t;
    for (const auto& e : els)
        t[{e.coh(), e.t(ctx)}].push_back(e.k);
    for (auto& [key, v] : t)
        std::sort(v.begin(), v.end());
    return t;
}

}  // namespace chromatic
