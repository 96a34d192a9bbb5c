#include "chromatic/homotopy.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace chromatic::homotopy {

std::string target_name(Target t)
{
    switch (t) {
    case Target::MpE2: return "Mp-E2";
    case Target::MpK2: return "Mp-K2";
    case Target::SE2: return "S-E2";
    case Target::SK2: return "S-K2";
    }
    return "?";
}

std::optional<Target> parse_target(const std::string& s)
{
    for (Target t : {Target::MpE2, Target::MpK2, Target::SE2, Target::SK2})
        if (s == target_name(t))
            return t;
    return std::nullopt;
}

std::string GroupShape::str(int p) const
{
    std::vector<std::string> parts;
    const std::string P = std::to_string(p);
    auto power = [](const std::string& g, int r) { return r == 1 ? g : "(" + g + ")^" + std::to_string(r); };
    if (free_rank)
        parts.push_back(power(p_complete ? "Z_" + P : "Z_(" + P + ")", free_rank));
    for (size_t i = 0; i < cyclic.size();) {
        size_t e = i;
        while (e < cyclic.size() && cyclic[e] == cyclic[i])
            ++e;
        parts.push_back(power("Z/" + to_string(ipow(p, cyclic[i])), static_cast<int>(e - i)));
        i = e;
    }
    if (divisible)
        parts.push_back(power("Q/Z_(" + P + ")", divisible));
    if (rational)
        parts.push_back(power("Q", rational));
    if (parts.empty())
        return "0";
    std::string out = parts[0];
    for (size_t i = 1; i < parts.size(); ++i)
        out += " + " + parts[i];
    return out;
}

long long stem_index(const PrimeContext&, int layer, const Int& t, int coh)
{
    return static_cast<long long>(t) - coh - layer;
}

std::optional<M02Element> chromatic_d1_S(const PrimeContext& ctx, const AlphaClass& x)
{
    (void)ctx;
    if (x.kind == AlphaKind::Alpha) {
        if (x.s >= 0)
            return std::nullopt;
        return M02Element{M11Class{M2Class{Symbol::One, false, 0}, -x.s, Family11::Xinf}, x.k, Family20::Xinf};
    }
    if (x.s != -1)
        return std::nullopt;
    return M02Element{M11Class{M2Class{Symbol::H0, false, 0}, 1, Family11::Yinf}, x.k, Family20::Y0inf};
}

namespace {

struct Range {
    long long lo, hi;
    bool has(long long s) const { return lo <= s && s <= hi; }
};

Caps caps_for(const PrimeContext& ctx, long long stem_lo)
{
    long long need = (std::max(0LL, -stem_lo) + 16) / ctx.q + 4;
    return {Int(std::max(40LL, need)), 8};
}

// Vicinities covering every v2-exponent that can carry a class with internal degree in [tlo, thi].
std::vector<Vicinity> covering(const PrimeContext& ctx, long long tlo, long long thi)
{
    const long long unit = static_cast<long long>(ctx.p + 1) * ctx.q;
    long long mlo = (tlo >= 0 ? tlo / unit : -((-tlo + unit - 1) / unit)) - 1;
    long long mhi = thi / ctx.q + 5;
    std::set<Vicinity> vs;
    int zero_n = -1;
    for (long long m = mlo; m <= mhi; ++m) {
        Vicinity v = vicinity_of(ctx, m);
        if (v.is_zero())
            zero_n = std::max(zero_n, v.n);
        else
            vs.insert(v);
    }
    std::vector<Vicinity> out(vs.begin(), vs.end());
    if (zero_n >= 0)
        out.push_back({0, zero_n});
    return out;
}

StemElement from02(const PrimeContext& ctx, const M02Element& e, std::string extra = "")
{
    StemElement s;
    s.stem = stem_index(ctx, 2, e.t(ctx), e.coh());
    s.layer = 2;
    s.name = e.name(ctx);
    s.family = family_name(e.family) + extra;
    s.kind = e.t(ctx) == 0 ? Summand::Divisible : Summand::Cyclic;
    s.k = e.k;
    return s;
}

std::vector<GroupShape> shapes(const std::vector<StemElement>& els, Range r, bool complete)
{
    std::map<long long, GroupShape> m;
    for (long long s = r.lo; s <= r.hi; ++s)
        m[s] = GroupShape{s, 0, complete, {}, 0, 0};
    for (const auto& e : els) {
        if (!r.has(e.stem))
            continue;
        auto& g = m[e.stem];
        switch (e.kind) {
        case Summand::Cyclic: g.cyclic.push_back(e.k); break;
        case Summand::Free: ++g.free_rank; break;
        case Summand::Divisible: ++g.divisible; break;
        case Summand::Rational: ++g.rational; break;
        }
    }
    std::vector<GroupShape> out;
    for (auto& [s, g] : m) {
        std::sort(g.cyclic.begin(), g.cyclic.end());
        out.push_back(g);
    }
    return out;
}

StemElement free_at(long long stem, std::string name)
{
    return {stem, 0, std::move(name), "free", Summand::Free, 0};
}

// 1_{s/nu(s)+1}, s > 0, at stem sq-1 (plus the ζ copy for K(2))
void layer1_survivors(const PrimeContext& ctx, Range r, bool with_zeta, std::vector<StemElement>& out)
{
    for (long long s = 1; s * ctx.q - 1 <= r.hi; ++s) {
        const int k = nu_p(ctx, s) + 1;
        const long long st = s * ctx.q - 1;
        const std::string nm = "1_{" + std::to_string(s) + "/" + std::to_string(k) + "}";
        if (r.has(st))
            out.push_back({st, 1, nm, "layer1", Summand::Cyclic, k});
        if (with_zeta && r.has(st - 1))
            out.push_back({st - 1, 1, "zeta." + nm, "layer1", Summand::Cyclic, k});
    }
}

std::vector<StemElement> stated_sphere(const PrimeContext& ctx, bool k2, Range r)
{
    std::vector<StemElement> out;
    if (!k2) {
        if (r.has(0))
            out.push_back(free_at(0, "1"));
    } else {
        for (auto [st, nm] : std::vector<std::pair<long long, std::string>>{{0, "1"}, {-1, "zeta"}, {-3, "rho"}, {-4, "zeta.rho"}})
            if (r.has(st))
                out.push_back(free_at(st, nm));
    }
    layer1_survivors(ctx, r, k2, out);
    const Caps caps = caps_for(ctx, r.lo);
    for (const auto& v : covering(ctx, r.lo + 2, r.hi + 6))
        for (const auto& e : closed_form_M20(ctx, v, caps)) {
            const bool t0 = e.t(ctx) == 0;
            bool keep = false;
            switch (e.family) {
            case Family20::X:
            case Family20::Y0:
            case Family20::Y:
            case Family20::Y1:
            case Family20::G: keep = true; break;
            case Family20::Xinf: keep = false; break;
            case Family20::Y0inf: keep = !k2 && e.base.j >= 2; break;
            case Family20::zY0inf:
            case Family20::zGinf: keep = !k2; break;
            case Family20::Ginf: keep = !k2 || !t0; break;
            }
            if (!keep)
                continue;
            StemElement s = from02(ctx, e);
            if (r.has(s.stem))
                out.push_back(s);
        }
    return out;
}

std::vector<StemElement> stated_moore(const PrimeContext& ctx, bool k2, Range r)
{
    std::vector<StemElement> out;
    for (long long s = 0; s * ctx.q - 2 <= r.hi; ++s) {
        const long long a = s * ctx.q, b = (s + 1) * ctx.q - 1;
        const std::string v = "v1^" + std::to_string(s);
        if (r.has(a))
            out.push_back({a, 1, v, "Fp[v1]", Summand::Cyclic, 1});
        if (r.has(b))
            out.push_back({b, 1, "h0." + v, "Fp[v1]", Summand::Cyclic, 1});
        if (k2 && r.has(a - 1))
            out.push_back({a - 1, 1, "zeta." + v, "Fp[v1]", Summand::Cyclic, 1});
        if (k2 && r.has(b - 1))
            out.push_back({b - 1, 1, "zeta.h0." + v, "Fp[v1]", Summand::Cyclic, 1});
    }
    const Caps caps = caps_for(ctx, r.lo);
    for (const auto& v : covering(ctx, r.lo + 1, r.hi + 5))
        for (const auto& c : closed_form_M11(ctx, v, caps)) {
            const bool inf = c.family == Family11::Xinf || c.family == Family11::Yinf;
            if (inf && (k2 || !c.base.zeta))
                continue;
            const long long st = stem_index(ctx, 1, c.t(ctx), c.coh());
            if (r.has(st))
                out.push_back({st, 2, c.name(ctx), family_name(c.family), Summand::Cyclic, 1});
        }
    return out;
}

}  // namespace

std::vector<GroupShape> assemble_d1_SE2(const PrimeContext& ctx, long long stem_lo, long long stem_hi)
{
    const Range r{stem_lo, stem_hi};
    const Caps caps = caps_for(ctx, stem_lo);

    // layer 2 over stems [lo-1, hi], computed by the v0 engine
    std::vector<M02Element> l2;
    for (const auto& v : covering(ctx, stem_lo + 1, stem_hi + 6))
        for (const auto& e : compute_M02(ctx, v, caps)) {
            long long st = stem_index(ctx, 2, e.t(ctx), e.coh());
            if (stem_lo - 1 <= st && st <= stem_hi)
                l2.push_back(e);
        }
    std::vector<bool> dead(l2.size(), false);
    auto kill = [&](const M02Element& tgt, bool divisible) {
        for (size_t i = 0; i < l2.size(); ++i)
            if (!dead[i] && l2[i].base == tgt.base && (divisible || l2[i].k == tgt.k)) {
                dead[i] = true;
                return;
            }
        throw ConsistencyError("chromatic d1 target " + tgt.name(ctx) + " is missing from the computed layer");
    };

    std::vector<StemElement> out;
    // layer 0 -> layer 1: Q onto Q/Z<1_{0/k}> with kernel Z_(p)
    if (r.has(0))
        out.push_back(free_at(0, "1"));
    // layer 1 -> layer 2
    for (long long s = -(std::max(0LL, -stem_lo) / ctx.q) - 1; s * ctx.q - 1 <= stem_hi + 1; ++s) {
        if (s == 0)
            continue;
        const long long st = s * ctx.q - 1;
        AlphaClass x{AlphaKind::Alpha, s, nu_p(ctx, s) + 1};
        if (auto tgt = chromatic_d1_S(ctx, x)) {
            if (stem_lo - 1 <= st - 1 && st - 1 <= stem_hi)
                kill(*tgt, false);
        } else if (r.has(st)) {
            out.push_back({st, 1, "1_{" + std::to_string(s) + "/" + std::to_string(x.k) + "}", "layer1",
                           Summand::Cyclic, x.k});
        }
    }
    // Q/Z<(h0)_{-1/k}> at stem -2 onto Q/Z<(h0)_{0/1,k}> at stem -3
    if (stem_lo - 1 <= -3 && -3 <= stem_hi)
        kill(*chromatic_d1_S(ctx, {AlphaKind::AlphaTop, -1, caps.k_cap}), true);
    for (size_t i = 0; i < l2.size(); ++i)
        if (!dead[i]) {
            StemElement s = from02(ctx, l2[i]);
            if (r.has(s.stem))
                out.push_back(s);
        }
    return shapes(out, r, false);
}

Assembly assemble(const PrimeContext& ctx, Target target, long long stem_lo, long long stem_hi)
{
    if (stem_lo > stem_hi)
        throw ValidationError("empty stem range");
    const Range r{stem_lo, stem_hi};
    Assembly a;
    const bool k2 = target == Target::SK2 || target == Target::MpK2;
    if (target == Target::SE2 || target == Target::SK2)
        a.elements = stated_sphere(ctx, k2, r);
    else
        a.elements = stated_moore(ctx, k2, r);
    std::sort(a.elements.begin(), a.elements.end(), [](const StemElement& x, const StemElement& y) {
        return std::tie(x.stem, x.layer, x.name) < std::tie(y.stem, y.layer, y.name);
    });
    a.shapes = shapes(a.elements, r, k2);
    if (target == Target::SE2) {
        auto d1 = assemble_d1_SE2(ctx, stem_lo, stem_hi);
        for (size_t i = 0; i < d1.size(); ++i)
            if (!(d1[i] == a.shapes[i]))
                throw ConsistencyError("S-E2 stem " + std::to_string(d1[i].stem) + ": stated " + a.shapes[i].str(ctx.p) +
                                       " but d1 gives " + d1[i].str(ctx.p));
    }
    return a;
}

}  // namespace chromatic::homotopy
