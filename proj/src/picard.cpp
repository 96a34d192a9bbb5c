#include "chromatic/picard.hpp"

#include <algorithm>
#include <map>

namespace chromatic {

Int picard_torsion_order(const PrimeContext& ctx) { return 2 * (Int(ctx.p) * ctx.p - 1); }

namespace {

Int torsion_of(int p) { return 2 * (Int(p) * p - 1); }

}  // namespace

PicardElement PicardElement::operator+(const PicardElement& o) const
{
    return {a + o.a, b + o.b, mod(c + o.c, torsion_of(a.prime()))};
}

PicardElement PicardElement::operator-() const { return {-a, -b, mod(-c, torsion_of(a.prime()))}; }

PicardElement PicardElement::operator-(const PicardElement& o) const { return *this + (-o); }

PicardElement PicardElement::scaled(const Int& n) const
{
    return {a.scaled(n), b.scaled(n), mod(c * n, torsion_of(a.prime()))};
}

bool PicardElement::operator==(const PicardElement& o) const { return a == o.a && b == o.b && c == o.c; }

std::string PicardElement::str() const
{
    return "(" + to_string(a.centered()) + ", " + to_string(b.centered()) + ", " + to_string(c) + ")";
}

PicardElement make_picard(const PrimeContext& ctx, const Int& a, const Int& b, const Int& c, int precision)
{
    return {TruncatedPadic(ctx, a, precision), TruncatedPadic(ctx, b, precision), mod(c, picard_torsion_order(ctx))};
}

PicardElement pic_of_sphere(const PrimeContext& ctx, const Int& n, int precision)
{
    return make_picard(ctx, 1, 0, 1, precision).scaled(n);
}

PicardElement pic_det(const PrimeContext& ctx, int precision)
{
    return make_picard(ctx, 0, 1, 2 * (ctx.p + 1), precision);
}

PicardElement interpolated_sphere(const PrimeContext& ctx, int precision, int extra)
{
    // |v2| is a multiple of the torsion order, so only q + extra reaches the third coordinate
    TruncatedPadic a = geometric_inverse(ctx, precision).scaled(ctx.v2deg) + TruncatedPadic(ctx, ctx.q + extra, precision);
    return {a, TruncatedPadic(ctx, 0, precision), mod(Int(ctx.q + extra), picard_torsion_order(ctx))};
}

bool verify_interpolation_identity(const PrimeContext& ctx, int precision, int extra)
{
    if (precision < 1)
        throw ValidationError("precision must be positive");
    const PicardElement e = interpolated_sphere(ctx, precision, extra);
    return e.a.is_zero() && e.c == 2 * (ctx.p + 1);
}

TruncatedPadic duality_shift(const PrimeContext& ctx, int precision, bool det_variant)
{
    return geometric_inverse(ctx, precision).scaled(ctx.v2deg) +
           TruncatedPadic(ctx, ctx.q + (det_variant ? 4 : 5), precision);
}

std::string pairing_name(Pairing p)
{
    switch (p) {
    case Pairing::XG: return "x-g";
    case Pairing::Y0Internal: return "y0";
    case Pairing::Full: return "full";
    }
    return "?";
}

std::optional<Pairing> parse_pairing(const std::string& s)
{
    for (Pairing p : {Pairing::XG, Pairing::Y0Internal, Pairing::Full})
        if (s == pairing_name(p))
            return p;
    return std::nullopt;
}

const AmbigramBlock* AmbigramReport::block(const Int& exponent) const
{
    for (const auto& b : blocks)
        if (b.exponent == exponent)
            return &b;
    return nullptr;
}

namespace {

struct Item {
    Int stem;
    std::string name;
    Family11 family;
    int coh;
    bool used = false;
};

bool by_stem(const Item& x, const Item& y) { return std::tie(x.stem, x.name) < std::tie(y.stem, y.name); }

// Pairs the coh-1 classes among themselves around C, preferring partners from the other family.
std::optional<std::vector<AmbigramPair>> pair_middle(std::vector<Item> xs, const Int& C)
{
    std::sort(xs.begin(), xs.end(), by_stem);
    std::vector<AmbigramPair> out;
    for (size_t i = 0; i < xs.size(); ++i) {
        if (xs[i].used)
            continue;
        xs[i].used = true;
        const Int want = C - xs[i].stem;
        int best = -1;
        for (size_t k = 0; k < xs.size(); ++k)
            if (!xs[k].used && xs[k].stem == want &&
                (best < 0 || (xs[k].family != xs[i].family && xs[best].family == xs[i].family)))
                best = static_cast<int>(k);
        if (best < 0) {
            if (2 * xs[i].stem != C)
                return std::nullopt;
            out.push_back({xs[i].name, xs[i].name, xs[i].stem, xs[i].stem});
            continue;
        }
        xs[best].used = true;
        out.push_back({xs[i].name, xs[best].name, xs[i].stem, xs[best].stem});
    }
    return out;
}

// Sends each coh-0 class to an unused coh-2 class at C - stem.  Marks the partners only on success.
std::optional<std::vector<AmbigramPair>> pair_outer(const std::vector<Item>& xs, std::vector<Item>& gs, const Int& C)
{
    std::vector<AmbigramPair> out;
    std::vector<size_t> taken;
    for (const auto& x : xs) {
        bool found = false;
        for (size_t k = 0; k < gs.size(); ++k)
            if (!gs[k].used && gs[k].coh == 2 && gs[k].stem == C - x.stem &&
                std::find(taken.begin(), taken.end(), k) == taken.end()) {
                taken.push_back(k);
                out.push_back({x.name, gs[k].name, x.stem, gs[k].stem});
                found = true;
                break;
            }
        if (!found)
            return std::nullopt;
    }
    for (size_t k : taken)
        gs[k].used = true;
    return out;
}

}  // namespace

AmbigramReport ambigram_report(const PrimeContext& ctx, const Vicinity& v, Pairing pairing, const Caps& caps)
{
    std::map<Int, std::vector<Item>, std::greater<>> blocks;
    std::vector<Item> gs;
    for (const auto& c : closed_form_M11(ctx, v, caps)) {
        if (c.base.zeta)
            continue;
        Item it{c.t(ctx) - c.coh(), c.name(ctx), c.family, c.coh()};
        if (c.family == Family11::G)
            gs.push_back(it);
        else
            blocks[c.base.s].push_back(it);
    }
    std::sort(gs.begin(), gs.end(), by_stem);

    AmbigramReport rep;
    rep.vicinity = v;
    rep.pairing = pairing;
    for (auto& [m, items] : blocks) {
        std::vector<Item> outer, middle;
        AmbigramBlock b;
        b.exponent = m;
        for (const auto& it : items) {
            if (it.coh == 0)
                outer.push_back(it);
            else if (it.coh == 1)
                middle.push_back(it);
            else
                b.unmatched.push_back(it.name);
        }
        std::sort(outer.begin(), outer.end(), [](const Item& x, const Item& y) { return !by_stem(x, y); });
        std::vector<Int> candidates;
        if (!middle.empty()) {
            auto [lo, hi] = std::minmax_element(middle.begin(), middle.end(), by_stem);
            candidates.push_back(lo->stem + hi->stem);
        } else if (!outer.empty()) {
            for (const auto& g : gs)
                if (!g.used && g.coh == 2)
                    candidates.push_back(outer.front().stem + g.stem);
        }
        for (const Int& C : candidates) {
            auto mid = pair_middle(middle, C);
            if (!mid)
                continue;
            auto out = pair_outer(outer, gs, C);
            if (!out)
                continue;
            b.center = C;
            if (pairing != Pairing::Y0Internal)
                b.pairs.insert(b.pairs.end(), out->begin(), out->end());
            if (pairing != Pairing::XG)
                b.pairs.insert(b.pairs.end(), mid->begin(), mid->end());
            break;
        }
        if (!b.center)
            for (const auto& it : items)
                b.unmatched.push_back(it.name);
        rep.blocks.push_back(std::move(b));
    }
    for (const auto& g : gs)
        if (!g.used)
            rep.unmatched.push_back(g.name);
    if (rep.blocks.size() == 1 && rep.blocks[0].center && rep.blocks[0].unmatched.empty() && rep.unmatched.empty())
        rep.single_center = rep.blocks[0].center;
    return rep;
}

AmbigramBlock pure_component(const PrimeContext& ctx, const Vicinity& v, Pairing pairing, const Caps& caps)
{
    const Int top = v.top(ctx);
    auto rep = ambigram_report(ctx, v, pairing, caps);
    if (const auto* b = rep.block(top))
        return *b;
    AmbigramBlock none;
    none.exponent = top;
    return none;
}

}  // namespace chromatic
