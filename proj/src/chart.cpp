#include "chromatic/chart.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace chromatic::chart {

std::string figure_name(Figure f)
{
    switch (f) {
    case Figure::M2: return "m2";
    case Figure::V1BSS: return "v1bss";
    case Figure::M11: return "m11";
    case Figure::V0BSS: return "v0bss";
    case Figure::M02: return "m02";
    case Figure::M02New: return "m02new";
    }
    return "?";
}

std::optional<Figure> parse_figure(const std::string& s)
{
    for (Figure f : {Figure::M2, Figure::V1BSS, Figure::M11, Figure::V0BSS, Figure::M02, Figure::M02New})
        if (s == figure_name(f))
            return f;
    return std::nullopt;
}

namespace {

struct Builder {
    ChartData d;
    std::map<std::string, int> index;

    int add(const ExportRecord& r)
    {
        auto [it, fresh] = index.emplace(r.name, static_cast<int>(d.records.size()));
        if (fresh)
            d.records.push_back(r);
        return it->second;
    }
    void edge(const DiffRecord& diff, const ExportRecord& from, const ExportRecord& to)
    {
        int a = add(from), b = add(to);
        d.edges.push_back({diff, a, b});
    }
};

}  // namespace

ChartData chart_data(const PrimeContext& ctx, const ChartSpec& spec, const Caps& caps)
{
    const Vicinity& v = spec.vicinity;
    Builder b;
    b.d.title = figure_name(spec.figure) + ", p=" + std::to_string(ctx.p) + ", vicinity of v2^" + to_string(v.top(ctx));
    switch (spec.figure) {
    case Figure::M2:
    case Figure::V1BSS:
        for (const Int& m : vicinity_members(ctx, v))
            for (Symbol s : kSymbols)
                for (bool z : {false, true})
                    if (!z || spec.zeta)
                        b.add(record_of(ctx, M2Class{s, z, m}));
        if (spec.figure == Figure::V1BSS && spec.hooks)
            for (const auto& dd : v1_differentials_formula(ctx, v))
                if (!dd.source.zeta || spec.zeta)
                    b.edge(diff_record(ctx, dd), record_of(ctx, dd.source), record_of(ctx, dd.target));
        break;
    case Figure::M11:
    case Figure::V0BSS:
        for (const auto& c : closed_form_M11(ctx, v, caps))
            if (!c.base.zeta || spec.zeta)
                b.add(record_of(ctx, c, caps, "closed_form_M11"));
        if (spec.figure == Figure::V0BSS && spec.hooks)
            for (const auto& dd : v0_differentials(ctx, v, caps))
                b.edge(diff_record(ctx, dd), record_of(ctx, dd.source, caps, "v0_pool"),
                       record_of(ctx, dd.target, caps, "v0_pool"));
        break;
    case Figure::M02:
        for (const auto& e : compute_M02(ctx, v, caps))
            if (!e.base.base.zeta || spec.zeta)
                b.add(record_of(ctx, e, caps, "compute_M02"));
        break;
    case Figure::M02New:
        for (const auto& e : closed_form_M20new(ctx, v, caps))
            if (!e.zeta || spec.zeta)
                b.add(record_of(ctx, e));
        break;
    }
    return b.d;
}

namespace {

constexpr int kCell = 24;
constexpr int kRow = 64;
constexpr int kMargin = 48;
constexpr int kRows = 5;

struct Layout {
    Int xmin = 0, xmax = 10;
    std::vector<std::pair<long long, long long>> pos;  // pixel centers per record
    long long width = 0, height = 0;
};

Layout layout(const PrimeContext& ctx, const ChartData& data)
{
    Layout L;
    if (!data.records.empty()) {
        L.xmin = L.xmax = data.records[0].t / ctx.q;
        for (const auto& r : data.records) {
            L.xmin = std::min(L.xmin, Int(r.t / ctx.q));
            L.xmax = std::max(L.xmax, Int(r.t / ctx.q));
        }
    }
    const Int cols = L.xmax - L.xmin + 1;
    if (cols > kMaxColumns)
        throw ValidationError("chart exceeds size limit: " + to_string(cols) + " columns (max " +
                              std::to_string(kMaxColumns) + ")");
    size_t glyphs = data.records.size() + data.edges.size();
    for (const auto& r : data.records)
        glyphs += r.k;
    if (glyphs > static_cast<size_t>(kMaxGlyphs))
        throw ValidationError("chart exceeds size limit: " + std::to_string(glyphs) + " glyphs (max " +
                              std::to_string(kMaxGlyphs) + ")");
    L.width = 2 * kMargin + static_cast<long long>(cols) * kCell;
    L.height = 2 * kMargin + kRows * kRow;
    std::map<std::pair<Int, int>, int> stack;
    for (const auto& r : data.records) {
        const Int x = r.t / ctx.q;
        const int slot = stack[{x, r.coh}]++;
        long long px = kMargin + static_cast<long long>(x - L.xmin) * kCell + kCell / 2;
        long long py = kMargin + (kRows - 1 - std::min(r.coh, kRows - 1)) * kRow + kRow / 2 - 8 * (slot % 6);
        L.pos.emplace_back(px, py);
    }
    return L;
}

std::string esc(const std::string& s)
{
    std::string out;
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

}  // namespace

std::string render_svg(const PrimeContext& ctx, const ChartSpec& spec, const ChartData& data)
{
    const Layout L = layout(ctx, data);
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << L.width << "\" height=\""
       << L.height << "\" viewBox=\"0 0 " << L.width << ' ' << L.height << "\">\n";
    os << "<title>" << esc(data.title) << "</title>\n";
    os << "<rect x=\"0\" y=\"0\" width=\"" << L.width << "\" height=\"" << L.height << "\" fill=\"white\"/>\n";

    // axes
    const long long x0 = kMargin, y0 = kMargin + kRows * kRow;
    os << "<g id=\"axes\" stroke=\"black\" stroke-width=\"1\">\n";
    os << "<line x1=\"" << x0 << "\" y1=\"" << y0 << "\" x2=\"" << L.width - kMargin << "\" y2=\"" << y0 << "\"/>\n";
    os << "<line x1=\"" << x0 << "\" y1=\"" << kMargin << "\" x2=\"" << x0 << "\" y2=\"" << y0 << "\"/>\n";
    os << "</g>\n<g id=\"labels\" font-family=\"monospace\" font-size=\"10\">\n";
    for (Int x = L.xmin; x <= L.xmax; ++x)
        if (x % 5 == 0)
            os << "<text x=\"" << kMargin + static_cast<long long>(x - L.xmin) * kCell + kCell / 2 << "\" y=\""
               << y0 + 14 << "\" text-anchor=\"middle\">" << x << "</text>\n";
    for (int c = 0; c < kRows; ++c)
        os << "<text x=\"" << x0 - 8 << "\" y=\"" << kMargin + (kRows - 1 - c) * kRow + kRow / 2 << "\" text-anchor=\"end\">"
           << c << "</text>\n";
    os << "<text x=\"" << x0 << "\" y=\"" << kMargin - 20 << "\">" << esc(data.title) << "</text>\n";
    os << "<text x=\"" << L.width - kMargin << "\" y=\"" << y0 + 30 << "\" text-anchor=\"end\">t/" << ctx.q
       << "</text>\n";
    os << "</g>\n";

    // hooks: up from the source, across, down onto the target
    if (spec.hooks && !data.edges.empty()) {
        os << "<g id=\"differentials\" fill=\"none\" stroke=\"steelblue\" stroke-width=\"1\">\n";
        for (size_t i = 0; i < data.edges.size(); ++i) {
            const auto& e = data.edges[i];
            auto [sx, sy] = L.pos[e.from];
            auto [tx, ty] = L.pos[e.to];
            const long long top = std::min(sy, ty) - 14 - 2 * static_cast<long long>(i % 5);
            os << "<polyline data-ref=\"d" << i << "\" points=\"" << sx << ',' << sy << ' ' << sx << ',' << top << ' '
               << tx << ',' << top << ' ' << tx << ',' << ty << "\"><title>" << esc(e.diff.source) << " -> "
               << esc(e.diff.target) << " (" << e.diff.length << ")</title></polyline>\n";
        }
        os << "</g>\n";
    }

    os << "<g id=\"classes\">\n";
    for (size_t i = 0; i < data.records.size(); ++i) {
        const auto& r = data.records[i];
        auto [x, y] = L.pos[i];
        os << "<circle data-ref=\"r" << i << "\" cx=\"" << x << "\" cy=\"" << y << "\" r=\"3\" fill=\""
           << (r.symbol.rfind("zeta", 0) == 0 ? "gray" : "black") << "\"><title>" << esc(r.name) << "</title></circle>\n";
        if (spec.multiplicity && r.k > 1)
            for (int s = 0; s < r.k; ++s)
                os << "<line data-ref=\"r" << i << "\" x1=\"" << x + 5 + 2 * s << "\" y1=\"" << y - 4 << "\" x2=\""
                   << x + 5 + 2 * s << "\" y2=\"" << y + 4 << "\" stroke=\"darkred\" stroke-width=\"1\"/>\n";
    }
    os << "</g>\n</svg>\n";
    return os.str();
}

std::string render_ascii(const PrimeContext& ctx, const ChartSpec&, const ChartData& data)
{
    const Layout L = layout(ctx, data);
    const long long cols = static_cast<long long>(L.xmax - L.xmin + 1);
    if (cols > kMaxAsciiColumns)
        throw ValidationError("chart exceeds size limit: " + std::to_string(cols) + " columns (max " +
                              std::to_string(kMaxAsciiColumns) + " for text)");
    std::vector<std::vector<int>> grid(kRows, std::vector<int>(cols, 0));
    for (const auto& r : data.records)
        ++grid[std::min(r.coh, kRows - 1)][static_cast<long long>(r.t / ctx.q - L.xmin)];
    std::ostringstream os;
    os << data.title << '\n';
    for (int c = kRows - 1; c >= 0; --c) {
        os << c << " |";
        for (int n : grid[c])
            os << (n == 0 ? '.' : n < 10 ? static_cast<char>('0' + n) : '*');
        os << '\n';
    }
    os << "  +" << std::string(cols, '-') << '\n';
    os << "   t/" << ctx.q << " from " << L.xmin << " to " << L.xmax << ", " << data.records.size() << " classes";
    if (!data.edges.empty())
        os << ", " << data.edges.size() << " differentials";
    os << '\n';
    return os.str();
}

}  // namespace chromatic::chart
