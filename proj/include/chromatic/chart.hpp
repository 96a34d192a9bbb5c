#pragma once

#include "chromatic/export.hpp"

#include <optional>
#include <string>
#include <vector>

namespace chromatic::chart {

enum class Figure { M2, V1BSS, M11, V0BSS, M02, M02New };
std::string figure_name(Figure f);
std::optional<Figure> parse_figure(const std::string& s);

struct ChartSpec {
    Figure figure = Figure::M11;
    Vicinity vicinity;
    bool zeta = false;         // include ζ-copies
    bool hooks = true;         // draw differentials
    bool multiplicity = true;  // k-fold strokes for v0 orders
};

struct Edge {
    DiffRecord diff;
    int from = -1;  // record indices
    int to = -1;
};

struct ChartData {
    std::string title;
    std::vector<ExportRecord> records;
    std::vector<Edge> edges;
};

inline constexpr int kMaxColumns = 4000;
inline constexpr int kMaxGlyphs = 40000;
inline constexpr int kMaxAsciiColumns = 400;

ChartData chart_data(const PrimeContext& ctx, const ChartSpec& spec, const Caps& caps);

// Horizontal axis is t/q, vertical is coh.  Throws ValidationError past the size limits.
std::string render_svg(const PrimeContext& ctx, const ChartSpec& spec, const ChartData& data);
std::string render_ascii(const PrimeContext& ctx, const ChartSpec& spec, const ChartData& data);

}  // namespace chromatic::chart
