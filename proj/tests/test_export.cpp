#include "chromatic/chart.hpp"
#include "chromatic/export.hpp"
#include "doctest.h"

#include <regex>
#include <set>

using namespace chromatic;
using namespace chromatic::chart;

namespace {

const PrimeContext c5 = PrimeContext::make(5);

std::vector<ExportRecord> sample()
{
    Caps caps = default_caps(c5);
    std::vector<ExportRecord> rs;
    for (const auto& c : closed_form_M11(c5, {1, 1}, caps))
        rs.push_back(record_of(c5, c, caps, "closed_form_M11"));
    for (const auto& e : compute_M02(c5, {0, 1}, {60, 8}))
        rs.push_back(record_of(c5, e, caps, "compute_M02"));
    for (const auto& e : sy::closed_form_SY(c5, {1, 2}, caps))
        rs.push_back(record_of(c5, e, sy::Mode::Corrected));
    return rs;
}

}  // namespace

TEST_CASE("json round trip")
{
    auto rs = sample();
    REQUIRE(!rs.empty());
    auto doc = records_document(c5, rs);
    CHECK(doc["schema"] == kExportSchema);
    auto back = parse_records_document(Json::parse(doc.dump()));
    CHECK(back == rs);
    ExportRecord big = rs[0];
    big.s = Int("123456789012345678901234567890");
    CHECK(record_from_json(Json::parse(to_json(big).dump())) == big);
}

TEST_CASE("record fields")
{
    Caps caps = default_caps(c5);
    M02Element e{M11Class{M2Class{Symbol::One, false, 1}, 1}, 1, Family20::X};
    auto r = record_of(c5, e, caps, "closed_form_M20");
    CHECK(r.stem == 38);
    CHECK(r.order == 5);
    CHECK(r.name == "1_{1/1,1}");
    CHECK(!r.truncated);
    auto csv = to_csv(std::vector<ExportRecord>{r});
    CHECK(csv.rfind("name,family,symbol,s,j,k,coh,t,stem,order,provenance,truncated\n", 0) == 0);
    CHECK(csv.find("\"1_{1/1,1}\",X,1,1,1,1,0,40,38,5,closed_form_M20,false") != std::string::npos);
}

TEST_CASE("v1bss hooks")
{
    ChartSpec spec{Figure::V1BSS, {1, 1}};
    auto d = chart_data(c5, spec, default_caps(c5));
    CHECK(d.edges.size() == 6);
    spec.zeta = true;
    CHECK(chart_data(c5, spec, default_caps(c5)).edges.size() == 12);
}

TEST_CASE("svg is deterministic and every glyph resolves")
{
    for (Figure f : {Figure::M2, Figure::V1BSS, Figure::M11, Figure::V0BSS, Figure::M02, Figure::M02New}) {
        ChartSpec spec{f, {1, 2}};
        spec.zeta = true;
        Caps caps{200, 8};
        auto a = render_svg(c5, spec, chart_data(c5, spec, caps));
        auto b = render_svg(c5, spec, chart_data(c5, spec, caps));
        CHECK(a == b);
        auto data = chart_data(c5, spec, caps);
        std::regex ref("data-ref=\"([rd])([0-9]+)\"");
        int n = 0;
        for (auto it = std::sregex_iterator(a.begin(), a.end(), ref); it != std::sregex_iterator(); ++it, ++n) {
            size_t i = std::stoul((*it)[2]);
            if ((*it)[1] == "r")
                CHECK(i < data.records.size());
            else
                CHECK(i < data.edges.size());
        }
        CHECK(n >= static_cast<int>(data.records.size()));
        for (const auto& e : data.edges) {
            CHECK(data.records[e.from].name == e.diff.source);
            CHECK(data.records[e.to].name == e.diff.target);
        }
    }
}

TEST_CASE("empty chart keeps its axes")
{
    ChartData empty{"empty", {}, {}};
    auto svg = render_svg(c5, {}, empty);
    CHECK(svg.find("id=\"axes\"") != std::string::npos);
    CHECK(svg.find("<circle") == std::string::npos);
    CHECK(render_ascii(c5, {}, empty).find("0 classes") != std::string::npos);
}

TEST_CASE("size limit")
{
    ChartData wide{"wide", {}, {}};
    ExportRecord a, b;
    a.name = "a";
    b.name = "b";
    b.t = Int(kMaxColumns + 10) * c5.q;
    wide.records = {a, b};
    CHECK_THROWS_AS(render_svg(c5, {}, wide), ValidationError);
    CHECK_THROWS_AS(render_ascii(c5, {}, wide), ValidationError);
    ChartSpec spec{Figure::M11, {1, 1}};
    auto txt = render_ascii(c5, spec, chart_data(c5, spec, default_caps(c5)));
    CHECK(txt.find("24 classes") != std::string::npos);
}
