#include "chromatic/export.hpp"

#include <iomanip>
#include <sstream>

namespace chromatic {

namespace {

bool infinite_family(Family20 f)
{
    return f == Family20::Xinf || f == Family20::Y0inf || f == Family20::zY0inf || f == Family20::Ginf ||
           f == Family20::zGinf;
}

std::string symbol_field(Symbol s, bool zeta) { return (zeta ? "zeta." : "") + symbol_name(s); }

Json int_json(const Int& x)
{
    if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
        return static_cast<long long>(x);
    return to_string(x);
}

Int int_from(const Json& j)
{
    if (j.is_string())
        return Int(j.get<std::string>());
    if (j.is_number_integer())
        return Int(j.get<long long>());
    throw ValidationError("expected an integer field");
}

}  // namespace

ExportRecord record_of(const PrimeContext& ctx, const M2Class& c)
{
    ExportRecord r;
    r.name = c.name();
    r.family = "M2";
    r.symbol = symbol_field(c.symbol, c.zeta);
    r.s = c.s;
    r.coh = c.coh();
    r.t = c.t(ctx);
    r.stem = r.t - r.coh;
    r.order = ctx.p;
    r.provenance = "enumerate_M2";
    return r;
}

ExportRecord record_of(const PrimeContext& ctx, const M11Class& c, const Caps&, const std::string& provenance)
{
    ExportRecord r;
    r.name = c.name(ctx);
    r.family = family_name(c.family);
    r.symbol = symbol_field(c.base.symbol, c.base.zeta);
    r.s = c.base.s;
    r.j = c.j;
    r.k = 1;
    r.coh = c.coh();
    r.t = c.t(ctx);
    r.stem = r.t - r.coh - 1;
    r.order = ctx.p;
    r.provenance = provenance;
    r.truncated = c.family == Family11::Xinf || c.family == Family11::Yinf;
    return r;
}

ExportRecord record_of(const PrimeContext& ctx, const M02Element& e, const Caps&, const std::string& provenance)
{
    ExportRecord r;
    r.name = e.name(ctx);
    r.family = family_name(e.family);
    r.symbol = symbol_field(e.base.base.symbol, e.base.base.zeta);
    r.s = e.base.base.s;
    r.j = e.base.j;
    r.k = e.k;
    r.coh = e.coh();
    r.t = e.t(ctx);
    r.stem = r.t - r.coh - 2;
    r.order = ppow(ctx, e.k);
    r.provenance = provenance;
    r.truncated = infinite_family(e.family);
    return r;
}

ExportRecord record_of(const PrimeContext& ctx, const NewElement& e)
{
    ExportRecord r;
    r.name = e.name();
    r.family = family_name(e.family);
    r.symbol = symbol_field(e.symbol, e.zeta);
    r.s = e.s;
    r.j = e.j;
    r.k = e.k;
    r.coh = e.coh();
    r.t = e.t(ctx);
    r.stem = r.t - r.coh - 2;
    r.order = ppow(ctx, e.k);
    r.provenance = "closed_form_M20new";
    r.truncated = e.family == Family20New::Xinf || e.family == Family20New::Y0inf || e.family == Family20New::zY0inf ||
                  e.family == Family20New::Ginf || e.family == Family20New::zGinf;
    return r;
}

ExportRecord record_of(const PrimeContext& ctx, const sy::Element& e, sy::Mode mode)
{
    ExportRecord r;
    r.name = e.name(ctx);
    r.family = sy::family_name(e.family);
    r.symbol = symbol_field(e.gen.symbol, e.gen.zeta);
    r.s = e.gen.s;
    r.j = e.j;
    r.k = e.k;
    r.coh = e.coh();
    r.t = e.t(ctx);
    r.stem = r.t - r.coh - 2;
    r.order = ppow(ctx, e.k);
    r.provenance = mode == sy::Mode::Corrected ? "closed_form_SY/corrected" : "closed_form_SY/legacy";
    r.truncated = e.family == sy::Family::Xinf || e.family == sy::Family::YinfC || e.family == sy::Family::G0;
    return r;
}

ExportRecord record_of(const PrimeContext& ctx, const homotopy::StemElement& e, const std::string& target)
{
    ExportRecord r;
    r.name = e.name;
    r.family = e.family;
    r.k = e.kind == homotopy::Summand::Cyclic ? e.k : 0;
    r.coh = e.layer;  // chromatic layer
    r.stem = e.stem;
    r.order = e.kind == homotopy::Summand::Cyclic ? ppow(ctx, e.k) : Int(0);
    switch (e.kind) {
    case homotopy::Summand::Cyclic: r.symbol = "cyclic"; break;
    case homotopy::Summand::Free: r.symbol = "free"; break;
    case homotopy::Summand::Divisible: r.symbol = "divisible"; break;
    case homotopy::Summand::Rational: r.symbol = "rational"; break;
    }
    r.provenance = "assemble/" + target;
    return r;
}

DiffRecord diff_record(const PrimeContext&, const V1Differential& d)
{
    return {"v1", d.source.name(), d.target.name(), d.length, d.row};
}

DiffRecord diff_record(const PrimeContext& ctx, const V0Differential& d)
{
    return {"v0", d.source.name(ctx), d.target.name(ctx), d.length, 0};
}

Json to_json(const ExportRecord& r)
{
    Json j;
    j["name"] = r.name;
    j["family"] = r.family;
    j["symbol"] = r.symbol;
    j["s"] = int_json(r.s);
    j["j"] = int_json(r.j);
    j["k"] = r.k;
    j["coh"] = r.coh;
    j["t"] = int_json(r.t);
    j["stem"] = int_json(r.stem);
    j["order"] = int_json(r.order);
    j["provenance"] = r.provenance;
    j["truncated"] = r.truncated;
    return j;
}

Json to_json(const DiffRecord& d)
{
    Json j;
    j["series"] = d.series;
    j["source"] = d.source;
    j["target"] = d.target;
    j["length"] = int_json(d.length);
    j["row"] = d.row;
    return j;
}

ExportRecord record_from_json(const Json& j)
{
    ExportRecord r;
    r.name = j.at("name").get<std::string>();
    r.family = j.at("family").get<std::string>();
    r.symbol = j.at("symbol").get<std::string>();
    r.s = int_from(j.at("s"));
    r.j = int_from(j.at("j"));
    r.k = j.at("k").get<int>();
    r.coh = j.at("coh").get<int>();
    r.t = int_from(j.at("t"));
    r.stem = int_from(j.at("stem"));
    r.order = int_from(j.at("order"));
    r.provenance = j.at("provenance").get<std::string>();
    r.truncated = j.value("truncated", false);
    return r;
}

DiffRecord diff_from_json(const Json& j)
{
    return {j.at("series").get<std::string>(), j.at("source").get<std::string>(), j.at("target").get<std::string>(),
            int_from(j.at("length")), j.value("row", 0)};
}

Json records_document(const PrimeContext& ctx, const std::vector<ExportRecord>& rs)
{
    Json doc;
    doc["schema"] = kExportSchema;
    doc["version"] = kExportVersion;
    doc["prime"] = ctx.p;
    doc["records"] = Json::array();
    for (const auto& r : rs)
        doc["records"].push_back(to_json(r));
    return doc;
}

std::vector<ExportRecord> parse_records_document(const Json& doc)
{
    if (doc.value("schema", "") != kExportSchema)
        throw ValidationError("not a chromatic export document");
    if (doc.value("version", 0) > kExportVersion)
        throw ValidationError("export document version is newer than this reader");
    std::vector<ExportRecord> out;
    for (const auto& j : doc.at("records"))
        out.push_back(record_from_json(j));
    return out;
}

namespace {

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

std::string to_csv(const std::vector<ExportRecord>& rs)
{
    std::ostringstream os;
    os << "name,family,symbol,s,j,k,coh,t,stem,order,provenance,truncated\n";
    for (const auto& r : rs)
        os << csv_field(r.name) << ',' << r.family << ',' << r.symbol << ',' << r.s << ',' << r.j << ',' << r.k << ','
           << r.coh << ',' << r.t << ',' << r.stem << ',' << r.order << ',' << r.provenance << ','
           << (r.truncated ? "true" : "false") << '\n';
    return os.str();
}

std::string to_csv(const std::vector<DiffRecord>& ds)
{
    std::ostringstream os;
    os << "series,source,target,length,row\n";
    for (const auto& d : ds)
        os << d.series << ',' << csv_field(d.source) << ',' << csv_field(d.target) << ',' << d.length << ',' << d.row
           << '\n';
    return os.str();
}

std::string to_text(const std::vector<ExportRecord>& rs)
{
    std::ostringstream os;
    for (const auto& r : rs) {
        os << std::left << std::setw(28) << r.name << ' ' << std::setw(8) << r.family << " coh " << r.coh << "  t "
           << std::setw(8) << r.t << " stem " << std::setw(8) << r.stem;
        if (r.order != 0)
            os << " order " << r.order;
        if (r.truncated)
            os << " (truncated)";
        os << '\n';
    }
    return os.str();
}

std::string to_text(const std::vector<DiffRecord>& ds)
{
    std::ostringstream os;
    for (const auto& d : ds)
        os << "d_" << d.length << "(" << d.source << ") = " << d.target << '\n';
    return os.str();
}

}  // namespace chromatic
