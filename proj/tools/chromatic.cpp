#include "chromatic/chart.hpp"
#include "chromatic/export.hpp"
#include "chromatic/homotopy.hpp"
#include "chromatic/picard.hpp"
#include "chromatic/sy_compat.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace chromatic;

namespace {

struct Globals {
    long long prime = 5;
    std::vector<std::string> vicinity;
    std::optional<long long> t_min, t_max;
    std::optional<std::string> j_cap;
    std::optional<int> k_cap;
    int precision = 8;
    std::string format = "text";
};

struct Env {
    PrimeContext ctx;
    Caps caps;
    const Globals& g;

    Vicinity vicinity() const
    {
        if (g.vicinity.empty())
            throw ValidationError("--vicinity S N is required for this command");
        Int s;
        int n;
        try {
            s = Int(g.vicinity.at(0));
            n = std::stoi(g.vicinity.at(1));
        } catch (const std::exception&) {
            throw ValidationError("--vicinity expects two integers");
        }
        return make_vicinity(ctx, s, n);
    }
    void no_svg() const
    {
        if (g.format == "svg")
            throw ValidationError("--format svg is only available for the chart command");
    }
};

void emit(const Env& env, const std::vector<ExportRecord>& rs)
{
    env.no_svg();
    if (env.g.format == "json")
        std::cout << records_document(env.ctx, rs).dump(2) << '\n';
    else if (env.g.format == "csv")
        std::cout << to_csv(rs);
    else
        std::cout << to_text(rs);
}

void emit(const Env& env, const std::vector<DiffRecord>& ds)
{
    env.no_svg();
    if (env.g.format == "json") {
        Json doc;
        doc["schema"] = kExportSchema;
        doc["version"] = kExportVersion;
        doc["prime"] = env.ctx.p;
        doc["differentials"] = Json::array();
        for (const auto& d : ds)
            doc["differentials"].push_back(to_json(d));
        std::cout << doc.dump(2) << '\n';
    } else if (env.g.format == "csv") {
        std::cout << to_csv(ds);
    } else {
        std::cout << to_text(ds);
    }
}

template <class T>
bool same_multiset(std::vector<T> a, std::vector<T> b)
{
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

// ---- subcommands

void run_m2(const Env& env)
{
    Window w{0, Int(2) * env.ctx.v2deg, 0, 4};
    if (!env.g.vicinity.empty()) {
        auto members = vicinity_members(env.ctx, env.vicinity());
        w.t_min = members.back() * env.ctx.v2deg;
        w.t_max = members.front() * env.ctx.v2deg + 2 * env.ctx.v2deg;
    }
    if (env.g.t_min)
        w.t_min = *env.g.t_min;
    if (env.g.t_max)
        w.t_max = *env.g.t_max;
    if (w.t_max - w.t_min > Int(1000000))
        throw ValidationError("t window too wide");
    std::vector<ExportRecord> rs;
    for (const auto& c : enumerate_M2(env.ctx, w))
        if (env.g.vicinity.empty() || in_vicinity(env.ctx, env.vicinity(), c.s))
            rs.push_back(record_of(env.ctx, c));
    emit(env, rs);
}

void run_m11(const Env& env)
{
    const Vicinity v = env.vicinity();
    auto computed = compute_M11(env.ctx, v, env.caps);
    if (!same_multiset(computed, closed_form_M11(env.ctx, v, env.caps)))
        throw ConsistencyError("H*M11 " + v.label() + ": computed classes differ from the closed form");
    std::vector<ExportRecord> rs;
    for (const auto& c : computed)
        rs.push_back(record_of(env.ctx, c, env.caps, "compute_M11"));
    emit(env, rs);
}

void run_m02(const Env& env, bool presentation_new)
{
    const Vicinity v = env.vicinity();
    std::vector<ExportRecord> rs;
    if (presentation_new) {
        for (const auto& e : closed_form_M20new(env.ctx, v, env.caps))
            rs.push_back(record_of(env.ctx, e));
    } else {
        auto computed = compute_M02(env.ctx, v, env.caps);
        if (!same_multiset(computed, closed_form_M20(env.ctx, v, env.caps)))
            throw ConsistencyError("H*M02 " + v.label() + ": computed basis differs from the closed form");
        for (const auto& e : computed)
            rs.push_back(record_of(env.ctx, e, env.caps, "compute_M02"));
    }
    emit(env, rs);
}

void run_diff(const Env& env, const std::string& series)
{
    const Vicinity v = env.vicinity();
    std::vector<DiffRecord> ds;
    if (series == "v1") {
        auto f = v1_differentials_formula(env.ctx, v);
        if (!same_multiset(f, v1_differentials_inductive(env.ctx, v)))
            throw ConsistencyError("v1 differentials " + v.label() + ": formula and induction disagree");
        for (const auto& d : f)
            ds.push_back(diff_record(env.ctx, d));
    } else {
        for (const auto& d : v0_differentials(env.ctx, v, env.caps))
            ds.push_back(diff_record(env.ctx, d));
    }
    emit(env, ds);
}

void run_sy(const Env& env, bool compare, bool errata, const std::string& mode_s)
{
    env.no_svg();
    const Vicinity v = env.vicinity();
    const sy::Mode mode = mode_s == "legacy" ? sy::Mode::Legacy : sy::Mode::Corrected;
    if (!compare && !errata) {
        std::vector<ExportRecord> rs;
        for (const auto& e : sy::closed_form_SY(env.ctx, v, env.caps, mode))
            rs.push_back(record_of(env.ctx, e, mode));
        emit(env, rs);
        return;
    }
    Json doc;
    doc["prime"] = env.ctx.p;
    doc["vicinity"] = {to_string(v.s), v.n};
    doc["mode"] = mode_s;
    std::ostringstream text;
    std::vector<sy::Mismatch> mism;
    if (compare) {
        mism = sy::compare_orders(env.ctx, v, env.caps, mode);
        doc["mismatches"] = Json::array();
        for (const auto& m : mism) {
            Json j;
            j["coh"] = m.coh;
            j["t"] = to_string(m.t);
            j["m20_total"] = m.m20_total;
            j["sy_total"] = m.sy_total;
            j["m20"] = m.m20;
            j["sy"] = m.sy;
            doc["mismatches"].push_back(j);
            text << "coh " << m.coh << " t " << m.t << ": M20 total " << m.m20_total << ", SY total " << m.sy_total
                 << '\n';
        }
        text << mism.size() << " mismatches (" << mode_s << ")\n";
    }
    if (errata) {
        doc["errata"] = Json::array();
        for (const auto& r : sy::errata_report(env.ctx, v, env.caps)) {
            Json j;
            j["name"] = r.element.name(env.ctx);
            j["family"] = sy::family_name(r.element.family);
            j["corrected"] = r.corrected_present;
            j["legacy"] = r.legacy_present;
            doc["errata"].push_back(j);
            text << r.element.name(env.ctx) << (r.corrected_present ? " corrected-only" : " legacy-only") << '\n';
        }
    }
    if (env.g.format == "json")
        std::cout << doc.dump(2) << '\n';
    else if (env.g.format == "csv") {
        std::cout << "coh,t,m20_total,sy_total\n";
        for (const auto& m : mism)
            std::cout << m.coh << ',' << m.t << ',' << m.m20_total << ',' << m.sy_total << '\n';
    } else
        std::cout << text.str();
    if (compare && mode == sy::Mode::Corrected && !mism.empty())
        throw ConsistencyError("corrected presentation disagrees with the M20 basis at " + v.label());
}

std::pair<long long, long long> parse_stems(const std::string& s)
{
    auto dots = s.find("..");
    try {
        if (dots == std::string::npos)
            throw ValidationError("");
        size_t used = 0;
        long long a = std::stoll(s.substr(0, dots), &used);
        if (used != dots)
            throw ValidationError("");
        std::string rest = s.substr(dots + 2);
        long long b = std::stoll(rest, &used);
        if (used != rest.size() || a > b)
            throw ValidationError("");
        return {a, b};
    } catch (const std::exception&) {
        throw ValidationError("--stems expects A..B with A <= B");
    }
}

void run_homotopy(const Env& env, const std::string& target_s, const std::string& stems)
{
    env.no_svg();
    std::string t = target_s;
    std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return std::toupper(c); });
    t = t.substr(0, t.find('-')) == "MP" ? "Mp" + t.substr(2) : t;
    auto target = homotopy::parse_target(t);
    if (!target)
        throw ValidationError("unknown target " + target_s + " (s-e2, s-k2, mp-e2, mp-k2)");
    auto [lo, hi] = parse_stems(stems);
    if (hi - lo > 5000)
        throw ValidationError("stem range too wide (max 5000 stems)");
    auto a = homotopy::assemble(env.ctx, *target, lo, hi);
    if (env.g.format == "json") {
        Json doc;
        doc["schema"] = kExportSchema;
        doc["version"] = kExportVersion;
        doc["prime"] = env.ctx.p;
        doc["target"] = homotopy::target_name(*target);
        doc["stems"] = Json::array();
        for (const auto& g : a.shapes) {
            Json j;
            j["stem"] = g.stem;
            j["group"] = g.str(env.ctx.p);
            j["free_rank"] = g.free_rank;
            j["cyclic"] = g.cyclic;
            j["divisible"] = g.divisible;
            j["rational"] = g.rational;
            doc["stems"].push_back(j);
        }
        doc["records"] = Json::array();
        for (const auto& e : a.elements)
            doc["records"].push_back(to_json(record_of(env.ctx, e, homotopy::target_name(*target))));
        std::cout << doc.dump(2) << '\n';
    } else if (env.g.format == "csv") {
        std::cout << "stem,group\n";
        for (const auto& g : a.shapes)
            std::cout << g.stem << ',' << g.str(env.ctx.p) << '\n';
    } else {
        for (const auto& g : a.shapes)
            if (!g.empty())
                std::cout << "stem " << g.stem << ": " << g.str(env.ctx.p) << '\n';
    }
}

void run_duality(const Env& env, const std::string& pairing_s)
{
    env.no_svg();
    const int N = env.g.precision;
    if (N < 1 || N > 200)
        throw ValidationError("--precision must be between 1 and 200");
    auto pairing = parse_pairing(pairing_s);
    if (!pairing)
        throw ValidationError("unknown pairing " + pairing_s + " (x-g, y0, full)");
    Json doc;
    doc["prime"] = env.ctx.p;
    doc["precision"] = N;
    doc["sphere"] = pic_of_sphere(env.ctx, 1, N).str();
    doc["det"] = pic_det(env.ctx, N).str();
    doc["interpolated_sphere"] = interpolated_sphere(env.ctx, N).str();
    const bool identity = verify_interpolation_identity(env.ctx, N);
    doc["interpolation_identity"] = identity;
    doc["duality_shift"] = to_string(duality_shift(env.ctx, N).centered());
    doc["duality_shift_det"] = to_string(duality_shift(env.ctx, N, true).centered());
    std::ostringstream text;
    text << "[S^1] = " << doc["sphere"].get<std::string>() << "\n[S^0[det]] = " << doc["det"].get<std::string>()
         << "\ninterpolated sphere = " << doc["interpolated_sphere"].get<std::string>()
         << (identity ? " (identity holds)" : " (identity FAILS)") << "\nI2 M(p) shift = "
         << doc["duality_shift"].get<std::string>() << ", M(p)[det] shift = "
         << doc["duality_shift_det"].get<std::string>() << '\n';
    if (!env.g.vicinity.empty()) {
        const Vicinity v = env.vicinity();
        auto rep = ambigram_report(env.ctx, v, *pairing, env.caps);
        Json r;
        r["vicinity"] = {to_string(v.s), v.n};
        r["pairing"] = pairing_name(*pairing);
        r["single_center"] = rep.single_center ? Json(to_string(*rep.single_center)) : Json(nullptr);
        r["blocks"] = Json::array();
        text << "ambigram " << v.label() << " (" << pairing_name(*pairing) << "): "
             << (rep.single_center ? "single center " + to_string(*rep.single_center) : std::string("no single center"))
             << '\n';
        for (const auto& b : rep.blocks) {
            Json jb;
            jb["exponent"] = to_string(b.exponent);
            jb["center"] = b.center ? Json(to_string(*b.center)) : Json(nullptr);
            jb["pairs"] = Json::array();
            for (const auto& p : b.pairs)
                jb["pairs"].push_back({p.a, p.b});
            jb["unmatched"] = b.unmatched;
            r["blocks"].push_back(jb);
            text << "  block v2^" << b.exponent << ": "
                 << (b.center ? "center " + to_string(*b.center) : std::string("no center")) << '\n';
            for (const auto& p : b.pairs)
                text << "    " << p.a << " <-> " << p.b << '\n';
            for (const auto& u : b.unmatched)
                text << "    unmatched " << u << '\n';
        }
        r["unmatched"] = rep.unmatched;
        for (const auto& u : rep.unmatched)
            text << "  unmatched " << u << '\n';
        doc["ambigram"] = r;
    }
    if (env.g.format == "json")
        std::cout << doc.dump(2) << '\n';
    else
        std::cout << text.str();
    if (!identity)
        throw ConsistencyError("interpolation identity failed");
}

void run_chart(const Env& env, const std::string& figure_s, const std::string& out, bool zeta)
{
    auto figure = chart::parse_figure(figure_s);
    if (!figure)
        throw ValidationError("unknown figure " + figure_s + " (m2, v1bss, m11, v0bss, m02, m02new)");
    chart::ChartSpec spec{*figure, env.vicinity()};
    spec.zeta = zeta;
    auto data = chart::chart_data(env.ctx, spec, env.caps);
    std::string doc;
    if (env.g.format == "svg")
        doc = chart::render_svg(env.ctx, spec, data);
    else if (env.g.format == "text")
        doc = chart::render_ascii(env.ctx, spec, data);
    else
        throw ValidationError("chart renders svg or text");
    if (out.empty() || out == "-") {
        std::cout << doc;
        return;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f)
        throw ValidationError("cannot open " + out + " for writing");
    f << doc;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"chromatic: monochromatic-layer computations at height 2"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    if (const char* env = std::getenv("CHROMATIC_PRIME")) {
        try {
            g.prime = std::stoll(env);
        } catch (const std::exception&) {
            std::cerr << "error: CHROMATIC_PRIME is not an integer; p is a prime greater than or equal to 5\n";
            return 1;
        }
    }
    app.add_option("--prime", g.prime, "prime p >= 5 (default $CHROMATIC_PRIME or 5)");
    app.add_option("--vicinity", g.vicinity, "vicinity of v2^{S p^N}")->expected(2)->type_name("S N");
    app.add_option("--t-min", g.t_min, "minimum internal degree");
    app.add_option("--t-max", g.t_max, "maximum internal degree");
    app.add_option("--j-cap", g.j_cap, "cap on j for infinite families (default 3 a_4)");
    app.add_option("--k-cap", g.k_cap, "cap on the height of t = 0 towers (default 8)");
    app.add_option("--precision", g.precision, "p-adic precision");
    app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"json", "csv", "text", "svg"}));

    auto* m2 = app.add_subcommand("m2", "H*M20 classes");
    auto* m11 = app.add_subcommand("m11", "H*M11 via the v1-BSS, checked against the closed form");
    auto* m02 = app.add_subcommand("m02", "H*M02 via the projective v0-BSS, checked against the closed form");
    bool m02new = false;
    m02->add_flag("--new", m02new, "simplified presentation");
    auto* diff = app.add_subcommand("diff", "Bockstein differentials");
    std::string series = "v1";
    diff->add_option("--series", series)->check(CLI::IsMember({"v1", "v0"}));
    auto* syc = app.add_subcommand("sy", "integral presentation");
    bool compare = false, errata = false;
    std::string mode = "corrected";
    syc->add_flag("--compare", compare, "compare order totals with the M20 basis");
    syc->add_flag("--errata", errata, "generators present in one mode only");
    syc->add_option("--mode", mode)->check(CLI::IsMember({"corrected", "legacy"}));
    auto* hom = app.add_subcommand("homotopy", "homotopy group shapes per stem");
    std::string target = "s-e2", stems = "-10..50";
    hom->add_option("--target", target, "s-e2, s-k2, mp-e2, mp-k2");
    hom->add_option("--stems", stems, "A..B");
    auto* dual = app.add_subcommand("duality", "Picard identities and ambigram diagnostics");
    bool report = false;
    std::string pairing = "full";
    dual->add_flag("--report", report, "include the ambigram report for --vicinity");
    dual->add_option("--pairing", pairing, "x-g, y0, full");
    auto* ch = app.add_subcommand("chart", "render a chart");
    std::string figure = "m11", out;
    bool zeta = false;
    ch->add_option("--figure", figure, "m2, v1bss, m11, v0bss, m02, m02new");
    ch->add_option("--out", out, "output path (default stdout)");
    ch->add_flag("--zeta", zeta, "include zeta copies");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        Env env{PrimeContext::make(g.prime), {}, g};
        env.caps = default_caps(env.ctx);
        if (g.j_cap) {
            try {
                env.caps.j_cap = Int(*g.j_cap);
            } catch (const std::exception&) {
                throw ValidationError("--j-cap expects an integer");
            }
            if (env.caps.j_cap < 1)
                throw ValidationError("--j-cap must be positive");
        }
        if (g.k_cap) {
            if (*g.k_cap < 1 || *g.k_cap > 64)
                throw ValidationError("--k-cap must be between 1 and 64");
            env.caps.k_cap = *g.k_cap;
        }
        if (*m2)
            run_m2(env);
        else if (*m11)
            run_m11(env);
        else if (*m02)
            run_m02(env, m02new);
        else if (*diff)
            run_diff(env, series);
        else if (*syc)
            run_sy(env, compare, errata, mode);
        else if (*hom)
            run_homotopy(env, target, stems);
        else if (*dual) {
            Globals g2 = g;
            if (!report)
                g2.vicinity.clear();
            run_duality(Env{env.ctx, env.caps, g2}, pairing);
        } else if (*ch)
            run_chart(env, figure, out, zeta);
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const ConsistencyError& e) {
        std::cerr << "consistency failure: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
