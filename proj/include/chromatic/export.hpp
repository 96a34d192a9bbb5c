#pragma once

#include "chromatic/homotopy.hpp"
#include "chromatic/sy_compat.hpp"
#include "chromatic/v0_bockstein.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace chromatic {

inline constexpr const char* kExportSchema = "chromatic-export";
inline constexpr int kExportVersion = 1;

// One basis element.  `order` is the group order of the summand (0 for torsion-free or divisible).
struct ExportRecord {
    std::string name;
    std::string family;
    std::string symbol;
    Int s = 0;
    Int j = 0;
    int k = 0;
    int coh = 0;
    Int t = 0;
    Int stem = 0;
    Int order = 0;
    std::string provenance;
    bool truncated = false;  // member of an infinite family cut at j_cap

    bool operator==(const ExportRecord&) const = default;
};

struct DiffRecord {
    std::string series;  // "v1" or "v0"
    std::string source;
    std::string target;
    Int length = 0;
    int row = 0;

    bool operator==(const DiffRecord&) const = default;
};

ExportRecord record_of(const PrimeContext& ctx, const M2Class& c);
ExportRecord record_of(const PrimeContext& ctx, const M11Class& c, const Caps& caps, const std::string& provenance);
ExportRecord record_of(const PrimeContext& ctx, const M02Element& e, const Caps& caps, const std::string& provenance);
ExportRecord record_of(const PrimeContext& ctx, const NewElement& e);
ExportRecord record_of(const PrimeContext& ctx, const sy::Element& e, sy::Mode mode);
ExportRecord record_of(const PrimeContext& ctx, const homotopy::StemElement& e, const std::string& target);

DiffRecord diff_record(const PrimeContext& ctx, const V1Differential& d);
DiffRecord diff_record(const PrimeContext& ctx, const V0Differential& d);

using Json = nlohmann::ordered_json;

Json to_json(const ExportRecord& r);
Json to_json(const DiffRecord& d);
ExportRecord record_from_json(const Json& j);
DiffRecord diff_from_json(const Json& j);

// {"schema", "version", "prime", "records": [...]}
Json records_document(const PrimeContext& ctx, const std::vector<ExportRecord>& rs);
std::vector<ExportRecord> parse_records_document(const Json& doc);

std::string to_csv(const std::vector<ExportRecord>& rs);
std::string to_csv(const std::vector<DiffRecord>& ds);
std::string to_text(const std::vector<ExportRecord>& rs);
std::string to_text(const std::vector<DiffRecord>& ds);

}  // namespace chromatic
