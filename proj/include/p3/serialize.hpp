#pragma once

// JSON and plain-text renderings. JSON objects use sorted keys and arrays in
// ascending twist order, so output is byte-stable for identical inputs.
//
//   table:  {"chern": [r,c1,c2,c3],
//            "rows": [{"h": [h0,h1,h2,h3], "t": t}, ...]}
//   report: {"chern": [...], "chi_end": n, "derivation":
//            [{"provenance": s, "quantity": s, "value": n}, ...],
//            "dimension": n | null, "ext_diff": n, "hypotheses": [s, ...]}

#include <string>

#include <json.hpp>

#include "p3/cohomtable.hpp"
#include "p3/moduli.hpp"
#include "p3/spectrum.hpp"

namespace p3 {

nlohmann::json to_json(const ChernData& d);
ChernData chern_from_json(const nlohmann::json& j);

nlohmann::json to_json(const CohomTable& tbl);
CohomTable table_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ModuliReport& report);
ModuliReport report_from_json(const nlohmann::json& j);

/// Aligned columns "t h0 h1 h2 h3", one row per twist.
std::string format_table_text(const CohomTable& tbl);

/// "(k1,...,kn): h1(-2)=a h2(-2)=b instanton=yes|no"
std::string format_spectrum_line(const Spectrum& sp);

std::string format_report_text(const ModuliReport& report);

} // namespace p3
