#include "p3/serialize.hpp"

#include <algorithm>
#include <sstream>

#include "p3/errors.hpp"

namespace p3 {

using nlohmann::json;

json to_json(const ChernData& d)
{
    return json::array({d.rank, d.c1, d.c2, d.c3});
}

ChernData chern_from_json(const json& j)
{
    if (!j.is_array() || j.size() != 4)
        throw DomainError("chern must be an array [rank, c1, c2, c3]");
    return {j[0].get<std::int64_t>(), j[1].get<std::int64_t>(), j[2].get<std::int64_t>(),
            j[3].get<std::int64_t>()};
}

json to_json(const CohomTable& tbl)
{
    json rows = json::array();
    for (const auto& [t, h] : tbl.rows)
        rows.push_back({{"t", t}, {"h", json::array({h[0], h[1], h[2], h[3]})}});
    return {{"chern", to_json(tbl.chern)}, {"rows", std::move(rows)}};
}

CohomTable table_from_json(const json& j)
{
    CohomTable tbl;
    tbl.chern = chern_from_json(j.at("chern"));
    for (const auto& row : j.at("rows")) {
        const auto& h = row.at("h");
        if (!h.is_array() || h.size() != 4)
            throw DomainError("row entry h must have four entries");
        tbl.rows[row.at("t").get<std::int64_t>()] = {h[0].get<std::int64_t>(), h[1].get<std::int64_t>(),
                                                    h[2].get<std::int64_t>(), h[3].get<std::int64_t>()};
    }
    return tbl;
}

json to_json(const ModuliReport& report)
{
    json derivation = json::array();
    for (const auto& step : report.derivation)
        derivation.push_back(
            {{"quantity", step.quantity}, {"value", step.value}, {"provenance", step.provenance}});
    json hypotheses = json::array();
    for (auto h : report.hypotheses)
        hypotheses.push_back(to_string(h));
    return {{"chern", to_json(report.chern)},
            {"chi_end", report.chi_end},
            {"ext_diff", report.ext_diff},
            {"hypotheses", std::move(hypotheses)},
            {"dimension", report.dimension ? json(*report.dimension) : json(nullptr)},
            {"derivation", std::move(derivation)}};
}

ModuliReport report_from_json(const json& j)
{
    ModuliReport report;
    report.chern = chern_from_json(j.at("chern"));
    report.chi_end = j.at("chi_end").get<std::int64_t>();
    report.ext_diff = j.at("ext_diff").get<std::int64_t>();
    for (const auto& h : j.at("hypotheses")) {
        const auto name = h.get<std::string>();
        if (name == "stable")
            report.hypotheses.push_back(Hypothesis::stable);
        else if (name == "ext2_vanishes")
            report.hypotheses.push_back(Hypothesis::ext2_vanishes);
        else
            throw DomainError("unknown hypothesis '" + name + "'");
    }
    if (!j.at("dimension").is_null())
        report.dimension = j.at("dimension").get<std::int64_t>();
    for (const auto& step : j.at("derivation"))
        report.derivation.push_back({step.at("quantity").get<std::string>(),
                                     step.at("value").get<std::int64_t>(),
                                     step.at("provenance").get<std::string>()});
    return report;
}

std::string format_table_text(const CohomTable& tbl)
{
    std::size_t width = 2;
    for (const auto& [t, h] : tbl.rows) {
        width = std::max(width, std::to_string(t).size());
        for (auto v : h)
            width = std::max(width, std::to_string(v).size());
    }
    ++width;
    std::ostringstream out;
    auto cell = [&](const std::string& s) { out << std::string(width + 1 - s.size(), ' ') << s; };
    out << "chern " << to_string(tbl.chern) << '\n';
    for (const char* head : {"t", "h0", "h1", "h2", "h3"})
        cell(head);
    out << '\n';
    for (const auto& [t, h] : tbl.rows) {
        cell(std::to_string(t));
        for (auto v : h)
            cell(std::to_string(v));
        out << '\n';
    }
    return out.str();
}

std::string format_spectrum_line(const Spectrum& sp)
{
    std::ostringstream out;
    out << to_string(sp) << ": h1(-2)=" << h1_from_spectrum(sp, -2)
        << " h2(-2)=" << h2_from_spectrum(sp, -2)
        << " instanton=" << (is_instanton_spectrum(sp) ? "yes" : "no");
    return out.str();
}

std::string format_report_text(const ModuliReport& report)
{
    std::ostringstream out;
    out << "chern " << to_string(report.chern) << '\n';
    out << "hypotheses:";
    for (auto h : report.hypotheses)
        out << ' ' << to_string(h);
    out << '\n';
    for (const auto& step : report.derivation)
        out << "  " << step.quantity << " = " << step.value << "  [" << step.provenance << "]\n";
    out << "dimension = ";
    if (report.dimension)
        out << *report.dimension;
    else
        out << "(not determined)";
    out << '\n';
    return out.str();
}

} // namespace p3
