#include "icmkit/report_json.hpp"

namespace icmkit {

namespace {

ordered_json json_or_null(std::optional<int> v) {
    if (v) return *v;
    return nullptr;
}

ordered_json json_or_null(std::optional<bool> v) {
    if (v) return *v;
    return nullptr;
}

ordered_json header(const std::string& kind, const std::string& input, const FieldSpec& field) {
    ordered_json doc;
    doc["schema"] = 1;
    doc["tool"] = "icmkit";
    doc["version"] = ICMKIT_VERSION;
    doc["kind"] = kind;
    doc["input"] = input;
    doc["field"] = field.to_string();
    return doc;
}

}  // namespace

ordered_json report_json(const InvariantReport& r, const std::string& input,
                         std::optional<double> wall_ms) {
    ordered_json doc = header("report", input, r.field);
    doc["n"] = r.n;
    doc["void"] = r.void_complex;
    if (r.void_complex) {
        for (const char* key : {"dim", "indim", "dim_ring", "indim_ring", "depth", "pdim",
                                "ht", "bight", "deg_ideal", "reg_ideal", "f_vector", "h_vector"})
            doc[key] = nullptr;
    } else {
        doc["dim"] = r.dim;
        doc["indim"] = r.indim;
        doc["dim_ring"] = r.dim_ring;
        doc["indim_ring"] = r.indim_ring;
        doc["depth"] = r.depth;
        doc["pdim"] = r.pdim;
        doc["ht"] = r.height;
        doc["bight"] = r.big_height;
        doc["deg_ideal"] = json_or_null(r.deg_ideal);
        doc["reg_ideal"] = json_or_null(r.reg_ideal);
        doc["f_vector"] = r.f_vector.entries;
        doc["h_vector"] = r.h_polynomial.coeffs;
    }
    ordered_json flags;
    flags["is_pure"] = r.is_pure;
    flags["is_cm"] = r.is_cm;
    flags["is_icm"] = r.is_icm;
    flags["is_scm"] = r.is_scm;
    flags["has_degree_resolution"] = json_or_null(r.degree_resolution);
    flags["has_linear_resolution"] = json_or_null(r.linear_resolution);
    flags["is_bi_icm"] = r.bi_icm;
    flags["weakly_connected"] = r.weakly_connected;
    flags["stably_connected"] = r.stably_connected;
    doc["flags"] = flags;
    if (wall_ms) doc["wall_time_ms"] = *wall_ms;
    return doc;
}

ordered_json betti_json(const BettiTable& table, const std::string& input,
                        std::optional<double> wall_ms) {
    ordered_json doc = header("betti", input, table.field);
    doc["n"] = table.n;
    doc["subject"] = table.subject == ModuleSide::QuotientRing ? "quotient_ring" : "ideal";
    ordered_json entries = ordered_json::array();
    for (const auto& [key, value] : table.entries)
        entries.push_back({key.first, key.second, value});
    doc["entries"] = entries;
    if (table.entries.empty()) {
        doc["pdim"] = nullptr;
        doc["reg"] = nullptr;
        doc["deg"] = nullptr;
        doc["extremal_count"] = 0;
    } else {
        TableInvariants inv = invariants_from_table(table);
        doc["pdim"] = inv.pdim;
        doc["reg"] = inv.reg;
        doc["deg"] = json_or_null(inv.deg);
        doc["extremal_count"] = extremal_betti_count(table);
    }
    if (wall_ms) doc["wall_time_ms"] = *wall_ms;
    return doc;
}

std::string dump_json(const ordered_json& doc) {
    return doc.dump(2) + "\n";
}

}  // namespace icmkit
