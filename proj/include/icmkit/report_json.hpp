#ifndef ICMKIT_REPORT_JSON_HPP
#define ICMKIT_REPORT_JSON_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "icmkit/betti.hpp"
#include "icmkit/invariants.hpp"

namespace icmkit {

using ordered_json = nlohmann::ordered_json;

/// Report document, schema 1. Key order is fixed so documents are
/// byte-stable; the wall time only appears when requested.
ordered_json report_json(const InvariantReport& r, const std::string& input,
                         std::optional<double> wall_ms = std::nullopt);

/// Betti table document, schema 1.
ordered_json betti_json(const BettiTable& table, const std::string& input,
                        std::optional<double> wall_ms = std::nullopt);

/// Two-space indented dump with a trailing newline.
std::string dump_json(const ordered_json& doc);

}  // namespace icmkit

#endif
