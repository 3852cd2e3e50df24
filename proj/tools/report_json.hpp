#pragma once

#include <chrono>

#include "json.hpp"

#include "hadclique/clique.hpp"
#include "hadclique/report.hpp"

namespace hadclique::cli {

using Json = nlohmann::ordered_json;

/// Deterministic part of a report: identical for identical inputs and seeds.
/// Keys keep a fixed order so reports diff cleanly.
Json report_body(const SearchReport& report);

/// Wall-clock data kept apart from the body.
Json timing_section(const SearchReport& report, std::chrono::system_clock::time_point started,
                    std::chrono::system_clock::time_point finished, double total_seconds);

/// {"report": body, "timing": timing}
Json full_report(const SearchReport& report, std::chrono::system_clock::time_point started,
                 std::chrono::system_clock::time_point finished, double total_seconds);

/// Best clique of a serialized report, re-verified.
/// Throws Error(InvalidClique) when it no longer verifies, Error(Parse) when
/// the document has no best clique.
Clique best_clique_from_report(const Json& doc);

} // namespace hadclique::cli
