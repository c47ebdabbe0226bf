#pragma once

#include <string>

#include <json.hpp>

#include "ringlex/analysis.hpp"
#include "ringlex/fixtures.hpp"
#include "ringlex/lexicode.hpp"

namespace ringlex {

nlohmann::json to_json(const CodeReport& report);
nlohmann::json to_json(const GrayReport& report);
nlohmann::json to_json(const BuildResult& build);
nlohmann::json to_json(const RadiusBoundsReport& report);
nlohmann::json to_json(const FixtureOutcome& outcome);

// Aligned text in the column layout of the tables: n, basis, delta,
// generators, type, d_L, followed by any extra analysis fields.
std::string build_table(const Basis& basis, const Criterion& criterion, const BuildResult& build,
                        const CodeReport& report);
std::string report_table(const CodeReport& report);
std::string gray_table(const GrayReport& report);
std::string radius_bounds_table(const RadiusBoundsReport& report);
std::string fixtures_table(const std::vector<FixtureOutcome>& outcomes);

}  // namespace ringlex
