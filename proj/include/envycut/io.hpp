#pragma once

// JSON formats for instances, solutions and reports. Rationals are written as
// "p/q" strings ("p" for integers); readers also accept JSON integers.

#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "envycut/density.hpp"
#include "envycut/fast3.hpp"
#include "envycut/reductions.hpp"
#include "envycut/search.hpp"
#include "envycut/stromquist.hpp"

namespace envycut {

using Json = nlohmann::ordered_json;

Rational rational_from_json(const Json& j, const std::string& where);
Json rational_to_json(const Rational& r);

/// {"d": int, "players": [{"breakpoints": [...], "values": [...]}]}.
/// "values" are densities per segment; "masses" (value of each whole
/// segment) may be given instead. Throws SchemaError on malformed input.
UtilityProfile profile_from_json(const Json& j);
Json profile_to_json(const UtilityProfile& profile);

/// Grid instances: {"kind": "brouwer" | "dp", "n": int, ...}. The grid is
/// stored explicitly ("grid": x-major rows) for N <= 1024; otherwise the
/// instance is regenerated from "seed" (dp) or "plant" (brouwer).
using GridInstance = std::variant<Brouwer2DInstance, DirectionPreservingInstance>;
GridInstance grid_instance_from_json(const Json& j);
Json brouwer_to_json(const Brouwer2DInstance& inst);
Json dp_to_json(const DirectionPreservingInstance& inst);
bool is_grid_instance(const Json& j);

Json point_to_json(const BarycentricPoint& p);
Json solution_to_json(const SolutionCell& sol);
/// Reads the cuts of a solution object ({"n": int, "vertices": [[...], ...]})
/// or of a report containing one under "solution".
std::vector<BarycentricPoint> cuts_from_json(const Json& j);
std::vector<int> assignment_from_json(const Json& j);

Json envy_report_to_json(const EnvyReport& rep);
Json dnc_trace_to_json(const std::vector<DncStep>& steps);
Json fast3_trace_to_json(const std::vector<Fast3Step>& steps);
Json shout_to_json(const ShoutEvent& ev);
Json indistinguishability_to_json(const IndistinguishabilityReport& rep, bool include_queries);

/// "-" reads stdin / writes stdout.
Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace envycut
