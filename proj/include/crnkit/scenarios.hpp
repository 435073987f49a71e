#pragma once

// Replays of the two worked network transformations between embedded
// networks of the Wnt models, with an exact right-hand-side check.

#include "crnkit/transform.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace crnkit {

struct ScenarioReport {
    std::string name;
    KineticSystem source;
    KineticSystem target;
    std::vector<std::string> steps;
    bool equivalent = false;  // identical right-hand sides at every sample point
    std::vector<Reaction> expected;  // reactions the transform should land on
    bool matchesExpected = false;
    std::size_t sourceRank = 0;
    std::size_t targetRank = 0;
};

/// "lee-inflow": the Lee embedded network, with the RV-split of
/// A13 + A2 -> A13 + A23 into A13 + A2 -> 0 and 0 -> A13 + A23.
/// "schmitz-gmak": the Schmitz embedded network carried onto the augmented
/// MacLean embedded network without its A4 and A5 outflows.
std::vector<std::string> scenario_names();

/// Mass action constants are random rationals drawn from seed.
ScenarioReport run_scenario(std::string_view name, std::size_t points = 200, std::uint64_t seed = 1);

}  // namespace crnkit
