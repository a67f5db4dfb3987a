#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wsn/scenario.hpp"

namespace wsn {

/// A named comparison experiment: one base scenario swept over a protocol set
/// and a seed list.
struct ExperimentPreset {
    std::string name;
    ScenarioConfig base;
    std::vector<ProtocolKind> protocols;
    std::vector<std::uint64_t> seeds;
};

/// paper-case-1: alpha=1, m=0.1, b=0.3 over all five protocols.
ExperimentPreset paper_case_1(int seed_count = 30);

/// paper-case-2: alpha=3, m=0.2, b=0.3 over all five protocols.
ExperimentPreset paper_case_2(int seed_count = 30);

std::optional<ExperimentPreset> find_preset(const std::string& name, int seed_count = 30);

std::vector<std::string> preset_names();

/// The preset's base scenario specialized to one protocol (attaches or drops
/// the reactive block as the protocol requires).
ScenarioConfig preset_config_for(const ExperimentPreset& preset, ProtocolKind protocol);

}  // namespace wsn
