#pragma once

#include <cstdint>
#include <optional>

#include "wsn/field.hpp"
#include "wsn/netmodel.hpp"
#include "wsn/protocols.hpp"
#include "wsn/radio.hpp"

namespace wsn {

/// Full description of one simulation scenario. Loadable from a key-value
/// config file (see config_file.hpp for the schema).
struct ScenarioConfig {
    ProtocolKind protocol = ProtocolKind::LEACH;
    int n = 100;
    double field_side = 100.0;  // meters; deployment square is side x side
    Position bs{50.0, 50.0};    // base station (default: field center)
    double e0 = 0.5;            // J, normal-node initial energy
    TierScheme tiers;
    RadioParams radio;
    long ctrl_bits = 200;   // control-packet size; 0 disables formation overhead
    double e_sense = 0.0;   // J/node/round idle sensing drain
    std::optional<ReactiveConfig> reactive;  // present iff protocol is reactive
    FieldModel field;       // stimulus model (used by reactive protocols)
    int max_rounds = 10000;
    std::uint64_t rng_seed = 1;
    int frames_per_round = 1;
    bool infinite_energy = false;  // disable deaths (election-dynamics studies)

    bool operator==(const ScenarioConfig&) const = default;
};

/// Throws std::invalid_argument naming the violated invariant.
void validate(const ScenarioConfig& config);

/// True when the two configs differ only by protocol, the reactive block, and
/// the rng seed: the precondition for cross-protocol comparisons.
bool same_base_config(const ScenarioConfig& a, const ScenarioConfig& b);

/// Deploys the scenario's network from the given random source.
std::vector<Node> deploy_network(const ScenarioConfig& config, Rng& rng);

}  // namespace wsn
