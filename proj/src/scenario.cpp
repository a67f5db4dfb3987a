#include "wsn/scenario.hpp"

#include <stdexcept>

namespace wsn {

void validate(const ScenarioConfig& config) {
    if (config.n < 1) throw std::invalid_argument("scenario: n must be >= 1");
    if (config.max_rounds < 1) throw std::invalid_argument("scenario: max_rounds must be >= 1");
    if (config.frames_per_round < 1)
        throw std::invalid_argument("scenario: frames_per_round must be >= 1");
    if (!(config.field_side > 0.0))
        throw std::invalid_argument("scenario: field_side must be > 0");
    if (!(config.e0 > 0.0)) throw std::invalid_argument("scenario: e0 must be > 0");
    if (config.ctrl_bits < 0) throw std::invalid_argument("scenario: ctrl_bits must be >= 0");
    if (config.e_sense < 0.0) throw std::invalid_argument("scenario: e_sense must be >= 0");
    validate(config.tiers);
    validate(config.radio);
    validate(config.field);
    if (is_reactive(config.protocol) != config.reactive.has_value())
        throw std::invalid_argument(
            "scenario: reactive settings must be present exactly for TEEN/TSEP");
    if (config.reactive) validate(*config.reactive);
    // Deployment feasibility check (exact tier counts).
    tier_counts(config.n, config.tiers);
}

bool same_base_config(const ScenarioConfig& a, const ScenarioConfig& b) {
    ScenarioConfig lhs = a;
    ScenarioConfig rhs = b;
    lhs.protocol = rhs.protocol;
    lhs.reactive = rhs.reactive;
    lhs.rng_seed = rhs.rng_seed;
    return lhs == rhs;
}

std::vector<Node> deploy_network(const ScenarioConfig& config, Rng& rng) {
    validate(config);
    return deploy_nodes(config.n, config.field_side, config.e0, config.tiers, rng);
}

}  // namespace wsn
