#include "wsn/netmodel.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace wsn {

void validate(const TierScheme& tiers) {
    if (!(tiers.m >= 0.0 && tiers.m <= 1.0))
        throw std::invalid_argument("tier scheme: m must be in [0, 1]");
    if (!(tiers.b >= 0.0 && tiers.b <= 1.0))
        throw std::invalid_argument("tier scheme: b must be in [0, 1]");
    if (tiers.m + tiers.b > 1.0)
        throw std::invalid_argument("tier scheme: m + b must be <= 1");
    if (!(tiers.alpha >= 0.0))
        throw std::invalid_argument("tier scheme: alpha must be >= 0");
    if (!(tiers.mu >= 0.0 && tiers.mu <= tiers.alpha))
        throw std::invalid_argument("tier scheme: mu must satisfy 0 <= mu <= alpha");
    if (!(tiers.p_opt > 0.0 && tiers.p_opt <= 1.0))
        throw std::invalid_argument("tier scheme: p_opt must be in (0, 1]");
}

TierCounts tier_counts(int n, const TierScheme& tiers) {
    validate(tiers);
    if (n < 1) throw std::invalid_argument("tier counts: n must be >= 1");
    const int advanced = static_cast<int>(std::llround(tiers.m * n));
    const int intermediate = static_cast<int>(std::llround(tiers.b * n));
    if (advanced + intermediate > n)
        throw std::invalid_argument(
            "tier counts: round(m*n) + round(b*n) = " +
            std::to_string(advanced + intermediate) + " exceeds n = " + std::to_string(n));
    return TierCounts{n - advanced - intermediate, intermediate, advanced};
}

double initial_energy_for(Tier tier, double e0, const TierScheme& tiers) {
    switch (tier) {
        case Tier::Normal: return e0;
        case Tier::Intermediate: return e0 * (1.0 + tiers.mu);
        case Tier::Advanced: return e0 * (1.0 + tiers.alpha);
    }
    throw std::logic_error("unknown tier");
}

double total_initial_energy(std::span<const Node> nodes) {
    if (nodes.empty())
        throw std::invalid_argument("total_initial_energy: empty node list");
    double sum = 0.0;
    for (const Node& node : nodes) sum += node.initial_energy;
    return sum;
}

std::vector<Node> deploy_nodes(int n, double field_side, double e0,
                               const TierScheme& tiers, Rng& rng) {
    if (field_side <= 0.0)
        throw std::invalid_argument("deploy: field_side must be > 0");
    if (e0 <= 0.0)
        throw std::invalid_argument("deploy: e0 must be > 0");
    const TierCounts counts = tier_counts(n, tiers);

    std::vector<Node> nodes;
    nodes.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        Tier tier = Tier::Normal;
        if (i < counts.advanced)
            tier = Tier::Advanced;
        else if (i < counts.advanced + counts.intermediate)
            tier = Tier::Intermediate;

        Node node;
        node.id = i;
        node.pos.x = rng.uniform(0.0, field_side);
        node.pos.y = rng.uniform(0.0, field_side);
        node.tier = tier;
        node.initial_energy = initial_energy_for(tier, e0, tiers);
        node.residual_energy = node.initial_energy;
        nodes.push_back(node);
    }
    return nodes;
}

}  // namespace wsn
