#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "wsn/rng.hpp"

namespace wsn {

struct Position {
    double x = 0.0;  // meters
    double y = 0.0;  // meters

    bool operator==(const Position&) const = default;
};

inline double distance(const Position& a, const Position& b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

/// Initial-energy class of a node. Fractions (1-m-b, b, m) of the deployment
/// carry energies E_o, E_o(1+mu), E_o(1+alpha) respectively.
enum class Tier { Normal = 0, Intermediate = 1, Advanced = 2 };

inline constexpr int kTierCount = 3;

/// Heterogeneity definition: tier fractions, energy multipliers, and the
/// optimal cluster-head probability the election probabilities derive from.
struct TierScheme {
    double m = 0.1;      // fraction of advanced nodes
    double b = 0.3;      // fraction of intermediate nodes
    double alpha = 1.0;  // advanced energy multiplier
    double mu = 0.5;     // intermediate energy multiplier
    double p_opt = 0.1;  // optimal CH probability

    /// Canonical construction: mu defaults to alpha/2.
    static TierScheme with_default_mu(double m, double b, double alpha, double p_opt) {
        return TierScheme{m, b, alpha, alpha / 2.0, p_opt};
    }

    bool operator==(const TierScheme&) const = default;
};

/// Throws std::invalid_argument naming the violated invariant.
void validate(const TierScheme& tiers);

struct TierCounts {
    int normal = 0;
    int intermediate = 0;
    int advanced = 0;
};

/// Exact deterministic tier counts: round(m*n) advanced, round(b*n)
/// intermediate, remainder normal. Throws if the rounded counts exceed n.
TierCounts tier_counts(int n, const TierScheme& tiers);

/// Initial energy for a tier given base energy e0.
double initial_energy_for(Tier tier, double e0, const TierScheme& tiers);

struct Node {
    int id = 0;
    Position pos;
    Tier tier = Tier::Normal;
    double initial_energy = 0.0;   // joules
    double residual_energy = 0.0;  // joules
    bool alive = true;
    // Election epoch bookkeeping (membership in G'/G''/G''').
    bool was_ch_this_epoch = false;
    int rounds_since_epoch_start = 0;
    // Reactive reporting memory: the SV variable (last transmitted reading).
    std::optional<double> sensed_value_memory;

    bool operator==(const Node&) const = default;
};

/// Sum of initial energies; equals n*E_o*(1 + m*alpha + b*mu) when the tier
/// fractions divide n exactly. Throws std::invalid_argument on an empty list.
double total_initial_energy(std::span<const Node> nodes);

/// Deploys n nodes uniformly at random over the [0, side] x [0, side] square.
/// Tier assignment is by deterministic count (ids [0, adv) advanced, then
/// intermediate, then normal); positions consume two draws per node in id
/// order, so deployment is bit-reproducible per seed.
std::vector<Node> deploy_nodes(int n, double field_side, double e0,
                               const TierScheme& tiers, Rng& rng);

}  // namespace wsn
