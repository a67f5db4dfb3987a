#pragma once

#include <array>
#include <vector>

#include "wsn/netmodel.hpp"
#include "wsn/rng.hpp"

namespace wsn {

/// Per-tier cluster-head election probabilities. For a valid scheme the
/// weighted sum (1-m-b)*p_nrm + b*p_int + m*p_adv equals p_opt, so the
/// expected CH count per round stays n*p_opt regardless of heterogeneity.
struct TierProbabilities {
    double p_nrm = 0.1;
    double p_int = 0.1;
    double p_adv = 0.1;

    double for_tier(Tier tier) const {
        switch (tier) {
            case Tier::Normal: return p_nrm;
            case Tier::Intermediate: return p_int;
            case Tier::Advanced: return p_adv;
        }
        return p_nrm;
    }

    bool operator==(const TierProbabilities&) const = default;
};

/// Tier-weighted probabilities:
///   p_nrm = p_opt / (1 + m*alpha + b*mu)
///   p_int = p_opt * (1 + mu)    / (1 + m*alpha + b*mu)
///   p_adv = p_opt * (1 + alpha) / (1 + m*alpha + b*mu)
TierProbabilities derive_probabilities(const TierScheme& tiers);

/// Rounds 1/p to the nearest integer epoch length (>= 1). Non-integral 1/p is
/// rounded so the threshold denominator stays positive through the epoch.
int epoch_length(double p);

/// Per-tier epoch lengths; the per-node position counters and eligibility
/// flags live on the nodes themselves (was_ch_this_epoch,
/// rounds_since_epoch_start).
struct EpochState {
    std::array<int, kTierCount> epoch_len{1, 1, 1};

    static EpochState from(const TierProbabilities& probs);

    int length_for(Tier tier) const { return epoch_len[static_cast<int>(tier)]; }
};

/// Rotating election threshold: p / (1 - p * (r mod round(1/p))) for eligible
/// nodes, 0 otherwise. Reaches 1 at the last epoch position when 1/p is
/// integral, which forces every node to serve exactly once per epoch.
double election_threshold(double p, int round_in_epoch, bool eligible);

/// One election step. Every alive eligible node draws u in [0,1) (in id
/// order) and becomes CH iff u < its threshold; elected nodes become
/// ineligible until their tier epoch ends. Afterwards all alive nodes advance
/// their epoch position, resetting position and eligibility at epoch end.
/// Returns the elected ids in ascending order; an empty set is legal.
std::vector<int> elect_cluster_heads(std::vector<Node>& nodes,
                                     const TierProbabilities& probs,
                                     const EpochState& epoch, Rng& rng);

}  // namespace wsn
