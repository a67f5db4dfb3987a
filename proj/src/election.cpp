#include "wsn/election.hpp"

#include <cmath>
#include <stdexcept>

namespace wsn {

TierProbabilities derive_probabilities(const TierScheme& tiers) {
    validate(tiers);
    const double denom = 1.0 + tiers.m * tiers.alpha + tiers.b * tiers.mu;
    return TierProbabilities{
        tiers.p_opt / denom,
        tiers.p_opt * (1.0 + tiers.mu) / denom,
        tiers.p_opt * (1.0 + tiers.alpha) / denom,
    };
}

int epoch_length(double p) {
    if (!(p > 0.0 && p <= 1.0))
        throw std::invalid_argument("epoch_length: p must be in (0, 1]");
    const long long len = std::llround(1.0 / p);
    return static_cast<int>(len < 1 ? 1 : len);
}

EpochState EpochState::from(const TierProbabilities& probs) {
    EpochState state;
    state.epoch_len[static_cast<int>(Tier::Normal)] = epoch_length(probs.p_nrm);
    state.epoch_len[static_cast<int>(Tier::Intermediate)] = epoch_length(probs.p_int);
    state.epoch_len[static_cast<int>(Tier::Advanced)] = epoch_length(probs.p_adv);
    return state;
}

double election_threshold(double p, int round_in_epoch, bool eligible) {
    if (!eligible) return 0.0;
    const int pos = round_in_epoch % epoch_length(p);
    return p / (1.0 - p * static_cast<double>(pos));
}

std::vector<int> elect_cluster_heads(std::vector<Node>& nodes,
                                     const TierProbabilities& probs,
                                     const EpochState& epoch, Rng& rng) {
    std::vector<int> elected;
    for (Node& node : nodes) {
        if (!node.alive || node.was_ch_this_epoch) continue;
        const double p = probs.for_tier(node.tier);
        const double threshold = election_threshold(p, node.rounds_since_epoch_start, true);
        if (rng.unit() < threshold) {
            node.was_ch_this_epoch = true;
            elected.push_back(node.id);
        }
    }
    // Advance every alive node's epoch clock; eligibility resets per tier when
    // its epoch wraps.
    for (Node& node : nodes) {
        if (!node.alive) continue;
        if (++node.rounds_since_epoch_start >= epoch.length_for(node.tier)) {
            node.rounds_since_epoch_start = 0;
            node.was_ch_this_epoch = false;
        }
    }
    return elected;
}

}  // namespace wsn
