#pragma once

#include <cstdint>
#include <vector>

#include "wsn/rng.hpp"

namespace wsn {

/// Synthetic sensed-attribute model: ambient baseline, a per-node Gaussian
/// random-walk drift, and transient events that add a magnitude drawn once
/// per event.
struct FieldModel {
    double baseline = 25.0;
    double event_probability = 0.01;      // per node per round
    double event_magnitude_low = 40.0;
    double event_magnitude_high = 80.0;
    int event_duration = 5;               // rounds
    double drift_sigma = 0.05;            // random-walk step stddev

    bool operator==(const FieldModel&) const = default;
};

/// Throws std::invalid_argument naming the violated invariant.
void validate(const FieldModel& model);

/// Deterministic reading generator: sense(node, round) is a pure function of
/// (model, seed, node, round). Event starts and magnitudes are counter-hashed
/// per (node, round); the random walk is memoized per node so out-of-order
/// queries return the same values as sequential ones.
///
/// Not safe for concurrent use of one instance; each simulation run owns its
/// own Field.
class Field {
public:
    Field(FieldModel model, std::uint64_t seed);

    double sense(int node_id, int round) const;

private:
    double drift(int node_id, int round) const;
    bool event_started_at(int node_id, int round) const;

    FieldModel model_;
    std::uint64_t seed_;
    // walk_[node][r] = cumulative drift after r rounds (index 0 is 0).
    mutable std::vector<std::vector<double>> walk_;
};

}  // namespace wsn
