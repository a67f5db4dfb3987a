#include "wsn/field.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace wsn {

namespace {

constexpr std::uint64_t kEventSalt = 0x45564e54;  // "EVNT"
constexpr std::uint64_t kMagnitudeSalt = 0x4d41474e;
constexpr std::uint64_t kDriftSalt = 0x44524654;

std::uint64_t cell_hash(std::uint64_t seed, std::uint64_t salt, int node_id, int round) {
    std::uint64_t h = hash_combine(seed, salt);
    h = hash_combine(h, static_cast<std::uint64_t>(node_id));
    return hash_combine(h, static_cast<std::uint64_t>(round));
}

/// One standard-normal value from a hashed counter (Box-Muller, first leg).
double gaussian_from_hash(std::uint64_t h) {
    const double u1 = unit_from_bits(splitmix64(h));
    const double u2 = unit_from_bits(splitmix64(h ^ 0x5bf0363546f92e1bULL));
    // Guard u1=0; smallest argument becomes 2^-53.
    const double r = std::sqrt(-2.0 * std::log(u1 + 0x1.0p-53));
    return r * std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace

void validate(const FieldModel& model) {
    if (!(model.event_probability >= 0.0 && model.event_probability <= 1.0))
        throw std::invalid_argument("field: event_probability must be in [0, 1]");
    if (model.event_magnitude_low > model.event_magnitude_high)
        throw std::invalid_argument("field: event magnitude range must satisfy low <= high");
    if (!(model.drift_sigma >= 0.0))
        throw std::invalid_argument("field: drift_sigma must be >= 0");
    if (model.event_duration < 1)
        throw std::invalid_argument("field: event_duration must be >= 1");
}

Field::Field(FieldModel model, std::uint64_t seed) : model_(model), seed_(seed) {
    validate(model_);
}

bool Field::event_started_at(int node_id, int round) const {
    if (model_.event_probability <= 0.0) return false;
    if (model_.event_probability >= 1.0) return true;
    const double u = unit_from_bits(cell_hash(seed_, kEventSalt, node_id, round));
    return u < model_.event_probability;
}

double Field::drift(int node_id, int round) const {
    if (model_.drift_sigma == 0.0 || round <= 0) return 0.0;
    if (walk_.size() <= static_cast<std::size_t>(node_id))
        walk_.resize(static_cast<std::size_t>(node_id) + 1);
    auto& walk = walk_[static_cast<std::size_t>(node_id)];
    if (walk.empty()) walk.push_back(0.0);
    while (walk.size() <= static_cast<std::size_t>(round)) {
        const int r = static_cast<int>(walk.size());
        const double step =
            model_.drift_sigma * gaussian_from_hash(cell_hash(seed_, kDriftSalt, node_id, r));
        walk.push_back(walk.back() + step);
    }
    return walk[static_cast<std::size_t>(round)];
}

double Field::sense(int node_id, int round) const {
    double value = model_.baseline + drift(node_id, round);

    // A node is inside an event window when any of the last event_duration
    // rounds started one; the most recent start supplies the magnitude.
    const int earliest = std::max(0, round - model_.event_duration + 1);
    for (int s = round; s >= earliest; --s) {
        if (event_started_at(node_id, s)) {
            const double u = unit_from_bits(cell_hash(seed_, kMagnitudeSalt, node_id, s));
            value += model_.event_magnitude_low +
                     u * (model_.event_magnitude_high - model_.event_magnitude_low);
            break;
        }
    }
    return value;
}

}  // namespace wsn
