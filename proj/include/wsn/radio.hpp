#pragma once

#include <cmath>

#include "wsn/netmodel.hpp"

namespace wsn {

/// Crossover distance between the free-space (d^2) and multipath (d^4)
/// amplifier regimes.
inline double crossover_distance(double eps_fs, double eps_mp) {
    return std::sqrt(eps_fs / eps_mp);
}

/// First-order radio model constants. Defaults are the standard parameter set
/// for this protocol family (d0 ~ 87.7 m).
struct RadioParams {
    double e_elec = 50e-9;       // J/bit, electronics
    double e_da = 5e-9;          // J/bit/signal, aggregation
    double eps_fs = 10e-12;      // J/bit/m^2, free-space amplifier
    double eps_mp = 0.0013e-12;  // J/bit/m^4, multipath amplifier
    long packet_bits = 4000;     // K, data packet size
    double d0 = crossover_distance(10e-12, 0.0013e-12);  // meters

    bool operator==(const RadioParams&) const = default;
};

/// Throws std::invalid_argument naming the violated invariant.
void validate(const RadioParams& params);

/// Energy to transmit `bits` over `dist` meters: electronics plus the
/// free-space amplifier below d0, the multipath amplifier at or above it.
double tx_cost(const RadioParams& params, long bits, double dist);

/// Energy to receive `bits`.
double rx_cost(const RadioParams& params, long bits);

/// Energy to aggregate `signal_count` signals of `bits` each.
double aggregation_cost(const RadioParams& params, long bits, int signal_count);

/// Deducts `cost` from the node's battery. Returns the energy actually drawn
/// (min(cost, residual)); when the battery empties the residual clamps to 0
/// and the node dies, but the action the charge paid for still happened.
/// Charging a dead node is a contract violation (std::logic_error).
double charge(Node& node, double cost);

}  // namespace wsn
