#include "wsn/radio.hpp"

#include <stdexcept>

namespace wsn {

void validate(const RadioParams& params) {
    if (!(params.e_elec > 0.0)) throw std::invalid_argument("radio: e_elec must be > 0");
    if (!(params.e_da > 0.0)) throw std::invalid_argument("radio: e_da must be > 0");
    if (!(params.eps_fs > 0.0)) throw std::invalid_argument("radio: eps_fs must be > 0");
    if (!(params.eps_mp > 0.0)) throw std::invalid_argument("radio: eps_mp must be > 0");
    if (params.packet_bits <= 0) throw std::invalid_argument("radio: packet_bits must be > 0");
    if (!(params.d0 > 0.0)) throw std::invalid_argument("radio: d0 must be > 0");
}

double tx_cost(const RadioParams& params, long bits, double dist) {
    const double nbits = static_cast<double>(bits);
    if (dist < params.d0)
        return params.e_elec * nbits + params.eps_fs * nbits * dist * dist;
    return params.e_elec * nbits + params.eps_mp * nbits * dist * dist * dist * dist;
}

double rx_cost(const RadioParams& params, long bits) {
    return params.e_elec * static_cast<double>(bits);
}

double aggregation_cost(const RadioParams& params, long bits, int signal_count) {
    return params.e_da * static_cast<double>(bits) * static_cast<double>(signal_count);
}

double charge(Node& node, double cost) {
    if (!node.alive) throw std::logic_error("charge: node is dead");
    if (cost < 0.0) throw std::invalid_argument("charge: negative cost");
    if (cost >= node.residual_energy) {
        const double drawn = node.residual_energy;
        node.residual_energy = 0.0;
        node.alive = false;
        return drawn;
    }
    node.residual_energy -= cost;
    return cost;
}

}  // namespace wsn
