#include "doctest.h"

#include <stdexcept>

#include <cmath>
#include <vector>

#include "wsn/radio.hpp"
#include "wsn/rng.hpp"

using namespace wsn;

TEST_CASE("crossover distance from the default amplifier constants") {
    const RadioParams radio;
    CHECK(radio.d0 == doctest::Approx(std::sqrt(10e-12 / 0.0013e-12)).epsilon(1e-12));
    CHECK(radio.d0 == doctest::Approx(87.7058).epsilon(1e-4));
}

TEST_CASE("tx_cost free-space branch") {
    const RadioParams radio;
    // 50e-9*4000 + 10e-12*4000*2500
    CHECK(tx_cost(radio, 4000, 50.0) == doctest::Approx(3.0e-4).epsilon(1e-12));
    CHECK(tx_cost(radio, 0, 25.0) == 0.0);
}

TEST_CASE("tx_cost multipath branch") {
    const RadioParams radio;
    // 50e-9*4000 + 0.0013e-12*4000*1e8 = 2.0e-4 + 5.2e-4
    CHECK(tx_cost(radio, 4000, 100.0) == doctest::Approx(7.2e-4).epsilon(1e-12));
}

TEST_CASE("tx_cost is continuous at d0") {
    const RadioParams radio;
    const double fs = radio.e_elec * 4000 + radio.eps_fs * 4000 * radio.d0 * radio.d0;
    const double mp = radio.e_elec * 4000 +
                      radio.eps_mp * 4000 * radio.d0 * radio.d0 * radio.d0 * radio.d0;
    CHECK(fs == doctest::Approx(mp).epsilon(1e-9));
    CHECK(tx_cost(radio, 4000, radio.d0) == doctest::Approx(fs).epsilon(1e-9));
}

TEST_CASE("rx_cost") {
    const RadioParams radio;
    CHECK(rx_cost(radio, 4000) == doctest::Approx(2.0e-4).epsilon(1e-12));
    CHECK(rx_cost(radio, 0) == 0.0);
    CHECK(rx_cost(radio, 1) == doctest::Approx(5.0e-8).epsilon(1e-12));
}

TEST_CASE("aggregation_cost") {
    const RadioParams radio;
    CHECK(aggregation_cost(radio, 4000, 5) == doctest::Approx(1.0e-4).epsilon(1e-12));
    CHECK(aggregation_cost(radio, 4000, 0) == 0.0);
    CHECK(aggregation_cost(radio, 4000, 1) == doctest::Approx(2.0e-5).epsilon(1e-12));
}

TEST_CASE("tx and rx costs are monotone in bits and distance") {
    const RadioParams radio;
    Rng rng(99);
    for (int i = 0; i < 200; ++i) {
        const long bits_lo = static_cast<long>(rng.uniform(0.0, 4000.0));
        const long bits_hi = bits_lo + static_cast<long>(rng.uniform(0.0, 4000.0));
        const double d_lo = rng.uniform(0.0, 150.0);
        const double d_hi = d_lo + rng.uniform(0.0, 150.0);
        CHECK(tx_cost(radio, bits_lo, d_lo) <= tx_cost(radio, bits_hi, d_lo));
        CHECK(tx_cost(radio, bits_lo, d_lo) <= tx_cost(radio, bits_lo, d_hi));
        CHECK(rx_cost(radio, bits_lo) <= rx_cost(radio, bits_hi));
    }
}

namespace {

Node make_node(double energy) {
    Node node;
    node.initial_energy = energy;
    node.residual_energy = energy;
    return node;
}

}  // namespace

TEST_CASE("charge subtracts and survives") {
    Node node = make_node(1e-3);
    const double drawn = charge(node, 3e-4);
    CHECK(drawn == 3e-4);
    CHECK(node.residual_energy == doctest::Approx(7e-4).epsilon(1e-12));
    CHECK(node.alive);
}

TEST_CASE("charge clamps to zero and kills") {
    Node node = make_node(1e-4);
    const double drawn = charge(node, 3e-4);
    CHECK(drawn == 1e-4);  // only what the battery held
    CHECK(node.residual_energy == 0.0);
    CHECK_FALSE(node.alive);
}

TEST_CASE("zero-cost charge is the identity") {
    Node node = make_node(0.5);
    CHECK(charge(node, 0.0) == 0.0);
    CHECK(node.residual_energy == 0.5);
    CHECK(node.alive);
}

TEST_CASE("charging a dead node is a contract violation") {
    Node node = make_node(1e-4);
    charge(node, 1e-3);
    CHECK_FALSE(node.alive);
    CHECK_THROWS_AS(charge(node, 1e-9), std::logic_error);
}

TEST_CASE("random charge sequences conserve energy") {
    Rng rng(1234);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Node> nodes;
        for (int i = 0; i < 5; ++i) nodes.push_back(make_node(rng.uniform(0.01, 0.5)));
        double initial = 0.0;
        for (const Node& node : nodes) initial += node.initial_energy;

        double ledger = 0.0;
        for (int step = 0; step < 200; ++step) {
            Node& node = nodes[static_cast<std::size_t>(rng.uniform(0.0, 5.0))];
            if (!node.alive) continue;
            ledger += charge(node, rng.uniform(0.0, 0.01));
        }
        double residual = 0.0;
        for (const Node& node : nodes) residual += node.residual_energy;
        CHECK(initial - residual == doctest::Approx(ledger).epsilon(1e-12));
    }
}
