#include "doctest.h"

#include <stdexcept>

#include <cmath>
#include <map>
#include <vector>

#include "wsn/engine.hpp"

using namespace wsn;

TEST_CASE("run_scenario is bit-deterministic") {
    ScenarioConfig config;
    config.n = 40;
    config.max_rounds = 300;
    config.protocol = ProtocolKind::SEP;
    config.rng_seed = 99;
    const RunSummary a = run_scenario(config);
    const RunSummary b = run_scenario(config);
    CHECK(a == b);
}

TEST_CASE("max_rounds bounds the history") {
    ScenarioConfig config;
    config.n = 10;
    config.max_rounds = 1;
    const RunSummary summary = run_scenario(config);
    CHECK(summary.per_round.size() == 1);
    CHECK(summary.per_round[0].round == 1);

    config.max_rounds = 0;
    CHECK_THROWS_AS(run_scenario(config), std::invalid_argument);
}

TEST_CASE("round records are monotone and account every node") {
    ScenarioConfig config;
    config.n = 50;
    config.max_rounds = 5000;
    config.protocol = ProtocolKind::LEACH;
    config.rng_seed = 3;
    const RunSummary summary = run_scenario(config);

    int prev_dead = 0;
    double prev_energy = summary.initial_energy;
    for (const RoundRecord& r : summary.per_round) {
        CHECK(r.alive + r.dead == 50);
        CHECK(r.dead >= prev_dead);
        CHECK(r.total_residual_energy <= prev_energy + 1e-12);
        prev_dead = r.dead;
        prev_energy = r.total_residual_energy;
    }
    // This run goes to network death.
    CHECK(summary.per_round.back().alive == 0);
    REQUIRE(summary.stability_period.has_value());
    REQUIRE(summary.instability_period.has_value());
    CHECK(*summary.instability_period ==
          summary.network_lifetime - *summary.stability_period);
    REQUIRE(summary.half_dead_round.has_value());
    CHECK(*summary.half_dead_round >= *summary.stability_period);
}

TEST_CASE("unreached milestones are absent, not zero") {
    ScenarioConfig config;
    config.n = 20;
    config.max_rounds = 5;  // nobody dies this early
    const RunSummary summary = run_scenario(config);
    CHECK_FALSE(summary.stability_period.has_value());
    CHECK_FALSE(summary.instability_period.has_value());
    CHECK_FALSE(summary.half_dead_round.has_value());
    CHECK(summary.network_lifetime == 5);  // survivors: lifetime is the horizon
}

TEST_CASE("infinite energy mode never kills") {
    ScenarioConfig config;
    config.n = 25;
    config.max_rounds = 200;
    config.infinite_energy = true;
    const RunSummary summary = run_scenario(config);
    CHECK(summary.per_round.size() == 200);
    for (const RoundRecord& r : summary.per_round) CHECK(r.alive == 25);
    CHECK(summary.final_residual_energy == summary.initial_energy);
}

TEST_CASE("single-node scenario dies at the hand-computed round") {
    ScenarioConfig config;
    config.n = 1;
    config.protocol = ProtocolKind::LEACH;
    config.tiers = TierScheme::with_default_mu(0.0, 0.0, 0.0, 1.0);  // CH every round
    config.ctrl_bits = 0;
    config.max_rounds = 1000000;
    config.rng_seed = 17;

    // Recover the deployed position from the placement stream.
    Rng placement(stream_seed(config.rng_seed, stream::placement));
    const auto nodes = deploy_network(config, placement);
    const double d = distance(nodes[0].pos, config.bs);

    // Every round the node is its own CH: aggregate one signal, send to BS.
    const RadioParams& radio = config.radio;
    const double k = static_cast<double>(radio.packet_bits);
    const double amp = d < radio.d0 ? radio.eps_fs * k * d * d
                                    : radio.eps_mp * k * d * d * d * d;
    const double per_round = radio.e_da * k + radio.e_elec * k + amp;
    const long long floor_rounds = static_cast<long long>(std::floor(0.5 / per_round));
    const long long death_round =
        static_cast<double>(floor_rounds) * per_round >= 0.5 ? floor_rounds
                                                             : floor_rounds + 1;

    const RunSummary summary = run_scenario(config);
    REQUIRE(summary.stability_period.has_value());
    CHECK(*summary.stability_period == death_round);
    CHECK(summary.network_lifetime == death_round);
    // The node may die mid-round before its BS send; every earlier round
    // delivered one packet.
    CHECK(summary.total_packets >= death_round - 1);
    CHECK(summary.total_packets <= death_round);
}

TEST_CASE("ensembles preserve seed order") {
    ScenarioConfig config;
    config.n = 15;
    config.max_rounds = 50;
    const std::vector<std::uint64_t> forward{1, 2};
    const std::vector<std::uint64_t> reverse{2, 1};
    const auto a = run_ensemble(config, forward);
    const auto b = run_ensemble(config, reverse);
    REQUIRE(a.size() == 2);
    REQUIRE(b.size() == 2);
    CHECK(a[0] == b[1]);
    CHECK(a[1] == b[0]);
    CHECK(a[0].config.rng_seed == 1);

    ScenarioConfig solo = config;
    solo.rng_seed = 42;
    const std::vector<std::uint64_t> just42{42};
    CHECK(run_ensemble(config, just42)[0] == run_scenario(solo));
    CHECK_THROWS_AS(run_ensemble(config, {}), std::invalid_argument);
}

TEST_CASE("summarize_comparison aggregates and validates") {
    ScenarioConfig config;
    config.n = 20;
    config.max_rounds = 60;

    SUBCASE("single protocol, single run") {
        std::map<ProtocolKind, std::vector<RunSummary>> runs;
        runs[ProtocolKind::LEACH] = {run_scenario(config)};
        const ComparisonTable table = summarize_comparison(runs);
        REQUIRE(table.rows.size() == 1);
        CHECK(table.rows[0].runs == 1);
        CHECK(table.rows[0].lifetime.mean == 60.0);
        CHECK(table.rows[0].lifetime.stddev == 0.0);
        CHECK(table.render().find("LEACH") != std::string::npos);
    }

    SUBCASE("empty map is rejected") {
        CHECK_THROWS_AS(summarize_comparison({}), std::invalid_argument);
    }

    SUBCASE("mixed base configs are rejected") {
        std::map<ProtocolKind, std::vector<RunSummary>> runs;
        runs[ProtocolKind::LEACH] = {run_scenario(config)};
        ScenarioConfig other = config;
        other.n = 21;
        other.protocol = ProtocolKind::SEP;
        runs[ProtocolKind::SEP] = {run_scenario(other)};
        CHECK_THROWS_AS(summarize_comparison(runs), std::invalid_argument);
    }

    SUBCASE("protocol and seed may differ") {
        std::map<ProtocolKind, std::vector<RunSummary>> runs;
        runs[ProtocolKind::LEACH] = {run_scenario(config)};
        ScenarioConfig sep = config;
        sep.protocol = ProtocolKind::SEP;
        sep.rng_seed = 9;
        runs[ProtocolKind::SEP] = {run_scenario(sep)};
        CHECK_NOTHROW(summarize_comparison(runs));
    }
}

TEST_CASE("reactive silence against a sub-threshold field") {
    ScenarioConfig config;
    config.n = 30;
    config.max_rounds = 100;
    config.field.event_probability = 0.0;
    config.field.drift_sigma = 0.0;

    ScenarioConfig teen = config;
    teen.protocol = ProtocolKind::TEEN;
    teen.reactive = ReactiveConfig{};
    const RunSummary quiet = run_scenario(teen);
    CHECK(quiet.total_packets == 0);

    const RunSummary leach = run_scenario(config);
    for (const RoundRecord& r : leach.per_round)
        if (r.alive > 0) CHECK(r.packets_round >= 1);
}

TEST_CASE("idle sensing drain shortens lifetimes when enabled") {
    ScenarioConfig config;
    config.n = 20;
    config.max_rounds = 3000;
    config.protocol = ProtocolKind::TEEN;
    config.reactive = ReactiveConfig{};
    config.field.event_probability = 0.0;
    config.field.drift_sigma = 0.0;  // silent network: only overheads drain
    config.rng_seed = 2;

    const RunSummary baseline = run_scenario(config);
    config.e_sense = 2e-4;  // J per node per round
    const RunSummary draining = run_scenario(config);

    CHECK(draining.total_packets == 0);  // still silent
    CHECK(draining.final_residual_energy < baseline.final_residual_energy);
    REQUIRE(draining.stability_period.has_value());
    if (baseline.stability_period)
        CHECK(*draining.stability_period < *baseline.stability_period);
}
