#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wsn/protocols.hpp"
#include "wsn/scenario.hpp"

namespace wsn {

/// Complete result of one run. Round-dependent milestones that never happened
/// are absent, not zero.
struct RunSummary {
    ScenarioConfig config;
    std::optional<int> stability_period;    // first-death round
    std::optional<int> instability_period;  // last death - first death (all dead)
    int network_lifetime = 0;               // last-death round, or max_rounds
    std::optional<int> half_dead_round;     // first round with dead >= n/2
    long total_packets = 0;
    double initial_energy = 0.0;            // Σ initial over the deployment
    double final_residual_energy = 0.0;     // Σ residual at end of run
    std::optional<double> charged_energy;   // ledger total (when enabled)
    std::vector<RoundRecord> per_round;

    bool operator==(const RunSummary&) const = default;
};

struct EngineOptions {
    bool with_ledger = false;    // audit energy conservation
    bool record_rounds = true;   // keep the per-round history
};

/// Runs one scenario to completion: deploy, derive the protocol's election
/// probabilities, iterate rounds until every node is dead or max_rounds is
/// reached. Pure in (config, options): identical inputs give bit-identical
/// summaries. The master seed splits into placement/election/field streams so
/// all protocols see the same topology per seed.
RunSummary run_scenario(const ScenarioConfig& config, const EngineOptions& options = {});

/// One run per seed, results in seed order. Runs share nothing, so they
/// execute on a small worker pool; max_workers <= 0 means hardware
/// concurrency.
std::vector<RunSummary> run_ensemble(const ScenarioConfig& config,
                                     std::span<const std::uint64_t> seeds,
                                     const EngineOptions& options = {},
                                     int max_workers = 0);

struct MetricStats {
    double mean = 0.0;
    double stddev = 0.0;  // sample stddev (0 for a single value)
    int count = 0;        // runs where the metric was present
};

struct ProtocolSummary {
    ProtocolKind protocol = ProtocolKind::LEACH;
    int runs = 0;
    int runs_all_dead = 0;
    MetricStats stability;
    MetricStats lifetime;
    MetricStats packets;
};

struct ComparisonTable {
    std::vector<ProtocolSummary> rows;

    /// Plain-text table plus pairwise ordering indicators per metric
    /// (mean-descending order; adjacent pairs flagged "separated" when the
    /// mean +/- stddev intervals do not overlap).
    std::string render() const;
};

/// Aggregates ensembles that ran the same base config (differing only in
/// protocol, the protocol-implied reactive block, and seeds). Throws
/// std::invalid_argument on an empty map or mixed base configs.
ComparisonTable summarize_comparison(
    const std::map<ProtocolKind, std::vector<RunSummary>>& summaries);

}  // namespace wsn
