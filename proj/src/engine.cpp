#include "wsn/engine.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace wsn {

RunSummary run_scenario(const ScenarioConfig& config, const EngineOptions& options) {
    validate(config);

    // The protocol's tier flags shape the scenario it actually runs: LEACH and
    // TEEN see a single-tier network, SEP a two-tier one. Positions come from
    // the shared placement stream either way, so every protocol sees the same
    // topology per seed.
    ScenarioConfig effective = config;
    effective.tiers = effective_tiers(config.protocol, config.tiers);

    Rng placement_rng(stream_seed(config.rng_seed, stream::placement));
    std::vector<Node> nodes = deploy_network(effective, placement_rng);
    Rng election_rng(stream_seed(config.rng_seed, stream::election));

    const TierProbabilities probs = derive_probabilities(effective.tiers);
    const EpochState epoch = EpochState::from(probs);

    std::optional<Field> field;
    if (is_reactive(config.protocol))
        field.emplace(config.field, stream_seed(config.rng_seed, stream::field));

    EnergyLedger ledger(static_cast<std::size_t>(config.n));

    RoundSetup setup;
    setup.protocol = config.protocol;
    setup.radio = config.radio;
    setup.bs = config.bs;
    setup.broadcast_distance = config.field_side * std::numbers::sqrt2;
    setup.ctrl_bits = config.ctrl_bits;
    setup.frames_per_round = config.frames_per_round;
    setup.e_sense = config.e_sense;
    setup.reactive = config.reactive ? &*config.reactive : nullptr;
    setup.field = field ? &*field : nullptr;
    setup.meter.infinite_energy = config.infinite_energy;
    setup.meter.ledger = options.with_ledger ? &ledger : nullptr;

    RunSummary summary;
    summary.config = config;
    summary.initial_energy = total_initial_energy(nodes);

    long packets_cum = 0;
    int dead_seen = 0;
    int last_death_round = 0;

    for (int round = 1; round <= config.max_rounds; ++round) {
        RoundRecord record = run_round(setup, nodes, probs, epoch, round, election_rng);
        packets_cum += record.packets_round;
        record.packets_cum = packets_cum;

        if (record.dead > dead_seen) {
            if (!summary.stability_period) summary.stability_period = round;
            last_death_round = round;
            dead_seen = record.dead;
        }
        if (!summary.half_dead_round && 2 * record.dead >= config.n)
            summary.half_dead_round = round;

        if (options.record_rounds) summary.per_round.push_back(record);
        if (record.alive == 0) break;
    }

    const bool all_dead = dead_seen == config.n;
    summary.network_lifetime = all_dead ? last_death_round : config.max_rounds;
    if (all_dead && summary.stability_period)
        summary.instability_period = last_death_round - *summary.stability_period;
    summary.total_packets = packets_cum;
    for (const Node& node : nodes) summary.final_residual_energy += node.residual_energy;
    if (options.with_ledger) summary.charged_energy = ledger.total();
    return summary;
}

std::vector<RunSummary> run_ensemble(const ScenarioConfig& config,
                                     std::span<const std::uint64_t> seeds,
                                     const EngineOptions& options, int max_workers) {
    if (seeds.empty()) throw std::invalid_argument("run_ensemble: empty seed list");
    validate(config);

    std::vector<RunSummary> results(seeds.size());
    unsigned workers = max_workers > 0 ? static_cast<unsigned>(max_workers)
                                       : std::thread::hardware_concurrency();
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(seeds.size())));

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= seeds.size()) return;
            try {
                ScenarioConfig run_config = config;
                run_config.rng_seed = seeds[i];
                results[i] = run_scenario(run_config, options);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                return;
            }
        }
    };

    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);
    return results;
}

namespace {

MetricStats stats_of(const std::vector<double>& values) {
    MetricStats stats;
    stats.count = static_cast<int>(values.size());
    if (values.empty()) return stats;
    double sum = 0.0;
    for (double v : values) sum += v;
    stats.mean = sum / static_cast<double>(values.size());
    if (values.size() > 1) {
        double ss = 0.0;
        for (double v : values) ss += (v - stats.mean) * (v - stats.mean);
        stats.stddev = std::sqrt(ss / static_cast<double>(values.size() - 1));
    }
    return stats;
}

std::string format_stat(const MetricStats& stats) {
    if (stats.count == 0) return "n/a";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.1f +/- %.1f", stats.mean, stats.stddev);
    return buf;
}

void append_ordering(std::ostringstream& out, const char* metric,
                     const std::vector<ProtocolSummary>& rows,
                     MetricStats ProtocolSummary::*member) {
    std::vector<const ProtocolSummary*> order;
    for (const ProtocolSummary& row : rows)
        if ((row.*member).count > 0) order.push_back(&row);
    std::sort(order.begin(), order.end(), [&](const auto* a, const auto* b) {
        return (a->*member).mean > (b->*member).mean;
    });
    if (order.empty()) return;
    out << metric << ": ";
    for (std::size_t i = 0; i < order.size(); ++i) {
        out << to_string(order[i]->protocol);
        if (i + 1 < order.size()) {
            const MetricStats& hi = order[i]->*member;
            const MetricStats& lo = order[i + 1]->*member;
            const bool separated = hi.mean - hi.stddev > lo.mean + lo.stddev;
            out << (separated ? " > " : " >~ ");
        }
    }
    out << "   (>~ marks overlapping mean+/-stddev intervals)\n";
}

}  // namespace

std::string ComparisonTable::render() const {
    std::ostringstream out;
    out << "protocol   runs  all-dead  stability            lifetime             packets\n";
    for (const ProtocolSummary& row : rows) {
        char line[160];
        std::snprintf(line, sizeof(line), "%-9s %5d %9d  %-20s %-20s %-20s\n",
                      to_string(row.protocol), row.runs, row.runs_all_dead,
                      format_stat(row.stability).c_str(), format_stat(row.lifetime).c_str(),
                      format_stat(row.packets).c_str());
        out << line;
    }
    append_ordering(out, "stability ordering", rows, &ProtocolSummary::stability);
    append_ordering(out, "lifetime  ordering", rows, &ProtocolSummary::lifetime);
    append_ordering(out, "packets   ordering", rows, &ProtocolSummary::packets);
    return out.str();
}

ComparisonTable summarize_comparison(
    const std::map<ProtocolKind, std::vector<RunSummary>>& summaries) {
    if (summaries.empty())
        throw std::invalid_argument("summarize_comparison: no protocols given");

    const ScenarioConfig* reference = nullptr;
    for (const auto& [kind, runs] : summaries) {
        if (runs.empty())
            throw std::invalid_argument("summarize_comparison: empty run list");
        for (const RunSummary& run : runs) {
            if (run.config.protocol != kind)
                throw std::invalid_argument(
                    "summarize_comparison: run filed under the wrong protocol");
            if (reference == nullptr)
                reference = &run.config;
            else if (!same_base_config(*reference, run.config))
                throw std::invalid_argument(
                    "summarize_comparison: mixed base configs");
        }
    }

    ComparisonTable table;
    for (const auto& [kind, runs] : summaries) {
        ProtocolSummary row;
        row.protocol = kind;
        row.runs = static_cast<int>(runs.size());
        std::vector<double> stability, lifetime, packets;
        for (const RunSummary& run : runs) {
            if (run.stability_period) stability.push_back(*run.stability_period);
            if (run.instability_period) ++row.runs_all_dead;
            lifetime.push_back(run.network_lifetime);
            packets.push_back(static_cast<double>(run.total_packets));
        }
        row.stability = stats_of(stability);
        row.lifetime = stats_of(lifetime);
        row.packets = stats_of(packets);
        table.rows.push_back(row);
    }
    return table;
}

}  // namespace wsn
