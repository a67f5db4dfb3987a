// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Thresholds are fixed here, not tuned at run time.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "wsn/csv_io.hpp"
#include "wsn/engine.hpp"
#include "wsn/presets.hpp"

using namespace wsn;

namespace {

int g_failures = 0;

void report(int id, const std::string& name, bool ok, const std::string& detail) {
    std::printf("[%s] criterion %2d: %s (%s)\n", ok ? "PASS" : "FAIL", id, name.c_str(),
                detail.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

double elapsed_s(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.4g", v);
    return buf;
}

// ---------------------------------------------------------------------------
// 1. Weighted-probability identity over 1000 random tier schemes.
// ---------------------------------------------------------------------------
void criterion_1() {
    const auto start = std::chrono::steady_clock::now();
    Rng rng(20260808);
    double worst = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const double m = rng.uniform(0.0, 1.0);
        const double b = rng.uniform(0.0, 1.0 - m);
        const double alpha = rng.uniform(0.0, 5.0);
        const TierScheme tiers{m, b, alpha, rng.uniform(0.0, alpha),
                               rng.uniform(0.001, 1.0)};
        const TierProbabilities probs = derive_probabilities(tiers);
        const double weighted =
            (1.0 - m - b) * probs.p_nrm + b * probs.p_int + m * probs.p_adv;
        worst = std::max(worst, std::fabs(weighted - tiers.p_opt));
    }
    const double secs = elapsed_s(start);
    report(1, "weighted-probability identity", worst < 1e-12 && secs < 1.0,
           "worst |error| = " + fmt(worst) + ", " + fmt(secs) + " s");
}

// ---------------------------------------------------------------------------
// 2. Paper case-1 probabilities: 0.08 / 0.12 / 0.16.
// ---------------------------------------------------------------------------
void criterion_2() {
    const TierScheme tiers = TierScheme::with_default_mu(0.1, 0.3, 1.0, 0.1);
    const TierProbabilities probs = derive_probabilities(tiers);
    const double err = std::max({std::fabs(probs.p_nrm - 0.08),
                                 std::fabs(probs.p_int - 0.12),
                                 std::fabs(probs.p_adv - 0.16)});
    report(2, "case-1 election probabilities", err <= 1e-15,
           "p = [" + fmt(probs.p_nrm) + ", " + fmt(probs.p_int) + ", " +
               fmt(probs.p_adv) + "], max err = " + fmt(err));
}

// ---------------------------------------------------------------------------
// 3. Rotation guarantee: n=20 homogeneous, p=0.1, 10 epochs, 20 seeds.
// ---------------------------------------------------------------------------
void criterion_3() {
    const auto start = std::chrono::steady_clock::now();
    const TierProbabilities probs{0.1, 0.1, 0.1};
    const EpochState epoch = EpochState::from(probs);
    bool ok = true;
    for (std::uint64_t seed = 1; seed <= 20 && ok; ++seed) {
        std::vector<Node> nodes(20);
        for (int i = 0; i < 20; ++i) {
            nodes[static_cast<std::size_t>(i)].id = i;
            nodes[static_cast<std::size_t>(i)].initial_energy = 0.5;
            nodes[static_cast<std::size_t>(i)].residual_energy = 0.5;
        }
        Rng rng(seed);
        for (int ep = 0; ep < 10 && ok; ++ep) {
            std::vector<int> served(20, 0);
            for (int round = 0; round < 10; ++round)
                for (int id : elect_cluster_heads(nodes, probs, epoch, rng))
                    ++served[static_cast<std::size_t>(id)];
            for (int count : served)
                if (count != 1) ok = false;
        }
    }
    const double secs = elapsed_s(start);
    report(3, "once-per-epoch CH rotation", ok && secs < 5.0,
           "20 seeds x 10 epochs, " + fmt(secs) + " s");
}

// ---------------------------------------------------------------------------
// 4. Expected CH count: case 1, deaths disabled, 5000 rounds.
// ---------------------------------------------------------------------------
void criterion_4() {
    const auto start = std::chrono::steady_clock::now();
    ExperimentPreset preset = paper_case_1(1);
    ScenarioConfig config = preset_config_for(preset, ProtocolKind::TSEP);
    config.infinite_energy = true;
    config.max_rounds = 5000;
    config.rng_seed = 11;

    const RunSummary summary = run_scenario(config);
    double total = 0.0;
    for (const RoundRecord& r : summary.per_round) total += r.ch_count;
    const double mean = total / static_cast<double>(summary.per_round.size());
    const double secs = elapsed_s(start);
    report(4, "mean CHs per round near n*p_opt", mean >= 9.0 && mean <= 11.0 && secs < 30.0,
           "mean = " + fmt(mean) + " over 5000 rounds, " + fmt(secs) + " s");
}

// ---------------------------------------------------------------------------
// 5. Energy conservation: ledger vs residuals, 10 seeds x 5 protocols.
// ---------------------------------------------------------------------------
void criterion_5() {
    ExperimentPreset preset = paper_case_1(10);
    double worst = 0.0;
    EngineOptions options;
    options.with_ledger = true;
    options.record_rounds = false;
    for (ProtocolKind protocol : preset.protocols) {
        ScenarioConfig config = preset_config_for(preset, protocol);
        config.max_rounds = 2000;
        for (const RunSummary& run : run_ensemble(config, preset.seeds, options)) {
            const double diff = std::fabs(run.initial_energy - run.final_residual_energy -
                                          *run.charged_energy);
            worst = std::max(worst, diff);
        }
    }
    report(5, "energy conservation against the charge ledger", worst <= 1e-9,
           "worst |imbalance| = " + fmt(worst) + " J over 50 runs");
}

// ---------------------------------------------------------------------------
// 6. Degeneracy equivalences: byte-identical round records, 500 rounds, 5 seeds.
// ---------------------------------------------------------------------------
bool identical_records(const ScenarioConfig& a, const ScenarioConfig& b) {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        ScenarioConfig run_a = a;
        ScenarioConfig run_b = b;
        run_a.rng_seed = run_b.rng_seed = seed;
        if (!(run_scenario(run_a).per_round == run_scenario(run_b).per_round))
            return false;
    }
    return true;
}

void criterion_6() {
    ScenarioConfig base;
    base.n = 100;
    base.max_rounds = 500;

    ScenarioConfig sep = base;
    sep.protocol = ProtocolKind::SEP;
    sep.tiers = TierScheme::with_default_mu(0.0, 0.3, 1.0, 0.1);
    ScenarioConfig leach = sep;
    leach.protocol = ProtocolKind::LEACH;
    const bool sep_leach = identical_records(sep, leach);

    ScenarioConfig esep = base;
    esep.protocol = ProtocolKind::ESEP;
    esep.tiers = TierScheme::with_default_mu(0.1, 0.0, 1.0, 0.1);
    ScenarioConfig sep2 = esep;
    sep2.protocol = ProtocolKind::SEP;
    const bool esep_sep = identical_records(esep, sep2);

    ScenarioConfig tsep = base;
    tsep.protocol = ProtocolKind::TSEP;
    tsep.tiers = TierScheme::with_default_mu(0.0, 0.0, 1.0, 0.1);
    tsep.field.event_probability = 1.0;  // always-firing field
    tsep.field.event_magnitude_low = 60.0;
    tsep.field.event_magnitude_high = 60.0;
    tsep.field.drift_sigma = 0.0;
    ReactiveConfig reactive;
    reactive.soft_threshold = 0.0;
    tsep.reactive = reactive;
    ScenarioConfig teen = tsep;
    teen.protocol = ProtocolKind::TEEN;
    const bool tsep_teen = identical_records(tsep, teen);

    std::string detail = std::string("SEP(m=0)==LEACH: ") + (sep_leach ? "yes" : "NO") +
                         ", ESEP(b=0)==SEP: " + (esep_sep ? "yes" : "NO") +
                         ", TSEP(m=b=0,always-fire,ST=0)==TEEN: " +
                         (tsep_teen ? "yes" : "NO");
    report(6, "degeneracy equivalences", sep_leach && esep_sep && tsep_teen, detail);
}

// ---------------------------------------------------------------------------
// 7. Reactive silence under a sub-threshold field, 1000 rounds.
// ---------------------------------------------------------------------------
void criterion_7() {
    ScenarioConfig base;
    base.n = 100;
    base.max_rounds = 1000;
    base.rng_seed = 4;
    base.field.event_probability = 0.0;
    base.field.drift_sigma = 0.0;  // constant 25 < HT 50

    bool reactive_silent = true;
    for (ProtocolKind protocol : {ProtocolKind::TEEN, ProtocolKind::TSEP}) {
        ScenarioConfig config = base;
        config.protocol = protocol;
        config.reactive = ReactiveConfig{};
        const RunSummary summary = run_scenario(config);
        if (summary.total_packets != 0) reactive_silent = false;
        for (const RoundRecord& r : summary.per_round)
            if (r.packets_round != 0) reactive_silent = false;
    }

    bool proactive_reports = true;
    const RunSummary leach = run_scenario(base);
    for (const RoundRecord& r : leach.per_round)
        if (r.alive > 0 && r.packets_round < 1) proactive_reports = false;

    report(7, "reactive silence vs proactive reporting",
           reactive_silent && proactive_reports,
           std::string("TEEN/TSEP packets = 0: ") + (reactive_silent ? "yes" : "NO") +
               ", LEACH >= 1/round: " + (proactive_reports ? "yes" : "NO"));
}

// ---------------------------------------------------------------------------
// 8-10. Paper orderings over the preset ensembles.
// ---------------------------------------------------------------------------
struct EnsembleStats {
    MetricStats stability;
    MetricStats lifetime;
    MetricStats packets;
};

std::map<ProtocolKind, EnsembleStats> run_preset_ensembles(const ExperimentPreset& preset) {
    EngineOptions options;
    options.record_rounds = false;
    std::map<ProtocolKind, std::vector<RunSummary>> runs;
    for (ProtocolKind protocol : preset.protocols)
        runs[protocol] =
            run_ensemble(preset_config_for(preset, protocol), preset.seeds, options);
    const ComparisonTable table = summarize_comparison(runs);
    std::map<ProtocolKind, EnsembleStats> stats;
    for (const ProtocolSummary& row : table.rows)
        stats[row.protocol] = EnsembleStats{row.stability, row.lifetime, row.packets};
    return stats;
}

bool separated_above(const MetricStats& hi, const MetricStats& lo) {
    return hi.mean - hi.stddev > lo.mean + lo.stddev;
}

void criteria_8_9_10() {
    const auto start = std::chrono::steady_clock::now();
    const auto case1 = run_preset_ensembles(paper_case_1(30));
    const double case1_secs = elapsed_s(start);

    {
        const MetricStats& tsep = case1.at(ProtocolKind::TSEP).stability;
        const MetricStats& teen = case1.at(ProtocolKind::TEEN).stability;
        const MetricStats& esep = case1.at(ProtocolKind::ESEP).stability;
        const MetricStats& sep = case1.at(ProtocolKind::SEP).stability;
        const MetricStats& leach = case1.at(ProtocolKind::LEACH).stability;
        const bool ok = separated_above(tsep, teen) && separated_above(teen, esep) &&
                        separated_above(esep, sep) && separated_above(esep, leach);
        std::ostringstream detail;
        detail << "mean+/-sd: TSEP " << fmt(tsep.mean) << "+/-" << fmt(tsep.stddev)
               << " > TEEN " << fmt(teen.mean) << "+/-" << fmt(teen.stddev) << " > ESEP "
               << fmt(esep.mean) << "+/-" << fmt(esep.stddev) << " > max(SEP "
               << fmt(sep.mean) << "+/-" << fmt(sep.stddev) << ", LEACH "
               << fmt(leach.mean) << "+/-" << fmt(leach.stddev) << "), "
               << fmt(case1_secs) << " s";
        report(8, "stability ordering (case 1)", ok && case1_secs < 300.0, detail.str());
    }

    {
        const double esep = case1.at(ProtocolKind::ESEP).packets.mean;
        const double tsep = case1.at(ProtocolKind::TSEP).packets.mean;
        const double teen = case1.at(ProtocolKind::TEEN).packets.mean;
        const bool ok = esep > tsep && tsep > teen;
        report(9, "throughput ordering (case 1)", ok,
               "mean packets: ESEP " + fmt(esep) + " > TSEP " + fmt(tsep) + " > TEEN " +
                   fmt(teen));
    }

    {
        const auto case2 = run_preset_ensembles(paper_case_2(30));
        const MetricStats& s1 = case1.at(ProtocolKind::TSEP).stability;
        const MetricStats& s2 = case2.at(ProtocolKind::TSEP).stability;
        const MetricStats& l1 = case1.at(ProtocolKind::TSEP).lifetime;
        const MetricStats& l2 = case2.at(ProtocolKind::TSEP).lifetime;
        const bool ok = s2.mean > s1.mean && l2.mean > l1.mean;
        std::ostringstream detail;
        detail << "TSEP stability " << fmt(s1.mean) << " -> " << fmt(s2.mean)
               << ", lifetime " << fmt(l1.mean) << " -> " << fmt(l2.mean);
        report(10, "heterogeneity scaling (case 2 > case 1)", ok, detail.str());
    }
}

// ---------------------------------------------------------------------------
// 11. Single-node analytic death round.
// ---------------------------------------------------------------------------
void criterion_11() {
    ScenarioConfig config;
    config.n = 1;
    config.protocol = ProtocolKind::LEACH;
    config.tiers = TierScheme::with_default_mu(0.0, 0.0, 0.0, 1.0);  // always CH
    config.ctrl_bits = 0;
    config.max_rounds = 1000000;

    bool ok = true;
    std::string detail;
    for (std::uint64_t seed : {3ULL, 17ULL, 91ULL}) {
        config.rng_seed = seed;

        Rng placement(stream_seed(seed, stream::placement));
        const auto nodes = deploy_network(config, placement);
        const double d = distance(nodes[0].pos, config.bs);

        // Hand trace: each round the lone CH aggregates its own signal and
        // sends one packet to the BS; the control broadcast is zero bits.
        const double k = static_cast<double>(config.radio.packet_bits);
        const double amp = d < config.radio.d0
                               ? config.radio.eps_fs * k * d * d
                               : config.radio.eps_mp * k * d * d * d * d;
        const double per_round = config.radio.e_da * k + config.radio.e_elec * k + amp;
        const long long floored = static_cast<long long>(std::floor(0.5 / per_round));
        const long long expected =
            static_cast<double>(floored) * per_round >= 0.5 ? floored : floored + 1;

        const RunSummary summary = run_scenario(config);
        const long long simulated =
            summary.stability_period ? *summary.stability_period : -1;
        if (simulated != expected || summary.network_lifetime != expected) ok = false;
        if (!detail.empty()) detail += "; ";
        detail += "seed " + std::to_string(seed) + ": simulated " +
                  std::to_string(simulated) + " vs analytic " + std::to_string(expected);
    }
    report(11, "single-node analytic death round", ok, detail);
}

}  // namespace

int main() {
    const auto start = std::chrono::steady_clock::now();
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criteria_8_9_10();
    criterion_11();
    std::printf("%d/11 criteria passed in %.1f s\n", 11 - g_failures, elapsed_s(start));
    return g_failures == 0 ? 0 : 1;
}
