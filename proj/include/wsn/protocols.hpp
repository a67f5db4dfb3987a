#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wsn/election.hpp"
#include "wsn/field.hpp"
#include "wsn/netmodel.hpp"
#include "wsn/radio.hpp"

namespace wsn {

enum class ProtocolKind { LEACH, SEP, ESEP, TEEN, TSEP };

/// TEEN and TSEP gate transmissions on thresholds; the rest report every frame.
bool is_reactive(ProtocolKind kind);

/// Heterogeneity tiers the protocol's election distinguishes (1, 2, or 3).
int tier_count(ProtocolKind kind);

const char* to_string(ProtocolKind kind);
std::optional<ProtocolKind> parse_protocol(const std::string& name);

/// The tier scheme as the protocol's tier flags imply it: LEACH and TEEN are
/// single-tier (m = b = 0), SEP is two-tier (b = 0), ESEP and TSEP keep all
/// three tiers. Deployment and election probabilities both follow the
/// effective scheme.
TierScheme effective_tiers(ProtocolKind kind, const TierScheme& tiers);

/// derive_probabilities over the protocol's effective tier scheme.
TierProbabilities protocol_probabilities(ProtocolKind kind, const TierScheme& tiers);

/// Reactive reporting parameters broadcast at cluster-change time.
struct ReactiveConfig {
    double hard_threshold = 50.0;  // HT
    double soft_threshold = 2.0;   // ST
    std::vector<std::string> attributes{"temperature"};  // A
    int report_time = 1;           // TR, rounds

    bool operator==(const ReactiveConfig&) const = default;
};

/// Throws std::invalid_argument naming the violated invariant.
void validate(const ReactiveConfig& reactive);

/// The threshold gate: transmit iff the reading reached HT and, when a value
/// was already reported (SV set), it moved at least ST away from it.
bool reactive_gate(double value, const std::optional<double>& sv,
                   const ReactiveConfig& reactive);

struct ClusterAssignment {
    std::vector<int> ch_of;        // per node id: its CH's id, or -1
    std::vector<int> ch_ids;       // CHs alive after the formation broadcast
    std::vector<int> unclustered;  // alive non-CH nodes with no CH to join

    bool operator==(const ClusterAssignment&) const = default;
};

/// Per-node ledger of energy actually drawn; lets tests audit conservation
/// against Σ(initial - residual).
struct EnergyLedger {
    std::vector<double> drawn;

    explicit EnergyLedger(std::size_t n = 0) : drawn(n, 0.0) {}
    void record(int node_id, double amount) {
        drawn[static_cast<std::size_t>(node_id)] += amount;
    }
    double total() const {
        double sum = 0.0;
        for (double d : drawn) sum += d;
        return sum;
    }
};

/// Charging policy threaded through a round: optional infinite-energy mode
/// (election-dynamics studies) and optional ledger instrumentation.
struct EnergyMeter {
    bool infinite_energy = false;
    EnergyLedger* ledger = nullptr;

    void apply(Node& node, double cost) const {
        if (infinite_energy) return;
        const double drawn = charge(node, cost);
        if (ledger != nullptr) ledger->record(node.id, drawn);
    }
};

/// Per-round metrics snapshot.
struct RoundRecord {
    int round = 0;
    int alive = 0;
    int dead = 0;
    int ch_count = 0;
    long packets_round = 0;
    long packets_cum = 0;
    double total_residual_energy = 0.0;

    bool operator==(const RoundRecord&) const = default;
};

/// Associates every alive non-CH node with its Euclidean-nearest alive CH
/// (ties to the lower CH id) and charges the formation overhead: each CH one
/// ctrl-bit broadcast at broadcast_distance, each member one ctrl rx plus a
/// ctrl-bit join transmission to its CH. ctrl_bits = 0 disables the overhead.
/// With no (surviving) CHs all alive nodes land in the unclustered set.
ClusterAssignment form_clusters(std::vector<Node>& nodes, const std::vector<int>& ch_ids,
                                const RadioParams& radio, long ctrl_bits,
                                double broadcast_distance, const EnergyMeter& meter);

/// Proactive steady state: per frame every alive member sends one K-bit
/// packet to its CH; each alive CH receives them, aggregates (members + its
/// own signal), and forwards one K-bit packet to the BS. Unclustered nodes
/// send straight to the BS. Returns packets delivered to the BS.
long steady_state_proactive(std::vector<Node>& nodes, const ClusterAssignment& assignment,
                            const RadioParams& radio, const Position& bs, int frames,
                            const EnergyMeter& meter);

/// Reactive steady state: the same flow gated per node by reactive_gate
/// against field.sense(node, round); SV updates on every transmission. CHs
/// sense and self-gate too, but forward an aggregate only in frames where at
/// least one member packet arrived. Unclustered nodes gate their direct-to-BS
/// sends the same way.
long steady_state_reactive(std::vector<Node>& nodes, const ClusterAssignment& assignment,
                           const RadioParams& radio, const Position& bs, int frames,
                           const ReactiveConfig& reactive, const Field& field, int round,
                           const EnergyMeter& meter);

/// Static per-run inputs for round execution.
struct RoundSetup {
    ProtocolKind protocol = ProtocolKind::LEACH;
    RadioParams radio;
    Position bs;
    double broadcast_distance = 0.0;  // CH advertisement range (field diagonal)
    long ctrl_bits = 200;
    int frames_per_round = 1;
    double e_sense = 0.0;  // idle sensing drain, J/node/round
    const ReactiveConfig* reactive = nullptr;  // set iff protocol is reactive
    const Field* field = nullptr;              // set iff protocol is reactive
    EnergyMeter meter;
};

/// One full round: election, cluster formation, steady state, metrics.
RoundRecord run_round(const RoundSetup& setup, std::vector<Node>& nodes,
                      const TierProbabilities& probs, const EpochState& epoch, int round,
                      Rng& election_rng);

}  // namespace wsn
