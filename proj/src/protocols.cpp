#include "wsn/protocols.hpp"

#include <cmath>
#include <stdexcept>

namespace wsn {

bool is_reactive(ProtocolKind kind) {
    return kind == ProtocolKind::TEEN || kind == ProtocolKind::TSEP;
}

int tier_count(ProtocolKind kind) {
    switch (kind) {
        case ProtocolKind::LEACH:
        case ProtocolKind::TEEN: return 1;
        case ProtocolKind::SEP: return 2;
        case ProtocolKind::ESEP:
        case ProtocolKind::TSEP: return 3;
    }
    return 1;
}

const char* to_string(ProtocolKind kind) {
    switch (kind) {
        case ProtocolKind::LEACH: return "LEACH";
        case ProtocolKind::SEP: return "SEP";
        case ProtocolKind::ESEP: return "ESEP";
        case ProtocolKind::TEEN: return "TEEN";
        case ProtocolKind::TSEP: return "TSEP";
    }
    return "?";
}

std::optional<ProtocolKind> parse_protocol(const std::string& name) {
    if (name == "LEACH") return ProtocolKind::LEACH;
    if (name == "SEP") return ProtocolKind::SEP;
    if (name == "ESEP") return ProtocolKind::ESEP;
    if (name == "TEEN") return ProtocolKind::TEEN;
    if (name == "TSEP") return ProtocolKind::TSEP;
    return std::nullopt;
}

TierScheme effective_tiers(ProtocolKind kind, const TierScheme& tiers) {
    TierScheme effective = tiers;
    if (tier_count(kind) < 3) {
        effective.b = 0.0;
        effective.mu = 0.0;
    }
    if (tier_count(kind) < 2) {
        effective.m = 0.0;
        effective.alpha = 0.0;
    }
    return effective;
}

TierProbabilities protocol_probabilities(ProtocolKind kind, const TierScheme& tiers) {
    return derive_probabilities(effective_tiers(kind, tiers));
}

void validate(const ReactiveConfig& reactive) {
    if (!(reactive.soft_threshold >= 0.0))
        throw std::invalid_argument("reactive: soft_threshold must be >= 0");
    if (!std::isfinite(reactive.hard_threshold))
        throw std::invalid_argument("reactive: hard_threshold must be finite");
    if (reactive.attributes.empty())
        throw std::invalid_argument("reactive: attributes must be nonempty");
    if (reactive.report_time < 1)
        throw std::invalid_argument("reactive: report_time must be >= 1");
}

bool reactive_gate(double value, const std::optional<double>& sv,
                   const ReactiveConfig& reactive) {
    if (value < reactive.hard_threshold) return false;
    return !sv.has_value() || std::fabs(value - *sv) >= reactive.soft_threshold;
}

ClusterAssignment form_clusters(std::vector<Node>& nodes, const std::vector<int>& ch_ids,
                                const RadioParams& radio, long ctrl_bits,
                                double broadcast_distance, const EnergyMeter& meter) {
    ClusterAssignment assignment;
    assignment.ch_of.assign(nodes.size(), -1);

    // CH advertisement broadcasts first; a CH that empties its battery here
    // never collects members.
    for (int ch : ch_ids) {
        Node& node = nodes[static_cast<std::size_t>(ch)];
        if (!node.alive) continue;
        meter.apply(node, tx_cost(radio, ctrl_bits, broadcast_distance));
        if (node.alive) assignment.ch_ids.push_back(ch);
    }

    std::vector<bool> is_ch(nodes.size(), false);
    for (int ch : ch_ids) is_ch[static_cast<std::size_t>(ch)] = true;

    for (Node& node : nodes) {
        if (!node.alive || is_ch[static_cast<std::size_t>(node.id)]) continue;
        if (assignment.ch_ids.empty()) {
            assignment.unclustered.push_back(node.id);
            continue;
        }
        int best = -1;
        double best_dist = 0.0;
        for (int ch : assignment.ch_ids) {
            const double d = distance(node.pos, nodes[static_cast<std::size_t>(ch)].pos);
            if (best < 0 || d < best_dist) {  // ties keep the lower CH id
                best = ch;
                best_dist = d;
            }
        }
        assignment.ch_of[static_cast<std::size_t>(node.id)] = best;
        meter.apply(node, rx_cost(radio, ctrl_bits));
        if (node.alive) meter.apply(node, tx_cost(radio, ctrl_bits, best_dist));
    }
    return assignment;
}

namespace {

struct ClusterView {
    int ch = -1;
    std::vector<int> members;  // ascending id
};

std::vector<ClusterView> cluster_views(const std::vector<Node>& nodes,
                                       const ClusterAssignment& assignment) {
    std::vector<ClusterView> clusters;
    clusters.reserve(assignment.ch_ids.size());
    for (int ch : assignment.ch_ids) clusters.push_back(ClusterView{ch, {}});
    for (std::size_t id = 0; id < assignment.ch_of.size(); ++id) {
        const int ch = assignment.ch_of[id];
        if (ch < 0) continue;
        for (ClusterView& cluster : clusters)
            if (cluster.ch == ch) {
                cluster.members.push_back(static_cast<int>(id));
                break;
            }
    }
    return clusters;
}

/// Aggregate-and-forward for one CH; counts the packet iff the CH was alive
/// when it started sending (the send may drain its battery).
long ch_forward(Node& ch, int signal_count, const RadioParams& radio, const Position& bs,
                const EnergyMeter& meter) {
    meter.apply(ch, aggregation_cost(radio, radio.packet_bits, signal_count));
    if (!ch.alive) return 0;
    meter.apply(ch, tx_cost(radio, radio.packet_bits, distance(ch.pos, bs)));
    return 1;
}

}  // namespace

long steady_state_proactive(std::vector<Node>& nodes, const ClusterAssignment& assignment,
                            const RadioParams& radio, const Position& bs, int frames,
                            const EnergyMeter& meter) {
    const auto clusters = cluster_views(nodes, assignment);
    long packets = 0;
    for (int frame = 0; frame < frames; ++frame) {
        for (const ClusterView& cluster : clusters) {
            Node& ch = nodes[static_cast<std::size_t>(cluster.ch)];
            int received = 0;
            for (int member_id : cluster.members) {
                Node& member = nodes[static_cast<std::size_t>(member_id)];
                if (!member.alive) continue;
                meter.apply(member, tx_cost(radio, radio.packet_bits,
                                            distance(member.pos, ch.pos)));
                if (ch.alive) {
                    meter.apply(ch, rx_cost(radio, radio.packet_bits));
                    ++received;
                }
            }
            // The CH's own reading always joins the aggregate.
            if (ch.alive) packets += ch_forward(ch, received + 1, radio, bs, meter);
        }
        for (int id : assignment.unclustered) {
            Node& node = nodes[static_cast<std::size_t>(id)];
            if (!node.alive) continue;
            meter.apply(node, tx_cost(radio, radio.packet_bits, distance(node.pos, bs)));
            ++packets;
        }
    }
    return packets;
}

long steady_state_reactive(std::vector<Node>& nodes, const ClusterAssignment& assignment,
                           const RadioParams& radio, const Position& bs, int frames,
                           const ReactiveConfig& reactive, const Field& field, int round,
                           const EnergyMeter& meter) {
    const auto clusters = cluster_views(nodes, assignment);
    long packets = 0;
    for (int frame = 0; frame < frames; ++frame) {
        for (const ClusterView& cluster : clusters) {
            Node& ch = nodes[static_cast<std::size_t>(cluster.ch)];
            int received = 0;
            for (int member_id : cluster.members) {
                Node& member = nodes[static_cast<std::size_t>(member_id)];
                if (!member.alive) continue;
                const double v = field.sense(member_id, round);
                if (!reactive_gate(v, member.sensed_value_memory, reactive)) continue;
                member.sensed_value_memory = v;
                meter.apply(member, tx_cost(radio, radio.packet_bits,
                                            distance(member.pos, ch.pos)));
                if (ch.alive) {
                    meter.apply(ch, rx_cost(radio, radio.packet_bits));
                    ++received;
                }
            }
            // The CH senses continuously under the same gate; a fired reading
            // joins the aggregate but cannot trigger a forward by itself.
            int own = 0;
            if (ch.alive) {
                const double v = field.sense(cluster.ch, round);
                if (reactive_gate(v, ch.sensed_value_memory, reactive)) {
                    ch.sensed_value_memory = v;
                    own = 1;
                }
            }
            if (ch.alive && received > 0)
                packets += ch_forward(ch, received + own, radio, bs, meter);
        }
        for (int id : assignment.unclustered) {
            Node& node = nodes[static_cast<std::size_t>(id)];
            if (!node.alive) continue;
            const double v = field.sense(id, round);
            if (!reactive_gate(v, node.sensed_value_memory, reactive)) continue;
            node.sensed_value_memory = v;
            meter.apply(node, tx_cost(radio, radio.packet_bits, distance(node.pos, bs)));
            ++packets;
        }
    }
    return packets;
}

RoundRecord run_round(const RoundSetup& setup, std::vector<Node>& nodes,
                      const TierProbabilities& probs, const EpochState& epoch, int round,
                      Rng& election_rng) {
    if (setup.e_sense > 0.0)
        for (Node& node : nodes)
            if (node.alive) setup.meter.apply(node, setup.e_sense);

    const std::vector<int> elected = elect_cluster_heads(nodes, probs, epoch, election_rng);
    const ClusterAssignment assignment =
        form_clusters(nodes, elected, setup.radio, setup.ctrl_bits,
                      setup.broadcast_distance, setup.meter);

    long packets = 0;
    if (is_reactive(setup.protocol)) {
        packets = steady_state_reactive(nodes, assignment, setup.radio, setup.bs,
                                        setup.frames_per_round, *setup.reactive,
                                        *setup.field, round, setup.meter);
    } else {
        packets = steady_state_proactive(nodes, assignment, setup.radio, setup.bs,
                                         setup.frames_per_round, setup.meter);
    }

    RoundRecord record;
    record.round = round;
    record.ch_count = static_cast<int>(elected.size());
    record.packets_round = packets;
    for (const Node& node : nodes) {
        if (node.alive)
            ++record.alive;
        else
            ++record.dead;
        record.total_residual_energy += node.residual_energy;
    }
    return record;
}

}  // namespace wsn
