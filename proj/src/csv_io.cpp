#include "wsn/csv_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace wsn {

std::string format_csv_double(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", value);
    return buf;
}

void write_rounds_csv(const std::string& path, const std::vector<RoundRecord>& records) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << kRoundCsvHeader << '\n';
    for (const RoundRecord& r : records)
        out << r.round << ',' << r.alive << ',' << r.dead << ',' << r.ch_count << ','
            << r.packets_round << ',' << r.packets_cum << ','
            << format_csv_double(r.total_residual_energy) << '\n';
    if (!out) throw std::runtime_error("write failed: " + path);
}

std::vector<RoundRecord> read_rounds_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::string line;
    if (!std::getline(in, line) || line != kRoundCsvHeader)
        throw std::runtime_error(path + ": unexpected round-CSV header");

    std::vector<RoundRecord> records;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        RoundRecord r;
        std::istringstream fields(line);
        std::string field;
        auto next = [&]() -> std::string {
            if (!std::getline(fields, field, ','))
                throw std::runtime_error(path + ": short row at line " +
                                         std::to_string(line_no));
            return field;
        };
        r.round = std::stoi(next());
        r.alive = std::stoi(next());
        r.dead = std::stoi(next());
        r.ch_count = std::stoi(next());
        r.packets_round = std::stol(next());
        r.packets_cum = std::stol(next());
        r.total_residual_energy = std::stod(next());
        records.push_back(r);
    }
    return records;
}

namespace {

std::string opt_to_string(const std::optional<int>& value) {
    return value ? std::to_string(*value) : std::string("n/a");
}

}  // namespace

std::string render_summary(const RunSummary& summary) {
    std::ostringstream out;
    out << "protocol = " << to_string(summary.config.protocol) << '\n'
        << "seed = " << summary.config.rng_seed << '\n'
        << "rounds_simulated = " << (summary.per_round.empty()
                                         ? 0
                                         : summary.per_round.back().round) << '\n'
        << "stability_period = " << opt_to_string(summary.stability_period) << '\n'
        << "instability_period = " << opt_to_string(summary.instability_period) << '\n'
        << "network_lifetime = " << summary.network_lifetime << '\n'
        << "half_dead_round = " << opt_to_string(summary.half_dead_round) << '\n'
        << "total_packets = " << summary.total_packets << '\n'
        << "initial_energy = " << format_csv_double(summary.initial_energy) << '\n'
        << "final_residual_energy = " << format_csv_double(summary.final_residual_energy)
        << '\n';
    return out.str();
}

void write_summary_file(const std::string& path, const RunSummary& summary) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << render_summary(summary);
    if (!out) throw std::runtime_error("write failed: " + path);
}

void write_comparison_csv(const std::string& path, const ComparisonTable& table) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    // A metric no run reached (e.g. stability with zero deaths) is n/a, not 0.
    auto cell = [](const MetricStats& stats, bool stddev) {
        return stats.count == 0 ? std::string("n/a")
                                : format_csv_double(stddev ? stats.stddev : stats.mean);
    };
    out << "protocol,runs,runs_all_dead,stability_mean,stability_std,"
           "lifetime_mean,lifetime_std,packets_mean,packets_std\n";
    for (const ProtocolSummary& row : table.rows)
        out << to_string(row.protocol) << ',' << row.runs << ',' << row.runs_all_dead
            << ',' << cell(row.stability, false) << ',' << cell(row.stability, true)
            << ',' << cell(row.lifetime, false) << ',' << cell(row.lifetime, true) << ','
            << cell(row.packets, false) << ',' << cell(row.packets, true) << '\n';
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace wsn
