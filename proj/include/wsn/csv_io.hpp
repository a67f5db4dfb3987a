#pragma once

#include <string>
#include <vector>

#include "wsn/engine.hpp"

namespace wsn {

/// Fixed round-history schema:
/// round,alive,dead,ch_count,packets_round,packets_cum,residual_energy
inline constexpr const char* kRoundCsvHeader =
    "round,alive,dead,ch_count,packets_round,packets_cum,residual_energy";

/// Formats a double with 9 significant digits (round-trips energies near
/// 1e-4 J without bloating files).
std::string format_csv_double(double value);

void write_rounds_csv(const std::string& path, const std::vector<RoundRecord>& records);

/// Parses a file written by write_rounds_csv. Throws std::runtime_error on a
/// malformed header or row.
std::vector<RoundRecord> read_rounds_csv(const std::string& path);

/// Key-value run summary; milestones that never happened are written as n/a.
void write_summary_file(const std::string& path, const RunSummary& summary);
std::string render_summary(const RunSummary& summary);

/// Per-protocol statistics as CSV:
/// protocol,runs,runs_all_dead,stability_mean,stability_std,lifetime_mean,
/// lifetime_std,packets_mean,packets_std
void write_comparison_csv(const std::string& path, const ComparisonTable& table);

}  // namespace wsn
