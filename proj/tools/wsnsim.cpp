// wsnsim: round-based heterogeneous WSN protocol simulator CLI.
//
// Subcommands:
//   run      one scenario -> per-round CSV + summary file
//   compare  a protocol set over a seed list -> per-protocol CSVs + comparison table
//   preset   built-in comparison experiments (paper-case-1, paper-case-2) -> CSVs,
//            comparison table, and alive/dead/packets SVG charts
//
// Exit codes: 0 success, 1 usage or config error, 2 runtime failure.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "wsn/config_file.hpp"
#include "wsn/csv_io.hpp"
#include "wsn/engine.hpp"
#include "wsn/presets.hpp"
#include "wsn/svg_plot.hpp"

namespace {

namespace fs = std::filesystem;

struct RunArgs {
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::string out_dir = ".";
};

struct CompareArgs {
    std::string config_path;
    std::vector<std::string> protocols;
    int seed_count = 10;
    std::uint64_t first_seed = 1;
    std::string out_dir = ".";
};

struct PresetArgs {
    std::string name;
    int seed_count = 30;
    std::string out_dir = ".";
};

std::vector<std::uint64_t> make_seeds(std::uint64_t first, int count) {
    std::vector<std::uint64_t> seeds(static_cast<std::size_t>(count));
    std::iota(seeds.begin(), seeds.end(), first);
    return seeds;
}

void ensure_out_dir(const std::string& dir) {
    if (!dir.empty()) fs::create_directories(dir);
}

std::string join_path(const std::string& dir, const std::string& file) {
    return (fs::path(dir) / file).string();
}

int cmd_run(const RunArgs& args) {
    wsn::ScenarioConfig config = wsn::load_config(args.config_path);
    if (args.seed) config.rng_seed = *args.seed;

    const wsn::RunSummary summary = wsn::run_scenario(config);

    ensure_out_dir(args.out_dir);
    wsn::write_rounds_csv(join_path(args.out_dir, "rounds.csv"), summary.per_round);
    wsn::write_summary_file(join_path(args.out_dir, "summary.txt"), summary);
    std::cout << wsn::render_summary(summary);
    return 0;
}

/// Shared by compare and preset: runs each protocol's ensemble, writes the
/// first seed's round history per protocol plus the comparison CSV, returns
/// the per-protocol CSV paths for plotting.
std::vector<std::pair<std::string, std::string>> run_comparison(
    const wsn::ScenarioConfig& base, const std::vector<wsn::ProtocolKind>& protocols,
    const std::vector<std::uint64_t>& seeds, const std::string& out_dir,
    const std::string& tag) {
    std::map<wsn::ProtocolKind, std::vector<wsn::RunSummary>> runs;
    std::vector<std::pair<std::string, std::string>> csvs;

    for (wsn::ProtocolKind protocol : protocols) {
        wsn::ScenarioConfig config = base;
        config.protocol = protocol;
        if (wsn::is_reactive(protocol)) {
            if (!config.reactive) config.reactive = wsn::ReactiveConfig{};
        } else {
            config.reactive.reset();
        }

        // Per-round history is only kept for the first seed (the plotted run).
        wsn::EngineOptions first_options;
        std::vector<wsn::RunSummary> summaries;
        summaries.push_back(wsn::run_scenario(
            [&] { auto c = config; c.rng_seed = seeds.front(); return c; }(), first_options));

        if (seeds.size() > 1) {
            wsn::EngineOptions rest_options;
            rest_options.record_rounds = false;
            std::vector<std::uint64_t> rest(seeds.begin() + 1, seeds.end());
            for (auto& summary : wsn::run_ensemble(config, rest, rest_options))
                summaries.push_back(std::move(summary));
        }

        const std::string csv_path =
            join_path(out_dir, tag + "_" + wsn::to_string(protocol) + "_rounds.csv");
        wsn::write_rounds_csv(csv_path, summaries.front().per_round);
        csvs.emplace_back(wsn::to_string(protocol), csv_path);
        runs.emplace(protocol, std::move(summaries));
    }

    const wsn::ComparisonTable table = wsn::summarize_comparison(runs);
    wsn::write_comparison_csv(join_path(out_dir, tag + "_comparison.csv"), table);
    std::cout << table.render();
    return csvs;
}

int cmd_compare(const CompareArgs& args) {
    if (args.protocols.empty())
        throw CLI::ValidationError("compare", "at least one protocol is required");
    std::vector<wsn::ProtocolKind> protocols;
    for (const std::string& name : args.protocols) {
        auto kind = wsn::parse_protocol(name);
        if (!kind)
            throw CLI::ValidationError("compare", "unknown protocol '" + name + "'");
        protocols.push_back(*kind);
    }
    if (args.seed_count < 1)
        throw CLI::ValidationError("compare", "--seeds must be >= 1");

    const wsn::ScenarioConfig base = wsn::load_config(args.config_path);
    ensure_out_dir(args.out_dir);
    run_comparison(base, protocols, make_seeds(args.first_seed, args.seed_count),
                   args.out_dir, "compare");
    return 0;
}

int cmd_preset(const PresetArgs& args) {
    auto preset = wsn::find_preset(args.name, args.seed_count);
    if (!preset) {
        std::string known;
        for (const auto& name : wsn::preset_names()) known += " " + name;
        throw CLI::ValidationError("preset", "unknown preset '" + args.name +
                                                 "'; available:" + known);
    }
    if (args.seed_count < 1)
        throw CLI::ValidationError("preset", "--seeds must be >= 1");

    ensure_out_dir(args.out_dir);
    const auto csvs = run_comparison(preset->base, preset->protocols, preset->seeds,
                                     args.out_dir, preset->name);

    wsn::plot_rounds_csvs(csvs, wsn::RoundMetric::Alive,
                          preset->name + ": alive nodes per round",
                          join_path(args.out_dir, preset->name + "_alive.svg"));
    wsn::plot_rounds_csvs(csvs, wsn::RoundMetric::Dead,
                          preset->name + ": dead nodes per round",
                          join_path(args.out_dir, preset->name + "_dead.svg"));
    wsn::plot_rounds_csvs(csvs, wsn::RoundMetric::PacketsCumulative,
                          preset->name + ": packets sent from CHs to BS",
                          join_path(args.out_dir, preset->name + "_packets.svg"));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Round-based simulator for heterogeneous WSN protocols "
                 "(LEACH, SEP, ESEP, TEEN, TSEP)"};
    app.require_subcommand(1);

    RunArgs run_args;
    CLI::App* run = app.add_subcommand("run", "simulate one scenario");
    run->add_option("--config", run_args.config_path, "scenario config file")->required();
    run->add_option("--seed", run_args.seed, "override the config's master seed");
    run->add_option("--out", run_args.out_dir, "output directory (default .)");

    CompareArgs compare_args;
    CLI::App* compare =
        app.add_subcommand("compare", "run a protocol set over a seed list");
    compare->add_option("--config", compare_args.config_path, "scenario config file")
        ->required();
    compare->add_option("--protocols", compare_args.protocols,
                        "protocols to compare (comma separated)")
        ->required()
        ->delimiter(',');
    compare->add_option("--seeds", compare_args.seed_count, "number of seeds (default 10)");
    compare->add_option("--first-seed", compare_args.first_seed,
                        "first seed of the range (default 1)");
    compare->add_option("--out", compare_args.out_dir, "output directory (default .)");

    PresetArgs preset_args;
    CLI::App* preset =
        app.add_subcommand("preset", "run a built-in comparison experiment");
    preset->add_option("name", preset_args.name, "paper-case-1 | paper-case-2")
        ->required();
    preset->add_option("--seeds", preset_args.seed_count, "number of seeds (default 30)");
    preset->add_option("--out", preset_args.out_dir, "output directory (default .)");

    try {
        app.parse(argc, argv);
        if (run->parsed()) return cmd_run(run_args);
        if (compare->parsed()) return cmd_compare(compare_args);
        if (preset->parsed()) return cmd_preset(preset_args);
        return 1;
    } catch (const CLI::CallForHelp& e) {
        app.exit(e);
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const wsn::ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "runtime failure: " << e.what() << '\n';
        return 2;
    }
}
