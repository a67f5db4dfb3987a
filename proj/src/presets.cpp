#include "wsn/presets.hpp"

#include <numeric>

namespace wsn {

namespace {

std::vector<std::uint64_t> seed_range(int count) {
    std::vector<std::uint64_t> seeds(static_cast<std::size_t>(count > 0 ? count : 0));
    std::iota(seeds.begin(), seeds.end(), 1ULL);
    return seeds;
}

ExperimentPreset make_preset(std::string name, double m, double alpha, int seed_count) {
    ExperimentPreset preset;
    preset.name = std::move(name);
    preset.base.n = 100;
    preset.base.field_side = 100.0;
    preset.base.bs = Position{50.0, 50.0};
    preset.base.e0 = 0.5;
    preset.base.tiers = TierScheme::with_default_mu(m, 0.3, alpha, 0.1);
    preset.base.radio = RadioParams{};  // the standard constant set
    preset.base.ctrl_bits = 200;
    preset.base.frames_per_round = 1;
    // Large enough that even the longest-lived reactive run ends in network
    // death, so lifetime comparisons measure real lifetimes.
    preset.base.max_rounds = 50000;
    preset.protocols = {ProtocolKind::LEACH, ProtocolKind::SEP, ProtocolKind::ESEP,
                        ProtocolKind::TEEN, ProtocolKind::TSEP};
    preset.seeds = seed_range(seed_count);
    return preset;
}

}  // namespace

ExperimentPreset paper_case_1(int seed_count) {
    return make_preset("paper-case-1", 0.1, 1.0, seed_count);
}

ExperimentPreset paper_case_2(int seed_count) {
    return make_preset("paper-case-2", 0.2, 3.0, seed_count);
}

std::optional<ExperimentPreset> find_preset(const std::string& name, int seed_count) {
    if (name == "paper-case-1") return paper_case_1(seed_count);
    if (name == "paper-case-2") return paper_case_2(seed_count);
    return std::nullopt;
}

std::vector<std::string> preset_names() { return {"paper-case-1", "paper-case-2"}; }

ScenarioConfig preset_config_for(const ExperimentPreset& preset, ProtocolKind protocol) {
    ScenarioConfig config = preset.base;
    config.protocol = protocol;
    if (is_reactive(protocol)) {
        ReactiveConfig reactive;
        reactive.report_time = config.frames_per_round;
        config.reactive = reactive;
    } else {
        config.reactive.reset();
    }
    return config;
}

}  // namespace wsn
