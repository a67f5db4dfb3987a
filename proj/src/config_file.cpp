#include "wsn/config_file.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

namespace wsn {

namespace {

std::string trim(const std::string& s) {
    std::size_t begin = 0;
    std::size_t end = s.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(s[begin]))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1]))) --end;
    return s.substr(begin, end - begin);
}

struct RawEntry {
    std::string value;
    int line = 0;
};

using RawConfig = std::map<std::string, RawEntry>;

RawConfig parse_lines(std::istream& in) {
    RawConfig raw;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const std::string stripped = trim(line);
        if (stripped.empty()) continue;
        const std::size_t eq = stripped.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(line_no) +
                              ": expected 'key = value'");
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        if (key.empty() || value.empty())
            throw ConfigError("line " + std::to_string(line_no) +
                              ": expected 'key = value'");
        auto [it, inserted] = raw.emplace(key, RawEntry{value, line_no});
        if (!inserted)
            throw ConfigError("line " + std::to_string(line_no) + ": duplicate key '" +
                              key + "' (first set on line " +
                              std::to_string(it->second.line) + ")");
    }
    return raw;
}

/// Tracks which keys were consumed so leftovers can be reported as unknown.
class KeyReader {
public:
    explicit KeyReader(RawConfig raw) : raw_(std::move(raw)) {}

    std::optional<std::string> take(const std::string& key) {
        auto it = raw_.find(key);
        if (it == raw_.end()) return std::nullopt;
        consumed_.push_back(key);
        std::string value = it->second.value;
        lines_[key] = it->second.line;
        raw_.erase(it);
        return value;
    }

    bool has(const std::string& key) const { return raw_.contains(key); }

    int line_of(const std::string& key) const {
        auto it = lines_.find(key);
        return it == lines_.end() ? 0 : it->second;
    }

    void fail_on_leftovers() const {
        if (raw_.empty()) return;
        const auto& [key, entry] = *raw_.begin();
        throw ConfigError("line " + std::to_string(entry.line) + ": unknown key '" +
                          key + "'");
    }

private:
    RawConfig raw_;
    std::vector<std::string> consumed_;
    std::map<std::string, int> lines_;
};

double parse_double(const std::string& key, const std::string& text, int line) {
    try {
        std::size_t used = 0;
        const double v = std::stod(text, &used);
        if (used != text.size()) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw ConfigError("line " + std::to_string(line) + ": key '" + key +
                          "' expects a number, got '" + text + "'");
    }
}

long long parse_int(const std::string& key, const std::string& text, int line) {
    long long v = 0;
    const char* begin = text.data();
    const char* end = begin + text.size();
    const auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc() || ptr != end)
        throw ConfigError("line " + std::to_string(line) + ": key '" + key +
                          "' expects an integer, got '" + text + "'");
    return v;
}

bool parse_bool(const std::string& key, const std::string& text, int line) {
    if (text == "true" || text == "1") return true;
    if (text == "false" || text == "0") return false;
    throw ConfigError("line " + std::to_string(line) + ": key '" + key +
                      "' expects true/false, got '" + text + "'");
}

std::vector<std::string> parse_list(const std::string& text) {
    std::vector<std::string> items;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        item = trim(item);
        if (!item.empty()) items.push_back(item);
    }
    return items;
}

ScenarioConfig build_config(KeyReader& keys) {
    ScenarioConfig config;

    auto take_double = [&](const std::string& key, double fallback) {
        auto text = keys.take(key);
        return text ? parse_double(key, *text, keys.line_of(key)) : fallback;
    };
    auto take_int = [&](const std::string& key, long long fallback) {
        auto text = keys.take(key);
        return text ? parse_int(key, *text, keys.line_of(key)) : fallback;
    };

    if (auto text = keys.take("protocol")) {
        auto kind = parse_protocol(*text);
        if (!kind)
            throw ConfigError("line " + std::to_string(keys.line_of("protocol")) +
                              ": unknown protocol '" + *text +
                              "' (expected LEACH|SEP|ESEP|TEEN|TSEP)");
        config.protocol = *kind;
    }

    config.n = static_cast<int>(take_int("n", config.n));
    config.field_side = take_double("field_side", config.field_side);
    // BS defaults to the field center unless set explicitly.
    config.bs.x = take_double("bs_x", config.field_side / 2.0);
    config.bs.y = take_double("bs_y", config.field_side / 2.0);
    config.e0 = take_double("e0", config.e0);

    config.tiers.p_opt = take_double("p_opt", config.tiers.p_opt);
    config.tiers.m = take_double("m", config.tiers.m);
    config.tiers.b = take_double("b", config.tiers.b);
    config.tiers.alpha = take_double("alpha", config.tiers.alpha);
    config.tiers.mu = take_double("mu", config.tiers.alpha / 2.0);

    config.radio.e_elec = take_double("e_elec", config.radio.e_elec);
    config.radio.e_da = take_double("e_da", config.radio.e_da);
    config.radio.eps_fs = take_double("eps_fs", config.radio.eps_fs);
    config.radio.eps_mp = take_double("eps_mp", config.radio.eps_mp);
    config.radio.packet_bits = take_int("packet_bits", config.radio.packet_bits);
    config.radio.d0 =
        take_double("d0", crossover_distance(config.radio.eps_fs, config.radio.eps_mp));

    config.ctrl_bits = take_int("ctrl_bits", config.ctrl_bits);
    config.e_sense = take_double("e_sense", config.e_sense);

    config.max_rounds = static_cast<int>(take_int("max_rounds", config.max_rounds));
    config.frames_per_round =
        static_cast<int>(take_int("frames_per_round", config.frames_per_round));
    config.rng_seed = static_cast<std::uint64_t>(take_int("seed", 1));
    if (auto text = keys.take("infinite_energy"))
        config.infinite_energy = parse_bool("infinite_energy", *text, keys.line_of("infinite_energy"));

    config.field.baseline = take_double("field_baseline", config.field.baseline);
    config.field.event_probability =
        take_double("event_probability", config.field.event_probability);
    config.field.event_magnitude_low =
        take_double("event_magnitude_low", config.field.event_magnitude_low);
    config.field.event_magnitude_high =
        take_double("event_magnitude_high", config.field.event_magnitude_high);
    config.field.event_duration =
        static_cast<int>(take_int("event_duration", config.field.event_duration));
    config.field.drift_sigma = take_double("drift_sigma", config.field.drift_sigma);

    const bool reactive_protocol = is_reactive(config.protocol);
    const char* reactive_keys[] = {"hard_threshold", "soft_threshold", "attributes",
                                   "report_time"};
    if (!reactive_protocol) {
        for (const char* key : reactive_keys)
            if (keys.has(key)) {
                keys.take(key);
                throw ConfigError("line " + std::to_string(keys.line_of(key)) + ": key '" +
                                  key + "' requires a reactive protocol (TEEN or TSEP)");
            }
    } else {
        ReactiveConfig reactive;
        reactive.report_time = config.frames_per_round;
        reactive.hard_threshold = take_double("hard_threshold", reactive.hard_threshold);
        reactive.soft_threshold = take_double("soft_threshold", reactive.soft_threshold);
        if (auto text = keys.take("attributes")) {
            reactive.attributes = parse_list(*text);
            if (reactive.attributes.empty())
                throw ConfigError("line " + std::to_string(keys.line_of("attributes")) +
                                  ": attributes must name at least one attribute");
        }
        reactive.report_time =
            static_cast<int>(take_int("report_time", reactive.report_time));
        config.reactive = reactive;
    }

    keys.fail_on_leftovers();

    try {
        validate(config);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    return config;
}

}  // namespace

ScenarioConfig load_config_string(const std::string& text) {
    std::istringstream in(text);
    KeyReader keys(parse_lines(in));
    return build_config(keys);
}

ScenarioConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    KeyReader keys(parse_lines(in));
    return build_config(keys);
}

std::string config_schema() {
    return
        "protocol             LEACH|SEP|ESEP|TEEN|TSEP   default LEACH\n"
        "n                    int     default 100        node count\n"
        "field_side           meters  default 100        deployment square side\n"
        "bs_x, bs_y           meters  default field_side/2  base-station position\n"
        "e0                   joules  default 0.5        normal-node initial energy\n"
        "p_opt                -       default 0.1        optimal CH probability\n"
        "m                    -       default 0.1        advanced-node fraction\n"
        "b                    -       default 0.3        intermediate-node fraction\n"
        "alpha                -       default 1.0        advanced energy multiplier\n"
        "mu                   -       default alpha/2    intermediate energy multiplier\n"
        "e_elec               J/bit   default 50e-9      radio electronics energy\n"
        "e_da                 J/bit/signal default 5e-9  aggregation energy\n"
        "eps_fs               J/bit/m^2 default 10e-12   free-space amplifier\n"
        "eps_mp               J/bit/m^4 default 0.0013e-12 multipath amplifier\n"
        "packet_bits          bits    default 4000       data packet size (K)\n"
        "d0                   meters  default sqrt(eps_fs/eps_mp) amplifier crossover\n"
        "ctrl_bits            bits    default 200        control packet size (0 = off)\n"
        "e_sense              J/node/round default 0     idle sensing drain\n"
        "max_rounds           int     default 10000      simulation horizon\n"
        "frames_per_round     int     default 1          member slots per round\n"
        "seed                 uint64  default 1          master RNG seed\n"
        "infinite_energy      bool    default false      disable battery drain\n"
        "hard_threshold       attr    default 50         HT (TEEN/TSEP only)\n"
        "soft_threshold       attr    default 2          ST (TEEN/TSEP only)\n"
        "attributes           list    default temperature  sensed attributes (TEEN/TSEP)\n"
        "report_time          rounds  default frames_per_round  TR (TEEN/TSEP only)\n"
        "field_baseline       attr    default 25         ambient reading\n"
        "event_probability    -       default 0.01       event start chance /node/round\n"
        "event_magnitude_low  attr    default 40         event magnitude range low\n"
        "event_magnitude_high attr    default 80         event magnitude range high\n"
        "event_duration       rounds  default 5          event window length\n"
        "drift_sigma          attr    default 0.05       random-walk step stddev\n";
}

}  // namespace wsn
