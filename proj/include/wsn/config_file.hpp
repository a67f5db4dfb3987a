#pragma once

#include <stdexcept>
#include <string>

#include "wsn/scenario.hpp"

namespace wsn {

/// Config-file or validation failure; the message carries the line number for
/// parse errors and the violated invariant for validation errors.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Loads a scenario from a line-oriented `key = value` file ('#' comments).
/// Missing keys take their documented defaults; unknown and duplicate keys
/// are errors. See config_schema() for the full key list.
ScenarioConfig load_config(const std::string& path);

/// Same parser over an in-memory string (tests, presets).
ScenarioConfig load_config_string(const std::string& text);

/// Human-readable schema: one line per key with type, default, and unit.
std::string config_schema();

}  // namespace wsn
