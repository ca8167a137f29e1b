// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "rislink/scenario.hpp"

namespace rislink {

class ScenarioFileError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Parses a flat key-value scenario file ("key = value" lines, '#' comments).
/// Strict: unknown keys, duplicate keys, malformed values and invariant
/// violations are all rejected with file:line:key diagnostics before any
/// computation starts. A use_case key loads that use case's defaults first;
/// every other key overrides one parameter.
ScenarioConfig parse_scenario_file(const std::filesystem::path& path);

/// Same parser on an in-memory buffer; `name` is used in diagnostics.
ScenarioConfig parse_scenario_text(std::string_view text, const std::string& name);

}  // namespace rislink
