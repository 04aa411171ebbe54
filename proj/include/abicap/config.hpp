#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "abicap/engine.hpp"

namespace abicap {

/// Parse or validation failure in a config file or override. `line` is 0
/// when the problem is not tied to a line (e.g. a --set override).
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, std::size_t line, const std::string& message);

  const std::string& field() const noexcept { return field_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::string field_;
  std::size_t line_;
};

/// Every scalar key accepted by apply_setting, in documentation order.
/// Per-node difficulty ("difficulty.<node>") and condition keys
/// ("condition.<label>.mode|switch|force|order") are accepted in addition.
const std::vector<std::string>& setting_keys();

/// Applies one key=value assignment. Throws ConfigError (line 0) on unknown
/// keys or malformed values. Does not run cross-field validation.
void apply_setting(RunConfig& config, std::string_view key, std::string_view value);

/// Parses "key=value" as given to --set.
void apply_override(RunConfig& config, std::string_view assignment);

/// Parses an INI-style document:
///
///   # comment
///   nodes = 10              # keys may appear before any section
///   [graph]                 # topology, nodes, mean_degree, rewire_prob, ...
///   [params]                # difficulty, cl_*, gain, mastery_threshold, ...
///   [run]                   # agents, steps, seed, trace_node
///   [condition moreFP]      # mode, switch, force, order
///
/// Missing keys keep the icap_baseline defaults. Declaring any condition
/// replaces the default four. The result is validated; errors carry the
/// line of the offending key.
RunConfig load_config_text(std::string_view text);
RunConfig load_config_file(const std::filesystem::path& path);

}  // namespace abicap
