#include "abicap/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "abicap/error.hpp"
#include "abicap/scenarios.hpp"

namespace abicap {

ConfigError::ConfigError(std::string field, std::size_t line, const std::string& message)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
      field_(std::move(field)),
      line_(line) {}

namespace {

struct KeyInfo {
  std::string key;
  std::string section;
};

const std::vector<KeyInfo>& key_table() {
  static const std::vector<KeyInfo> table{
      {"topology", "graph"},         {"nodes", "graph"},
      {"mean_degree", "graph"},      {"rewire_prob", "graph"},
      {"initial_weight", "graph"},   {"shared_topology", "graph"},
      {"difficulty", "params"},      {"cl_passive", "params"},
      {"cl_active", "params"},       {"cl_constructive", "params"},
      {"cl_interactive", "params"},  {"gain", "params"},
      {"mastery_threshold", "params"}, {"reinforce_first", "params"},
      {"reinforce_second", "params"}, {"interactive_reinforce", "params"},
      {"agents", "run"},             {"steps", "run"},
      {"seed", "run"},               {"trace_node", "run"},
  };
  return table;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void bad_value(std::string_view key, std::string_view value, const char* expected) {
  throw ConfigError(std::string(key), 0,
                    std::string(key) + ": invalid value '" + std::string(value) + "' (expected " +
                        expected + ")");
}

double to_real(std::string_view key, std::string_view value) {
  double out{};
  value = trim(value);
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc{} || ptr != value.data() + value.size()) bad_value(key, value, "a number");
  return out;
}

std::uint64_t to_u64(std::string_view key, std::string_view value) {
  std::uint64_t out{};
  value = trim(value);
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc{} || ptr != value.data() + value.size()) {
    bad_value(key, value, "a non-negative integer");
  }
  return out;
}

std::size_t to_size(std::string_view key, std::string_view value) {
  return static_cast<std::size_t>(to_u64(key, value));
}

bool to_bool(std::string_view key, std::string_view value) {
  value = trim(value);
  if (value == "true" || value == "1" || value == "yes" || value == "on") return true;
  if (value == "false" || value == "0" || value == "no" || value == "off") return false;
  bad_value(key, value, "true or false");
}

std::vector<std::string_view> split_list(std::string_view value) {
  std::vector<std::string_view> out;
  while (!value.empty()) {
    const auto comma = value.find(',');
    const auto item = trim(value.substr(0, comma));
    if (!item.empty()) out.push_back(item);
    if (comma == std::string_view::npos) break;
    value.remove_prefix(comma + 1);
  }
  return out;
}

EngagementMode to_mode(std::string_view key, std::string_view value) {
  try {
    return parse_mode(trim(value));
  } catch (const std::invalid_argument&) {
    bad_value(key, value, "passive, active, constructive or interactive");
  }
}

// "20:active, 30:passive"
std::vector<ModeSwitch> to_switches(std::string_view key, std::string_view value) {
  std::vector<ModeSwitch> out;
  for (auto item : split_list(value)) {
    const auto colon = item.find(':');
    if (colon == std::string_view::npos) bad_value(key, item, "step:mode");
    out.push_back({to_size(key, item.substr(0, colon)), to_mode(key, item.substr(colon + 1))});
  }
  return out;
}

// "20-24:3, 30:0"
std::vector<ForcedPractice> to_forced(std::string_view key, std::string_view value) {
  std::vector<ForcedPractice> out;
  for (auto item : split_list(value)) {
    const auto colon = item.find(':');
    if (colon == std::string_view::npos) bad_value(key, item, "first-last:node");
    const auto range = trim(item.substr(0, colon));
    const auto dash = range.find('-');
    ForcedPractice f{};
    f.first_step = to_size(key, range.substr(0, dash));
    f.last_step = dash == std::string_view::npos ? f.first_step
                                                 : to_size(key, range.substr(dash + 1));
    f.node = to_size(key, item.substr(colon + 1));
    out.push_back(f);
  }
  return out;
}

Condition& condition_named(RunConfig& config, const std::string& label) {
  for (Condition& c : config.conditions) {
    if (c.label == label) return c;
  }
  Condition c;
  c.label = label;
  config.conditions.push_back(std::move(c));
  return config.conditions.back();
}

void apply_condition_setting(RunConfig& config, std::string_view key, std::string_view value) {
  // condition.<label>.<field>; labels may not contain '.'
  const auto rest = key.substr(std::string_view("condition.").size());
  const auto dot = rest.rfind('.');
  if (dot == std::string_view::npos || dot == 0) {
    throw ConfigError(std::string(key), 0,
                      "malformed condition key '" + std::string(key) +
                          "' (expected condition.<label>.mode|switch|force|order)");
  }
  const std::string label(rest.substr(0, dot));
  const auto field = rest.substr(dot + 1);
  if (field != "mode" && field != "switch" && field != "force" && field != "order") {
    throw ConfigError(std::string(key), 0,
                      "unknown condition field '" + std::string(field) +
                          "' (expected mode, switch, force or order)");
  }
  Schedule& s = condition_named(config, label).schedule;
  if (field == "mode") {
    s.initial_mode = to_mode(key, value);
  } else if (field == "switch") {
    s.mode_switches = to_switches(key, value);
  } else if (field == "force") {
    s.forced_practice = to_forced(key, value);
  } else {
    s.practice_order.clear();
    for (auto item : split_list(value)) s.practice_order.push_back(to_size(key, item));
  }
}

}  // namespace

const std::vector<std::string>& setting_keys() {
  static const std::vector<std::string> keys = [] {
    std::vector<std::string> out;
    for (const KeyInfo& k : key_table()) out.push_back(k.key);
    return out;
  }();
  return keys;
}

void apply_setting(RunConfig& config, std::string_view key, std::string_view value) {
  value = trim(value);
  ModelParams& p = config.params;
  if (key.starts_with("condition.")) {
    apply_condition_setting(config, key, value);
  } else if (key.starts_with("difficulty.")) {
    const std::size_t node = to_size(key, key.substr(std::string_view("difficulty.").size()));
    if (p.node_difficulty.size() <= node) p.node_difficulty.resize(node + 1, p.difficulty);
    p.node_difficulty[node] = to_real(key, value);
  } else if (key == "topology") {
    if (value == "small_world") {
      config.topology.kind = TopologyKind::SmallWorld;
    } else if (value == "edgeless") {
      config.topology.kind = TopologyKind::Edgeless;
    } else {
      bad_value(key, value, "small_world or edgeless");
    }
  } else if (key == "nodes") {
    config.topology.node_count = to_size(key, value);
  } else if (key == "mean_degree") {
    config.topology.mean_degree = to_real(key, value);
  } else if (key == "rewire_prob") {
    config.topology.rewire_prob = to_real(key, value);
  } else if (key == "initial_weight") {
    config.initial_weight = to_real(key, value);
  } else if (key == "shared_topology") {
    config.shared_topology = to_bool(key, value);
  } else if (key == "difficulty") {
    p.difficulty = to_real(key, value);
  } else if (key == "cl_passive") {
    p.cognitive_load[0] = to_real(key, value);
  } else if (key == "cl_active") {
    p.cognitive_load[1] = to_real(key, value);
  } else if (key == "cl_constructive") {
    p.cognitive_load[2] = to_real(key, value);
  } else if (key == "cl_interactive") {
    p.cognitive_load[3] = to_real(key, value);
  } else if (key == "gain") {
    p.gain = to_real(key, value);
  } else if (key == "mastery_threshold") {
    p.mastery_threshold = to_real(key, value);
  } else if (key == "reinforce_first") {
    p.reinforce_increments[0] = to_real(key, value);
  } else if (key == "reinforce_second") {
    p.reinforce_increments[1] = to_real(key, value);
  } else if (key == "interactive_reinforce") {
    p.interactive_reinforce = to_bool(key, value);
  } else if (key == "agents") {
    config.agents_per_condition = to_size(key, value);
  } else if (key == "steps") {
    config.total_steps = to_size(key, value);
  } else if (key == "seed") {
    config.master_seed = to_u64(key, value);
  } else if (key == "trace_node") {
    if (value == "none") {
      config.trace_node.reset();
    } else {
      config.trace_node = to_size(key, value);
    }
  } else {
    std::string known;
    for (const auto& k : setting_keys()) known += (known.empty() ? "" : ", ") + k;
    throw ConfigError(std::string(key), 0,
                      "unknown setting '" + std::string(key) + "' (known: " + known +
                          ", difficulty.<node>, condition.<label>.<field>)");
  }
}

void apply_override(RunConfig& config, std::string_view assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string_view::npos) {
    throw ConfigError(std::string(assignment), 0,
                      "override '" + std::string(assignment) + "' is not of the form key=value");
  }
  apply_setting(config, trim(assignment.substr(0, eq)), assignment.substr(eq + 1));
}

RunConfig load_config_text(std::string_view text) {
  RunConfig config = scenario_icap_baseline();
  bool custom_conditions = false;
  std::string section;
  std::string condition_prefix;
  std::map<std::string, std::size_t> key_lines;

  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') {
        throw ConfigError("", line_no, "unterminated section header");
      }
      const auto name = trim(line.substr(1, line.size() - 2));
      condition_prefix.clear();
      if (name == "graph" || name == "params" || name == "run") {
        section = std::string(name);
      } else if (name.starts_with("condition ") || name.starts_with("condition\t")) {
        const auto label = trim(name.substr(std::string_view("condition").size()));
        if (label.empty() || label.find('.') != std::string_view::npos ||
            label.find(',') != std::string_view::npos) {
          throw ConfigError("condition", line_no,
                            "condition label must be non-empty without '.' or ','");
        }
        if (!custom_conditions) {
          config.conditions.clear();
          custom_conditions = true;
        }
        section = "condition";
        condition_prefix = "condition." + std::string(label) + ".";
        condition_named(config, std::string(label));
      } else {
        throw ConfigError(std::string(name), line_no,
                          "unknown section [" + std::string(name) +
                              "] (expected graph, params, run or condition <label>)");
      }
      continue;
    }

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("", line_no, "expected 'key = value'");
    }
    const std::string key(trim(line.substr(0, eq)));
    const auto value = line.substr(eq + 1);
    std::string full_key = key;
    if (section == "condition") {
      full_key = condition_prefix + key;
    } else if (!section.empty()) {
      const auto& table = key_table();
      auto it = std::find_if(table.begin(), table.end(),
                             [&](const KeyInfo& k) { return k.key == key; });
      const bool per_node = section == "params" && key.starts_with("difficulty.");
      if (!per_node && it != table.end() && it->section != section) {
        throw ConfigError(key, line_no,
                          "key '" + key + "' belongs in [" + it->section + "], not [" +
                              section + "]");
      }
    }
    try {
      apply_setting(config, full_key, value);
    } catch (const ConfigError& e) {
      throw ConfigError(e.field(), line_no, e.what());
    }
    key_lines[full_key] = line_no;
  }

  try {
    config.validate();
  } catch (const FieldError& e) {
    // Report the most recent line that set the field or one of its parts.
    std::size_t line = 0;
    for (const auto& [key, at] : key_lines) {
      if (key == e.field() || key.starts_with(e.field() + "_") ||
          key.starts_with(e.field() + ".")) {
        line = std::max(line, at);
      }
    }
    throw ConfigError(e.field(), line, e.what());
  }
  return config;
}

RunConfig load_config_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ConfigError("", 0, "cannot read config file '" + path.string() + "'");
  }
  std::ostringstream text;
  text << in.rdbuf();
  return load_config_text(text.str());
}

}  // namespace abicap
