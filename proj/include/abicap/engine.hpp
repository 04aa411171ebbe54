#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "abicap/graph.hpp"
#include "abicap/learner.hpp"

namespace abicap {

struct ModeSwitch {
  std::size_t step;  // first step (0-based) that runs in `mode`
  EngagementMode mode;

  friend bool operator==(const ModeSwitch&, const ModeSwitch&) = default;
};

/// Steps [first_step, last_step] practice `node` regardless of the cursor.
struct ForcedPractice {
  std::size_t first_step;
  std::size_t last_step;
  NodeId node;

  friend bool operator==(const ForcedPractice&, const ForcedPractice&) = default;
};

struct Schedule {
  EngagementMode initial_mode = EngagementMode::Passive;
  std::vector<ModeSwitch> mode_switches;
  std::vector<ForcedPractice> forced_practice;
  /// Node practice order. Empty means ascending node index.
  std::vector<NodeId> practice_order;

  EngagementMode mode_at(std::size_t step) const;
  std::optional<NodeId> forced_node_at(std::size_t step) const;
  bool uses_interactive() const;

  friend bool operator==(const Schedule&, const Schedule&) = default;
};

struct Condition {
  std::string label;
  Schedule schedule;

  friend bool operator==(const Condition&, const Condition&) = default;
};

enum class TopologyKind { SmallWorld, Edgeless };

struct TopologySpec {
  TopologyKind kind = TopologyKind::SmallWorld;
  std::size_t node_count = 20;
  double mean_degree = 3.0;
  double rewire_prob = 0.0;

  friend bool operator==(const TopologySpec&, const TopologySpec&) = default;
};

struct RunConfig {
  TopologySpec topology;
  double initial_weight = 0.1;
  ModelParams params;
  std::size_t agents_per_condition = 50;
  std::size_t total_steps = 40;
  std::vector<Condition> conditions;
  std::uint64_t master_seed = 42;
  /// One graph per experiment (true) or one per agent id (false). In the
  /// per-agent case agent k sees the same graph in every condition.
  bool shared_topology = true;
  /// When set, the mastery of this node is recorded for every agent and step.
  std::optional<NodeId> trace_node;

  /// Throws std::invalid_argument naming the offending field.
  void validate() const;
};

struct MasterySample {
  std::size_t step;  // 1-based: number of completed steps
  AgentId agent;
  NodeId node;
  double mastery;
};

struct StepSummary {
  double mean = 0.0;
  double sd = 0.0;  // population convention (divide by n)
  std::size_t n = 0;
};

struct ConditionResult {
  std::string label;
  /// knowledge[s][a]: KCs above threshold for agent a after s+1 steps.
  std::vector<std::vector<std::size_t>> knowledge;
  std::vector<StepSummary> summary;
  std::vector<std::vector<double>> final_mastery;
  std::vector<std::vector<double>> final_weights;
  std::vector<MasterySample> trace;
};

struct RunResult {
  std::vector<ConditionResult> conditions;

  const ConditionResult& condition(const std::string& label) const;
};

struct SummaryRow {
  std::string condition;
  std::size_t step;  // 1-based
  double mean;
  double sd;
  std::size_t n;
};

/// Seed for agent `agent` of condition `label`:
/// derive_seed(derive_seed(master, fnv1a64(label)), agent).
std::uint64_t agent_seed(std::uint64_t master_seed, const std::string& label, AgentId agent);

/// Builds the topology an experiment uses (agent = nullopt for shared graphs).
GraphTopology build_topology(const TopologySpec& spec, std::uint64_t master_seed,
                             std::optional<AgentId> agent = std::nullopt);

/// Uniformly random perfect matching; sets symmetric partner ids.
void pair_dyads(std::vector<LearnerState>& agents, Rng& rng);

/// `graphs` holds either one shared topology or one per agent.
ConditionResult run_condition(const Condition& condition, const RunConfig& config,
                              std::span<const GraphTopology> graphs);

RunResult run_experiment(const RunConfig& config);

StepSummary summarize(std::span<const std::size_t> values);

/// Rows sorted by (condition label, step). Throws on an empty result.
std::vector<SummaryRow> aggregate(const RunResult& result);

}  // namespace abicap
