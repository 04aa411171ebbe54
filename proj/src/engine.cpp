#include "abicap/engine.hpp"

#include "abicap/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace abicap {

EngagementMode Schedule::mode_at(std::size_t step) const {
  EngagementMode mode = initial_mode;
  for (const ModeSwitch& s : mode_switches) {
    if (s.step <= step) {
      mode = s.mode;
    }
  }
  return mode;
}

std::optional<NodeId> Schedule::forced_node_at(std::size_t step) const {
  for (const ForcedPractice& f : forced_practice) {
    if (f.first_step <= step && step <= f.last_step) {
      return f.node;
    }
  }
  return std::nullopt;
}

bool Schedule::uses_interactive() const {
  return initial_mode == EngagementMode::Interactive ||
         std::any_of(mode_switches.begin(), mode_switches.end(),
                     [](const ModeSwitch& s) { return s.mode == EngagementMode::Interactive; });
}

void RunConfig::validate() const {
  auto fail = [](const std::string& field, const std::string& what) {
    throw FieldError(field, what);
  };
  params.validate();
  if (topology.kind == TopologyKind::SmallWorld) {
    if (topology.node_count < 3) fail("nodes", "small-world graphs need at least 3 nodes");
    if (!(topology.mean_degree > 0.0 &&
          topology.mean_degree < static_cast<double>(topology.node_count))) {
      fail("mean_degree", "must satisfy 0 < mean_degree < nodes");
    }
    if (!(topology.rewire_prob >= 0.0 && topology.rewire_prob <= 1.0)) {
      fail("rewire_prob", "must lie in [0, 1]");
    }
  } else if (topology.node_count < 1) {
    fail("nodes", "graph needs at least one node");
  }
  if (params.node_difficulty.size() > topology.node_count) {
    fail("difficulty", "per-node entries exceed node count");
  }
  if (!(initial_weight >= 0.0 && initial_weight <= 1.0)) {
    fail("initial_weight", "must lie in [0, 1]");
  }
  if (total_steps < 1) fail("steps", "must be at least 1");
  if (agents_per_condition < 1) fail("agents", "must be at least 1");
  if (trace_node && *trace_node >= topology.node_count) {
    fail("trace_node", "node index out of range");
  }
  if (conditions.empty()) fail("condition", "at least one condition is required");
  for (const Condition& c : conditions) {
    const std::string field = "condition." + c.label;
    if (c.label.empty()) fail("condition", "label must not be empty");
    if (std::count_if(conditions.begin(), conditions.end(),
                      [&](const Condition& o) { return o.label == c.label; }) > 1) {
      fail(field, "duplicate label");
    }
    const Schedule& s = c.schedule;
    for (std::size_t k = 0; k < s.mode_switches.size(); ++k) {
      if (k > 0 && s.mode_switches[k].step <= s.mode_switches[k - 1].step) {
        fail(field + ".switch", "switch steps must be strictly increasing");
      }
      if (s.mode_switches[k].step >= total_steps) {
        fail(field + ".switch", "switch step outside [0, steps)");
      }
    }
    for (const ForcedPractice& f : s.forced_practice) {
      if (f.first_step > f.last_step || f.last_step >= total_steps) {
        fail(field + ".force", "forced practice range outside [0, steps)");
      }
      if (f.node >= topology.node_count) fail(field + ".force", "node out of range");
    }
    if (!s.practice_order.empty()) {
      std::vector<NodeId> sorted = s.practice_order;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() ||
          sorted.back() >= topology.node_count) {
        fail(field + ".order", "practice order must list distinct, valid nodes");
      }
    }
    if (s.uses_interactive()) {
      if (agents_per_condition % 2 != 0) {
        fail("agents", "interactive condition '" + c.label + "' needs an even agent count");
      }
      if (!shared_topology) {
        fail("shared_topology", "interactive dyads require a shared topology");
      }
    }
  }
}

const ConditionResult& RunResult::condition(const std::string& label) const {
  for (const ConditionResult& c : conditions) {
    if (c.label == label) return c;
  }
  throw std::out_of_range("no condition named '" + label + "'");
}

std::uint64_t agent_seed(std::uint64_t master_seed, const std::string& label, AgentId agent) {
  return derive_seed(derive_seed(master_seed, label), static_cast<std::uint64_t>(agent));
}

GraphTopology build_topology(const TopologySpec& spec, std::uint64_t master_seed,
                             std::optional<AgentId> agent) {
  if (spec.kind == TopologyKind::Edgeless) {
    return edgeless_topology(spec.node_count);
  }
  std::uint64_t seed = derive_seed(master_seed, "topology");
  if (agent) {
    seed = derive_seed(seed, static_cast<std::uint64_t>(*agent));
  }
  Rng rng(seed);
  return generate_small_world(spec.node_count, spec.mean_degree, spec.rewire_prob, rng);
}

void pair_dyads(std::vector<LearnerState>& agents, Rng& rng) {
  if (agents.size() % 2 != 0) {
    throw std::invalid_argument("cannot pair an odd number of agents into dyads");
  }
  std::vector<std::size_t> slots(agents.size());
  std::iota(slots.begin(), slots.end(), 0);
  rng.shuffle(std::span<std::size_t>(slots));
  for (std::size_t k = 0; k < slots.size(); k += 2) {
    LearnerState& a = agents[slots[k]];
    LearnerState& b = agents[slots[k + 1]];
    a.partner = b.id;
    b.partner = a.id;
  }
}

namespace {

std::vector<NodeId> resolve_order(const Schedule& schedule, std::size_t node_count) {
  if (!schedule.practice_order.empty()) {
    return schedule.practice_order;
  }
  std::vector<NodeId> order(node_count);
  std::iota(order.begin(), order.end(), NodeId{0});
  return order;
}

}  // namespace

ConditionResult run_condition(const Condition& condition, const RunConfig& config,
                              std::span<const GraphTopology> graphs) {
  const std::size_t n_agents = config.agents_per_condition;
  const Schedule& schedule = condition.schedule;
  if (graphs.size() != 1 && graphs.size() != n_agents) {
    throw std::invalid_argument("need one shared topology or one per agent");
  }
  auto graph_of = [&](AgentId a) -> const GraphTopology& {
    return graphs.size() == 1 ? graphs[0] : graphs[a];
  };
  const std::size_t node_count = graphs[0].node_count();
  const std::vector<NodeId> order = resolve_order(schedule, node_count);

  std::vector<LearnerState> agents;
  agents.reserve(n_agents);
  for (AgentId a = 0; a < n_agents; ++a) {
    agents.emplace_back(a, schedule.initial_mode, node_count,
                        init_weights(graph_of(a), config.initial_weight),
                        agent_seed(config.master_seed, condition.label, a));
  }

  // Dyads are fixed for the whole run; partner ids are only visible while
  // the condition is in interactive mode.
  std::vector<std::pair<AgentId, AgentId>> dyads;
  if (schedule.uses_interactive()) {
    Rng pairing(derive_seed(derive_seed(config.master_seed, condition.label), "dyads"));
    pair_dyads(agents, pairing);
    for (const LearnerState& s : agents) {
      if (s.id < *s.partner) dyads.emplace_back(s.id, *s.partner);
    }
  }
  std::vector<std::optional<AgentId>> partners(n_agents);
  for (const LearnerState& s : agents) partners[s.id] = s.partner;

  ConditionResult result;
  result.label = condition.label;
  result.knowledge.assign(config.total_steps, std::vector<std::size_t>(n_agents, 0));

  std::vector<std::optional<NodeId>> practicing(n_agents);
  for (std::size_t step = 0; step < config.total_steps; ++step) {
    const EngagementMode mode = schedule.mode_at(step);
    const std::optional<NodeId> forced = schedule.forced_node_at(step);
    for (LearnerState& s : agents) {
      s.mode = mode;
      s.partner = mode == EngagementMode::Interactive ? partners[s.id] : std::nullopt;
      practicing[s.id] = forced ? forced : current_node(s, order);
    }

    if (mode == EngagementMode::Interactive) {
      for (auto [a, b] : dyads) {
        if (!practicing[a] && !practicing[b]) continue;
        // Dyads share the experiment's single topology.
        practice({&agents[a], practicing[a]}, PracticeTurn{&agents[b], practicing[b]},
                 graphs[0], config.params);
      }
    } else {
      for (LearnerState& s : agents) {
        if (practicing[s.id]) {
          practice({&s, practicing[s.id]}, std::nullopt, graph_of(s.id), config.params);
        }
      }
    }

    for (LearnerState& s : agents) {
      advance_cursor(s, config.params, order);
      result.knowledge[step][s.id] = knowledge_count(s, config.params);
      if (config.trace_node) {
        result.trace.push_back(
            {step + 1, s.id, *config.trace_node, s.mastery[*config.trace_node]});
      }
    }
  }

  result.summary.reserve(config.total_steps);
  for (const auto& row : result.knowledge) {
    result.summary.push_back(summarize(row));
  }
  for (const LearnerState& s : agents) {
    result.final_mastery.push_back(s.mastery);
    result.final_weights.emplace_back(s.weights.values().begin(), s.weights.values().end());
  }
  return result;
}

RunResult run_experiment(const RunConfig& config) {
  config.validate();
  std::vector<GraphTopology> graphs;
  if (config.shared_topology) {
    graphs.push_back(build_topology(config.topology, config.master_seed));
  } else {
    for (AgentId a = 0; a < config.agents_per_condition; ++a) {
      graphs.push_back(build_topology(config.topology, config.master_seed, a));
    }
  }
  RunResult result;
  for (const Condition& c : config.conditions) {
    result.conditions.push_back(run_condition(c, config, graphs));
  }
  return result;
}

StepSummary summarize(std::span<const std::size_t> values) {
  StepSummary out;
  out.n = values.size();
  if (values.empty()) return out;
  // Integer moments keep the result exact and independent of agent order.
  std::uint64_t sum = 0;
  std::uint64_t sum_sq = 0;
  for (std::size_t v : values) {
    sum += v;
    sum_sq += static_cast<std::uint64_t>(v) * v;
  }
  const auto n = static_cast<std::uint64_t>(out.n);
  out.mean = static_cast<double>(sum) / static_cast<double>(n);
  out.sd = std::sqrt(static_cast<double>(n * sum_sq - sum * sum)) / static_cast<double>(n);
  return out;
}

std::vector<SummaryRow> aggregate(const RunResult& result) {
  if (result.conditions.empty()) {
    throw std::invalid_argument("cannot aggregate an empty result");
  }
  std::vector<const ConditionResult*> sorted;
  for (const ConditionResult& c : result.conditions) sorted.push_back(&c);
  std::sort(sorted.begin(), sorted.end(),
            [](const ConditionResult* a, const ConditionResult* b) { return a->label < b->label; });
  std::vector<SummaryRow> rows;
  for (const ConditionResult* c : sorted) {
    for (std::size_t s = 0; s < c->summary.size(); ++s) {
      rows.push_back({c->label, s + 1, c->summary[s].mean, c->summary[s].sd, c->summary[s].n});
    }
  }
  return rows;
}

}  // namespace abicap
