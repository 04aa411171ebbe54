#include "abicap/learner.hpp"

#include "abicap/error.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace abicap {

std::string_view to_string(EngagementMode mode) noexcept {
  switch (mode) {
    case EngagementMode::Passive:
      return "passive";
    case EngagementMode::Active:
      return "active";
    case EngagementMode::Constructive:
      return "constructive";
    case EngagementMode::Interactive:
      return "interactive";
  }
  return "unknown";
}

EngagementMode parse_mode(std::string_view name) {
  for (EngagementMode m : kAllModes) {
    if (to_string(m) == name) {
      return m;
    }
  }
  throw std::invalid_argument("unknown engagement mode '" + std::string(name) +
                              "' (expected passive, active, constructive or interactive)");
}

void ModelParams::validate() const {
  auto require = [](bool ok, const char* field, const char* what) {
    if (!ok) throw FieldError(field, what);
  };
  require(std::isfinite(difficulty), "difficulty", "must be finite");
  for (double b : node_difficulty) {
    require(std::isfinite(b), "difficulty", "per-node difficulty must be finite");
  }
  for (double c : cognitive_load) {
    require(std::isfinite(c), "cl", "cognitive load must be finite");
  }
  require(cognitive_load[0] < cognitive_load[1] && cognitive_load[1] < cognitive_load[2] &&
              cognitive_load[2] < cognitive_load[3],
          "cl",
          "cognitive load must strictly increase with engagement "
          "(cl_passive < cl_active < cl_constructive < cl_interactive)");
  require(gain > 0.0 && std::isfinite(gain), "gain", "must be positive");
  require(mastery_threshold > 0.0 && mastery_threshold < 1.0, "mastery_threshold",
          "must lie in (0, 1)");
  require(reinforce_increments[0] >= 0.0, "reinforce_first", "must be non-negative");
  require(reinforce_increments[1] >= 0.0, "reinforce_second", "must be non-negative");
}

LearnerState::LearnerState(AgentId agent_id, EngagementMode initial_mode,
                           std::size_t node_count, EdgeWeights initial_weights,
                           std::uint64_t seed)
    : id(agent_id),
      mode(initial_mode),
      mastery(node_count, 0.0),
      weights(std::move(initial_weights)),
      rng(seed) {}

double sigmoid(double x) noexcept { return 1.0 / (1.0 + std::exp(-x)); }

double mastery_update(const LearnerState& learner, NodeId node,
                      const GraphTopology& topology, const ModelParams& params) {
  double support = 0.0;
  if (learner.mode != EngagementMode::Passive) {
    const auto nbrs = topology.neighbors(node);
    const auto edges = topology.incident_edges(node);
    for (std::size_t k = 0; k < nbrs.size(); ++k) {
      support += learner.mastery[nbrs[k]] * learner.weights[edges[k]];
    }
  }
  const double drive = params.gain * (learner.mastery.at(node) + support);
  return sigmoid(drive - (params.difficulty_of(node) + params.load(learner.mode)));
}

void reinforce_edges(LearnerState& learner, NodeId node, const GraphTopology& topology,
                     std::span<const double, 2> increments) {
  const auto edges = topology.incident_edges(node);
  if (edges.empty()) {
    return;
  }
  const std::size_t first = learner.rng.uniform_index(edges.size());
  learner.weights.increase(edges[first], increments[0]);
  if (edges.size() < 2) {
    return;
  }
  std::size_t second = learner.rng.uniform_index(edges.size() - 1);
  if (second >= first) {
    ++second;
  }
  learner.weights.increase(edges[second], increments[1]);
}

namespace {

void share_edge(LearnerState& a, LearnerState& b, EdgeId edge, double increment) {
  const double wa = a.weights[edge];
  const double wb = b.weights[edge];
  if (wa == wb) {
    a.weights.increase(edge, increment);
    b.weights.increase(edge, increment);
  } else {
    const double best = std::max(wa, wb);
    a.weights.set(edge, best);
    b.weights.set(edge, best);
  }
}

}  // namespace

void interactive_exchange(LearnerState& a, std::optional<NodeId> node_a, LearnerState& b,
                          std::optional<NodeId> node_b, const GraphTopology& topology,
                          const ModelParams& params) {
  if (a.mode != EngagementMode::Interactive || b.mode != EngagementMode::Interactive) {
    throw std::invalid_argument("interactive exchange requires two interactive learners");
  }
  if (a.partner != b.id || b.partner != a.id || a.id == b.id) {
    throw std::invalid_argument("interactive exchange requires mutually partnered learners");
  }
  for (double increment : params.reinforce_increments) {
    for (auto [peer, node] : {std::pair{&a, node_a}, std::pair{&b, node_b}}) {
      if (!node) {
        continue;
      }
      const auto edges = topology.incident_edges(*node);
      if (edges.empty()) {
        continue;
      }
      share_edge(a, b, edges[peer->rng.uniform_index(edges.size())], increment);
    }
  }
}

void practice(PracticeTurn self, std::optional<PracticeTurn> partner,
              const GraphTopology& topology, const ModelParams& params) {
  LearnerState& learner = *self.learner;
  const bool interactive = learner.mode == EngagementMode::Interactive;
  if (interactive && !partner) {
    throw std::invalid_argument("interactive practice requires a partner");
  }
  if (!interactive && partner) {
    throw std::invalid_argument("only interactive learners practice with a partner");
  }

  // Both mastery updates read pre-step weights.
  if (self.node) {
    learner.mastery[*self.node] = mastery_update(learner, *self.node, topology, params);
  }
  if (partner && partner->node) {
    LearnerState& other = *partner->learner;
    other.mastery[*partner->node] = mastery_update(other, *partner->node, topology, params);
  }

  switch (learner.mode) {
    case EngagementMode::Passive:
    case EngagementMode::Active:
      break;
    case EngagementMode::Constructive:
      if (self.node) {
        reinforce_edges(learner, *self.node, topology, params.reinforce_increments);
      }
      break;
    case EngagementMode::Interactive:
      if (params.interactive_reinforce) {
        for (const PracticeTurn& turn : {self, *partner}) {
          if (turn.node) {
            reinforce_edges(*turn.learner, *turn.node, topology, params.reinforce_increments);
          }
        }
      }
      interactive_exchange(learner, self.node, *partner->learner, partner->node, topology,
                           params);
      break;
  }
}

void advance_cursor(LearnerState& learner, const ModelParams& params,
                    std::span<const NodeId> order) {
  while (learner.cursor < order.size() &&
         learner.mastery.at(order[learner.cursor]) > params.mastery_threshold) {
    ++learner.cursor;
  }
}

std::optional<NodeId> current_node(const LearnerState& learner, std::span<const NodeId> order) {
  if (learner.cursor >= order.size()) {
    return std::nullopt;
  }
  return order[learner.cursor];
}

std::size_t knowledge_count(const LearnerState& learner, const ModelParams& params) {
  return static_cast<std::size_t>(
      std::count_if(learner.mastery.begin(), learner.mastery.end(),
                    [&](double m) { return m > params.mastery_threshold; }));
}

}  // namespace abicap
