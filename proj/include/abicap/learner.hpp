#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "abicap/graph.hpp"
#include "abicap/rng.hpp"

namespace abicap {

enum class EngagementMode { Passive = 0, Active = 1, Constructive = 2, Interactive = 3 };

inline constexpr std::array<EngagementMode, 4> kAllModes{
    EngagementMode::Passive, EngagementMode::Active, EngagementMode::Constructive,
    EngagementMode::Interactive};

std::string_view to_string(EngagementMode mode) noexcept;
/// Accepts lowercase names ("passive", ...); throws std::invalid_argument.
EngagementMode parse_mode(std::string_view name);

using AgentId = std::size_t;

struct ModelParams {
  /// Difficulty b shared by every node; see node_difficulty for overrides.
  double difficulty = 0.6;
  /// Optional per-node difficulty. Empty means `difficulty` everywhere.
  std::vector<double> node_difficulty;
  /// Cognitive load per mode, indexed by EngagementMode.
  std::array<double, 4> cognitive_load{0.5, 0.6, 0.7, 0.8};
  double gain = 3.5;
  double mastery_threshold = 0.8;
  /// Increments for the first and second reinforced edge. The interactive
  /// exchange uses the same pair for its two rounds.
  std::array<double, 2> reinforce_increments{0.15, 0.10};
  /// Also run constructive reinforcement for interactive learners, before the
  /// exchange. Off by default.
  bool interactive_reinforce = false;

  double difficulty_of(NodeId node) const {
    return node < node_difficulty.size() ? node_difficulty[node] : difficulty;
  }
  double load(EngagementMode mode) const {
    return cognitive_load[static_cast<std::size_t>(mode)];
  }

  /// Throws std::invalid_argument naming the offending field.
  void validate() const;
};

struct LearnerState {
  LearnerState(AgentId id, EngagementMode mode, std::size_t node_count,
               EdgeWeights weights, std::uint64_t seed);

  AgentId id;
  EngagementMode mode;
  std::vector<double> mastery;
  EdgeWeights weights;
  /// Position in the practice order; equal to order.size() once exhausted.
  std::size_t cursor = 0;
  std::optional<AgentId> partner;
  Rng rng;
};

double sigmoid(double x) noexcept;

/// New mastery of `node` after one practice, using the learner's own weights.
/// Only Passive ignores neighbor support.
double mastery_update(const LearnerState& learner, NodeId node,
                      const GraphTopology& topology, const ModelParams& params);

/// Reinforces up to two distinct edges incident to `node`, drawn uniformly
/// without replacement from the learner's stream. The first draw gets the
/// first increment, the second draw the second.
void reinforce_edges(LearnerState& learner, NodeId node, const GraphTopology& topology,
                     std::span<const double, 2> increments);

/// Two rounds of dyad weight sharing. A peer with no practicing node
/// (std::nullopt) or an isolated practicing node skips its pick.
void interactive_exchange(LearnerState& a, std::optional<NodeId> node_a, LearnerState& b,
                          std::optional<NodeId> node_b, const GraphTopology& topology,
                          const ModelParams& params);

struct PracticeTurn {
  LearnerState* learner;
  std::optional<NodeId> node;
};

/// One practice step: mastery update for each participant, then the
/// mode-specific weight dynamics. A partner is required iff self is
/// Interactive.
void practice(PracticeTurn self, std::optional<PracticeTurn> partner,
              const GraphTopology& topology, const ModelParams& params);

/// Moves the cursor past every node in `order` whose mastery is above the
/// threshold.
void advance_cursor(LearnerState& learner, const ModelParams& params,
                    std::span<const NodeId> order);

std::optional<NodeId> current_node(const LearnerState& learner, std::span<const NodeId> order);

std::size_t knowledge_count(const LearnerState& learner, const ModelParams& params);

}  // namespace abicap
