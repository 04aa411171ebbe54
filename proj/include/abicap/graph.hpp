#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "abicap/rng.hpp"

namespace abicap {

using NodeId = std::size_t;
using EdgeId = std::size_t;

/// Undirected edge stored with lo < hi.
struct Edge {
  NodeId lo;
  NodeId hi;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Shared, immutable node/edge structure of a knowledge-component graph.
///
/// Edges are canonicalized (lo < hi) and sorted, so an EdgeId is stable for a
/// given edge set regardless of the order edges were supplied in.
class GraphTopology {
 public:
  /// Throws std::invalid_argument on self-loops, duplicates, or
  /// out-of-range endpoints.
  GraphTopology(std::size_t node_count, std::vector<Edge> edges);

  std::size_t node_count() const noexcept { return node_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId id) const { return edges_.at(id); }

  /// Ascending neighbor list of `node`. Throws std::out_of_range.
  std::span<const NodeId> neighbors(NodeId node) const;
  /// Edge ids parallel to neighbors(node).
  std::span<const EdgeId> incident_edges(NodeId node) const;
  std::size_t degree(NodeId node) const { return neighbors(node).size(); }

  std::optional<EdgeId> find_edge(NodeId a, NodeId b) const;
  bool has_edge(NodeId a, NodeId b) const { return find_edge(a, b).has_value(); }

  double mean_degree() const noexcept;

 private:
  void check_node(NodeId node) const;

  std::size_t node_count_;
  std::vector<Edge> edges_;
  // CSR adjacency, neighbors sorted ascending within each row.
  std::vector<std::size_t> offsets_;
  std::vector<NodeId> adjacency_;
  std::vector<EdgeId> adjacency_edges_;
};

/// Per-agent edge strengths in [0, 1], indexed by EdgeId of one topology.
class EdgeWeights {
 public:
  EdgeWeights() = default;
  EdgeWeights(std::size_t edge_count, double initial_weight);

  std::size_t size() const noexcept { return weights_.size(); }
  double operator[](EdgeId id) const { return weights_.at(id); }
  std::span<const double> values() const noexcept { return weights_; }

  /// Sets a weight; throws std::invalid_argument outside [0, 1].
  void set(EdgeId id, double value);
  /// Adds `delta` (>= 0) and clamps to 1.
  void increase(EdgeId id, double delta);

  friend bool operator==(const EdgeWeights&, const EdgeWeights&) = default;

 private:
  std::vector<double> weights_;
};

/// Watts-Strogatz style small-world graph with exactly
/// round(node_count * mean_degree / 2) edges.
///
/// Odd or fractional mean degrees are handled by building a ring lattice of
/// even degree 2*floor(mean_degree/2), adding uniformly random extra edges up
/// to the target count, then rewiring each lattice edge with probability
/// `rewire_prob` to a uniformly random endpoint that is neither the source
/// node nor one of its current neighbors.
GraphTopology generate_small_world(std::size_t node_count, double mean_degree,
                                   double rewire_prob, Rng& rng);

GraphTopology edgeless_topology(std::size_t node_count);

EdgeWeights init_weights(const GraphTopology& topology, double initial_weight);

}  // namespace abicap
