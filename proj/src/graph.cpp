#include "abicap/graph.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

namespace abicap {

GraphTopology::GraphTopology(std::size_t node_count, std::vector<Edge> edges)
    : node_count_(node_count), edges_(std::move(edges)) {
  for (Edge& e : edges_) {
    if (e.lo == e.hi) {
      throw std::invalid_argument("self-loop on node " + std::to_string(e.lo));
    }
    if (e.lo >= node_count_ || e.hi >= node_count_) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (e.lo > e.hi) {
      std::swap(e.lo, e.hi);
    }
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw std::invalid_argument("duplicate edge");
  }

  std::vector<std::size_t> degree(node_count_, 0);
  for (const Edge& e : edges_) {
    ++degree[e.lo];
    ++degree[e.hi];
  }
  offsets_.assign(node_count_ + 1, 0);
  for (std::size_t v = 0; v < node_count_; ++v) {
    offsets_[v + 1] = offsets_[v] + degree[v];
  }
  adjacency_.resize(offsets_.back());
  adjacency_edges_.resize(offsets_.back());
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (EdgeId id = 0; id < edges_.size(); ++id) {
    const Edge& e = edges_[id];
    adjacency_[fill[e.lo]] = e.hi;
    adjacency_edges_[fill[e.lo]++] = id;
    adjacency_[fill[e.hi]] = e.lo;
    adjacency_edges_[fill[e.hi]++] = id;
  }
  for (std::size_t v = 0; v < node_count_; ++v) {
    // Sort each row by neighbor, carrying edge ids along.
    std::vector<std::pair<NodeId, EdgeId>> row;
    for (std::size_t k = offsets_[v]; k < offsets_[v + 1]; ++k) {
      row.emplace_back(adjacency_[k], adjacency_edges_[k]);
    }
    std::sort(row.begin(), row.end());
    for (std::size_t k = 0; k < row.size(); ++k) {
      adjacency_[offsets_[v] + k] = row[k].first;
      adjacency_edges_[offsets_[v] + k] = row[k].second;
    }
  }
}

void GraphTopology::check_node(NodeId node) const {
  if (node >= node_count_) {
    throw std::out_of_range("node index " + std::to_string(node) +
                            " out of range for graph with " +
                            std::to_string(node_count_) + " nodes");
  }
}

std::span<const NodeId> GraphTopology::neighbors(NodeId node) const {
  check_node(node);
  return std::span<const NodeId>(adjacency_).subspan(
      offsets_[node], offsets_[node + 1] - offsets_[node]);
}

std::span<const EdgeId> GraphTopology::incident_edges(NodeId node) const {
  check_node(node);
  return std::span<const EdgeId>(adjacency_edges_)
      .subspan(offsets_[node], offsets_[node + 1] - offsets_[node]);
}

std::optional<EdgeId> GraphTopology::find_edge(NodeId a, NodeId b) const {
  if (a == b || a >= node_count_ || b >= node_count_) {
    return std::nullopt;
  }
  const Edge key{std::min(a, b), std::max(a, b)};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) {
    return std::nullopt;
  }
  return static_cast<EdgeId>(it - edges_.begin());
}

double GraphTopology::mean_degree() const noexcept {
  return node_count_ == 0 ? 0.0
                          : 2.0 * static_cast<double>(edges_.size()) /
                                static_cast<double>(node_count_);
}

EdgeWeights::EdgeWeights(std::size_t edge_count, double initial_weight) {
  if (!(initial_weight >= 0.0 && initial_weight <= 1.0)) {
    throw std::invalid_argument("initial edge weight must lie in [0, 1]");
  }
  weights_.assign(edge_count, initial_weight);
}

void EdgeWeights::set(EdgeId id, double value) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw std::invalid_argument("edge weight must lie in [0, 1]");
  }
  weights_.at(id) = value;
}

void EdgeWeights::increase(EdgeId id, double delta) {
  double& w = weights_.at(id);
  w = std::min(1.0, w + delta);
}

GraphTopology generate_small_world(std::size_t node_count, double mean_degree,
                                   double rewire_prob, Rng& rng) {
  if (node_count < 3) {
    throw std::invalid_argument("small-world graph needs at least 3 nodes");
  }
  const double n = static_cast<double>(node_count);
  if (!(mean_degree > 0.0 && mean_degree < n)) {
    throw std::invalid_argument("mean degree must satisfy 0 < mean_degree < node_count");
  }
  if (!(rewire_prob >= 0.0 && rewire_prob <= 1.0)) {
    throw std::invalid_argument("rewire probability must lie in [0, 1]");
  }
  const std::size_t max_edges = node_count * (node_count - 1) / 2;
  const auto target = static_cast<std::size_t>(std::llround(n * mean_degree / 2.0));
  if (target > max_edges) {
    throw std::invalid_argument("mean degree too large for a simple graph");
  }

  const auto half_lattice = static_cast<std::size_t>(std::floor(mean_degree / 2.0));
  std::set<Edge> edges;
  for (NodeId u = 0; u < node_count; ++u) {
    for (std::size_t j = 1; j <= half_lattice; ++j) {
      const NodeId v = (u + j) % node_count;
      const Edge e{std::min(u, v), std::max(u, v)};
      edges.insert(e);
    }
  }

  // Extra edges: sampled without replacement from the sorted non-edge list.
  if (target > edges.size()) {
    std::vector<Edge> free;
    for (NodeId a = 0; a < node_count; ++a) {
      for (NodeId b = a + 1; b < node_count; ++b) {
        if (!edges.contains(Edge{a, b})) {
          free.push_back(Edge{a, b});
        }
      }
    }
    const std::size_t extra = target - edges.size();
    for (std::size_t k = 0; k < extra; ++k) {
      const std::size_t pick = k + rng.uniform_index(free.size() - k);
      std::swap(free[k], free[pick]);
      edges.insert(free[k]);
    }
  }

  // Rewire lattice edges (u, u+j), keeping u as the fixed endpoint.
  for (NodeId u = 0; u < node_count; ++u) {
    for (std::size_t j = 1; j <= half_lattice; ++j) {
      const NodeId v = (u + j) % node_count;
      const Edge original{std::min(u, v), std::max(u, v)};
      if (!rng.bernoulli(rewire_prob)) {
        continue;
      }
      if (!edges.contains(original)) {
        continue;
      }
      std::vector<NodeId> candidates;
      for (NodeId w = 0; w < node_count; ++w) {
        if (w != u && !edges.contains(Edge{std::min(u, w), std::max(u, w)})) {
          candidates.push_back(w);
        }
      }
      if (candidates.empty()) {
        continue;
      }
      const NodeId w = candidates[rng.uniform_index(candidates.size())];
      edges.erase(original);
      edges.insert(Edge{std::min(u, w), std::max(u, w)});
    }
  }
  return GraphTopology(node_count, std::vector<Edge>(edges.begin(), edges.end()));
}

GraphTopology edgeless_topology(std::size_t node_count) {
  if (node_count < 1) {
    throw std::invalid_argument("graph needs at least one node");
  }
  return GraphTopology(node_count, {});
}

EdgeWeights init_weights(const GraphTopology& topology, double initial_weight) {
  return EdgeWeights(topology.edge_count(), initial_weight);
}

}  // namespace abicap
