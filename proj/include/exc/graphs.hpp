#pragma once

#include <utility>
#include <vector>

#include "exc/subsets.hpp"

namespace exc {

// Simple undirected graph as a sorted list of edges {i, j} with i < j,
// vertices positive integers. The vertex set is the support of the edges.
class EdgeGraph {
 public:
  EdgeGraph() = default;
  explicit EdgeGraph(std::vector<std::pair<int, int>> edges);

  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  std::vector<int> vertices() const;  // sorted support
  int degree(int v) const;
  bool has_edge(int a, int b) const;

  bool operator==(const EdgeGraph& o) const { return edges_ == o.edges_; }
  bool operator<(const EdgeGraph& o) const { return edges_ < o.edges_; }

  // BFS distance in the graph; -1 when disconnected.
  int distance(int u, int v) const;

  // Relabel vertices by the given map (must be injective on the support).
  EdgeGraph relabeled(const std::vector<std::pair<int, int>>& vertex_map) const;

 private:
  std::vector<std::pair<int, int>> edges_;
};

// Replace edge e = {u,v} by {u, v'} with v' a fresh vertex; v keeps its
// other edges. Edge count is preserved.
EdgeGraph cut(const EdgeGraph& g, std::pair<int, int> e, int v);

// Identify vertices u and v; requires distance at least three so the result
// stays simple.
EdgeGraph glue(const EdgeGraph& g, int u, int v);

// Canonical labeling on {1..v} by color refinement with backtracking over
// symmetric cells; isomorphic graphs map to the identical edge list.
EdgeGraph canonical_graph(const EdgeGraph& g);

struct BasisTypePoset {
  std::vector<EdgeGraph> nodes;               // canonical forms
  std::vector<std::pair<int, int>> covers;    // (node, one of its cuts)
  std::vector<int> maximal;                   // indices of the maximal nodes
};

// The poset of basis types of the k=2, m=2 wedge matroid under cutting,
// generated from its three maximal graphs.
BasisTypePoset basis_type_poset();

// Named generators of the poset.
EdgeGraph k4_graph();
EdgeGraph house_graph();
EdgeGraph six_cycle_graph();
EdgeGraph star_graph(int center, int leaves_from, int count);

}  // namespace exc
