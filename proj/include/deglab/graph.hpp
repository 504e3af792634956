#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "deglab/reduction.hpp"

namespace deglab {

struct GraphEdge {
  int from = 0, to = 0;
  int degree = 0;
  Position pos;
};

// Reduction graph: vertices are alpha-classes of terms reachable from the
// root (vertex 0), edges are steps. Parallel edges are kept; two steps out
// of the same vertex with alpha-equal targets are still distinct edges.
class ReductionGraph {
 public:
  const std::vector<TermPtr>& vertices() const { return verts_; }
  const std::vector<GraphEdge>& edges() const { return edges_; }

  int find(const TermPtr& t) const;
  int add_vertex(const TermPtr& t);  // returns existing id if present
  void add_edge(GraphEdge e) { edges_.push_back(std::move(e)); }

 private:
  std::vector<TermPtr> verts_;
  std::vector<GraphEdge> edges_;
  std::unordered_multimap<size_t, int> index_;
};

// Exhaustive (optionally degree-filtered) reachability from t. The budget
// bounds the number of vertices; exceeding it is an error, never a
// truncated graph.
ReductionGraph reduction_graph(const TermPtr& t, std::optional<int> degree = std::nullopt,
                               long long budget = 10000);

std::string graph_to_dot(const ReductionGraph& g);
std::string graph_to_json(const ReductionGraph& g);

bool graph_is_acyclic(const ReductionGraph& g);

// Number of edge-paths from vertex `src` to every vertex (the empty path
// counts for src itself). Requires an acyclic graph.
std::vector<long long> path_counts_from(const ReductionGraph& g, int src);
long long count_paths(const ReductionGraph& g, int from, int to);

// Vertices with no outgoing edges.
std::vector<int> sink_vertices(const ReductionGraph& g);

}  // namespace deglab
