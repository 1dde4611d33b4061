#pragma once

#include <utility>
#include <vector>

namespace pgg {

// Directed graph without loops. An edge (j, i) means j -> i: player i sees
// the good produced by j. The edge list is kept sorted and duplicate-free so
// serialization is canonical.
class DirectedGraph {
 public:
  DirectedGraph() = default;
  DirectedGraph(int n, std::vector<std::pair<int, int>> edges);

  int size() const { return n_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  // In-neighbors of v: all j with edge (j, v).
  const std::vector<int>& in(int v) const { return in_.at(v); }
  const std::vector<int>& out(int v) const { return out_.at(v); }
  int in_degree(int v) const { return static_cast<int>(in_.at(v).size()); }

  // Maximum degree of the underlying undirected graph.
  int max_degree() const;

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> in_, out_;
};

}  // namespace pgg
