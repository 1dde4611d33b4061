#include "pgg/graph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace pgg {

DirectedGraph::DirectedGraph(int n, std::vector<std::pair<int, int>> edges)
    : n_(n), edges_(std::move(edges)) {
  if (n < 0) throw std::invalid_argument("graph: negative vertex count");
  std::sort(edges_.begin(), edges_.end());
  for (size_t k = 0; k < edges_.size(); ++k) {
    auto [j, i] = edges_[k];
    if (j < 0 || j >= n_ || i < 0 || i >= n_)
      throw std::invalid_argument("graph: edge endpoint out of range: (" + std::to_string(j) +
                                  "," + std::to_string(i) + ")");
    if (j == i) throw std::invalid_argument("graph: self-loop at " + std::to_string(i));
    if (k > 0 && edges_[k] == edges_[k - 1])
      throw std::invalid_argument("graph: duplicate edge (" + std::to_string(j) + "," +
                                  std::to_string(i) + ")");
  }
  in_.assign(n_, {});
  out_.assign(n_, {});
  for (auto [j, i] : edges_) {
    in_[i].push_back(j);
    out_[j].push_back(i);
  }
}

int DirectedGraph::max_degree() const {
  int best = 0;
  for (int v = 0; v < n_; ++v) {
    std::set<int> nbr(in_[v].begin(), in_[v].end());
    nbr.insert(out_[v].begin(), out_[v].end());
    best = std::max(best, static_cast<int>(nbr.size()));
  }
  return best;
}

}  // namespace pgg
