#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "pgg/game.hpp"
#include "pgg/graph.hpp"

namespace pgg {

// Threshold game: each player best-responds to the sum of its in-neighbors'
// strategies against the threshold t. The neighborhood excludes the player
// itself; including it would make even isolated vertices inconsistent.
struct ThresholdGame {
  DirectedGraph graph;
  double t;
};

ThresholdGame make_threshold_game(DirectedGraph graph, double t);

using ContinuousProfile = std::vector<double>;

// Comparisons against t +- eps carry a 1e-9 absolute tolerance: grid values
// are exact multiples, the tolerance guards the transcendental maps.
inline constexpr double kBandTol = 1e-9;

enum class BandState { Free, ForceLow, ForceHigh };

inline BandState band_state(double sum, double t, double eps) {
  if (sum > t + eps + kBandTol) return BandState::ForceLow;
  if (sum < t - eps - kBandTol) return BandState::ForceHigh;
  return BandState::Free;
}

inline bool band_value_ok(BandState state, double x, double eps) {
  switch (state) {
    case BandState::ForceLow: return x <= eps + kBandTol;
    case BandState::ForceHigh: return x >= 1.0 - eps - kBandTol;
    case BandState::Free: return true;
  }
  return true;
}

// Empty iff x is an eps-approximate equilibrium (Def 4.3 semantics: in-band
// neighbor sums leave the player unconstrained). Requires eps < min{t, 1-t}.
std::vector<Violation> check_threshold_eq(const ThresholdGame& tg, const ContinuousProfile& x,
                                          double eps);

// --- Lemma 4.4 reduction maps -------------------------------------------

// Threshold game -> max-utility public goods game with p = e^{-t}.
IndivisibleGame pgg_from_threshold(const ThresholdGame& tg);

// x_i = min{-ln(1 - s_i), 1}. An eps-Nash of pgg_from_threshold's game maps
// to an 8*eps-approximate threshold equilibrium for eps < min{0.1, t/8, (1-t)/8}.
ContinuousProfile threshold_profile_from_pgg_nash(const MixedProfile& s);

// Max-utility game with U = 1, 0 < p < 1 -> threshold game with t = 1/2 on
// the same graph.
ThresholdGame threshold_from_pgg(const IndivisibleGame& game);

// s_i = 1 - p^{2 x_i} when x_i <= 1/2 + eps, else 1. An eps-approximate
// equilibrium of the t = 1/2 threshold game maps to a c_p*eps-Nash.
MixedProfile pgg_profile_from_threshold_eq(const ContinuousProfile& x, double p, double eps);

double pgg_regret_constant(double p);  // c_p = -4 p ln p

// --- Grid search ----------------------------------------------------------

// Strategy grid {0, delta, 2 delta, ..., ceil(1/delta) * delta clamped to 1}.
struct Grid {
  explicit Grid(double delta);
  double delta;
  std::vector<double> values;  // ascending, last value is exactly 1
  int levels() const { return static_cast<int>(values.size()); }
};

// Depth-first enumeration of all grid profiles passing check_threshold_eq.
// Players are assigned in index order and each player's condition is checked
// as soon as the player and all its in-neighbors are assigned, so the first
// profile reported is the lexicographic minimum. Pinned players take a fixed
// (possibly off-grid) value and are exempt from their own condition; they
// model forced-value input sources for gadget verification.
class ThresholdGridEnumerator {
 public:
  ThresholdGridEnumerator(const ThresholdGame& tg, double eps, double delta);

  void pin(int player, double value);
  // Permutation of level indices controlling DFS value order (default
  // ascending). Affects which profile is found first, not the full set.
  void set_value_order(std::vector<int> order);
  void set_node_budget(uint64_t budget) { budget_ = budget; }

  // Returns false when stopped early by the callback; throws on budget
  // exhaustion. Callback returns false to stop.
  bool enumerate(const std::function<bool(const ContinuousProfile&)>& cb);

 private:
  bool dfs(int depth, const std::function<bool(const ContinuousProfile&)>& cb);
  bool try_value(int depth, double value, const std::function<bool(const ContinuousProfile&)>& cb);

  const ThresholdGame& tg_;
  double eps_;
  Grid grid_;
  std::vector<std::optional<double>> pinned_;
  std::vector<int> order_;
  std::vector<std::vector<int>> ready_at_;  // players checkable once depth d is assigned
  std::vector<double> sum_, x_;
  uint64_t budget_ = UINT64_MAX, expanded_ = 0;
};

// Lexicographically smallest eps-approximate grid equilibrium, or nullopt if
// none exists on the grid. Throws when the search exceeds max_nodes.
std::optional<ContinuousProfile> grid_search_threshold_eq(const ThresholdGame& tg, double eps,
                                                          double delta,
                                                          uint64_t max_nodes = uint64_t(2) << 32);

}  // namespace pgg
