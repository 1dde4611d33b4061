#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pgg/graph.hpp"
#include "pgg/rational.hpp"

namespace pgg {

// Symmetric social composition function as a nondecreasing step table
// X(0)=0, X(1), ..., X(K), constant beyond the last listed value.
class StepFunction {
 public:
  explicit StepFunction(std::vector<Rat> values);
  static StepFunction max_utility() { return StepFunction({Rat(0), Rat(1)}); }

  const std::vector<Rat>& values() const { return values_; }
  const Rat& at(int k) const;
  Rat step(int k) const { return at(k + 1) - at(k); }  // X(k+1) - X(k)
  bool is_max() const { return values_.size() == 2 && values_[1] == Rat(1); }

 private:
  std::vector<Rat> values_;
};

struct IndivisibleGame {
  DirectedGraph graph;
  StepFunction utility;
  Rat price;
};

IndivisibleGame make_game(DirectedGraph graph, StepFunction utility, Rat price);

// Pure strategies are 0/1 per player; mixed strategies are per-player
// probabilities of playing 1.
using PureProfile = std::vector<uint8_t>;
using MixedProfile = std::vector<double>;

struct Violation {
  int player;
  int better_action;
  double regret;  // > 0
};

// U_i(s) = X(sum over the closed neighborhood {i} + in(i)) - p * s_i.
Rat pure_utility(const IndivisibleGame& game, const PureProfile& profile, int i);

// Exact expectation of the pure utility over independent Bernoulli draws of
// the in-neighbors, with player i's own action fixed. Poisson-binomial
// convolution over the in-neighborhood, O(d^2).
double expected_utility(const IndivisibleGame& game, const MixedProfile& mixed, int i, int action);

// Empty iff the profile is a pure Nash equilibrium; ties count as equilibria
// (weak inequality). Comparisons are exact rational arithmetic.
std::vector<Violation> check_pure_nash(const IndivisibleGame& game, const PureProfile& profile);

// Empty iff the profile is an eps-approximately well supported Nash
// equilibrium: every supported action is within eps of the other action's
// expected utility. Action 1 counts as supported when probs[i] > supp_tol,
// action 0 when probs[i] < 1 - supp_tol.
std::vector<Violation> check_eps_nash(const IndivisibleGame& game, const MixedProfile& mixed,
                                      double eps, double supp_tol = 0.0);

// Tie-avoidance condition on p's denominator (it should exceed the square of
// the largest denominator in X). Not enforced: some fixtures intentionally
// use tie steps. Returns a warning message when the condition fails.
std::optional<std::string> lint_price_denominator(const IndivisibleGame& game);

}  // namespace pgg
