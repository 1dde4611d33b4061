#include "pgg/game.hpp"

#include <cmath>
#include <stdexcept>

namespace pgg {

StepFunction::StepFunction(std::vector<Rat> values) : values_(std::move(values)) {
  if (values_.empty()) throw std::invalid_argument("step function: empty value table");
  if (values_[0] != Rat(0)) throw std::invalid_argument("step function: X(0) must be 0");
  for (size_t k = 1; k < values_.size(); ++k) {
    if (values_[k] < values_[k - 1])
      throw std::invalid_argument("step function: values must be nondecreasing");
  }
}

const Rat& StepFunction::at(int k) const {
  if (k < 0) throw std::out_of_range("step function: negative argument");
  size_t idx = static_cast<size_t>(k);
  return idx < values_.size() ? values_[idx] : values_.back();
}

IndivisibleGame make_game(DirectedGraph graph, StepFunction utility, Rat price) {
  if (price <= Rat(0)) throw std::invalid_argument("game: price must be positive");
  return IndivisibleGame{std::move(graph), std::move(utility), price};
}

namespace {

void check_player(const IndivisibleGame& game, size_t profile_size, int i) {
  if (i < 0 || i >= game.graph.size()) throw std::out_of_range("game: player index out of range");
  if (static_cast<int>(profile_size) != game.graph.size())
    throw std::invalid_argument("game: profile length mismatch");
}

// Distribution of the number of producing in-neighbors of i.
std::vector<double> neighbor_sum_distribution(const IndivisibleGame& game,
                                              const MixedProfile& mixed, int i) {
  std::vector<double> dist{1.0};
  for (int j : game.graph.in(i)) {
    double q = mixed[j];
    if (q < 0.0 || q > 1.0) throw std::invalid_argument("game: probability out of [0,1]");
    dist.push_back(0.0);
    for (size_t k = dist.size() - 1; k > 0; --k) dist[k] = dist[k] * (1 - q) + dist[k - 1] * q;
    dist[0] *= 1 - q;
  }
  return dist;
}

}  // namespace

Rat pure_utility(const IndivisibleGame& game, const PureProfile& profile, int i) {
  check_player(game, profile.size(), i);
  int sum = profile[i] ? 1 : 0;
  for (int j : game.graph.in(i)) sum += profile[j] ? 1 : 0;
  Rat u = game.utility.at(sum);
  if (profile[i]) u -= game.price;
  return u;
}

double expected_utility(const IndivisibleGame& game, const MixedProfile& mixed, int i,
                        int action) {
  check_player(game, mixed.size(), i);
  if (action != 0 && action != 1) throw std::invalid_argument("game: action must be 0 or 1");
  auto dist = neighbor_sum_distribution(game, mixed, i);
  double ex = 0.0;
  for (size_t k = 0; k < dist.size(); ++k)
    ex += dist[k] * rat_double(game.utility.at(static_cast<int>(k) + action));
  if (action) ex -= rat_double(game.price);
  return ex;
}

std::vector<Violation> check_pure_nash(const IndivisibleGame& game, const PureProfile& profile) {
  std::vector<Violation> out;
  for (int i = 0; i < game.graph.size(); ++i) {
    int others = 0;
    for (int j : game.graph.in(i)) others += profile[j] ? 1 : 0;
    // U(1) - U(0) = X(others + 1) - X(others) - p, everything exact.
    Rat gain = game.utility.at(others + 1) - game.utility.at(others) - game.price;
    if (profile[i] ? gain < Rat(0) : gain > Rat(0)) {
      Rat regret = profile[i] ? -gain : gain;
      out.push_back({i, profile[i] ? 0 : 1, rat_double(regret)});
    }
  }
  return out;
}

std::vector<Violation> check_eps_nash(const IndivisibleGame& game, const MixedProfile& mixed,
                                      double eps, double supp_tol) {
  if (eps < 0.0) throw std::invalid_argument("game: eps must be nonnegative");
  if (supp_tol < 0.0 || supp_tol >= 1.0)
    throw std::invalid_argument("game: supp_tol must lie in [0,1)");
  constexpr double kTol = 1e-12;
  std::vector<Violation> out;
  for (int i = 0; i < game.graph.size(); ++i) {
    double u0 = expected_utility(game, mixed, i, 0);
    double u1 = expected_utility(game, mixed, i, 1);
    bool supp1 = mixed[i] > supp_tol;
    bool supp0 = mixed[i] < 1.0 - supp_tol;
    if (supp1 && u1 < u0 - eps - kTol) {
      out.push_back({i, 0, u0 - u1});
    } else if (supp0 && u0 < u1 - eps - kTol) {
      out.push_back({i, 1, u1 - u0});
    }
  }
  return out;
}

std::optional<std::string> lint_price_denominator(const IndivisibleGame& game) {
  long long max_den = 1;
  for (const Rat& v : game.utility.values()) max_den = std::max(max_den, v.denominator());
  double bound = static_cast<double>(max_den) * static_cast<double>(max_den);
  if (static_cast<double>(game.price.denominator()) <= bound) {
    return "price denominator " + std::to_string(game.price.denominator()) +
           " does not exceed the square of the largest step-value denominator (" +
           std::to_string(max_den) + "^2); ties between contributing and free-riding are possible";
  }
  return std::nullopt;
}

}  // namespace pgg
