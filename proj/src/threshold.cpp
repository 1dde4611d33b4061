#include "pgg/threshold.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace pgg {

ThresholdGame make_threshold_game(DirectedGraph graph, double t) {
  if (!(t > 0.0 && t < 1.0)) throw std::invalid_argument("threshold: t must lie in (0,1)");
  return ThresholdGame{std::move(graph), t};
}

namespace {
void validate_eps(const ThresholdGame& tg, double eps) {
  if (eps < 0.0 || eps >= std::min(tg.t, 1.0 - tg.t))
    throw std::invalid_argument("threshold: eps must satisfy 0 <= eps < min{t, 1-t}");
}
void validate_profile(const ContinuousProfile& x, int n) {
  if (static_cast<int>(x.size()) != n) throw std::invalid_argument("threshold: profile length mismatch");
  for (double v : x)
    if (!(v >= 0.0 && v <= 1.0)) throw std::invalid_argument("threshold: strategy out of [0,1]");
}
}  // namespace

std::vector<Violation> check_threshold_eq(const ThresholdGame& tg, const ContinuousProfile& x,
                                          double eps) {
  validate_eps(tg, eps);
  validate_profile(x, tg.graph.size());
  std::vector<Violation> out;
  for (int i = 0; i < tg.graph.size(); ++i) {
    double sum = 0.0;
    for (int j : tg.graph.in(i)) sum += x[j];
    BandState state = band_state(sum, tg.t, eps);
    if (!band_value_ok(state, x[i], eps)) {
      if (state == BandState::ForceLow)
        out.push_back({i, 0, x[i] - eps});
      else
        out.push_back({i, 1, (1.0 - eps) - x[i]});
    }
  }
  return out;
}

IndivisibleGame pgg_from_threshold(const ThresholdGame& tg) {
  return make_game(tg.graph, StepFunction::max_utility(), rat_from_double(std::exp(-tg.t)));
}

ContinuousProfile threshold_profile_from_pgg_nash(const MixedProfile& s) {
  ContinuousProfile x(s.size());
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 0.0 || s[i] > 1.0) throw std::invalid_argument("threshold: probability out of [0,1]");
    x[i] = s[i] >= 1.0 ? 1.0 : std::min(-std::log1p(-s[i]), 1.0);
  }
  return x;
}

ThresholdGame threshold_from_pgg(const IndivisibleGame& game) {
  if (!game.utility.is_max())
    throw std::invalid_argument("threshold: reduction requires the max utility");
  if (!(game.price > Rat(0) && game.price < Rat(1)))
    throw std::invalid_argument("threshold: reduction requires 0 < p < 1");
  return ThresholdGame{game.graph, 0.5};
}

MixedProfile pgg_profile_from_threshold_eq(const ContinuousProfile& x, double p, double eps) {
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("threshold: p must lie in (0,1)");
  if (eps < 0.0) throw std::invalid_argument("threshold: eps must be nonnegative");
  MixedProfile s(x.size());
  for (size_t i = 0; i < x.size(); ++i)
    s[i] = x[i] <= 0.5 + eps ? 1.0 - std::pow(p, 2.0 * x[i]) : 1.0;
  return s;
}

double pgg_regret_constant(double p) { return -4.0 * p * std::log(p); }

Grid::Grid(double d) : delta(d) {
  if (!(d > 0.0 && d <= 1.0)) throw std::invalid_argument("grid: delta must lie in (0,1]");
  int steps = static_cast<int>(std::ceil(1.0 / d - kBandTol));
  values.reserve(steps + 1);
  for (int k = 0; k < steps; ++k) values.push_back(k * d);
  values.push_back(1.0);
}

ThresholdGridEnumerator::ThresholdGridEnumerator(const ThresholdGame& tg, double eps, double delta)
    : tg_(tg), eps_(eps), grid_(delta) {
  validate_eps(tg, eps);
  int n = tg.graph.size();
  pinned_.assign(n, std::nullopt);
  order_.resize(grid_.levels());
  std::iota(order_.begin(), order_.end(), 0);
  // Player u is checkable once u and all of its in-neighbors are assigned.
  ready_at_.assign(n, {});
  for (int u = 0; u < n; ++u) {
    int ready = u;
    for (int j : tg.graph.in(u)) ready = std::max(ready, j);
    ready_at_[ready].push_back(u);
  }
  sum_.assign(n, 0.0);
  x_.assign(n, 0.0);
}

void ThresholdGridEnumerator::pin(int player, double value) {
  if (player < 0 || player >= tg_.graph.size())
    throw std::out_of_range("enumerator: pinned player out of range");
  if (!(value >= 0.0 && value <= 1.0))
    throw std::invalid_argument("enumerator: pinned value out of [0,1]");
  pinned_[player] = value;
}

void ThresholdGridEnumerator::set_value_order(std::vector<int> order) {
  if (static_cast<int>(order.size()) != grid_.levels())
    throw std::invalid_argument("enumerator: order must permute grid levels");
  order_ = std::move(order);
}

bool ThresholdGridEnumerator::try_value(int depth,
                                        double value,
                                        const std::function<bool(const ContinuousProfile&)>& cb) {
  if (++expanded_ > budget_) throw std::runtime_error("grid search: node budget exceeded");
  x_[depth] = value;
  for (int u : tg_.graph.out(depth)) sum_[u] += value;
  bool keep_going = true;
  bool ok = true;
  for (int u : ready_at_[depth]) {
    if (pinned_[u]) continue;  // forced sources are exempt from their own condition
    if (!band_value_ok(band_state(sum_[u], tg_.t, eps_), x_[u], eps_)) {
      ok = false;
      break;
    }
  }
  if (ok) keep_going = dfs(depth + 1, cb);
  for (int u : tg_.graph.out(depth)) sum_[u] -= value;
  return keep_going;
}

bool ThresholdGridEnumerator::dfs(int depth, const std::function<bool(const ContinuousProfile&)>& cb) {
  int n = tg_.graph.size();
  if (depth == n) return cb(x_);
  if (pinned_[depth]) return try_value(depth, *pinned_[depth], cb);

  // When every in-neighbor is already assigned, the player's own band is
  // known and the candidate set shrinks before branching.
  bool ready = !ready_at_[depth].empty() && ready_at_[depth].back() == depth;
  BandState state = BandState::Free;
  if (ready) state = band_state(sum_[depth], tg_.t, eps_);
  for (int level : order_) {
    double value = grid_.values[level];
    if (ready && !band_value_ok(state, value, eps_)) continue;
    if (!try_value(depth, value, cb)) return false;
  }
  return true;
}

bool ThresholdGridEnumerator::enumerate(const std::function<bool(const ContinuousProfile&)>& cb) {
  std::fill(sum_.begin(), sum_.end(), 0.0);
  expanded_ = 0;
  return dfs(0, cb);
}

std::optional<ContinuousProfile> grid_search_threshold_eq(const ThresholdGame& tg, double eps,
                                                          double delta, uint64_t max_nodes) {
  ThresholdGridEnumerator en(tg, eps, delta);
  en.set_node_budget(max_nodes);
  std::optional<ContinuousProfile> found;
  en.enumerate([&](const ContinuousProfile& x) {
    found = x;
    return false;
  });
  return found;
}

}  // namespace pgg
