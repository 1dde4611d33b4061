#include "pgg/pure.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <thread>

namespace pgg {

UtilityClass classify_utility(const StepFunction& x, const Rat& p, int k_max) {
  if (k_max < 1) throw std::invalid_argument("classify: k_max must be at least 1");
  if (x.at(1) <= p) return {UtilityClass::Kind::Flat, std::nullopt};

  bool steep = true;
  for (int k = 0; k < k_max && steep; ++k) steep = x.step(k) >= p;
  if (steep) return {UtilityClass::Kind::Steep, std::nullopt};

  bool alternating = true;
  for (int k = 0; k < k_max && alternating; ++k)
    alternating = (k % 2 == 0) ? x.step(k) > p : x.step(k) < p;
  if (alternating) return {UtilityClass::Kind::Alternating, std::nullopt};

  for (int k = 0; k < k_max; ++k)
    if (x.step(k) > p && x.step(k + 1) < p)
      return {UtilityClass::Kind::General, k};
  return {UtilityClass::Kind::General, std::nullopt};
}

std::optional<PureProfile> solve_alternating_f2(const IndivisibleGame& game) {
  int n = game.graph.size();
  Gf2System sys(n, n);
  for (int i = 0; i < n; ++i) {
    sys.set(i, i, true);
    for (int j : game.graph.in(i)) sys.set(i, j, true);
    sys.set_rhs(i, true);
  }
  return sys.solve();
}

namespace {

// Forced response per in-neighbor count: 0/1, or 2 when the step equals p.
std::vector<uint8_t> response_table(const IndivisibleGame& game) {
  int n = game.graph.size();
  std::vector<uint8_t> resp(std::max(n, 1));
  for (int sigma = 0; sigma < std::max(n, 1); ++sigma) {
    Rat gain = game.utility.step(sigma) - game.price;
    resp[sigma] = gain > Rat(0) ? 1 : (gain < Rat(0) ? 0 : 2);
  }
  return resp;
}

int thread_count() {
  if (const char* env = std::getenv("PGG_THREADS")) {
    int t = std::atoi(env);
    if (t >= 1) return t;
  }
  return 1;
}

// Enumerates profiles in [from, to) in lexicographic order (player 0 is the
// most significant bit), maintaining in-neighbor sums incrementally.
void enumerate_range(const IndivisibleGame& game, const std::vector<uint8_t>& resp, uint64_t from,
                     uint64_t to, size_t limit, std::vector<PureProfile>& found) {
  int n = game.graph.size();
  auto bit = [n](uint64_t b, int i) -> uint8_t { return (b >> (n - 1 - i)) & 1; };

  std::vector<int> sums(n, 0);
  std::vector<uint8_t> ok(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j : game.graph.in(i)) sums[i] += bit(from, j);
  int bad = 0;
  auto consistent = [&](int i, uint8_t s) { return resp[sums[i]] == 2 || resp[sums[i]] == s; };
  for (int i = 0; i < n; ++i) {
    ok[i] = consistent(i, bit(from, i));
    if (!ok[i]) ++bad;
  }

  auto refresh = [&](uint64_t b, int i) {
    uint8_t now = consistent(i, bit(b, i));
    if (now != ok[i]) {
      ok[i] = now;
      bad += now ? -1 : 1;
    }
  };

  for (uint64_t b = from;; ++b) {
    if (bad == 0) {
      PureProfile s(n);
      for (int i = 0; i < n; ++i) s[i] = bit(b, i);
      found.push_back(std::move(s));
      if (found.size() >= limit) return;
    }
    if (b + 1 >= to) return;
    uint64_t flips = b ^ (b + 1);
    uint64_t next = b + 1;
    for (int pos = 0; pos < n; ++pos) {
      if (!(flips >> pos & 1)) continue;
      int player = n - 1 - pos;
      int delta = bit(next, player) ? 1 : -1;
      for (int u : game.graph.out(player)) {
        sums[u] += delta;
        refresh(next, u);
      }
      refresh(next, player);
    }
    // Players whose own bit flipped but whose sums did not change still need
    // a refresh; refresh(next, player) above covers them.
  }
}

std::vector<PureProfile> brute_force_impl(const IndivisibleGame& game, size_t limit) {
  int n = game.graph.size();
  if (n > 25) throw std::invalid_argument("brute force guarded to n <= 25");
  auto resp = response_table(game);
  uint64_t total = uint64_t(1) << n;

  int threads = std::min<int>(thread_count(), 8);
  if (threads <= 1 || total < 1024 || limit != SIZE_MAX) {
    std::vector<PureProfile> found;
    enumerate_range(game, resp, 0, total, limit, found);
    return found;
  }
  std::vector<std::vector<PureProfile>> parts(threads);
  std::vector<std::thread> pool;
  uint64_t chunk = (total + threads - 1) / threads;
  for (int t = 0; t < threads; ++t) {
    uint64_t lo = chunk * t, hi = std::min(total, lo + chunk);
    if (lo >= hi) continue;
    pool.emplace_back([&, lo, hi, t] { enumerate_range(game, resp, lo, hi, SIZE_MAX, parts[t]); });
  }
  for (auto& th : pool) th.join();
  std::vector<PureProfile> found;
  for (auto& part : parts)
    for (auto& p : part) found.push_back(std::move(p));
  return found;
}

}  // namespace

std::vector<PureProfile> brute_force_pure(const IndivisibleGame& game) {
  return brute_force_impl(game, SIZE_MAX);
}

SolvePureResult solve_pure(const IndivisibleGame& game, long long budget) {
  int n = game.graph.size();
  auto cls = classify_utility(game.utility, game.price, std::max(n, 1));
  using K = UtilityClass::Kind;
  switch (cls.kind) {
    case K::Flat:
      return {SolvePureResult::Status::Found, PureProfile(n, 0)};
    case K::Steep:
      return {SolvePureResult::Status::Found, PureProfile(n, 1)};
    case K::Alternating: {
      auto sol = solve_alternating_f2(game);
      if (sol) return {SolvePureResult::Status::Found, std::move(*sol)};
      return {SolvePureResult::Status::NoneExists, std::nullopt};
    }
    case K::General: {
      if (n <= 25 && (long long(1) << n) <= budget) {
        auto found = brute_force_impl(game, 1);
        if (!found.empty()) return {SolvePureResult::Status::Found, std::move(found.front())};
        return {SolvePureResult::Status::NoneExists, std::nullopt};
      }
      return {SolvePureResult::Status::Unknown, std::nullopt};
    }
  }
  return {SolvePureResult::Status::Unknown, std::nullopt};
}

StepFunction reduction_utility(ReductionMode mode) {
  switch (mode) {
    case ReductionMode::ThreeSat:
      return StepFunction::max_utility();
    case ReductionMode::NotAllEqual:
      // steps 1, 1/5, 1/5, 1: node 3 produces iff 0 or 3 inputs are on.
      return StepFunction({Rat(0), Rat(1), Rat(6, 5), Rat(7, 5), Rat(12, 5)});
    case ReductionMode::OneInThree:
      // steps 1, 1/5, 1, 1: node 3 produces unless exactly 1 input is on.
      return StepFunction({Rat(0), Rat(1), Rat(6, 5), Rat(11, 5), Rat(16, 5)});
  }
  throw std::logic_error("unreachable");
}

bool reduction_clause_predicate(ReductionMode mode, const std::array<int, 3>& literals,
                                const std::vector<uint8_t>& assignment) {
  std::vector<int> clause(literals.begin(), literals.end());
  switch (mode) {
    case ReductionMode::ThreeSat:
      return clause_satisfied(clause, assignment);
    case ReductionMode::NotAllEqual:
      return clause_not_all_equal(clause, assignment);
    case ReductionMode::OneInThree:
      return clause_exactly_one(clause, assignment);
  }
  throw std::logic_error("unreachable");
}

std::pair<IndivisibleGame, ReductionMap> reduce_3sat(const CnfFormula& f, ReductionMode mode) {
  validate_cnf(f);
  ReductionMap map;
  int vars = f.num_vars;
  int clauses = static_cast<int>(f.clauses.size());

  // Pad clauses to width 3 by repeating the last literal.
  for (const auto& clause : f.clauses) {
    std::array<int, 3> lits{};
    for (int j = 0; j < 3; ++j)
      lits[j] = clause[std::min<size_t>(j, clause.size() - 1)];
    map.clause_literals.push_back(lits);
  }

  // One path pair per clause a variable appears in.
  std::vector<int> k(vars, 0);
  for (const auto& lits : map.clause_literals) {
    std::vector<int> seen;
    for (int lit : lits) {
      int v = std::abs(lit) - 1;
      if (std::find(seen.begin(), seen.end(), v) == seen.end()) {
        seen.push_back(v);
        ++k[v];
      }
    }
  }
  for (int v = 0; v < vars; ++v) k[v] = std::max(k[v], 1);

  int next = 0;
  map.var_heads.resize(vars);
  map.var_path_start.resize(vars);
  map.var_path_len.resize(vars);
  for (int v = 0; v < vars; ++v) {
    map.var_path_start[v] = next;
    map.var_path_len[v] = 2 * k[v];
    map.var_heads[v] = next;
    next += 2 * k[v];
  }
  map.clause_nodes.resize(clauses);
  for (int c = 0; c < clauses; ++c)
    for (int j = 0; j < 8; ++j) map.clause_nodes[c][j] = next++;
  map.num_players = next;

  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < vars; ++v) {
    int base = map.var_path_start[v];
    edges.emplace_back(base, base + 1);
    edges.emplace_back(base + 1, base);
    for (int j = 1; j + 1 < map.var_path_len[v]; ++j)
      edges.emplace_back(base + j, base + j + 1);
  }

  // Clause taps: node j must carry the literal value, and a single-in-edge
  // node negates its source, so a positive literal taps the path node that
  // carries the negated variable (odd position) and vice versa.
  std::vector<int> pair_index(vars, 0);
  for (int c = 0; c < clauses; ++c) {
    const auto& lits = map.clause_literals[c];
    std::vector<int> seen;
    std::map<int, int> pair_of;  // variable -> its path pair for this clause
    for (int lit : lits) {
      int v = std::abs(lit) - 1;
      if (std::find(seen.begin(), seen.end(), v) == seen.end()) {
        seen.push_back(v);
        pair_of[v] = pair_index[v]++;
      }
    }
    for (int j = 0; j < 3; ++j) {
      int lit = lits[j];
      int v = std::abs(lit) - 1;
      int pos = 2 * pair_of[v] + (lit > 0 ? 1 : 0);
      edges.emplace_back(map.var_path_start[v] + pos, map.clause_nodes[c][j]);
    }
    const auto& cn = map.clause_nodes[c];
    edges.emplace_back(cn[0], cn[3]);
    edges.emplace_back(cn[1], cn[3]);
    edges.emplace_back(cn[2], cn[3]);
    edges.emplace_back(cn[3], cn[4]);
    edges.emplace_back(cn[4], cn[5]);
    edges.emplace_back(cn[5], cn[6]);
    edges.emplace_back(cn[6], cn[7]);
    edges.emplace_back(cn[7], cn[5]);
  }
  // Repeated literals in a padded clause tap the same path node; drop the
  // duplicate edges.
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  auto game = make_game(DirectedGraph(map.num_players, std::move(edges)), reduction_utility(mode),
                        Rat(1, 2));
  return {std::move(game), std::move(map)};
}

std::vector<uint8_t> extract_assignment(const IndivisibleGame& game, const PureProfile& profile,
                                        const ReductionMap& map) {
  if (!check_pure_nash(game, profile).empty())
    throw std::invalid_argument("extract: profile is not an equilibrium of the reduced game");
  std::vector<uint8_t> assignment(map.var_heads.size());
  for (size_t v = 0; v < map.var_heads.size(); ++v) assignment[v] = profile[map.var_heads[v]];
  return assignment;
}

PureProfile profile_from_assignment(const ReductionMap& map, const std::vector<uint8_t>& assignment,
                                    ReductionMode mode) {
  if (assignment.size() != map.var_heads.size())
    throw std::invalid_argument("assignment length mismatch");
  PureProfile s(map.num_players, 0);
  for (size_t v = 0; v < map.var_heads.size(); ++v) {
    for (int j = 0; j < map.var_path_len[v]; ++j) {
      uint8_t value = (j % 2 == 0) ? assignment[v] : !assignment[v];
      s[map.var_path_start[v] + j] = value;
    }
  }
  const StepFunction x = reduction_utility(mode);
  const Rat p(1, 2);
  for (size_t c = 0; c < map.clause_nodes.size(); ++c) {
    const auto& cn = map.clause_nodes[c];
    int sigma = 0;
    for (int j = 0; j < 3; ++j) {
      int lit = map.clause_literals[c][j];
      uint8_t value = assignment[std::abs(lit) - 1];
      if (lit < 0) value = !value;
      s[cn[j]] = value;
      sigma += value;
    }
    uint8_t n3 = x.step(sigma) > p ? 1 : 0;
    s[cn[3]] = n3;
    s[cn[4]] = !n3;
    s[cn[5]] = 0;
    s[cn[6]] = 1;
    s[cn[7]] = 0;
  }
  return s;
}

IndivisibleGame add_feeder_players(const IndivisibleGame& game, int k, const std::set<int>& exempt) {
  if (k < 0) throw std::invalid_argument("feeders: k must be nonnegative");
  if (!exempt.empty() && k - 1 < 0)
    throw std::invalid_argument("feeders: exempt players need k >= 1");
  int n = game.graph.size();
  for (int v : exempt)
    if (v < 0 || v >= n) throw std::out_of_range("feeders: exempt player out of range");
  if (k == 0) return game;

  auto edges = game.graph.edges();
  for (int i = 0; i < n; ++i) {
    int sources = exempt.count(i) ? k - 1 : k;
    for (int f = 0; f < sources; ++f) edges.emplace_back(n + f, i);
  }
  return make_game(DirectedGraph(n + k, std::move(edges)), game.utility, game.price);
}

}  // namespace pgg
