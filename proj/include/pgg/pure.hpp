#pragma once

#include <array>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "pgg/cnf.hpp"
#include "pgg/game.hpp"
#include "pgg/gf2.hpp"

namespace pgg {

// Utility classes of the pure-equilibrium dichotomy. General carries the
// smallest k with X(k+1) > X(k)+p and X(k+2) < X(k+1)+p when one exists
// within the checked window; tie steps can leave it empty.
struct UtilityClass {
  enum class Kind { Flat, Steep, Alternating, General };
  Kind kind;
  std::optional<int> witness;
};

// Steps are checked for k = 0, ..., k_max-1; callers pass k_max = n since no
// neighborhood sum exceeds the player count.
UtilityClass classify_utility(const StepFunction& x, const Rat& p, int k_max);

// Solves s_i + sum_{(j,i) in E} s_j = 1 (mod 2), one equation per player.
// Requires an alternating utility for the solution to be an equilibrium;
// nullopt iff the system is inconsistent (then no pure equilibrium exists).
std::optional<PureProfile> solve_alternating_f2(const IndivisibleGame& game);

struct SolvePureResult {
  enum class Status { Found, NoneExists, Unknown };
  Status status;
  std::optional<PureProfile> profile;
};

// Dichotomy dispatch: flat -> all-zero, steep -> all-ones, alternating ->
// GF(2); the general case is exhaustive search when 2^n fits the budget.
SolvePureResult solve_pure(const IndivisibleGame& game, long long budget = 1 << 20);

// All pure Nash equilibria in lexicographic profile order. Guarded to
// n <= 25. Honors PGG_THREADS for chunked enumeration; output order is
// deterministic regardless of the thread count.
std::vector<PureProfile> brute_force_pure(const IndivisibleGame& game);

// Source problem for the clause gadget. The gadget network is identical in
// all modes; only the utility function, and with it the per-clause
// satisfaction predicate, changes.
enum class ReductionMode { ThreeSat, NotAllEqual, OneInThree };

StepFunction reduction_utility(ReductionMode mode);
bool reduction_clause_predicate(ReductionMode mode, const std::array<int, 3>& literals,
                                const std::vector<uint8_t>& assignment);

struct ReductionMap {
  int num_players = 0;
  std::vector<int> var_heads;      // player carrying the positive literal (path position 0)
  std::vector<int> var_path_start;
  std::vector<int> var_path_len;   // 2 * max(1, #clauses containing the variable)
  std::vector<std::array<int, 8>> clause_nodes;
  std::vector<std::array<int, 3>> clause_literals;  // clauses padded to width 3
};

// Thm-3.1-style construction: one 2k-node path per variable (bidirectional
// first edge), one 8-node gadget per clause (nodes 0..2 mirror the literals,
// 3..4 form the OR, 5..7 the forcing odd cycle). Clauses narrower than 3 are
// padded by repeating their last literal; the bijection statements apply the
// mode predicate to the padded clauses. Price is 1/2 in every mode.
std::pair<IndivisibleGame, ReductionMap> reduce_3sat(const CnfFormula& f,
                                                     ReductionMode mode = ReductionMode::ThreeSat);

// Reads the variable heads out of an equilibrium profile. Throws if the
// profile fails check_pure_nash.
std::vector<uint8_t> extract_assignment(const IndivisibleGame& game, const PureProfile& profile,
                                        const ReductionMap& map);

// Canonical embedding of an assignment into a full profile: paths alternate
// from the head, clause nodes take their forced responses. The result is an
// equilibrium iff every (padded) clause satisfies the mode predicate.
PureProfile profile_from_assignment(const ReductionMap& map, const std::vector<uint8_t>& assignment,
                                    ReductionMode mode = ReductionMode::ThreeSat);

// Adds k source players with edges to every original player; players in
// exempt receive edges from only the first k-1 feeders. Feeders take indices
// n, ..., n+k-1.
IndivisibleGame add_feeder_players(const IndivisibleGame& game, int k, const std::set<int>& exempt);

}  // namespace pgg
