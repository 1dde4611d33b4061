#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pgg {

// CNF formula with clauses of at most 3 literals. Literals are DIMACS-style
// signed 1-based variable indices.
struct CnfFormula {
  int num_vars = 0;
  std::vector<std::vector<int>> clauses;
};

void validate_cnf(const CnfFormula& f);

CnfFormula parse_dimacs(std::istream& in);
CnfFormula parse_dimacs_string(const std::string& text);
std::string write_dimacs(const CnfFormula& f);

// Clause satisfaction predicates for the three reduction source problems.
bool clause_satisfied(const std::vector<int>& clause, const std::vector<uint8_t>& assignment);
bool clause_not_all_equal(const std::vector<int>& clause, const std::vector<uint8_t>& assignment);
bool clause_exactly_one(const std::vector<int>& clause, const std::vector<uint8_t>& assignment);

bool satisfies(const CnfFormula& f, const std::vector<uint8_t>& assignment);

// Truth-table satisfiability check; guarded to num_vars <= 25.
bool is_satisfiable(const CnfFormula& f);

}  // namespace pgg
