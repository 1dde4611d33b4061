#include "pgg/cnf.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace pgg {

void validate_cnf(const CnfFormula& f) {
  if (f.num_vars < 0) throw std::invalid_argument("cnf: negative variable count");
  for (const auto& clause : f.clauses) {
    if (clause.empty()) throw std::invalid_argument("cnf: empty clause");
    if (clause.size() > 3) throw std::invalid_argument("cnf: clause wider than 3 literals");
    for (int lit : clause) {
      if (lit == 0 || std::abs(lit) > f.num_vars)
        throw std::invalid_argument("cnf: literal out of range: " + std::to_string(lit));
    }
  }
}

CnfFormula parse_dimacs(std::istream& in) {
  CnfFormula f;
  int declared_clauses = -1;
  std::string line;
  std::vector<int> current;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == 'c' || line[0] == '%') continue;
    std::istringstream ls(line);
    if (line[0] == 'p') {
      std::string p, fmt;
      if (!(ls >> p >> fmt >> f.num_vars >> declared_clauses) || fmt != "cnf")
        throw std::invalid_argument("cnf: bad problem line: " + line);
      continue;
    }
    int lit;
    while (ls >> lit) {
      if (lit == 0) {
        f.clauses.push_back(current);
        current.clear();
      } else {
        current.push_back(lit);
      }
    }
  }
  if (!current.empty()) f.clauses.push_back(current);
  if (declared_clauses >= 0 && declared_clauses != static_cast<int>(f.clauses.size()))
    throw std::invalid_argument("cnf: clause count mismatch with problem line");
  validate_cnf(f);
  return f;
}

CnfFormula parse_dimacs_string(const std::string& text) {
  std::istringstream in(text);
  return parse_dimacs(in);
}

std::string write_dimacs(const CnfFormula& f) {
  std::ostringstream out;
  out << "p cnf " << f.num_vars << " " << f.clauses.size() << "\n";
  for (const auto& clause : f.clauses) {
    for (int lit : clause) out << lit << " ";
    out << "0\n";
  }
  return out.str();
}

namespace {
int true_literals(const std::vector<int>& clause, const std::vector<uint8_t>& assignment) {
  int count = 0;
  for (int lit : clause) {
    bool value = assignment[std::abs(lit) - 1] != 0;
    if (lit < 0) value = !value;
    if (value) ++count;
  }
  return count;
}
}  // namespace

bool clause_satisfied(const std::vector<int>& clause, const std::vector<uint8_t>& assignment) {
  return true_literals(clause, assignment) >= 1;
}

bool clause_not_all_equal(const std::vector<int>& clause, const std::vector<uint8_t>& assignment) {
  int t = true_literals(clause, assignment);
  return t >= 1 && t < static_cast<int>(clause.size());
}

bool clause_exactly_one(const std::vector<int>& clause, const std::vector<uint8_t>& assignment) {
  return true_literals(clause, assignment) == 1;
}

bool satisfies(const CnfFormula& f, const std::vector<uint8_t>& assignment) {
  for (const auto& clause : f.clauses)
    if (!clause_satisfied(clause, assignment)) return false;
  return true;
}

bool is_satisfiable(const CnfFormula& f) {
  if (f.num_vars > 25) throw std::invalid_argument("cnf: truth table guarded to 25 variables");
  std::vector<uint8_t> a(f.num_vars, 0);
  for (uint64_t bits = 0; bits < (uint64_t(1) << f.num_vars); ++bits) {
    for (int v = 0; v < f.num_vars; ++v) a[v] = (bits >> v) & 1;
    if (satisfies(f, a)) return true;
  }
  return false;
}

}  // namespace pgg
