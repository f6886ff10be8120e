#include "latfold/csp_export.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace latfold {
namespace csp {

namespace {

bool literal_true(int lit, const Assignment& a) {
  return lit > 0 ? a.get(lit) != 0 : a.get(-lit) == 0;
}

std::vector<int> sorted_literals(std::vector<int> lits) {
  std::sort(lits.begin(), lits.end(), [](int a, int b) {
    const int va = a < 0 ? -a : a, vb = b < 0 ? -b : b;
    return va != vb ? va < vb : a < b;
  });
  return lits;
}

}  // namespace

WcnfProblem pb_to_wcnf(const PBPoly& p, int num_vars) {
  if (!p.is_integral()) throw std::invalid_argument("WCNF export needs integer coefficients");
  if (p.max_var() > num_vars) throw std::invalid_argument("polynomial exceeds declared variable count");

  WcnfProblem w;
  w.num_vars = num_vars;
  std::map<std::vector<int>, long long> merged;

  for (const auto& [mono, coeff] : p.terms()) {
    const long long c = coeff.numerator();
    if (mono.empty()) {
      w.offset += c;
      continue;
    }
    if (c > 0) {
      std::vector<int> lits;
      for (int v : mono) lits.push_back(-v);
      merged[sorted_literals(std::move(lits))] += c;
    } else {
      // -|c| x1..xk: peel the highest variable, keeping it positive, until
      // the unit clause; the base case leaves -|c| in the offset.
      const long long weight = -c;
      for (std::size_t k = mono.size(); k >= 2; --k) {
        std::vector<int> lits;
        for (std::size_t r = 0; r + 1 < k; ++r) lits.push_back(-mono[r]);
        lits.push_back(mono[k - 1]);
        merged[sorted_literals(std::move(lits))] += weight;
      }
      merged[{mono[0]}] += weight;
      w.offset -= weight;
    }
  }

  for (const auto& [lits, weight] : merged)
    if (weight != 0) w.clauses.push_back({lits, weight});
  return w;
}

long long wcnf_cost(const WcnfProblem& w, const Assignment& a) {
  long long cost = 0;  // the offset is the caller's; solvers see clauses only
  for (const auto& clause : w.clauses) {
    bool satisfied = false;
    for (int lit : clause.literals)
      if (literal_true(lit, a)) {
        satisfied = true;
        break;
      }
    if (!satisfied) cost += clause.weight;
  }
  return cost;
}

std::string wcnf_to_file(const WcnfProblem& w) {
  std::ostringstream os;
  os << "c offset " << w.offset << '\n';
  os << "p wcnf " << w.num_vars << ' ' << w.clauses.size() << '\n';
  for (const auto& clause : w.clauses) {
    os << clause.weight;
    for (int lit : clause.literals) os << ' ' << lit;
    os << " 0\n";
  }
  return os.str();
}

WcnfProblem wcnf_from_file(const std::string& text) {
  WcnfProblem w;
  std::istringstream is(text);
  std::string line;
  bool have_header = false;
  std::size_t declared_clauses = 0;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    if (line[0] == 'c') {
      std::string c, key;
      if (ls >> c >> key && key == "offset") ls >> w.offset;
      continue;
    }
    if (line[0] == 'p') {
      std::string p, fmt;
      if (!(ls >> p >> fmt >> w.num_vars >> declared_clauses) || fmt != "wcnf")
        throw std::invalid_argument("malformed wcnf header");
      have_header = true;
      continue;
    }
    Clause clause;
    if (!(ls >> clause.weight)) throw std::invalid_argument("malformed wcnf clause");
    int lit;
    while (ls >> lit && lit != 0) clause.literals.push_back(lit);
    w.clauses.push_back(std::move(clause));
  }
  if (!have_header || w.clauses.size() != declared_clauses)
    throw std::invalid_argument("wcnf clause count mismatch");
  return w;
}

IlpProblem wcnf_to_ilp(const WcnfProblem& w) {
  IlpProblem ilp;
  ilp.num_x = w.num_vars;
  ilp.offset = w.offset;
  int y = 0;
  for (const auto& clause : w.clauses) {
    IlpConstraint row;
    row.y = ++y;
    row.weight = clause.weight;
    for (int lit : clause.literals)
      (lit > 0 ? row.positive_x : row.negated_x).push_back(lit > 0 ? lit : -lit);
    ilp.constraints.push_back(std::move(row));
  }
  return ilp;
}

long long ilp_cost(const IlpProblem& ilp, const Assignment& a) {
  long long cost = 0;
  for (const auto& row : ilp.constraints) {
    long long lhs = 0;
    for (int v : row.positive_x) lhs += a.get(v);
    for (int v : row.negated_x) lhs += 1 - a.get(v);
    if (lhs < 1) cost += row.weight;  // y forced to 1
  }
  return cost;
}

long long ilp_min(const IlpProblem& ilp) {
  if (ilp.num_x > 20) throw std::invalid_argument("ilp_min is exhaustive; too many variables");
  Assignment a(ilp.num_x);
  long long best = ilp_cost(ilp, a);
  for (std::uint64_t mask = 1; mask < (1ull << ilp.num_x); ++mask) {
    for (int v = 1; v <= ilp.num_x; ++v) a.set(v, (mask >> (v - 1)) & 1);
    best = std::min(best, ilp_cost(ilp, a));
  }
  return best;
}

std::string ilp_to_lp_file(const IlpProblem& ilp) {
  std::ostringstream os;
  os << "\\ offset " << ilp.offset << '\n';
  os << "Minimize\n obj:";
  bool first = true;
  for (const auto& row : ilp.constraints) {
    os << (first ? " " : " + ") << row.weight << " y" << row.y;
    first = false;
  }
  if (first && ilp.num_x >= 1) os << " 0 x1";
  os << "\nSubject To\n";
  for (const auto& row : ilp.constraints) {
    os << " c" << row.y << ": y" << row.y;
    long long rhs = 1;
    for (int v : row.positive_x) os << " + x" << v;
    for (int v : row.negated_x) {
      os << " - x" << v;
      rhs -= 1;
    }
    os << " >= " << rhs << '\n';
  }
  os << "Binary\n";
  for (int v = 1; v <= ilp.num_x; ++v) os << " x" << v << '\n';
  for (const auto& row : ilp.constraints) os << " y" << row.y << '\n';
  os << "End\n";
  return os.str();
}

}  // namespace csp
}  // namespace latfold
