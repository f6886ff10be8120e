#pragma once

#include "latfold/pbpoly.hpp"

#include <string>
#include <vector>

namespace latfold {
namespace csp {

/// Weighted CNF. Literals are signed 1-based variable indices; a clause
/// contributes its weight to the cost exactly when all literals are false.
struct Clause {
  std::vector<int> literals;  // sorted by |literal|
  long long weight = 0;
};

struct WcnfProblem {
  int num_vars = 0;
  std::vector<Clause> clauses;
  long long offset = 0;
};

/// Lowers an integer polynomial so that
/// offset + sum of falsified clause weights = evaluate(p) on every assignment.
/// Identical clauses are merged by summing weights.
WcnfProblem pb_to_wcnf(const PBPoly& p, int num_vars);

long long wcnf_cost(const WcnfProblem& w, const Assignment& a);

std::string wcnf_to_file(const WcnfProblem& w);
WcnfProblem wcnf_from_file(const std::string& text);

/// 0-1 ILP with one violation indicator y_i per clause:
/// y_i + sum of the clause's literals (negated as 1 - x) >= 1,
/// objective sum w_i y_i, minimum comparable to the WCNF via the offset.
struct IlpConstraint {
  std::vector<int> positive_x;  // x_v terms
  std::vector<int> negated_x;   // (1 - x_v) terms
  int y = 0;                    // auxiliary index, 1-based
  long long weight = 0;         // objective coefficient of y
};

struct IlpProblem {
  int num_x = 0;
  std::vector<IlpConstraint> constraints;
  long long offset = 0;
};

IlpProblem wcnf_to_ilp(const WcnfProblem& w);

/// Cost of the best feasible completion of the y variables for a given x.
long long ilp_cost(const IlpProblem& ilp, const Assignment& a);

/// Exact minimum over all binary x (guarded to num_x <= 20).
long long ilp_min(const IlpProblem& ilp);

std::string ilp_to_lp_file(const IlpProblem& ilp);

}  // namespace csp
}  // namespace latfold
