#pragma once

#include "latfold/encoding.hpp"
#include "latfold/pbpoly.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace latfold {
namespace reduction {

/// delta * (3 q_n + q_i q_j - 2 q_i q_n - 2 q_j q_n): zero exactly when
/// q_n = q_i q_j, and at least delta otherwise.
PBPoly and_gadget(int i, int j, int n, long long delta);

/// Degree->=3 terms and the variable pairs that could collapse each of them.
struct CoverGraph {
  std::vector<Monomial> high_terms;
  std::vector<std::vector<std::pair<int, int>>> candidates;  // per high term
};

CoverGraph build_cover(const PBPoly& poly);

/// Greedy hitting set: repeatedly pick the pair covering the most uncovered
/// terms, ties broken by lexicographically smallest pair.
std::vector<std::pair<int, int>> greedy_cover(const CoverGraph& graph);

/// 1 + sum of |coefficient| over terms containing either variable of the pair.
long long choose_delta(const PBPoly& poly, std::pair<int, int> pair);

/// Upper-triangular QUBO: E(q) = q^T Q q + constant.
struct QuboModel {
  int num_vars = 0;
  std::map<std::pair<int, int>, long long> coeffs;  // (i, j) with i <= j
  long long constant = 0;

  long long coeff(int i, int j) const;
  long long energy(const Assignment& a) const;
  PBPoly to_poly() const;  // without the constant
  std::string to_file() const;
  std::string to_dense_matrix() const;
  static QuboModel from_file(const std::string& text);
  static QuboModel from_poly(const PBPoly& p, int num_vars);  // requires degree <= 2
};

/// Ising twin of a QUBO under s = 2q - 1; coefficients are exact rationals.
struct IsingModel {
  int num_vars = 0;
  std::vector<Coeff> h;                           // 1-based
  std::map<std::pair<int, int>, Coeff> j;         // i < j
  Coeff offset = 0;

  Coeff energy(const std::vector<int>& spins) const;  // spins 1-based, +-1
  std::string to_file() const;
};

struct GadgetRecord {
  int ancilla = 0;
  int a = 0, b = 0;
  long long delta = 0;
};

struct ReductionResult {
  QuboModel qubo;
  PBPoly reduced_poly;  // includes the constant term
  std::vector<GadgetRecord> gadgets;
};

/// Iterated pair substitution until degree <= 2. Requires integer
/// coefficients; ancillae are appended after the input's variable range.
ReductionResult reduce_to_2local(const PBPoly& poly, int num_vars);

/// Extends an encoding's variable table with the gadget ancillae so solvers
/// can complete them analytically.
Encoding reduced_encoding(const Encoding& enc, const ReductionResult& red);

IsingModel qubo_to_ising(const QuboModel& m);

}  // namespace reduction
}  // namespace latfold
