#pragma once

#include "latfold/encoding.hpp"
#include "latfold/lattice.hpp"
#include "latfold/pbpoly.hpp"

#include <utility>
#include <vector>

namespace latfold {
namespace turn_circuit {

/// sum = XOR(a, b), carry = AND(a, b).
std::pair<PBPoly, PBPoly> half_adder(const PBPoly& a, const PBPoly& b);

PBPoly xor_bit(const PBPoly& a, const PBPoly& b);
PBPoly xnor_bit(const PBPoly& a, const PBPoly& b);

/// Binary digit string of a turn count between two aminos.
/// digits[r-1] is the r-th (least significant first) digit polynomial;
/// structurally zero digits are dropped from the top.
struct SumString {
  std::vector<PBPoly> digits;
  int width() const { return static_cast<int>(digits.size()); }
  /// r is 1-based; digits beyond the stored width are identically zero.
  const PBPoly& digit(int r) const;
};

/// Number of turns in direction `dir` over bonds i..j-1, as a ripple of
/// half-adders over the directional indicators.
SumString sum_string(int i, int j, Dir dir);

/// 1 iff aminos i and j occupy the same lattice point (j - i even).
PBPoly overlap_pair(int i, int j);

PBPoly e_overlap_total(int chain_length, long long lambda);

/// 1 iff aminos i and j are lattice-adjacent along axis k (0 = x, 1 = y)
/// and aligned in the other axis. Requires odd separation >= 3.
PBPoly adjacency(int axis, int i, int j);

PBPoly e_pair_total(const Instance& inst);

/// Ancilla-free encoding on exactly 2N-5 variables. Term count grows fast
/// with N; instances above the cap are rejected unless allow_large is set.
Encoding encode(const Instance& inst, long long lambda_overlap, bool allow_large = false);
Encoding encode(const Instance& inst);

}  // namespace turn_circuit
}  // namespace latfold
