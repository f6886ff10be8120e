#pragma once

#include "latfold/encoding.hpp"
#include "latfold/lattice.hpp"
#include "latfold/pbpoly.hpp"

#include <map>
#include <utility>
#include <vector>

namespace latfold {
namespace turn_ancilla {

/// Penalty weights; the back and overlap penalties are kept equal because
/// they guard the same class of invalid folds.
struct Penalties {
  long long lambda_overlap = 1;
  long long lambda_back = 1;
};

/// Bit-register bookkeeping for the turn-ancilla encoding.
///
/// Variables are allocated contiguously: info bits 1..2N-5, then one slack
/// register per even-separation pair (i, j) with j >= i+4 in (i, j) order,
/// then one omega switch per interacting pair.
struct TurnLayout {
  int chain_length = 0;
  int info_bits = 0;
  // pair -> (first slack var, width mu_ij); alpha bit k has weight 2^k.
  std::map<std::pair<int, int>, std::pair<int, int>> slack;
  std::map<std::pair<int, int>, int> omega;
  int total_bits = 0;

  int mu(int i, int j) const { return slack.at({i, j}).second; }
};

/// ceil(2*log2(j-i)) slack bits for an even-separation pair.
int slack_width(int i, int j);

TurnLayout build_layout(const Instance& inst);

/// Directional indicator for turn j >= 2 as a polynomial in the free bits.
/// Turn 1 is fixed to right and turn 2's first bit is fixed to 0, so the
/// fixed values are substituted before expansion.
PBPoly directional(int turn, Dir dir);

PBPoly e_back(int chain_length, const Penalties& pen);

/// Lattice position of amino n (1-based) along the given axis; axis 0 is x.
PBPoly position(int n, int axis);

/// Squared grid distance between aminos i and j; degree <= 2 by construction.
PBPoly g(int i, int j);

PBPoly e_overlap(const TurnLayout& layout, const Penalties& pen);
PBPoly e_pair(const TurnLayout& layout, const Instance& inst);

/// lambda = 1 + |sum of masked J entries|, strict even at ties.
Penalties choose_lambda(const Instance& inst);

Encoding encode(const Instance& inst, const Penalties& pen);
Encoding encode(const Instance& inst);

}  // namespace turn_ancilla
}  // namespace latfold
