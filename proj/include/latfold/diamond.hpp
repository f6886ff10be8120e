#pragma once

#include "latfold/encoding.hpp"
#include "latfold/lattice.hpp"
#include "latfold/pbpoly.hpp"

#include <utility>
#include <vector>

namespace latfold {
namespace diamond {

struct DiamondPenalties {
  long long lambda_one = 1;
  long long lambda_connect = 1;
  long long lambda_overlap = 1;
};

/// Per-amino one-hot site registers. Amino 1 is pinned at the origin and has
/// no register; amino k >= 2 may sit on any lattice point with
/// 1 <= |x|+|y| <= min(k-1, cutoff) and |x|+|y| = (k-1) mod 2.
///
/// Sites are ordered by ascending Manhattan distance, then clockwise from
/// north, so registers of equal parity share a common index prefix.
struct DiamondLayout {
  int chain_length = 0;
  int cutoff = 0;
  std::vector<std::vector<std::pair<int, int>>> sites;  // sites[k] for amino k; [0],[1] empty
  std::vector<int> first_var;                           // register start per amino
  int total_bits = 0;

  int register_width(int amino) const { return static_cast<int>(sites[amino].size()); }
  int var_of(int amino, int site_index) const { return first_var[amino] + site_index; }
  std::pair<int, int> point_of(int amino, int site_index) const { return sites[amino][site_index]; }
};

/// The ring of lattice points at Manhattan distance d, clockwise from (0, d).
std::vector<std::pair<int, int>> diamond_ring(int d);

DiamondLayout build_layout(int chain_length, int cutoff);

PBPoly e_one(const DiamondLayout& layout, long long lambda_one);
PBPoly e_connect(const DiamondLayout& layout, long long lambda_connect);
PBPoly e_overlap(const DiamondLayout& layout, long long lambda_overlap);
PBPoly e_pair(const DiamondLayout& layout, const Instance& inst);

DiamondPenalties choose_lambdas(const Instance& inst);

Encoding encode(const Instance& inst, int cutoff, const DiamondPenalties& pen);
Encoding encode(const Instance& inst, int cutoff = 0);  // cutoff 0 means N-1

}  // namespace diamond
}  // namespace latfold
