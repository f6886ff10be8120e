#include "latfold/diamond.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace latfold {
namespace diamond {

std::vector<std::pair<int, int>> diamond_ring(int d) {
  if (d < 1) throw std::invalid_argument("ring distance must be >= 1");
  std::vector<std::pair<int, int>> ring;
  ring.reserve(4 * d);
  int x = 0, y = d;
  const std::pair<int, int> legs[4] = {{1, -1}, {-1, -1}, {-1, 1}, {1, 1}};
  for (const auto& [dx, dy] : legs)
    for (int s = 0; s < d; ++s) {
      ring.emplace_back(x, y);
      x += dx;
      y += dy;
    }
  return ring;
}

DiamondLayout build_layout(int chain_length, int cutoff) {
  if (chain_length < 2) throw std::invalid_argument("diamond layout needs N >= 2");
  if (cutoff < 1) throw std::invalid_argument("cutoff must be >= 1");
  DiamondLayout layout;
  layout.chain_length = chain_length;
  layout.cutoff = cutoff;
  layout.sites.resize(chain_length + 1);
  layout.first_var.resize(chain_length + 1, 0);
  int next = 1;
  for (int k = 2; k <= chain_length; ++k) {
    layout.first_var[k] = next;
    const int max_d = std::min(k - 1, cutoff);
    for (int d = 1; d <= max_d; ++d) {
      if (d % 2 != (k - 1) % 2) continue;
      for (auto pt : diamond_ring(d)) layout.sites[k].push_back(pt);
    }
    if (layout.sites[k].empty())
      throw std::invalid_argument("cutoff leaves amino " + std::to_string(k) + " without sites");
    next += layout.register_width(k);
  }
  layout.total_bits = next - 1;
  return layout;
}

PBPoly e_one(const DiamondLayout& layout, long long lambda_one) {
  PBPoly total;
  for (int k = 2; k <= layout.chain_length; ++k) {
    const int w = layout.register_width(k);
    for (int a = 0; a < w; ++a)
      for (int b = a + 1; b < w; ++b)
        total += PBPoly::term({layout.var_of(k, a), layout.var_of(k, b)}, lambda_one);
  }
  return total;
}

namespace {

bool lattice_adjacent(std::pair<int, int> a, std::pair<int, int> b) {
  return std::abs(a.first - b.first) + std::abs(a.second - b.second) == 1;
}

}  // namespace

PBPoly e_connect(const DiamondLayout& layout, long long lambda_connect) {
  // Amino 2 is always origin-adjacent, so rewards start at the 2-3 bond and
  // the constant restores zero for chains with all N-2 remaining bonds.
  PBPoly total(Coeff(lambda_connect) * (layout.chain_length - 2));
  for (int k = 3; k <= layout.chain_length; ++k)
    for (int a = 0; a < layout.register_width(k); ++a)
      for (int b = 0; b < layout.register_width(k - 1); ++b)
        if (lattice_adjacent(layout.point_of(k, a), layout.point_of(k - 1, b)))
          total += PBPoly::term({layout.var_of(k, a), layout.var_of(k - 1, b)}, -lambda_connect);
  return total;
}

PBPoly e_overlap(const DiamondLayout& layout, long long lambda_overlap) {
  PBPoly total;
  for (int k = 2; k <= layout.chain_length - 1; ++k)
    for (int h = k + 2; h <= layout.chain_length; h += 2)
      for (int s = 0; s < layout.register_width(k); ++s) {
        // Equal-parity registers enumerate shared sites identically.
        if (s >= layout.register_width(h)) break;
        total += PBPoly::term({layout.var_of(k, s), layout.var_of(h, s)}, lambda_overlap);
      }
  return total;
}

PBPoly e_pair(const DiamondLayout& layout, const Instance& inst) {
  PBPoly total;
  const int n = layout.chain_length;
  // Pairs with amino 1: reward sites of amino h adjacent to the origin.
  for (int h = 4; h <= n; h += 2) {
    const long long j1h = inst.j(1, h);
    if (j1h == 0) continue;
    for (int s = 0; s < layout.register_width(h); ++s)
      if (lattice_adjacent(layout.point_of(h, s), {0, 0}))
        total += PBPoly::term({layout.var_of(h, s)}, j1h);
  }
  for (int k = 2; k <= n - 3; ++k)
    for (int h = k + 3; h <= n; h += 2) {
      const long long jkh = inst.j(k, h);
      if (jkh == 0) continue;
      for (int a = 0; a < layout.register_width(k); ++a)
        for (int b = 0; b < layout.register_width(h); ++b)
          if (lattice_adjacent(layout.point_of(k, a), layout.point_of(h, b)))
            total += PBPoly::term({layout.var_of(k, a), layout.var_of(h, b)}, jkh);
    }
  return total;
}

DiamondPenalties choose_lambdas(const Instance& inst) {
  const long long jabs = std::llabs(inst.j_sum());
  DiamondPenalties pen;
  pen.lambda_connect = 1 + jabs;
  pen.lambda_overlap = pen.lambda_connect;
  // A doubly-occupied register can fraudulently earn at most 8 connection
  // rewards (two bonds with up to 4 neighbours each).
  pen.lambda_one = 8 * pen.lambda_connect + jabs + 1;
  return pen;
}

Encoding encode(const Instance& inst, int cutoff, const DiamondPenalties& pen) {
  const int n = inst.chain_length();
  const DiamondLayout layout = build_layout(n, cutoff == 0 ? n - 1 : cutoff);
  Encoding enc;
  enc.kind = EncodingKind::Diamond;
  enc.chain_length = n;
  enc.num_vars = layout.total_bits;
  enc.num_info_bits = layout.total_bits;
  enc.poly = e_one(layout, pen.lambda_one) + e_connect(layout, pen.lambda_connect) +
             e_overlap(layout, pen.lambda_overlap) + e_pair(layout, inst);
  enc.vars.resize(layout.total_bits + 1);
  for (int k = 2; k <= n; ++k)
    for (int s = 0; s < layout.register_width(k); ++s) {
      const auto [x, y] = layout.point_of(k, s);
      enc.vars[layout.var_of(k, s)] = VarInfo{VarRole::DiamondSite, k, 0, 0, x, y};
    }
  return enc;
}

Encoding encode(const Instance& inst, int cutoff) { return encode(inst, cutoff, choose_lambdas(inst)); }

}  // namespace diamond
}  // namespace latfold
