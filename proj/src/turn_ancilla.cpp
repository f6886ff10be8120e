#include "latfold/turn_ancilla.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace latfold {
namespace turn_ancilla {

int slack_width(int i, int j) {
  const int sep = std::abs(j - i);
  int mu = 0;
  while ((1 << mu) < sep * sep) ++mu;  // ceil(2*log2(sep)) = ceil(log2(sep^2))
  return mu;
}

TurnLayout build_layout(const Instance& inst) {
  const int n = inst.chain_length();
  if (n < 4) throw std::invalid_argument("turn-ancilla encoding needs N >= 4");
  TurnLayout layout;
  layout.chain_length = n;
  layout.info_bits = 2 * n - 5;
  int next = layout.info_bits + 1;
  for (int i = 1; i <= n - 4; ++i)
    for (int j = i + 4; j <= n; j += 2) {
      const int mu = slack_width(i, j);
      layout.slack[{i, j}] = {next, mu};
      next += mu;
    }
  for (auto [i, j] : inst.interacting_pairs()) {
    layout.omega[{i, j}] = next;
    ++next;
  }
  layout.total_bits = next - 1;
  return layout;
}

PBPoly directional(int turn, Dir dir) {
  if (turn < 1) throw std::out_of_range("turn index out of range");
  if (turn == 1) return dir == Dir::Right ? PBPoly(1) : PBPoly(0);
  if (turn == 2) {
    // Bits (0, q1): right when q1 = 1, down when q1 = 0.
    const PBPoly q1 = PBPoly::variable(1);
    switch (dir) {
      case Dir::Right: return q1;
      case Dir::Down: return negate_bit(q1);
      default: return PBPoly(0);
    }
  }
  const PBPoly a = PBPoly::variable(2 * turn - 4);
  const PBPoly b = PBPoly::variable(2 * turn - 3);
  switch (dir) {
    case Dir::Right: return b * negate_bit(a);
    case Dir::Left: return a * negate_bit(b);
    case Dir::Up: return a * b;
    case Dir::Down: return negate_bit(a) * negate_bit(b);
  }
  return PBPoly(0);
}

PBPoly e_back(int chain_length, const Penalties& pen) {
  if (chain_length < 4) throw std::invalid_argument("e_back needs N >= 4");
  const Coeff lam(pen.lambda_back);
  const PBPoly q1 = PBPoly::variable(1), q2 = PBPoly::variable(2), q3 = PBPoly::variable(3);
  // Turn 2 vs turn 3: the fixed leading 0 of turn 2 collapses the factored
  // form to three terms.
  PBPoly total = (q1 * q2 + q2 * q3 - q1 * q2 * q3 * 2) * lam;
  for (int i = 2; i <= 2 * chain_length - 8; i += 2) {
    const PBPoly qi = PBPoly::variable(i), qi1 = PBPoly::variable(i + 1);
    const PBPoly qi2 = PBPoly::variable(i + 2), qi3 = PBPoly::variable(i + 3);
    total += (qi * qi2 * 2 - qi - qi2) * (qi1 * qi3 * 2 - qi1 - qi3) * lam;
  }
  return total;
}

PBPoly position(int n, int axis) {
  if (n < 1) throw std::out_of_range("amino index out of range");
  if (axis != 0 && axis != 1) throw std::out_of_range("axis must be 0 (x) or 1 (y)");
  if (n == 1) return PBPoly(0);
  if (n == 2) return axis == 0 ? PBPoly(1) : PBPoly(0);
  PBPoly p = axis == 0 ? PBPoly(1) + PBPoly::variable(1) : PBPoly::variable(1) - PBPoly(1);
  for (int k = 3; k <= n - 1; ++k) {
    if (axis == 0)
      p += directional(k, Dir::Right) - directional(k, Dir::Left);
    else
      p += directional(k, Dir::Up) - directional(k, Dir::Down);
  }
  return p;
}

PBPoly g(int i, int j) {
  const PBPoly dx = position(i, 0) - position(j, 0);
  const PBPoly dy = position(i, 1) - position(j, 1);
  return dx * dx + dy * dy;
}

PBPoly e_overlap(const TurnLayout& layout, const Penalties& pen) {
  PBPoly total;
  for (const auto& [pair, reg] : layout.slack) {
    const auto [first_var, mu] = reg;
    PBPoly alpha;
    for (int k = 0; k < mu; ++k) alpha += PBPoly::variable(first_var + k) * Coeff(1LL << k);
    const PBPoly slack_gap = PBPoly(1LL << mu) - g(pair.first, pair.second) - alpha;
    total += slack_gap * slack_gap * Coeff(pen.lambda_overlap);
  }
  return total;
}

PBPoly e_pair(const TurnLayout& layout, const Instance& inst) {
  PBPoly total;
  for (const auto& [pair, omega_var] : layout.omega) {
    const long long jij = inst.j(pair.first, pair.second);
    total += PBPoly::variable(omega_var) * (PBPoly(2) - g(pair.first, pair.second)) * Coeff(jij);
  }
  return total;
}

Penalties choose_lambda(const Instance& inst) {
  const long long lam = 1 + std::llabs(inst.j_sum());
  return Penalties{lam, lam};
}

Encoding encode(const Instance& inst, const Penalties& pen) {
  const TurnLayout layout = build_layout(inst);
  Encoding enc;
  enc.kind = EncodingKind::TurnAncilla;
  enc.chain_length = inst.chain_length();
  enc.num_vars = layout.total_bits;
  enc.num_info_bits = layout.info_bits;
  enc.poly = e_back(inst.chain_length(), pen) + e_overlap(layout, pen) + e_pair(layout, inst);
  enc.vars.resize(layout.total_bits + 1);
  for (int v = 1; v <= layout.info_bits; ++v) enc.vars[v] = VarInfo{VarRole::Info};
  for (const auto& [pair, reg] : layout.slack)
    for (int k = 0; k < reg.second; ++k)
      enc.vars[reg.first + k] = VarInfo{VarRole::Slack, pair.first, pair.second, k};
  for (const auto& [pair, omega_var] : layout.omega)
    enc.vars[omega_var] = VarInfo{VarRole::Omega, pair.first, pair.second};
  return enc;
}

Encoding encode(const Instance& inst) { return encode(inst, choose_lambda(inst)); }

}  // namespace turn_ancilla
}  // namespace latfold
