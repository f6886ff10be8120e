#include "latfold/turn_circuit.hpp"

#include "latfold/turn_ancilla.hpp"

#include <stdexcept>

namespace latfold {
namespace turn_circuit {

std::pair<PBPoly, PBPoly> half_adder(const PBPoly& a, const PBPoly& b) {
  return {a + b - a * b * 2, a * b};
}

PBPoly xor_bit(const PBPoly& a, const PBPoly& b) { return a + b - a * b * 2; }
PBPoly xnor_bit(const PBPoly& a, const PBPoly& b) { return PBPoly(1) - a - b + a * b * 2; }

const PBPoly& SumString::digit(int r) const {
  static const PBPoly zero;
  if (r < 1) throw std::out_of_range("digit index is 1-based");
  return r <= width() ? digits[r - 1] : zero;
}

SumString sum_string(int i, int j, Dir dir) {
  if (i >= j) throw std::invalid_argument("sum_string needs i < j");
  SumString s;
  for (int p = i; p <= j - 1; ++p) {
    // Ripple-add one input bit through the current digits.
    PBPoly carry = turn_ancilla::directional(p, dir);
    for (auto& digit : s.digits) {
      auto [sum, c] = half_adder(digit, carry);
      digit = std::move(sum);
      carry = std::move(c);
    }
    if (!carry.is_zero()) s.digits.push_back(std::move(carry));
  }
  while (!s.digits.empty() && s.digits.back().is_zero()) s.digits.pop_back();
  return s;
}

namespace {

/// XNOR product over all digits of two strings (padded with zeros).
PBPoly digits_equal(const SumString& a, const SumString& b) {
  PBPoly eq(1);
  const int width = std::max(a.width(), b.width());
  for (int r = 1; r <= width; ++r) eq = eq * xnor_bit(a.digit(r), b.digit(r));
  return eq;
}

}  // namespace

PBPoly overlap_pair(int i, int j) {
  if ((j - i) % 2 != 0 || j - i < 2) throw std::invalid_argument("overlap needs even separation >= 2");
  PBPoly result(1);
  for (int axis = 0; axis < 2; ++axis) {
    const Dir plus = axis == 0 ? Dir::Right : Dir::Up;
    const Dir minus = axis == 0 ? Dir::Left : Dir::Down;
    result = result * digits_equal(sum_string(i, j, plus), sum_string(i, j, minus));
  }
  return result;
}

PBPoly e_overlap_total(int chain_length, long long lambda) {
  PBPoly total;
  for (int i = 1; i <= chain_length - 2; ++i)
    for (int j = 1; j <= (chain_length - i) / 2; ++j) total += overlap_pair(i, i + 2 * j);
  return total * Coeff(lambda);
}

PBPoly adjacency(int axis, int i, int j) {
  if ((j - i) % 2 != 1 || j - i < 3) throw std::invalid_argument("adjacency needs odd separation >= 3");
  const Dir plus = axis == 0 ? Dir::Right : Dir::Up;
  const Dir minus = axis == 0 ? Dir::Left : Dir::Down;
  const Dir other_plus = axis == 0 ? Dir::Up : Dir::Right;
  const Dir other_minus = axis == 0 ? Dir::Down : Dir::Left;

  const SumString sp = sum_string(i, j, plus);
  const SumString sm = sum_string(i, j, minus);
  const int width = std::max(sp.width(), sm.width());

  // Equal counts in the other dimension.
  PBPoly eq_other = digits_equal(sum_string(i, j, other_plus), sum_string(i, j, other_minus));

  // Lesser count even: the strings differ in the least significant digit only.
  PBPoly diff_one = xor_bit(sp.digit(1), sm.digit(1));
  for (int r = 2; r <= width; ++r) diff_one = diff_one * xnor_bit(sp.digit(r), sm.digit(r));

  // Lesser count odd with rightmost 0 at position p: a carry chain flips
  // digits 1..p and leaves the rest untouched.
  for (int p = 2; p <= width; ++p) {
    PBPoly chain = xor_bit(sp.digit(p - 1), sp.digit(p));
    for (int r = 1; r <= p - 2; ++r) chain = chain * xnor_bit(sp.digit(r), sp.digit(r + 1));
    for (int r = 1; r <= p; ++r) chain = chain * xor_bit(sp.digit(r), sm.digit(r));
    for (int r = p + 1; r <= width; ++r) chain = chain * xnor_bit(sp.digit(r), sm.digit(r));
    diff_one += chain;
  }
  return eq_other * diff_one;
}

PBPoly e_pair_total(const Instance& inst) {
  const int n = inst.chain_length();
  PBPoly total;
  for (int i = 1; i <= n - 3; ++i)
    for (int j = 1; j <= (n - i - 1) / 2; ++j) {
      const int other = 1 + i + 2 * j;
      const long long jij = inst.j(i, other);
      if (jij == 0) continue;
      total += (adjacency(0, i, other) + adjacency(1, i, other)) * Coeff(jij);
    }
  return total;
}

Encoding encode(const Instance& inst, long long lambda_overlap, bool allow_large) {
  const int n = inst.chain_length();
  if (n < 4) throw std::invalid_argument("turn-circuit encoding needs N >= 4");
  if (n > 10 && !allow_large)
    throw std::invalid_argument("turn-circuit term count grows rapidly; N > 10 needs an explicit override");
  Encoding enc;
  enc.kind = EncodingKind::TurnCircuit;
  enc.chain_length = n;
  enc.num_vars = 2 * n - 5;
  enc.num_info_bits = enc.num_vars;
  enc.poly = e_overlap_total(n, lambda_overlap) + e_pair_total(inst);
  enc.vars.assign(enc.num_vars + 1, VarInfo{VarRole::Info});
  return enc;
}

Encoding encode(const Instance& inst) {
  return encode(inst, turn_ancilla::choose_lambda(inst).lambda_overlap);
}

}  // namespace turn_circuit
}  // namespace latfold
