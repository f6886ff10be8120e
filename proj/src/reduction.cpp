#include "latfold/reduction.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace latfold {
namespace reduction {

PBPoly and_gadget(int i, int j, int n, long long delta) {
  if (i == j || n == i || n == j) throw std::invalid_argument("gadget variables must be distinct");
  if (delta <= 0) throw std::invalid_argument("gadget weight must be positive");
  PBPoly g = PBPoly::term({n}, 3) + PBPoly::term({std::min(i, j), std::max(i, j)}, 1) -
             PBPoly::term({std::min(i, n), std::max(i, n)}, 2) -
             PBPoly::term({std::min(j, n), std::max(j, n)}, 2);
  return g * Coeff(delta);
}

CoverGraph build_cover(const PBPoly& poly) {
  CoverGraph graph;
  for (const auto& [mono, coeff] : poly.terms()) {
    if (static_cast<int>(mono.size()) < 3) continue;
    graph.high_terms.push_back(mono);
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t a = 0; a < mono.size(); ++a)
      for (std::size_t b = a + 1; b < mono.size(); ++b) pairs.emplace_back(mono[a], mono[b]);
    graph.candidates.push_back(std::move(pairs));
  }
  return graph;
}

std::vector<std::pair<int, int>> greedy_cover(const CoverGraph& graph) {
  std::vector<std::pair<int, int>> chosen;
  std::vector<bool> covered(graph.high_terms.size(), false);
  std::size_t remaining = graph.high_terms.size();
  while (remaining > 0) {
    std::map<std::pair<int, int>, int> gain;
    for (std::size_t t = 0; t < graph.high_terms.size(); ++t) {
      if (covered[t]) continue;
      for (const auto& p : graph.candidates[t]) ++gain[p];
    }
    // Map order is lexicographic, so the first maximal entry is the tie winner.
    std::pair<int, int> best = gain.begin()->first;
    int best_gain = gain.begin()->second;
    for (const auto& [p, g] : gain)
      if (g > best_gain) {
        best = p;
        best_gain = g;
      }
    chosen.push_back(best);
    for (std::size_t t = 0; t < graph.high_terms.size(); ++t) {
      if (covered[t]) continue;
      const auto& m = graph.high_terms[t];
      if (std::binary_search(m.begin(), m.end(), best.first) &&
          std::binary_search(m.begin(), m.end(), best.second)) {
        covered[t] = true;
        --remaining;
      }
    }
  }
  return chosen;
}

long long choose_delta(const PBPoly& poly, std::pair<int, int> pair) {
  if (!poly.is_integral()) throw std::invalid_argument("reduction needs integer coefficients");
  long long total = 1;
  for (const auto& [mono, coeff] : poly.terms()) {
    if (std::binary_search(mono.begin(), mono.end(), pair.first) ||
        std::binary_search(mono.begin(), mono.end(), pair.second)) {
      const long long c = coeff.numerator();
      total += c < 0 ? -c : c;
    }
  }
  return total;
}

ReductionResult reduce_to_2local(const PBPoly& poly, int num_vars) {
  if (!poly.is_integral()) throw std::invalid_argument("reduction needs integer coefficients");
  if (poly.max_var() > num_vars) throw std::invalid_argument("polynomial exceeds declared variable count");

  ReductionResult result;
  // The penalties live in a separate polynomial: they are never among the
  // rewritten terms, and folding them into the delta sums would make each
  // ancilla's penalty swallow all earlier ones and blow the coefficients up
  // geometrically.
  PBPoly work = poly;
  PBPoly penalties;
  int next_var = num_vars;

  while (work.degree() > 2) {
    const CoverGraph graph = build_cover(work);
    for (const auto& pair : greedy_cover(graph)) {
      // Earlier substitutions in this pass may have eliminated the pair.
      bool present = false;
      for (const auto& [mono, coeff] : work.terms())
        if (mono.size() >= 3 && std::binary_search(mono.begin(), mono.end(), pair.first) &&
            std::binary_search(mono.begin(), mono.end(), pair.second)) {
          present = true;
          break;
        }
      if (!present) continue;
      const long long delta = choose_delta(work, pair);
      const int ancilla = ++next_var;
      work = work.substitute_pair(pair.first, pair.second, ancilla);
      penalties += and_gadget(pair.first, pair.second, ancilla, delta);
      result.gadgets.push_back({ancilla, pair.first, pair.second, delta});
    }
  }

  result.reduced_poly = work + penalties;
  result.qubo = QuboModel::from_poly(result.reduced_poly, next_var);
  return result;
}

Encoding reduced_encoding(const Encoding& enc, const ReductionResult& red) {
  Encoding out = enc;
  out.poly = red.reduced_poly;
  out.num_vars = red.qubo.num_vars;
  out.vars.resize(out.num_vars + 1);
  for (const auto& g : red.gadgets) out.vars[g.ancilla] = VarInfo{VarRole::Gadget, g.a, g.b, 0, 0, 0};
  return out;
}

long long QuboModel::coeff(int i, int j) const {
  if (i > j) std::swap(i, j);
  const auto it = coeffs.find({i, j});
  return it == coeffs.end() ? 0 : it->second;
}

long long QuboModel::energy(const Assignment& a) const {
  long long e = constant;
  for (const auto& [ij, c] : coeffs)
    if (a.get(ij.first) && a.get(ij.second)) e += c;
  return e;
}

PBPoly QuboModel::to_poly() const {
  PBPoly p(constant);
  for (const auto& [ij, c] : coeffs) {
    if (ij.first == ij.second)
      p += PBPoly::term({ij.first}, c);
    else
      p += PBPoly::term({ij.first, ij.second}, c);
  }
  return p;
}

QuboModel QuboModel::from_poly(const PBPoly& p, int num_vars) {
  if (p.degree() > 2) throw std::invalid_argument("polynomial is not 2-local");
  if (!p.is_integral()) throw std::invalid_argument("QUBO needs integer coefficients");
  QuboModel m;
  m.num_vars = num_vars;
  for (const auto& [mono, coeff] : p.terms()) {
    if (mono.empty())
      m.constant = coeff.numerator();
    else if (mono.size() == 1)
      m.coeffs[{mono[0], mono[0]}] = coeff.numerator();
    else
      m.coeffs[{mono[0], mono[1]}] = coeff.numerator();
  }
  return m;
}

std::string QuboModel::to_file() const {
  std::ostringstream os;
  os << "qubo " << num_vars << ' ' << constant << '\n';
  for (const auto& [ij, c] : coeffs) os << ij.first << ' ' << ij.second << ' ' << c << '\n';
  return os.str();
}

std::string QuboModel::to_dense_matrix() const {
  std::ostringstream os;
  for (int i = 1; i <= num_vars; ++i) {
    for (int j = 1; j <= num_vars; ++j) {
      if (j > 1) os << ' ';
      os << (j >= i ? coeff(i, j) : 0);
    }
    os << '\n';
  }
  return os.str();
}

QuboModel QuboModel::from_file(const std::string& text) {
  std::istringstream is(text);
  std::string tag;
  QuboModel m;
  if (!(is >> tag >> m.num_vars >> m.constant) || tag != "qubo")
    throw std::invalid_argument("malformed qubo header");
  int i, j;
  long long c;
  while (is >> i >> j >> c) {
    if (i < 1 || j < i || j > m.num_vars) throw std::invalid_argument("qubo entry out of range");
    if (c != 0) m.coeffs[{i, j}] = c;
  }
  return m;
}

namespace {

std::string coeff_str(const Coeff& c) {
  std::ostringstream os;
  os << c.numerator();
  if (c.denominator() != 1) os << '/' << c.denominator();
  return os.str();
}

}  // namespace

Coeff IsingModel::energy(const std::vector<int>& spins) const {
  Coeff e = offset;
  for (int i = 1; i <= num_vars; ++i) e += h[i] * spins[i];
  for (const auto& [ij, c] : j) e += c * (spins[ij.first] * spins[ij.second]);
  return e;
}

std::string IsingModel::to_file() const {
  std::ostringstream os;
  os << "ising " << num_vars << ' ' << coeff_str(offset) << '\n';
  for (int i = 1; i <= num_vars; ++i)
    if (h[i] != 0) os << "h " << i << ' ' << coeff_str(h[i]) << '\n';
  for (const auto& [ij, c] : j) os << "j " << ij.first << ' ' << ij.second << ' ' << coeff_str(c) << '\n';
  return os.str();
}

IsingModel qubo_to_ising(const QuboModel& m) {
  IsingModel ising;
  ising.num_vars = m.num_vars;
  ising.h.assign(m.num_vars + 1, Coeff(0));
  ising.offset = m.constant;
  const Coeff half(1, 2), quarter(1, 4);
  for (const auto& [ij, c] : m.coeffs) {
    const auto [i, j] = ij;
    if (i == j) {
      ising.h[i] += c * half;
      ising.offset += c * half;
    } else {
      ising.j[{i, j}] += c * quarter;
      ising.h[i] += c * quarter;
      ising.h[j] += c * quarter;
      ising.offset += c * quarter;
    }
  }
  for (auto it = ising.j.begin(); it != ising.j.end();)
    it = it->second == 0 ? ising.j.erase(it) : std::next(it);
  return ising;
}

}  // namespace reduction
}  // namespace latfold
