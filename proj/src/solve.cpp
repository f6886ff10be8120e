#include "latfold/solve.hpp"

#include "latfold/diamond.hpp"
#include "latfold/turn_ancilla.hpp"
#include "latfold/turn_circuit.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

namespace latfold {
namespace solve {

Fold decode_fold(const Assignment& a, const Encoding& enc) {
  if (enc.kind == EncodingKind::Diamond) throw std::invalid_argument("diamond assignments decode to placements");
  const int n = enc.chain_length;
  Fold f;
  f.turns.reserve(n - 1);
  f.turns.push_back(Dir::Right);
  if (n >= 3) f.turns.push_back(a.get(1) ? Dir::Right : Dir::Down);
  for (int j = 3; j <= n - 1; ++j) {
    const int code = (a.get(2 * j - 4) << 1) | a.get(2 * j - 3);
    f.turns.push_back(static_cast<Dir>(code));
  }
  return f;
}

void fold_to_bits(const Fold& f, Assignment& a) {
  const int n = static_cast<int>(f.turns.size()) + 1;
  if (f.turns.empty() || f.turns[0] != Dir::Right)
    throw std::invalid_argument("fold is not in canonical form (first turn right)");
  if (n >= 3) {
    if (f.turns[1] != Dir::Right && f.turns[1] != Dir::Down)
      throw std::invalid_argument("fold is not in canonical form (second turn right or down)");
    a.set(1, f.turns[1] == Dir::Right);
  }
  for (int j = 3; j <= n - 1; ++j) {
    const int code = static_cast<int>(f.turns[j - 1]);
    a.set(2 * j - 4, code >> 1);
    a.set(2 * j - 3, code & 1);
  }
}

std::optional<Conformation> decode_placement(const Assignment& a, const Encoding& enc) {
  if (enc.kind != EncodingKind::Diamond) return std::nullopt;
  Conformation c;
  c.coords.assign(enc.chain_length, {0, 0});
  std::vector<int> hits(enc.chain_length + 1, 0);
  for (int v = 1; v <= enc.num_vars; ++v) {
    const VarInfo& info = enc.vars[v];
    if (info.role != VarRole::DiamondSite || !a.get(v)) continue;
    ++hits[info.i];
    c.coords[info.i - 1] = {info.x, info.y};
  }
  hits[1] = 1;  // amino 1 is pinned, no register
  for (int k = 1; k <= enc.chain_length; ++k)
    if (hits[k] != 1) return std::nullopt;
  return c;
}

namespace {

long long squared_distance(const Conformation& c, int i, int j) {
  const long long dx = c.coords[i - 1].first - c.coords[j - 1].first;
  const long long dy = c.coords[i - 1].second - c.coords[j - 1].second;
  return dx * dx + dy * dy;
}

}  // namespace

void complete_ancillae(Assignment& a, const Encoding& enc) {
  if (enc.kind == EncodingKind::Diamond) {
    for (int v = 1; v <= enc.num_vars; ++v)
      if (enc.vars[v].role == VarRole::Gadget)
        a.set(v, a.get(enc.vars[v].i) & a.get(enc.vars[v].j));
    return;
  }
  const Conformation coords = fold_to_coords(decode_fold(a, enc));
  std::map<std::pair<int, int>, int> mu;
  for (int v = 1; v <= enc.num_vars; ++v)
    if (enc.vars[v].role == VarRole::Slack) {
      int& m = mu[{enc.vars[v].i, enc.vars[v].j}];
      m = std::max(m, enc.vars[v].k + 1);
    }
  for (int v = 1; v <= enc.num_vars; ++v) {
    const VarInfo& info = enc.vars[v];
    switch (info.role) {
      case VarRole::Slack: {
        const long long cap = 1ll << mu.at({info.i, info.j});
        long long alpha = cap - squared_distance(coords, info.i, info.j);
        alpha = std::clamp(alpha, 0ll, cap - 1);
        a.set(v, (alpha >> info.k) & 1);
        break;
      }
      case VarRole::Omega:
        a.set(v, squared_distance(coords, info.i, info.j) <= 1);
        break;
      case VarRole::Gadget:
        // Pair variables precede the ancilla, so creation order is safe.
        a.set(v, a.get(info.i) & a.get(info.j));
        break;
      default:
        break;
    }
  }
}

namespace {

/// Dense quadratic view of an integral degree-<=2 polynomial.
struct DenseQuadratic {
  long long constant = 0;
  std::vector<long long> linear;               // 1-based
  std::vector<std::vector<long long>> quad;    // symmetric, 1-based

  explicit DenseQuadratic(const PBPoly& p, int n)
      : linear(n + 1, 0), quad(n + 1, std::vector<long long>(n + 1, 0)) {
    if (p.degree() > 2) throw std::invalid_argument("polynomial is not 2-local");
    if (!p.is_integral()) throw std::invalid_argument("dense view needs integer coefficients");
    for (const auto& [mono, coeff] : p.terms()) {
      const long long c = coeff.numerator();
      if (mono.empty())
        constant = c;
      else if (mono.size() == 1)
        linear[mono[0]] = c;
      else
        quad[mono[0]][mono[1]] = quad[mono[1]][mono[0]] = c;
    }
  }
};

struct DiamondSearch {
  const Encoding& enc;
  DenseQuadratic dense;
  std::vector<std::vector<int>> registers;  // site vars per amino, ascending
  std::vector<int> chosen;
  std::vector<int> best_chosen;
  long long best = 0;
  bool have_best = false;
  // When collecting, every minimizing leaf is recorded.
  bool collect = false;
  std::vector<std::vector<int>> all_minimizers;

  explicit DiamondSearch(const Encoding& e) : enc(e), dense(e.poly, e.num_vars) {
    registers.resize(enc.chain_length + 1);
    for (int v = 1; v <= enc.num_vars; ++v) {
      if (enc.vars[v].role != VarRole::DiamondSite)
        throw std::invalid_argument("diamond solver expects site variables only");
      registers[enc.vars[v].i].push_back(v);
    }
  }

  long long delta(int v) const {
    long long d = dense.linear[v];
    for (int u : chosen) d += dense.quad[v][u];
    return d;
  }

  void leaf(long long energy) {
    if (!have_best || energy < best) {
      best = energy;
      best_chosen = chosen;
      have_best = true;
      if (collect) {
        all_minimizers.clear();
        all_minimizers.push_back(chosen);
      }
    } else if (collect && energy == best) {
      all_minimizers.push_back(chosen);
    }
  }

  void recurse(int amino, long long energy) {
    if (amino > enc.chain_length) {
      leaf(energy);
      return;
    }
    // Local choice order (empty register, then descending site index) visits
    // leaves in ascending lexicographic assignment order.
    recurse(amino + 1, energy);
    const auto& reg = registers[amino];
    for (int s = static_cast<int>(reg.size()) - 1; s >= 0; --s) {
      const int v = reg[s];
      chosen.push_back(v);
      recurse(amino + 1, energy + delta(v));
      chosen.pop_back();
    }
  }

  void run() { recurse(2, dense.constant); }

  Assignment to_assignment(const std::vector<int>& vars) const {
    Assignment a(enc.num_vars);
    for (int v : vars) a.set(v, 1);
    return a;
  }
};

SolveResult diamond_min(const Encoding& enc) {
  DiamondSearch search(enc);
  search.run();
  SolveResult result;
  result.best = search.to_assignment(search.best_chosen);
  result.best_value = search.best;
  result.placement = decode_placement(result.best, enc);
  result.valid = result.placement.has_value();
  return result;
}

}  // namespace

SolveResult exhaustive_min(const Encoding& enc) {
  if (enc.kind == EncodingKind::Diamond) return diamond_min(enc);
  const int m = enc.num_info_bits;
  if (m > 20) throw std::invalid_argument("too many information bits for exhaustion");
  SolveResult result;
  bool have = false;
  Assignment a(enc.num_vars);
  for (std::uint64_t mask = 0; mask < (1ull << m); ++mask) {
    for (int v = 1; v <= m; ++v) a.set(v, (mask >> (m - v)) & 1);  // q1 is most significant
    complete_ancillae(a, enc);
    const Coeff value = enc.poly.evaluate(a);
    if (!have || value < result.best_value) {
      result.best = a;
      result.best_value = value;
      have = true;
    }
  }
  result.fold = decode_fold(result.best, enc);
  return result;
}

SolveResult flat_min(const PBPoly& p, int num_vars) {
  if (num_vars > 22) throw std::invalid_argument("too many variables for a flat sweep");
  SolveResult result;
  Assignment a(num_vars);
  result.best = a;
  result.best_value = p.evaluate(a);
  for (std::uint64_t mask = 1; mask < (1ull << num_vars); ++mask) {
    for (int v = 1; v <= num_vars; ++v) a.set(v, (mask >> (num_vars - v)) & 1);
    const Coeff value = p.evaluate(a);
    if (value < result.best_value) {
      result.best = a;
      result.best_value = value;
    }
  }
  return result;
}

SolveResult anneal(const reduction::QuboModel& m, const AnnealParams& params) {
  const int n = m.num_vars;
  std::vector<long long> diag(n + 1, 0);
  std::vector<std::vector<long long>> quad(n + 1, std::vector<long long>(n + 1, 0));
  long long largest = 1;
  for (const auto& [ij, c] : m.coeffs) {
    if (ij.first == ij.second)
      diag[ij.first] = c;
    else
      quad[ij.first][ij.second] = quad[ij.second][ij.first] = c;
    largest = std::max(largest, c < 0 ? -c : c);
  }
  // Starting at the largest coupling (not the total weight) keeps the whole
  // ladder inside the band where moves are neither free nor frozen.
  const double t0 = static_cast<double>(largest);
  const double t_final = std::min(params.t_final, t0);
  const double factor =
      params.sweeps > 1 ? std::pow(t_final / t0, 1.0 / (params.sweeps - 1)) : 1.0;

  std::mt19937_64 rng(params.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  std::vector<std::uint8_t> best_bits(n + 1, 0);
  long long best = 0;
  bool have_best = false;

  for (int restart = 0; restart < params.restarts; ++restart) {
    std::vector<std::uint8_t> bits(n + 1, 0);
    for (int v = 1; v <= n; ++v) bits[v] = static_cast<std::uint8_t>(rng() & 1);
    // field[v] is the energy delta of setting v given the other bits, kept
    // incrementally so rejected proposals cost O(1).
    std::vector<long long> field(n + 1);
    long long energy = 0;
    for (int v = 1; v <= n; ++v) {
      field[v] = diag[v];
      for (int u = 1; u <= n; ++u)
        if (bits[u]) field[v] += quad[v][u];
      if (bits[v]) {
        energy += diag[v];
        for (int u = v + 1; u <= n; ++u)
          if (bits[u]) energy += quad[v][u];
      }
    }
    if (!have_best || energy < best) {
      best = energy;
      best_bits = bits;
      have_best = true;
    }
    double t = t0;
    for (int sweep = 0; sweep < params.sweeps; ++sweep) {
      for (int v = 1; v <= n; ++v) {
        const long long de = bits[v] ? -field[v] : field[v];
        if (de > 0) {
          // exp(-30) is below any double the comparison could see.
          if (static_cast<double>(de) > 30.0 * t) continue;
          if (unit(rng) >= std::exp(-static_cast<double>(de) / t)) continue;
        }
        const int sign = bits[v] ? -1 : 1;
        bits[v] ^= 1;
        energy += de;
        for (int u = 1; u <= n; ++u) field[u] += sign * quad[u][v];
        if (energy < best) {
          best = energy;
          best_bits = bits;
        }
      }
      t *= factor;
    }
  }

  SolveResult result;
  result.best = Assignment(n);
  for (int v = 1; v <= n; ++v) result.best.set(v, best_bits[v]);
  result.best_value = Coeff(best + m.constant);
  return result;
}

namespace {

std::string fold_string(const Fold& f) {
  std::string s;
  for (Dir d : f.turns) {
    if (!s.empty()) s += ',';
    s += dir_name(d);
  }
  return s;
}

/// Canonical form of a diamond placement: the lattice symmetry that makes the
/// first turn right and the second right-or-down.
std::optional<Fold> canonical_fold(const Conformation& c) {
  for (int sym = 0; sym < 8; ++sym) {
    const auto fold = coords_to_fold(apply_symmetry(c, sym));
    if (!fold) continue;
    if (fold->turns[0] != Dir::Right) continue;
    if (fold->turns.size() >= 2 && fold->turns[1] != Dir::Right && fold->turns[1] != Dir::Down)
      continue;
    return fold;
  }
  return std::nullopt;
}

}  // namespace

VerifyReport verify_encoding(const Instance& inst, EncodingKind kind) {
  const int n = inst.chain_length();
  const int cap = kind == EncodingKind::TurnAncilla ? 7 : 6;
  if (n < 4 || n > cap) throw std::invalid_argument("verify_encoding is a desk-scale oracle check");

  Encoding enc;
  switch (kind) {
    case EncodingKind::TurnAncilla: enc = turn_ancilla::encode(inst); break;
    case EncodingKind::TurnCircuit: enc = turn_circuit::encode(inst); break;
    case EncodingKind::Diamond: enc = diamond::encode(inst); break;
  }
  const GroundTruth gt = ground_truth(inst);

  VerifyReport report;
  report.ground_energy = gt.energy;

  std::vector<Assignment> minimizers;
  Coeff min_value = 0;
  if (kind == EncodingKind::Diamond) {
    DiamondSearch search(enc);
    search.collect = true;
    search.run();
    min_value = search.best;
    for (const auto& vars : search.all_minimizers) minimizers.push_back(search.to_assignment(vars));
  } else {
    const int m = enc.num_info_bits;
    Assignment a(enc.num_vars);
    bool have = false;
    for (std::uint64_t mask = 0; mask < (1ull << m); ++mask) {
      for (int v = 1; v <= m; ++v) a.set(v, (mask >> (m - v)) & 1);
      complete_ancillae(a, enc);
      const Coeff value = enc.poly.evaluate(a);
      if (!have || value < min_value) {
        min_value = value;
        minimizers.clear();
        minimizers.push_back(a);
        have = true;
      } else if (value == min_value) {
        minimizers.push_back(a);
      }
    }
  }
  report.encoding_min = min_value;
  report.minimizer_count = static_cast<int>(minimizers.size());

  if (min_value != Coeff(gt.energy)) {
    std::ostringstream os;
    os << "encoding minimum " << min_value.numerator() << " != ground energy " << gt.energy;
    report.failures.push_back(os.str());
  }

  for (const auto& a : minimizers) {
    std::optional<Fold> fold;
    if (kind == EncodingKind::Diamond) {
      const auto placement = decode_placement(a, enc);
      if (!placement) {
        report.failures.push_back("minimizer with a register that is not one-hot");
        continue;
      }
      fold = canonical_fold(*placement);
    } else {
      fold = decode_fold(a, enc);
    }
    if (!fold || !std::binary_search(gt.folds.begin(), gt.folds.end(), *fold)) {
      report.failures.push_back("minimizer decodes to a non-optimal or invalid fold" +
                                (fold ? " (" + fold_string(*fold) + ")" : std::string()));
    }
  }

  for (const auto& fold : gt.folds) {
    Assignment a(enc.num_vars);
    if (kind == EncodingKind::Diamond) {
      const Conformation coords = fold_to_coords(fold);
      std::map<std::pair<std::pair<int, int>, int>, int> site_var;
      for (int v = 1; v <= enc.num_vars; ++v)
        site_var[{{enc.vars[v].x, enc.vars[v].y}, enc.vars[v].i}] = v;
      for (int k = 2; k <= n; ++k) a.set(site_var.at({coords.coords[k - 1], k}), 1);
    } else {
      fold_to_bits(fold, a);
      complete_ancillae(a, enc);
    }
    if (enc.poly.evaluate(a) != min_value)
      report.failures.push_back("optimal fold " + fold_string(fold) +
                                " has no completion achieving the minimum");
  }

  report.pass = report.failures.empty();
  return report;
}

}  // namespace solve
}  // namespace latfold
