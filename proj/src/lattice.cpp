#include "latfold/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace latfold {

const char* dir_name(Dir d) {
  switch (d) {
    case Dir::Down: return "down";
    case Dir::Right: return "right";
    case Dir::Left: return "left";
    case Dir::Up: return "up";
  }
  return "?";
}

Instance::Instance(std::vector<std::string> sequence, std::vector<std::vector<long long>> j)
    : sequence_(std::move(sequence)), j_(std::move(j)) {
  const int n = chain_length();
  if (n < 2) throw std::invalid_argument("instance needs at least 2 residues");
  if (static_cast<int>(j_.size()) != n) throw std::invalid_argument("J matrix size mismatch");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(j_[i].size()) != n) throw std::invalid_argument("J matrix size mismatch");
    for (int k = 0; k < n; ++k) {
      if (j_[i][k] != j_[k][i]) throw std::invalid_argument("J matrix must be symmetric");
      if (j_[i][k] > 0) throw std::invalid_argument("J entries must be <= 0");
    }
  }
  // Mask entries with no geometric meaning on a bipartite lattice. Done after
  // validation: zeroing one triangle first would look like an asymmetry.
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      if (!pair_interactable(i + 1, k + 1)) j_[i][k] = 0;
}

long long Instance::j(int i, int k) const { return j_.at(i - 1).at(k - 1); }

std::vector<std::pair<int, int>> Instance::interacting_pairs() const {
  std::vector<std::pair<int, int>> out;
  const int n = chain_length();
  for (int i = 1; i <= n; ++i)
    for (int k = i + 3; k <= n; k += 2)
      if (j(i, k) != 0) out.emplace_back(i, k);
  return out;
}

long long Instance::j_sum() const {
  long long total = 0;
  const int n = chain_length();
  for (int i = 1; i <= n; ++i)
    for (int k = i + 1; k <= n; ++k) total += j(i, k);
  return total;
}

namespace {

std::vector<std::string> split_letters(const std::string& sequence) {
  std::vector<std::string> out;
  for (char c : sequence) out.emplace_back(1, c);
  return out;
}

// Contact energies used for the PSVKMA worked example, derived from the
// Miyazawa-Jernigan statistical potential and discretized to integers.
// Pairs not listed do not interact.
const std::map<std::pair<char, char>, long long> kMjContacts = {
    {{'K', 'P'}, -1}, {{'A', 'P'}, -2}, {{'M', 'S'}, -3}, {{'A', 'V'}, -4},
};

long long mj_contact(char a, char b) {
  if (a > b) std::swap(a, b);
  auto it = kMjContacts.find({a, b});
  return it == kMjContacts.end() ? 0 : it->second;
}

}  // namespace

Instance Instance::hp(const std::string& sequence) {
  const int n = static_cast<int>(sequence.size());
  std::vector<std::vector<long long>> j(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i) {
    if (sequence[i] != 'H' && sequence[i] != 'P')
      throw std::invalid_argument("hp model supports residues {H,P} only");
    for (int k = 0; k < n; ++k)
      if (sequence[i] == 'H' && sequence[k] == 'H' && i != k) j[i][k] = -1;
  }
  return Instance(split_letters(sequence), std::move(j));
}

Instance Instance::mj(const std::string& sequence) {
  static const std::string alphabet = "PSVKMA";
  const int n = static_cast<int>(sequence.size());
  std::vector<std::vector<long long>> j(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i) {
    if (alphabet.find(sequence[i]) == std::string::npos)
      throw std::invalid_argument("mj model supports residues {P,S,V,K,M,A} only");
    for (int k = 0; k < n; ++k)
      if (i != k) j[i][k] = mj_contact(sequence[i], sequence[k]);
  }
  return Instance(split_letters(sequence), std::move(j));
}

Instance Instance::parse(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream probe(line);
    std::string tok;
    if (probe >> tok) lines.push_back(line);
  }
  if (lines.empty()) throw std::invalid_argument("empty instance file");

  std::istringstream first(lines[0]);
  std::string kw, seq;
  first >> kw;
  if (kw == "sequence") first >> seq;
  else seq = kw;
  if (seq.size() < 2) throw std::invalid_argument("sequence too short");

  if (lines.size() < 2) throw std::invalid_argument("instance file needs a model line or J block");
  std::istringstream second(lines[1]);
  second >> kw;
  if (kw == "model") {
    std::string model;
    second >> model;
    if (model == "hp") return hp(seq);
    if (model == "mj") return mj(seq);
    throw std::invalid_argument("unknown model: " + model);
  }
  if (kw != "j" && kw != "J") throw std::invalid_argument("expected 'model' or 'j' line");

  const int n = static_cast<int>(seq.size());
  std::vector<std::vector<long long>> j(n, std::vector<long long>(n, 0));
  if (static_cast<int>(lines.size()) != 2 + n - 1)
    throw std::invalid_argument("J block needs N-1 lower-triangular rows");
  for (int row = 2; row <= n; ++row) {
    std::istringstream rs(lines[row]);
    for (int col = 1; col < row; ++col) {
      long long v;
      if (!(rs >> v)) throw std::invalid_argument("short J row");
      j[row - 1][col - 1] = v;
      j[col - 1][row - 1] = v;
    }
  }
  return Instance(split_letters(seq), std::move(j));
}

Conformation fold_to_coords(const Fold& f) {
  Conformation c;
  c.coords.reserve(f.turns.size() + 1);
  int x = 0, y = 0;
  c.coords.emplace_back(x, y);
  for (Dir d : f.turns) {
    const auto [dx, dy] = step(d);
    x += dx;
    y += dy;
    c.coords.emplace_back(x, y);
  }
  return c;
}

bool is_saw(const Conformation& c) {
  std::set<std::pair<int, int>> seen(c.coords.begin(), c.coords.end());
  return seen.size() == c.coords.size();
}

long long conformation_energy(const Conformation& c, const Instance& inst) {
  if (!is_saw(c)) throw std::invalid_argument("conformation overlaps itself");
  const int n = static_cast<int>(c.coords.size());
  if (n != inst.chain_length()) throw std::invalid_argument("length mismatch");
  long long e = 0;
  for (int i = 0; i < n; ++i)
    for (int k = i + 3; k < n; k += 2) {
      const int dist = std::abs(c.coords[i].first - c.coords[k].first) +
                       std::abs(c.coords[i].second - c.coords[k].second);
      if (dist == 1) e += inst.j(i + 1, k + 1);
    }
  return e;
}

long long native_energy(const Fold& f, const Instance& inst) {
  return conformation_energy(fold_to_coords(f), inst);
}

namespace {

void extend_walk(std::vector<Dir>& turns, std::vector<std::pair<int, int>>& path,
                 std::set<std::pair<int, int>>& occupied, int remaining, std::vector<Fold>& out) {
  if (remaining == 0) {
    out.push_back(Fold{turns});
    return;
  }
  for (int code = 0; code < 4; ++code) {
    const Dir d = static_cast<Dir>(code);
    const auto [dx, dy] = step(d);
    std::pair<int, int> next{path.back().first + dx, path.back().second + dy};
    if (occupied.count(next)) continue;
    turns.push_back(d);
    path.push_back(next);
    occupied.insert(next);
    extend_walk(turns, path, occupied, remaining - 1, out);
    occupied.erase(next);
    path.pop_back();
    turns.pop_back();
  }
}

}  // namespace

std::vector<Fold> enumerate_saws(int n, bool fix_symmetry) {
  if (n < 2) throw std::invalid_argument("need at least 2 aminos");
  std::vector<Fold> out;
  std::vector<Dir> turns;
  std::vector<std::pair<int, int>> path{{0, 0}};
  std::set<std::pair<int, int>> occupied{{0, 0}};

  auto run_free = [&](int remaining) { extend_walk(turns, path, occupied, remaining, out); };

  if (!fix_symmetry) {
    run_free(n - 1);
    return out;
  }
  turns.push_back(Dir::Right);
  path.emplace_back(1, 0);
  occupied.insert({1, 0});
  if (n == 2) {
    out.push_back(Fold{turns});
    return out;
  }
  for (Dir second : {Dir::Down, Dir::Right}) {
    const auto [dx, dy] = step(second);
    std::pair<int, int> next{1 + dx, dy};
    turns.push_back(second);
    path.push_back(next);
    occupied.insert(next);
    run_free(n - 3);
    occupied.erase(next);
    path.pop_back();
    turns.pop_back();
  }
  std::sort(out.begin(), out.end());
  return out;
}

GroundTruth ground_truth(const Instance& inst) {
  const int n = inst.chain_length();
  if (n > 12) throw std::invalid_argument("ground_truth is desk-scale (N <= 12)");
  GroundTruth gt;
  bool first = true;
  for (const Fold& f : enumerate_saws(n, /*fix_symmetry=*/true)) {
    const long long e = native_energy(f, inst);
    if (first || e < gt.energy) {
      gt.energy = e;
      gt.folds.clear();
      first = false;
    }
    if (e == gt.energy) gt.folds.push_back(f);
  }
  return gt;
}

Conformation apply_symmetry(const Conformation& c, int sym) {
  // sym in 0..7: rotation (sym % 4) quarter turns, then reflect x if sym >= 4.
  Conformation out;
  out.coords.reserve(c.coords.size());
  for (auto [x, y] : c.coords) {
    for (int r = 0; r < sym % 4; ++r) {
      const int t = x;
      x = -y;
      y = t;
    }
    if (sym >= 4) x = -x;
    out.coords.emplace_back(x, y);
  }
  return out;
}

std::optional<Fold> coords_to_fold(const Conformation& c) {
  if (c.coords.empty() || c.coords[0] != std::pair<int, int>{0, 0}) return std::nullopt;
  Fold f;
  for (std::size_t k = 1; k < c.coords.size(); ++k) {
    const int dx = c.coords[k].first - c.coords[k - 1].first;
    const int dy = c.coords[k].second - c.coords[k - 1].second;
    bool found = false;
    for (int code = 0; code < 4; ++code) {
      if (kDirStep[code] == std::pair<int, int>{dx, dy}) {
        f.turns.push_back(static_cast<Dir>(code));
        found = true;
        break;
      }
    }
    if (!found) return std::nullopt;
  }
  return f;
}

}  // namespace latfold
