#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace latfold {

/// Compass of the turn encoding: 2-bit codes 00 down, 01 right, 10 left, 11 up.
enum class Dir : std::uint8_t { Down = 0, Right = 1, Left = 2, Up = 3 };

constexpr std::array<std::pair<int, int>, 4> kDirStep = {{{0, -1}, {1, 0}, {-1, 0}, {0, 1}}};

inline std::pair<int, int> step(Dir d) { return kDirStep[static_cast<int>(d)]; }
const char* dir_name(Dir d);

/// A fold: N-1 turns for a chain of N aminos.
struct Fold {
  std::vector<Dir> turns;
  bool operator==(const Fold& other) const { return turns == other.turns; }
  bool operator<(const Fold& other) const { return turns < other.turns; }
};

/// Integer lattice coordinates, amino 1 at the origin.
struct Conformation {
  std::vector<std::pair<int, int>> coords;
};

/// A heteropolymer instance: residue labels plus a symmetric contact-energy
/// matrix with non-positive entries. Entries at even separation or
/// separation < 3 are geometrically irrelevant and are zeroed on construction.
class Instance {
 public:
  Instance(std::vector<std::string> sequence, std::vector<std::vector<long long>> j);

  int chain_length() const { return static_cast<int>(sequence_.size()); }
  const std::vector<std::string>& sequence() const { return sequence_; }

  /// Masked interaction energy for 1-based amino indices.
  long long j(int i, int k) const;

  /// Pairs (i, j) with i < j, odd separation >= 3 and nonzero J, in order.
  std::vector<std::pair<int, int>> interacting_pairs() const;

  /// Sum of masked J entries over i < j.
  long long j_sum() const;

  /// HP model: J = -1 for H-H pairs, 0 otherwise.
  static Instance hp(const std::string& sequence);
  /// MJ contact energies for the residue alphabet {P,S,V,K,M,A}.
  static Instance mj(const std::string& sequence);

  /// Instance file: a sequence line, then either "model hp" / "model mj" or
  /// "j" followed by N-1 lower-triangular rows. '#' starts a comment.
  static Instance parse(const std::string& text);

 private:
  std::vector<std::string> sequence_;
  std::vector<std::vector<long long>> j_;
};

/// True when aminos i and j (1-based) can touch: separation >= 3 and odd.
inline bool pair_interactable(int i, int j) {
  const int sep = j > i ? j - i : i - j;
  return sep >= 3 && sep % 2 == 1;
}

Conformation fold_to_coords(const Fold& f);
bool is_saw(const Conformation& c);

/// Contact energy of a conformation: sum of J over interactable pairs at
/// lattice distance 1. Throws if the conformation overlaps itself.
long long conformation_energy(const Conformation& c, const Instance& inst);
long long native_energy(const Fold& f, const Instance& inst);

/// All self-avoiding walks on N aminos in canonical (lexicographic turn code)
/// order. With fix_symmetry the first turn is right and the second is right
/// or down, quotienting the 8 lattice symmetries.
std::vector<Fold> enumerate_saws(int n, bool fix_symmetry);

struct GroundTruth {
  long long energy = 0;
  std::vector<Fold> folds;  // all symmetry-fixed optimal folds, canonical order
};

GroundTruth ground_truth(const Instance& inst);

/// The 8 symmetries of the square lattice applied to coordinates.
Conformation apply_symmetry(const Conformation& c, int sym);

/// Inverse of fold_to_coords; nullopt if coords are not a unit-step chain
/// starting at the origin.
std::optional<Fold> coords_to_fold(const Conformation& c);

}  // namespace latfold
