#pragma once

#include "latfold/encoding.hpp"
#include "latfold/lattice.hpp"
#include "latfold/pbpoly.hpp"
#include "latfold/reduction.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace latfold {
namespace solve {

struct SolveResult {
  Assignment best;
  Coeff best_value = 0;
  std::optional<Fold> fold;
  std::optional<Conformation> placement;
  bool valid = true;  // decode validity (diamond one-hot check)
};

/// Turn decoding: the fixed right / right-or-down prefix plus the free bits.
Fold decode_fold(const Assignment& a, const Encoding& enc);

/// Diamond decoding; nullopt unless every register is exactly one-hot.
std::optional<Conformation> decode_placement(const Assignment& a, const Encoding& enc);

/// Writes the fold's free bits into an assignment covering the info range.
void fold_to_bits(const Fold& f, Assignment& a);

/// Given fixed info bits, fills every ancilla with its optimal value:
/// slack registers to clamp(2^mu - g), omega switches on iff the pair is
/// adjacent, gadget ancillae to the product of their pair (creation order).
void complete_ancillae(Assignment& a, const Encoding& enc);

/// Structured exhaustive minimum: enumerates info bits only (one-hot register
/// choices for the diamond encoding) and completes ancillae analytically.
/// Ties resolve to the lexicographically smallest assignment.
SolveResult exhaustive_min(const Encoding& enc);

/// Plain 2^n sweep, guarded to n <= 22. Oracle for exhaustive_min.
SolveResult flat_min(const PBPoly& p, int num_vars);

struct AnnealParams {
  int sweeps = 5000;
  int restarts = 100;
  double t_final = 0.5;
  std::uint64_t seed = 0;
};

/// Single-spin-flip Metropolis annealing on a geometric temperature ladder
/// from the largest coefficient magnitude down to t_final. Deterministic per
/// seed. One long ramp rarely beats many short ones here, hence the restart
/// count.
SolveResult anneal(const reduction::QuboModel& m, const AnnealParams& params);

struct VerifyReport {
  bool pass = false;
  Coeff encoding_min = 0;
  long long ground_energy = 0;
  int minimizer_count = 0;
  std::vector<std::string> failures;
};

/// Closes the loop against the lattice oracle: (a) the encoding minimum is
/// the brute-force ground energy, (b) every minimizer decodes to an optimal
/// fold, (c) every optimal fold completes to a minimizing assignment.
VerifyReport verify_encoding(const Instance& inst, EncodingKind kind);

}  // namespace solve
}  // namespace latfold
