#pragma once

#include "latfold/pbpoly.hpp"

#include <string>
#include <vector>

namespace latfold {

enum class EncodingKind { TurnAncilla, TurnCircuit, Diamond };

const char* encoding_kind_name(EncodingKind k);
EncodingKind encoding_kind_from_name(const std::string& name);

enum class VarRole {
  Info,         // turn-encoding information bit
  Slack,        // slack register bit of pair (i, j), significance 2^k
  Omega,        // interaction switch of pair (i, j)
  DiamondSite,  // one-hot site bit: amino i at lattice point (x, y)
  Gadget,       // quadratization ancilla replacing the product q_i q_j
};

struct VarInfo {
  VarRole role = VarRole::Info;
  int i = 0, j = 0;  // pair for Slack/Omega/Gadget; amino index in i for DiamondSite
  int k = 0;         // slack bit position (alpha weight 2^k)
  int x = 0, y = 0;  // DiamondSite lattice point
};

/// An encoded instance: the energy polynomial plus the bit-register map
/// needed to decode assignments and to complete ancillae analytically.
struct Encoding {
  EncodingKind kind = EncodingKind::TurnAncilla;
  int chain_length = 0;
  int num_vars = 0;
  int num_info_bits = 0;  // info bits occupy variables 1..num_info_bits
  PBPoly poly;
  Coeff constant = 0;           // additive offset outside the polynomial
  std::vector<VarInfo> vars;    // 1-based; vars[0] unused
};

/// Layout sidecar (JSON) naming every variable's role.
std::string layout_to_json(const Encoding& enc);
Encoding layout_from_json(const std::string& text);  // poly left empty

}  // namespace latfold
