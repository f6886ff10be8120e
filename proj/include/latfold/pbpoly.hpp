#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace latfold {

/// Exact coefficient type. Encoder outputs are integral by construction;
/// rationals appear only in the Ising conversion.
using Coeff = boost::rational<long long>;

/// A multilinear monomial: strictly increasing 1-based variable indices.
/// The empty set is the constant monomial. Index 0 is reserved.
using Monomial = std::vector<int>;

/// Bit values for variables 1..n; index 0 is unused.
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(int num_vars) : bits_(num_vars + 1, 0) {}

  int num_vars() const { return static_cast<int>(bits_.size()) - 1; }
  bool covers(int var) const { return var >= 1 && var < static_cast<int>(bits_.size()); }

  int get(int var) const {
    if (!covers(var)) throw std::out_of_range("assignment does not cover variable " + std::to_string(var));
    return bits_[var];
  }
  void set(int var, int value) {
    if (!covers(var)) throw std::out_of_range("assignment does not cover variable " + std::to_string(var));
    bits_[var] = static_cast<std::uint8_t>(value != 0);
  }

  /// Lexicographic comparison on (q1, q2, ...), used for deterministic ties.
  bool lex_less(const Assignment& other) const { return bits_ < other.bits_; }
  bool operator==(const Assignment& other) const { return bits_ == other.bits_; }

 private:
  std::vector<std::uint8_t> bits_;
};

/// Multilinear pseudo-boolean polynomial with exact coefficients.
/// Terms map sorted monomials to nonzero coefficients; q^2 = q is implicit
/// because monomials are sets.
class PBPoly {
 public:
  PBPoly() = default;
  /* implicit */ PBPoly(long long c) { if (c != 0) terms_[{}] = c; }
  /* implicit */ PBPoly(const Coeff& c) { if (c != 0) terms_[{}] = c; }

  static PBPoly variable(int index);
  static PBPoly term(Monomial vars, const Coeff& c);

  const std::map<Monomial, Coeff>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;
  int max_var() const;
  Coeff constant_term() const;

  Coeff coeff(const Monomial& m) const;

  PBPoly& operator+=(const PBPoly& other);
  PBPoly& operator-=(const PBPoly& other);
  PBPoly operator+(const PBPoly& other) const;
  PBPoly operator-(const PBPoly& other) const;
  PBPoly operator-() const;
  PBPoly operator*(const PBPoly& other) const;
  bool operator==(const PBPoly& other) const { return terms_ == other.terms_; }

  Coeff evaluate(const Assignment& a) const;

  /// Replaces {i,j} by {n} in every monomial containing both i and j.
  /// Throws if n already occurs in the polynomial.
  PBPoly substitute_pair(int i, int j, int n) const;

  /// True when every coefficient has denominator 1.
  bool is_integral() const;

  std::string to_string() const;

  /// Canonical text serialization (see also json I/O in pbpoly_io).
  friend std::ostream& operator<<(std::ostream& os, const PBPoly& p);

 private:
  void add_term(const Monomial& m, const Coeff& c);
  std::map<Monomial, Coeff> terms_;

  friend PBPoly make_poly_unchecked(std::map<Monomial, Coeff> terms);
};

/// 1 - p, for 0/1-valued p.
inline PBPoly negate_bit(const PBPoly& p) { return PBPoly(1) - p; }

/// JSON round-trip of the polynomial file format:
/// { "nvars": N, "constant": c, "terms": [ { "vars": [...], "coeff": k }, ... ] }
std::string poly_to_json(const PBPoly& p, int num_vars);
PBPoly poly_from_json(const std::string& text, int* num_vars = nullptr);

}  // namespace latfold
