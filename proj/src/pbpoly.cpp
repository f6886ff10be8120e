#include "latfold/pbpoly.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>

namespace latfold {

namespace {

void check_monomial(const Monomial& m) {
  for (std::size_t k = 0; k < m.size(); ++k) {
    if (m[k] < 1) throw std::invalid_argument("variable indices are 1-based");
    if (k > 0 && m[k] <= m[k - 1]) throw std::invalid_argument("monomial indices must be strictly increasing");
  }
}

Monomial merged_union(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

PBPoly make_poly_unchecked(std::map<Monomial, Coeff> terms) {
  PBPoly p;
  p.terms_ = std::move(terms);
  return p;
}

PBPoly PBPoly::variable(int index) { return term({index}, 1); }

PBPoly PBPoly::term(Monomial vars, const Coeff& c) {
  std::sort(vars.begin(), vars.end());
  check_monomial(vars);
  PBPoly p;
  if (c != 0) p.terms_[std::move(vars)] = c;
  return p;
}

int PBPoly::degree() const {
  std::size_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.size());
  return static_cast<int>(d);
}

int PBPoly::max_var() const {
  int v = 0;
  for (const auto& [m, c] : terms_)
    if (!m.empty()) v = std::max(v, m.back());
  return v;
}

Coeff PBPoly::constant_term() const { return coeff({}); }

Coeff PBPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Coeff(0) : it->second;
}

void PBPoly::add_term(const Monomial& m, const Coeff& c) {
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    if (c != 0) terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

PBPoly& PBPoly::operator+=(const PBPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

PBPoly& PBPoly::operator-=(const PBPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

PBPoly PBPoly::operator+(const PBPoly& other) const {
  PBPoly out = *this;
  out += other;
  return out;
}

PBPoly PBPoly::operator-(const PBPoly& other) const {
  PBPoly out = *this;
  out -= other;
  return out;
}

PBPoly PBPoly::operator-() const {
  PBPoly out;
  for (const auto& [m, c] : terms_) out.terms_[m] = -c;
  return out;
}

PBPoly PBPoly::operator*(const PBPoly& other) const {
  PBPoly out;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : other.terms_) out.add_term(merged_union(ma, mb), ca * cb);
  return out;
}


Coeff PBPoly::evaluate(const Assignment& a) const {
  Coeff total = 0;
  for (const auto& [m, c] : terms_) {
    bool on = true;
    for (int v : m) {
      if (a.get(v) == 0) {
        on = false;
        break;
      }
    }
    if (on) total += c;
  }
  return total;
}

PBPoly PBPoly::substitute_pair(int i, int j, int n) const {
  if (i == j) throw std::invalid_argument("substitute_pair requires distinct variables");
  PBPoly out;
  for (const auto& [m, c] : terms_) {
    if (std::binary_search(m.begin(), m.end(), n))
      throw std::invalid_argument("substitute_pair: replacement variable already occurs");
    const bool has_i = std::binary_search(m.begin(), m.end(), i);
    const bool has_j = std::binary_search(m.begin(), m.end(), j);
    if (has_i && has_j) {
      Monomial repl;
      repl.reserve(m.size() - 1);
      for (int v : m)
        if (v != i && v != j) repl.push_back(v);
      repl.push_back(n);
      std::sort(repl.begin(), repl.end());
      out.add_term(repl, c);
    } else {
      out.add_term(m, c);
    }
  }
  return out;
}

bool PBPoly::is_integral() const {
  for (const auto& [m, c] : terms_)
    if (c.denominator() != 1) return false;
  return true;
}

std::string PBPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c;
    for (int v : m) os << "*q" << v;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const PBPoly& p) { return os << p.to_string(); }

std::string poly_to_json(const PBPoly& p, int num_vars) {
  if (!p.is_integral()) throw std::invalid_argument("polynomial export requires integer coefficients");
  nlohmann::ordered_json doc;
  doc["nvars"] = num_vars;
  doc["constant"] = boost::rational_cast<long long>(p.constant_term());
  doc["terms"] = nlohmann::json::array();
  for (const auto& [m, c] : p.terms()) {
    if (m.empty()) continue;
    doc["terms"].push_back({{"vars", m}, {"coeff", boost::rational_cast<long long>(c)}});
  }
  return doc.dump(2) + "\n";
}

PBPoly poly_from_json(const std::string& text, int* num_vars) {
  const auto doc = nlohmann::json::parse(text);
  if (num_vars) *num_vars = doc.at("nvars").get<int>();
  PBPoly p(doc.at("constant").get<long long>());
  for (const auto& t : doc.at("terms")) {
    p += PBPoly::term(t.at("vars").get<Monomial>(), t.at("coeff").get<long long>());
  }
  return p;
}

}  // namespace latfold
