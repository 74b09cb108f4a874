// Multivariate polynomials over the rationals in canonical map form.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "reeskit/monomial.hpp"
#include "reeskit/rational.hpp"

namespace reeskit {

// Canonical form: no zero coefficients are stored, so equal polynomials have
// equal term maps. The container key order is the plain lexicographic order
// on exponent vectors; semantic orders are applied on demand.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational>;

  Polynomial() : nvars_(0) {}
  explicit Polynomial(int nvars) : nvars_(nvars) {}

  static Polynomial constant(int nvars, const Rational& c);
  static Polynomial variable(int nvars, int index, int exponent = 1);
  static Polynomial term(const Monomial& m, const Rational& c);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  Rational coeff(const Monomial& m) const;

  // Merges a term into the map, dropping it when the sum cancels.
  void add_term(const Monomial& m, const Rational& c);

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  Polynomial scaled(const Rational& c) const;
  // this * c * m
  Polynomial times_term(const Monomial& m, const Rational& c) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }
  // Container order for use as a map/set key; not a semantic order.
  friend bool operator<(const Polynomial& a, const Polynomial& b) {
    if (a.nvars_ != b.nvars_) return a.nvars_ < b.nvars_;
    return a.terms_ < b.terms_;
  }

  int total_degree() const;  // -1 for zero
  // Degree under per-variable weights; nullopt when not homogeneous.
  std::optional<int> weighted_degree_if_homogeneous(const std::vector<int>& weights) const;
  int max_weighted_degree(const std::vector<int>& weights) const;

  const std::pair<const Monomial, Rational>* leading(const MonomialOrder& ord) const;
  std::vector<std::pair<Monomial, Rational>> sorted_terms(const MonomialOrder& ord) const;

  bool uses_variable(int index) const;
  // Reinterprets variables: old index i becomes var_map[i] in a ring with
  // new_nvars variables. Throws when two old variables collide.
  Polynomial embedded(const std::vector<int>& var_map, int new_nvars) const;

  std::string str(const std::vector<std::string>& var_names,
                  const MonomialOrder& ord = MonomialOrder::grevlex()) const;

 private:
  int nvars_;
  TermMap terms_;
};

// Parses the rendered grammar: + - * ^ ( ), integer and a/b literals,
// declared variable names; '*' may be omitted between space-separated
// factors. Throws std::domain_error with a readable message.
Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& var_names);

}  // namespace reeskit
