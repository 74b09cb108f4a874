// Exponent vectors and pluggable monomial orders.
#pragma once

#include <string>
#include <vector>

namespace reeskit {

// Exponent vector of fixed length (one entry per ambient variable).
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(int nvars) : e_(nvars, 0) {}
  explicit Monomial(std::vector<int> exponents);

  int nvars() const { return static_cast<int>(e_.size()); }
  int operator[](int i) const { return e_[i]; }
  int& operator[](int i) { return e_[i]; }
  const std::vector<int>& exponents() const { return e_; }

  int degree() const;
  bool is_unit() const { return degree() == 0; }

  bool divides(const Monomial& m) const;
  Monomial operator*(const Monomial& m) const;
  // Exact quotient; caller guarantees divisibility.
  Monomial operator/(const Monomial& m) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);
  bool coprime_with(const Monomial& m) const;

  // Container order only (plain lexicographic on exponents); semantic
  // comparisons go through MonomialOrder.
  friend bool operator<(const Monomial& a, const Monomial& b) { return a.e_ < b.e_; }
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return a.e_ != b.e_; }

  std::string str(const std::vector<std::string>& var_names) const;

 private:
  std::vector<int> e_;
};

// Total multiplicative well-order on monomials. Kinds: grevlex, lex, and a
// two-block order whose first block dominates — the elimination workhorse.
class MonomialOrder {
 public:
  enum class Kind { Grevlex, Lex, Block };

  static MonomialOrder grevlex() { return MonomialOrder(Kind::Grevlex); }
  static MonomialOrder lex() { return MonomialOrder(Kind::Lex); }
  // Block order: monomials are compared on the `eliminated` variables first
  // (inner order), ties broken on the remaining variables (outer order).
  // Any monomial meeting an eliminated variable beats every monomial that
  // avoids them all.
  static MonomialOrder elimination(std::vector<int> eliminated, int nvars,
                                   Kind inner = Kind::Grevlex, Kind outer = Kind::Grevlex);
  // Convenience: eliminated block = variables [0, split).
  static MonomialOrder block_prefix(int split, int nvars,
                                    Kind inner = Kind::Grevlex, Kind outer = Kind::Grevlex);

  Kind kind() const { return kind_; }

  // > 0 when a > b, < 0 when a < b, 0 on equality. Lengths must agree.
  int compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  std::string str() const;

 private:
  explicit MonomialOrder(Kind k) : kind_(k) {}
  Kind kind_ = Kind::Grevlex;
  Kind inner_ = Kind::Grevlex;
  Kind outer_ = Kind::Grevlex;
  std::vector<char> elim_mask_;  // Block only; 1 = first (eliminated) block
};

}  // namespace reeskit
