// Groebner bases for submodules of free modules: syzygies, membership, lifts.
#pragma once

#include <optional>
#include <vector>

#include "reeskit/groebner.hpp"

namespace reeskit {

// Element of a free module A^rank; entry i is the coefficient of basis
// vector e_i.
struct PolyVector {
  std::vector<Polynomial> entries;

  PolyVector() = default;
  explicit PolyVector(int rank, int nvars) : entries(rank, Polynomial(nvars)) {}
  explicit PolyVector(std::vector<Polynomial> e) : entries(std::move(e)) {}

  int rank() const { return static_cast<int>(entries.size()); }
  bool is_zero() const;
  PolyVector operator-() const;
  PolyVector& operator+=(const PolyVector& o);
  PolyVector& operator-=(const PolyVector& o);
  PolyVector times_term(const Monomial& m, const Rational& c) const;
  PolyVector scaled_by(const Polynomial& f) const;

  friend bool operator==(const PolyVector& a, const PolyVector& b) {
    return a.entries == b.entries;
  }
  friend bool operator<(const PolyVector& a, const PolyVector& b) {
    return a.entries < b.entries;
  }
};

struct SubmoduleBasis {
  int ambient_rank = 0;
  std::vector<PolyVector> elements;
};

// Position-over-term module order: lower component index dominates, ties by
// the scalar order. The dominance makes the syzygy/lift tag tricks work.
struct ModuleGB {
  int rank = 0;
  MonomialOrder term_order = MonomialOrder::grevlex();
  std::vector<PolyVector> elems;  // reduced: monic, interreduced, sorted
};

ModuleGB module_groebner(int rank, std::vector<PolyVector> gens, const MonomialOrder& ord);
PolyVector module_normal_form(const PolyVector& v, const ModuleGB& gb);

// Generators of { c in A^p : matrix * c = 0 over A }, where A is the quotient
// of the polynomial ring by ideal(ring_gb); matrix is q rows by p columns.
// Soundness: matrix * g reduces to zero mod ring_gb for every generator g.
SubmoduleBasis syzygies(const std::vector<std::vector<Polynomial>>& matrix, int nvars,
                        const std::vector<Polynomial>& ring_gb,
                        const MonomialOrder& ord = MonomialOrder::grevlex());

// Membership of v in the A-submodule of A^n spanned by gens (I-lifted).
bool module_member(const PolyVector& v, const std::vector<PolyVector>& gens,
                   const std::vector<Polynomial>& ring_gb,
                   const MonomialOrder& ord = MonomialOrder::grevlex());

// Coefficients c with v = sum c_j gens_j over A, when v lies in the span.
std::optional<std::vector<Polynomial>> module_lift(const PolyVector& v,
                                                   const std::vector<PolyVector>& gens,
                                                   const std::vector<Polynomial>& ring_gb,
                                                   const MonomialOrder& ord =
                                                       MonomialOrder::grevlex());

// All columns of the matrix as vectors in A^q.
std::vector<PolyVector> matrix_columns(const std::vector<std::vector<Polynomial>>& matrix);
// Multiplies matrix (q x p) by vector (length p).
PolyVector matrix_apply(const std::vector<std::vector<Polynomial>>& matrix, const PolyVector& v,
                        int nvars);

}  // namespace reeskit
