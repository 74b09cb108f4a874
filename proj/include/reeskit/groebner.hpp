// Buchberger engine for ideals: reduced bases, normal forms, elimination.
#pragma once

#include <vector>

#include "reeskit/polynomial.hpp"

namespace reeskit {

struct Ideal {
  int nvars = 0;
  std::vector<Polynomial> gens;

  Ideal() = default;
  Ideal(int n, std::vector<Polynomial> g);
};

struct GroebnerBasis {
  MonomialOrder order = MonomialOrder::grevlex();
  std::vector<Polynomial> elems;  // monic, interreduced, sorted by leading monomial
  bool reduced = false;
};

// Reduced Groebner basis via Buchberger with the normal (min-degree) pair
// strategy and the product/chain skip criteria. The zero ideal yields an
// empty basis.
GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& ord);

// Remainder of full multivariate division: no term divisible by any leading
// term of the basis. Unique when the basis is reduced.
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb);
Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& basis,
                       const MonomialOrder& ord);

bool ideal_contains(const GroebnerBasis& gb, const Polynomial& p);
bool ideal_equal(const Ideal& a, const Ideal& b);

// Generators of the intersection with the subring on the variables outside
// `eliminated`, computed with a block order dominating the eliminated set.
// Results still live in the full variable set but avoid eliminated variables.
Ideal eliminate(const Ideal& ideal, const std::vector<int>& eliminated);
// Spec-shaped convenience: eliminates the variable prefix [0, keep_from).
Ideal eliminate_prefix(const Ideal& ideal, int keep_from);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord);

}  // namespace reeskit
