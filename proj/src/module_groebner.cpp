#include "reeskit/module_groebner.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace reeskit {

bool PolyVector::is_zero() const {
  for (const auto& p : entries)
    if (!p.is_zero()) return false;
  return true;
}

PolyVector PolyVector::operator-() const {
  PolyVector r = *this;
  for (auto& p : r.entries) p = -p;
  return r;
}

PolyVector& PolyVector::operator+=(const PolyVector& o) {
  if (rank() != o.rank()) throw std::domain_error("adding vectors of different ranks");
  for (int i = 0; i < rank(); ++i) entries[i] += o.entries[i];
  return *this;
}

PolyVector& PolyVector::operator-=(const PolyVector& o) {
  if (rank() != o.rank()) throw std::domain_error("subtracting vectors of different ranks");
  for (int i = 0; i < rank(); ++i) entries[i] -= o.entries[i];
  return *this;
}

PolyVector PolyVector::times_term(const Monomial& m, const Rational& c) const {
  PolyVector r = *this;
  for (auto& p : r.entries) p = p.times_term(m, c);
  return r;
}

PolyVector PolyVector::scaled_by(const Polynomial& f) const {
  PolyVector r = *this;
  for (auto& p : r.entries) p = p * f;
  return r;
}

namespace {

struct ModuleTerm {
  int comp = -1;
  Monomial mon;
  Rational coeff;
};

// Leading term under position-over-term: the lowest nonzero component wins,
// monomials within it compared by ord.
ModuleTerm leading_term(const PolyVector& v, const MonomialOrder& ord) {
  for (int i = 0; i < v.rank(); ++i) {
    if (v.entries[i].is_zero()) continue;
    const auto* l = v.entries[i].leading(ord);
    return {i, l->first, l->second};
  }
  return {};
}

}  // namespace

ModuleGB module_groebner(int rank, std::vector<PolyVector> gens, const MonomialOrder& ord) {
  std::vector<PolyVector> basis;
  for (auto& g : gens) {
    if (g.rank() != rank) throw std::domain_error("generator rank mismatch");
    if (!g.is_zero()) basis.push_back(std::move(g));
  }

  auto reduce_full = [&](PolyVector v, const std::vector<PolyVector>& B) {
    const int nvars = v.rank() ? v.entries[0].nvars() : 0;
    struct Led {
      ModuleTerm lt;
      const PolyVector* vec;
    };
    std::vector<Led> leds;
    leds.reserve(B.size());
    for (const auto& b : B) leds.push_back({leading_term(b, ord), &b});

    PolyVector rem(rank, nvars);
    while (!v.is_zero()) {
      ModuleTerm lt = leading_term(v, ord);
      const Led* hit = nullptr;
      for (const auto& l : leds) {
        if (l.lt.comp == lt.comp && l.lt.mon.divides(lt.mon)) {
          hit = &l;
          break;
        }
      }
      if (hit) {
        v -= hit->vec->times_term(lt.mon / hit->lt.mon, lt.coeff / hit->lt.coeff);
      } else {
        rem.entries[lt.comp].add_term(lt.mon, lt.coeff);
        v.entries[lt.comp].add_term(lt.mon, -lt.coeff);
      }
    }
    return rem;
  };

  struct Pair {
    size_t i, j;
    Monomial lcm;
    int degree;
  };
  std::deque<Pair> pairs;
  std::set<std::pair<size_t, size_t>> handled;
  auto try_push = [&](size_t a, size_t b) {
    ModuleTerm la = leading_term(basis[a], ord);
    ModuleTerm lb = leading_term(basis[b], ord);
    if (la.comp != lb.comp) return;  // S-vectors only within a component
    Monomial l = Monomial::lcm(la.mon, lb.mon);
    pairs.push_back({a, b, l, l.degree()});
  };
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = 0; j < i; ++j) try_push(j, i);

  while (!pairs.empty()) {
    auto best = pairs.begin();
    for (auto it = pairs.begin(); it != pairs.end(); ++it)
      if (it->degree < best->degree) best = it;
    Pair pr = *best;
    pairs.erase(best);
    handled.insert({pr.i, pr.j});

    // chain criterion (the product criterion is unsound for modules)
    bool chained = false;
    const int comp = leading_term(basis[pr.i], ord).comp;
    for (size_t k = 0; k < basis.size() && !chained; ++k) {
      if (k == pr.i || k == pr.j) continue;
      ModuleTerm lk = leading_term(basis[k], ord);
      if (lk.comp != comp || !lk.mon.divides(pr.lcm)) continue;
      auto key = [](size_t a, size_t b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
      if (handled.count(key(pr.i, k)) && handled.count(key(pr.j, k))) chained = true;
    }
    if (chained) continue;

    ModuleTerm li = leading_term(basis[pr.i], ord);
    ModuleTerm lj = leading_term(basis[pr.j], ord);
    PolyVector s = basis[pr.i].times_term(pr.lcm / li.mon, li.coeff.inverse());
    s -= basis[pr.j].times_term(pr.lcm / lj.mon, lj.coeff.inverse());
    PolyVector r = reduce_full(std::move(s), basis);
    if (!r.is_zero()) {
      basis.push_back(std::move(r));
      const size_t n = basis.size() - 1;
      for (size_t k = 0; k < n; ++k) try_push(k, n);
    }
  }

  // minimalize
  std::vector<char> drop(basis.size(), 0);
  for (size_t i = 0; i < basis.size(); ++i) {
    if (drop[i]) continue;
    ModuleTerm li = leading_term(basis[i], ord);
    for (size_t j = 0; j < basis.size(); ++j) {
      if (i == j || drop[j]) continue;
      ModuleTerm lj = leading_term(basis[j], ord);
      if (lj.comp != li.comp || !lj.mon.divides(li.mon)) continue;
      if (li.mon == lj.mon && j > i) continue;
      drop[i] = 1;
      break;
    }
  }
  std::vector<PolyVector> min;
  for (size_t i = 0; i < basis.size(); ++i)
    if (!drop[i]) min.push_back(basis[i]);

  // interreduce and normalize
  std::vector<PolyVector> out;
  for (size_t i = 0; i < min.size(); ++i) {
    std::vector<PolyVector> others;
    for (size_t j = 0; j < min.size(); ++j)
      if (j != i) others.push_back(min[j]);
    PolyVector r = reduce_full(min[i], others);
    if (r.is_zero()) continue;
    ModuleTerm lt = leading_term(r, ord);
    out.push_back(r.times_term(Monomial(lt.mon.nvars()), lt.coeff.inverse()));
  }
  std::sort(out.begin(), out.end(), [&](const PolyVector& a, const PolyVector& b) {
    ModuleTerm la = leading_term(a, ord);
    ModuleTerm lb = leading_term(b, ord);
    if (la.comp != lb.comp) return la.comp < lb.comp;
    int c = ord.compare(la.mon, lb.mon);
    if (c != 0) return c < 0;
    return a < b;
  });

  ModuleGB gb;
  gb.rank = rank;
  gb.term_order = ord;
  gb.elems = std::move(out);
  return gb;
}

PolyVector module_normal_form(const PolyVector& v, const ModuleGB& gb) {
  if (v.rank() != gb.rank) throw std::domain_error("vector rank mismatch");
  const int nvars = v.rank() ? v.entries[0].nvars() : 0;
  PolyVector rem(gb.rank, nvars);
  PolyVector work = v;

  struct Led {
    ModuleTerm lt;
    const PolyVector* vec;
  };
  std::vector<Led> leds;
  for (const auto& b : gb.elems) {
    ModuleTerm lt{};
    for (int i = 0; i < b.rank(); ++i) {
      if (b.entries[i].is_zero()) continue;
      const auto* l = b.entries[i].leading(gb.term_order);
      lt = {i, l->first, l->second};
      break;
    }
    leds.push_back({lt, &b});
  }

  while (!work.is_zero()) {
    ModuleTerm lt{};
    for (int i = 0; i < work.rank(); ++i) {
      if (work.entries[i].is_zero()) continue;
      const auto* l = work.entries[i].leading(gb.term_order);
      lt = {i, l->first, l->second};
      break;
    }
    const Led* hit = nullptr;
    for (const auto& l : leds) {
      if (l.lt.comp == lt.comp && l.lt.mon.divides(lt.mon)) {
        hit = &l;
        break;
      }
    }
    if (hit) {
      work -= hit->vec->times_term(lt.mon / hit->lt.mon, lt.coeff / hit->lt.coeff);
    } else {
      rem.entries[lt.comp].add_term(lt.mon, lt.coeff);
      work.entries[lt.comp].add_term(lt.mon, -lt.coeff);
    }
  }
  return rem;
}

std::vector<PolyVector> matrix_columns(const std::vector<std::vector<Polynomial>>& matrix) {
  std::vector<PolyVector> cols;
  if (matrix.empty()) return cols;
  const size_t q = matrix.size();
  const size_t p = matrix[0].size();
  for (size_t j = 0; j < p; ++j) {
    std::vector<Polynomial> col;
    col.reserve(q);
    for (size_t i = 0; i < q; ++i) col.push_back(matrix[i][j]);
    cols.emplace_back(std::move(col));
  }
  return cols;
}

PolyVector matrix_apply(const std::vector<std::vector<Polynomial>>& matrix, const PolyVector& v,
                        int nvars) {
  const int q = static_cast<int>(matrix.size());
  PolyVector r(q, nvars);
  for (int i = 0; i < q; ++i) {
    if (static_cast<int>(matrix[i].size()) != v.rank())
      throw std::domain_error("matrix/vector shape mismatch");
    for (int j = 0; j < v.rank(); ++j) r.entries[i] += matrix[i][j] * v.entries[j];
  }
  return r;
}

namespace {

// Tagged generators (g_j | e_j) plus I-lifts (f e_i | 0); elements of the GB
// supported entirely in the tag block read off relations among the g_j.
ModuleGB tagged_groebner(const std::vector<PolyVector>& gens, int n, int m, int nvars,
                         const std::vector<Polynomial>& ring_gb, const MonomialOrder& ord) {
  std::vector<PolyVector> tagged;
  for (int j = 0; j < m; ++j) {
    PolyVector t(n + m, nvars);
    for (int i = 0; i < n; ++i) t.entries[i] = gens[j].entries[i];
    t.entries[n + j] = Polynomial::constant(nvars, Rational(1));
    tagged.push_back(std::move(t));
  }
  for (const auto& f : ring_gb) {
    for (int i = 0; i < n; ++i) {
      PolyVector t(n + m, nvars);
      t.entries[i] = f;
      tagged.push_back(std::move(t));
    }
  }
  return module_groebner(n + m, std::move(tagged), ord);
}

}  // namespace

SubmoduleBasis syzygies(const std::vector<std::vector<Polynomial>>& matrix, int nvars,
                        const std::vector<Polynomial>& ring_gb, const MonomialOrder& ord) {
  const int q = static_cast<int>(matrix.size());
  const int p = q ? static_cast<int>(matrix[0].size()) : 0;

  SubmoduleBasis out;
  out.ambient_rank = p;
  if (p == 0) return out;
  if (q == 0) {
    // no constraints: the whole free module, generated by the unit vectors
    for (int j = 0; j < p; ++j) {
      PolyVector e(p, nvars);
      e.entries[j] = Polynomial::constant(nvars, Rational(1));
      out.elements.push_back(std::move(e));
    }
    return out;
  }

  ModuleGB gb = tagged_groebner(matrix_columns(matrix), q, p, nvars, ring_gb, ord);
  std::set<PolyVector> seen;
  for (const auto& g : gb.elems) {
    bool first_block_zero = true;
    for (int i = 0; i < q; ++i)
      if (!g.entries[i].is_zero()) {
        first_block_zero = false;
        break;
      }
    if (!first_block_zero) continue;
    PolyVector s(p, nvars);
    for (int j = 0; j < p; ++j) s.entries[j] = normal_form(g.entries[q + j], ring_gb, ord);
    if (!s.is_zero() && seen.insert(s).second) out.elements.push_back(std::move(s));
  }
  std::sort(out.elements.begin(), out.elements.end());
  return out;
}

bool module_member(const PolyVector& v, const std::vector<PolyVector>& gens,
                   const std::vector<Polynomial>& ring_gb, const MonomialOrder& ord) {
  const int n = v.rank();
  const int nvars = n ? v.entries[0].nvars() : 0;
  if (v.is_zero()) return true;
  std::vector<PolyVector> all = gens;
  for (const auto& f : ring_gb) {
    for (int i = 0; i < n; ++i) {
      PolyVector t(n, nvars);
      t.entries[i] = f;
      all.push_back(std::move(t));
    }
  }
  ModuleGB gb = module_groebner(n, std::move(all), ord);
  return module_normal_form(v, gb).is_zero();
}

std::optional<std::vector<Polynomial>> module_lift(const PolyVector& v,
                                                   const std::vector<PolyVector>& gens,
                                                   const std::vector<Polynomial>& ring_gb,
                                                   const MonomialOrder& ord) {
  const int n = v.rank();
  const int m = static_cast<int>(gens.size());
  const int nvars = n ? v.entries[0].nvars() : 0;

  ModuleGB gb = tagged_groebner(gens, n, m, nvars, ring_gb, ord);
  PolyVector ext(n + m, nvars);
  for (int i = 0; i < n; ++i) ext.entries[i] = v.entries[i];
  PolyVector nf = module_normal_form(ext, gb);
  for (int i = 0; i < n; ++i)
    if (!nf.entries[i].is_zero()) return std::nullopt;

  std::vector<Polynomial> coeffs;
  coeffs.reserve(m);
  for (int j = 0; j < m; ++j) coeffs.push_back(normal_form(-nf.entries[n + j], ring_gb, ord));
  return coeffs;
}

}  // namespace reeskit
