#include "reeskit/groebner.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace reeskit {

Ideal::Ideal(int n, std::vector<Polynomial> g) : nvars(n), gens(std::move(g)) {
  for (const auto& p : gens)
    if (p.nvars() != nvars) throw std::domain_error("ideal generator has wrong variable count");
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord) {
  const auto* lf = f.leading(ord);
  const auto* lg = g.leading(ord);
  Monomial l = Monomial::lcm(lf->first, lg->first);
  return f.times_term(l / lf->first, lf->second.inverse()) -
         g.times_term(l / lg->first, lg->second.inverse());
}

Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& basis,
                       const MonomialOrder& ord) {
  struct Reducer {
    Monomial lm;
    Rational lc;
    const Polynomial* poly;
  };
  std::vector<Reducer> reducers;
  reducers.reserve(basis.size());
  for (const auto& g : basis) {
    if (g.is_zero()) continue;
    const auto* l = g.leading(ord);
    reducers.push_back({l->first, l->second, &g});
  }

  Polynomial rem(p.nvars());
  Polynomial work = p;
  while (!work.is_zero()) {
    const auto* lt = work.leading(ord);
    const Reducer* hit = nullptr;
    for (const auto& r : reducers) {
      if (r.lm.divides(lt->first)) {
        hit = &r;
        break;
      }
    }
    if (hit) {
      work -= hit->poly->times_term(lt->first / hit->lm, lt->second / hit->lc);
    } else {
      rem.add_term(lt->first, lt->second);
      Polynomial without(work.nvars());
      for (const auto& [m, c] : work.terms())
        if (!(m == lt->first)) without.add_term(m, c);
      work = without;
    }
  }
  return rem;
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb) {
  return normal_form(p, gb.elems, gb.order);
}

namespace {

void sort_basis(std::vector<Polynomial>& basis, const MonomialOrder& ord) {
  std::sort(basis.begin(), basis.end(), [&](const Polynomial& a, const Polynomial& b) {
    const auto* la = a.leading(ord);
    const auto* lb = b.leading(ord);
    int c = ord.compare(la->first, lb->first);
    if (c != 0) return c < 0;
    return a < b;
  });
}

// Minimalize + tail-interreduce + normalize monic; the unique reduced basis.
std::vector<Polynomial> reduce_basis(std::vector<Polynomial> basis, const MonomialOrder& ord) {
  basis.erase(std::remove_if(basis.begin(), basis.end(),
                             [](const Polynomial& p) { return p.is_zero(); }),
              basis.end());
  // drop elements whose leading monomial another element's divides
  std::vector<char> drop(basis.size(), 0);
  for (size_t i = 0; i < basis.size(); ++i) {
    if (drop[i]) continue;
    const Monomial& mi = basis[i].leading(ord)->first;
    for (size_t j = 0; j < basis.size(); ++j) {
      if (i == j || drop[j]) continue;
      const Monomial& mj = basis[j].leading(ord)->first;
      if (mj.divides(mi) && !(mi == mj && j > i)) {
        drop[i] = 1;
        break;
      }
    }
  }
  std::vector<Polynomial> min;
  for (size_t i = 0; i < basis.size(); ++i)
    if (!drop[i]) min.push_back(basis[i]);

  std::vector<Polynomial> out;
  for (size_t i = 0; i < min.size(); ++i) {
    std::vector<Polynomial> others;
    for (size_t j = 0; j < min.size(); ++j)
      if (j != i) others.push_back(min[j]);
    Polynomial r = normal_form(min[i], others, ord);
    if (!r.is_zero()) out.push_back(r.scaled(r.leading(ord)->second.inverse()));
  }
  sort_basis(out, ord);
  return out;
}

}  // namespace

GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& ord) {
  std::vector<Polynomial> basis;
  for (const auto& g : ideal.gens)
    if (!g.is_zero()) basis.push_back(g);

  struct Pair {
    size_t i, j;
    Monomial lcm;
    int degree;
  };
  auto make_pair = [&](size_t i, size_t j) {
    Monomial l = Monomial::lcm(basis[i].leading(ord)->first, basis[j].leading(ord)->first);
    return Pair{i, j, l, l.degree()};
  };

  std::deque<Pair> pairs;
  std::set<std::pair<size_t, size_t>> handled;
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = 0; j < i; ++j) pairs.push_back(make_pair(j, i));

  while (!pairs.empty()) {
    // normal selection: minimal lcm degree first
    auto best = pairs.begin();
    for (auto it = pairs.begin(); it != pairs.end(); ++it)
      if (it->degree < best->degree) best = it;
    Pair pr = *best;
    pairs.erase(best);
    handled.insert({pr.i, pr.j});

    const Monomial& mi = basis[pr.i].leading(ord)->first;
    const Monomial& mj = basis[pr.j].leading(ord)->first;
    // product criterion
    if (mi.coprime_with(mj)) continue;
    // chain criterion
    bool chained = false;
    for (size_t k = 0; k < basis.size() && !chained; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (!basis[k].leading(ord)->first.divides(pr.lcm)) continue;
      auto key = [&](size_t a, size_t b) {
        return std::make_pair(std::min(a, b), std::max(a, b));
      };
      if (handled.count(key(pr.i, k)) && handled.count(key(pr.j, k))) chained = true;
    }
    if (chained) continue;

    Polynomial s = s_polynomial(basis[pr.i], basis[pr.j], ord);
    Polynomial r = normal_form(s, basis, ord);
    if (!r.is_zero()) {
      basis.push_back(r);
      const size_t n = basis.size() - 1;
      for (size_t k = 0; k < n; ++k) pairs.push_back(make_pair(k, n));
    }
  }

  GroebnerBasis gb;
  gb.order = ord;
  gb.elems = reduce_basis(std::move(basis), ord);
  gb.reduced = true;
  return gb;
}

bool ideal_contains(const GroebnerBasis& gb, const Polynomial& p) {
  return normal_form(p, gb).is_zero();
}

bool ideal_equal(const Ideal& a, const Ideal& b) {
  if (a.nvars != b.nvars) return false;
  const MonomialOrder ord = MonomialOrder::grevlex();
  GroebnerBasis ga = buchberger(a, ord);
  GroebnerBasis gb = buchberger(b, ord);
  return ga.elems == gb.elems;
}

Ideal eliminate(const Ideal& ideal, const std::vector<int>& eliminated) {
  if (eliminated.empty()) {
    GroebnerBasis gb = buchberger(ideal, MonomialOrder::grevlex());
    return Ideal(ideal.nvars, gb.elems);
  }
  MonomialOrder ord = MonomialOrder::elimination(eliminated, ideal.nvars);
  GroebnerBasis gb = buchberger(ideal, ord);
  std::vector<Polynomial> kept;
  for (const auto& g : gb.elems) {
    bool clean = true;
    for (int v : eliminated)
      if (g.uses_variable(v)) {
        clean = false;
        break;
      }
    if (clean) kept.push_back(g);
  }
  return Ideal(ideal.nvars, std::move(kept));
}

Ideal eliminate_prefix(const Ideal& ideal, int keep_from) {
  std::vector<int> elim(keep_from);
  for (int i = 0; i < keep_from; ++i) elim[i] = i;
  return eliminate(ideal, elim);
}

}  // namespace reeskit
