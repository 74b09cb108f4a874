#include "reeskit/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace reeskit {

Monomial::Monomial(std::vector<int> exponents) : e_(std::move(exponents)) {
  for (int x : e_)
    if (x < 0) throw std::domain_error("negative exponent");
}

int Monomial::degree() const { return std::accumulate(e_.begin(), e_.end(), 0); }

bool Monomial::divides(const Monomial& m) const {
  if (e_.size() != m.e_.size()) return false;
  for (size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > m.e_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& m) const {
  Monomial r = *this;
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] += m.e_[i];
  return r;
}

Monomial Monomial::operator/(const Monomial& m) const {
  Monomial r = *this;
  for (size_t i = 0; i < e_.size(); ++i) {
    r.e_[i] -= m.e_[i];
    if (r.e_[i] < 0) throw std::domain_error("inexact monomial quotient");
  }
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = std::max(a.e_[i], b.e_[i]);
  return r;
}

bool Monomial::coprime_with(const Monomial& m) const {
  for (size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > 0 && m.e_[i] > 0) return false;
  return true;
}

std::string Monomial::str(const std::vector<std::string>& var_names) const {
  std::string s;
  for (size_t i = 0; i < e_.size(); ++i) {
    if (e_[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += var_names[i];
    if (e_[i] > 1) s += "^" + std::to_string(e_[i]);
  }
  return s.empty() ? "1" : s;
}

namespace {

// grevlex on a masked subvector: higher total degree wins; on ties the
// rightmost differing variable with the smaller exponent wins.
int cmp_grevlex(const std::vector<int>& a, const std::vector<int>& b,
                const std::vector<char>* mask, char which) {
  long da = 0, db = 0;
  const size_t n = a.size();
  for (size_t i = 0; i < n; ++i) {
    if (mask && (*mask)[i] != which) continue;
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (size_t i = n; i-- > 0;) {
    if (mask && (*mask)[i] != which) continue;
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

int cmp_lex(const std::vector<int>& a, const std::vector<int>& b,
            const std::vector<char>* mask, char which) {
  for (size_t i = 0; i < a.size(); ++i) {
    if (mask && (*mask)[i] != which) continue;
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

int cmp_kind(MonomialOrder::Kind k, const std::vector<int>& a, const std::vector<int>& b,
             const std::vector<char>* mask, char which) {
  return k == MonomialOrder::Kind::Lex ? cmp_lex(a, b, mask, which)
                                       : cmp_grevlex(a, b, mask, which);
}

}  // namespace

MonomialOrder MonomialOrder::elimination(std::vector<int> eliminated, int nvars, Kind inner,
                                         Kind outer) {
  MonomialOrder o(Kind::Block);
  o.inner_ = inner;
  o.outer_ = outer;
  o.elim_mask_.assign(nvars, 0);
  for (int i : eliminated) {
    if (i < 0 || i >= nvars) throw std::domain_error("eliminated variable index out of range");
    o.elim_mask_[i] = 1;
  }
  return o;
}

MonomialOrder MonomialOrder::block_prefix(int split, int nvars, Kind inner, Kind outer) {
  std::vector<int> elim(split);
  for (int i = 0; i < split; ++i) elim[i] = i;
  return elimination(std::move(elim), nvars, inner, outer);
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.nvars() != b.nvars()) throw std::domain_error("comparing monomials of different lengths");
  switch (kind_) {
    case Kind::Grevlex:
      return cmp_grevlex(a.exponents(), b.exponents(), nullptr, 0);
    case Kind::Lex:
      return cmp_lex(a.exponents(), b.exponents(), nullptr, 0);
    case Kind::Block: {
      if (static_cast<int>(elim_mask_.size()) != a.nvars())
        throw std::domain_error("block order built for a different variable count");
      int c = cmp_kind(inner_, a.exponents(), b.exponents(), &elim_mask_, 1);
      if (c != 0) return c;
      return cmp_kind(outer_, a.exponents(), b.exponents(), &elim_mask_, 0);
    }
  }
  return 0;
}

std::string MonomialOrder::str() const {
  switch (kind_) {
    case Kind::Grevlex:
      return "grevlex";
    case Kind::Lex:
      return "lex";
    case Kind::Block:
      return "block";
  }
  return "?";
}

}  // namespace reeskit
