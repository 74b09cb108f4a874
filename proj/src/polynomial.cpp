#include "reeskit/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace reeskit {

Polynomial Polynomial::constant(int nvars, const Rational& c) {
  Polynomial p(nvars);
  p.add_term(Monomial(nvars), c);
  return p;
}

Polynomial Polynomial::variable(int nvars, int index, int exponent) {
  if (index < 0 || index >= nvars) throw std::domain_error("variable index out of range");
  Monomial m(nvars);
  m[index] = exponent;
  return term(m, Rational(1));
}

Polynomial Polynomial::term(const Monomial& m, const Rational& c) {
  Polynomial p(m.nvars());
  p.add_term(m, c);
  return p;
}

Rational Polynomial::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  if (m.nvars() != nvars_) throw std::domain_error("term has wrong variable count");
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r(nvars_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (nvars_ != o.nvars_) throw std::domain_error("adding polynomials of different rings");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (nvars_ != o.nvars_) throw std::domain_error("subtracting polynomials of different rings");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.nvars_ != b.nvars_) throw std::domain_error("multiplying polynomials of different rings");
  Polynomial r(a.nvars_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  Polynomial r(nvars_);
  if (c.is_zero()) return r;
  for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
  return r;
}

Polynomial Polynomial::times_term(const Monomial& m, const Rational& c) const {
  Polynomial r(nvars_);
  if (c.is_zero()) return r;
  for (const auto& [mm, k] : terms_) r.terms_.emplace(mm * m, k * c);
  return r;
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

std::optional<int> Polynomial::weighted_degree_if_homogeneous(
    const std::vector<int>& weights) const {
  std::optional<int> deg;
  for (const auto& [m, c] : terms_) {
    int w = 0;
    for (int i = 0; i < nvars_; ++i) w += m[i] * weights[i];
    if (!deg)
      deg = w;
    else if (*deg != w)
      return std::nullopt;
  }
  return deg ? deg : std::optional<int>(0);
}

int Polynomial::max_weighted_degree(const std::vector<int>& weights) const {
  int d = 0;
  for (const auto& [m, c] : terms_) {
    int w = 0;
    for (int i = 0; i < nvars_; ++i) w += m[i] * weights[i];
    d = std::max(d, w);
  }
  return d;
}

const std::pair<const Monomial, Rational>* Polynomial::leading(const MonomialOrder& ord) const {
  const std::pair<const Monomial, Rational>* best = nullptr;
  for (const auto& t : terms_)
    if (!best || ord.greater(t.first, best->first)) best = &t;
  return best;
}

std::vector<std::pair<Monomial, Rational>> Polynomial::sorted_terms(
    const MonomialOrder& ord) const {
  std::vector<std::pair<Monomial, Rational>> v(terms_.begin(), terms_.end());
  std::sort(v.begin(), v.end(),
            [&](const auto& a, const auto& b) { return ord.greater(a.first, b.first); });
  return v;
}

bool Polynomial::uses_variable(int index) const {
  for (const auto& [m, c] : terms_)
    if (m[index] > 0) return true;
  return false;
}

Polynomial Polynomial::embedded(const std::vector<int>& var_map, int new_nvars) const {
  Polynomial r(new_nvars);
  for (const auto& [m, c] : terms_) {
    Monomial nm(new_nvars);
    for (int i = 0; i < nvars_; ++i) {
      if (m[i] == 0) continue;
      int j = var_map[i];
      if (j < 0 || j >= new_nvars) throw std::domain_error("variable map out of range");
      if (nm[j] != 0) throw std::domain_error("variable map collision");
      nm[j] = m[i];
    }
    r.add_term(nm, c);
  }
  return r;
}

std::string Polynomial::str(const std::vector<std::string>& var_names,
                            const MonomialOrder& ord) const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : sorted_terms(ord)) {
    const bool neg = c.sign() < 0;
    const Rational ac = neg ? -c : c;
    if (s.empty()) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    if (m.is_unit()) {
      s += ac.str();
    } else {
      if (!ac.is_one()) s += ac.str() + "*";
      s += m.str(var_names);
    }
  }
  return s;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

struct PolyLexer {
  const std::string& text;
  const std::vector<std::string>& vars;
  size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool eat(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw std::domain_error(msg + " at offset " + std::to_string(pos) + " in '" + text + "'");
  }

  int find_var(const std::string& name) {
    for (size_t i = 0; i < vars.size(); ++i)
      if (vars[i] == name) return static_cast<int>(i);
    return -1;
  }

  Polynomial parse_expr() {
    Polynomial r = parse_term(peek() == '-' || peek() == '+');
    for (;;) {
      char c = peek();
      if (c == '+') {
        ++pos;
        r += parse_term(false);
      } else if (c == '-') {
        ++pos;
        r -= parse_term(false);
      } else {
        return r;
      }
    }
  }

  // leading_sign: a term may start with a sign when it opens the expression
  Polynomial parse_term(bool leading_sign) {
    bool negate = false;
    if (leading_sign) {
      while (peek() == '-' || peek() == '+') {
        if (text[pos] == '-') negate = !negate;
        ++pos;
      }
    }
    Polynomial r = parse_factor();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos;
        r = r * parse_factor();
      } else if (c == '(' || std::isalpha(static_cast<unsigned char>(c)) ||
                 std::isdigit(static_cast<unsigned char>(c)) || c == '_') {
        r = r * parse_factor();  // juxtaposition
      } else {
        break;
      }
    }
    return negate ? -r : r;
  }

  Polynomial parse_factor() {
    Polynomial base = parse_atom();
    if (peek() == '^') {
      ++pos;
      skip_ws();
      if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
        fail("expected integer exponent");
      long e = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        e = e * 10 + (text[pos++] - '0');
      Polynomial r = Polynomial::constant(base.nvars(), Rational(1));
      for (long i = 0; i < e; ++i) r = r * base;
      return r;
    }
    return base;
  }

  Polynomial parse_atom() {
    const int n = static_cast<int>(vars.size());
    char c = peek();
    if (c == '(') {
      ++pos;
      Polynomial r = parse_expr();
      if (!eat(')')) fail("expected ')'");
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        num += text[pos++];
      // rational literal "a/b"
      size_t save = pos;
      skip_ws();
      if (pos < text.size() && text[pos] == '/') {
        ++pos;
        skip_ws();
        std::string den;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
          den += text[pos++];
        if (den.empty()) fail("expected denominator digits");
        return Polynomial::constant(n, Rational::from_string(num + "/" + den));
      }
      pos = save;
      return Polynomial::constant(n, Rational::from_string(num));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name;
      while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                                   text[pos] == '_' || text[pos] == '\''))
        name += text[pos++];
      int idx = find_var(name);
      if (idx < 0) fail("unknown variable '" + name + "'");
      return Polynomial::variable(n, idx);
    }
    fail("unexpected character");
  }
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& var_names) {
  PolyLexer lx{text, var_names};
  Polynomial p = lx.parse_expr();
  lx.skip_ws();
  if (lx.pos != text.size()) lx.fail("trailing input");
  return p;
}

}  // namespace reeskit
