#include "npcoh/polynomial.hpp"

#include <cassert>
#include <sstream>

namespace npcoh {

Polynomial Polynomial::constant(int nvars, const Rational& c) {
  Polynomial p(nvars);
  p.add_term(Monomial::one(nvars), c);
  return p;
}

Polynomial Polynomial::variable(int nvars, int i) {
  assert(i >= 0 && i < nvars);
  Monomial m(nvars);
  m.set_exp(i, 1);
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
  if (c == 0) return;
  assert(m.nvars() == nvars_);
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r = *this;
  r += o;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  assert(nvars_ == o.nvars_ || is_zero() || o.is_zero());
  if (terms_.empty()) nvars_ = o.nvars_;
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  Polynomial r = *this;
  r -= o;
  return r;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  assert(nvars_ == o.nvars_ || is_zero() || o.is_zero());
  if (terms_.empty()) nvars_ = o.nvars_;
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(nvars_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial r(nvars_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  Polynomial r(nvars_);
  if (c == 0) return r;
  for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial r = Polynomial::constant(nvars_, Rational(1));
  Polynomial b = *this;
  while (e) {
    if (e & 1) r = r * b;
    if (e >>= 1) b = b * b;
  }
  return r;
}

Polynomial Polynomial::derivative(int i) const {
  Polynomial r(nvars_);
  for (const auto& [m, c] : terms_) {
    unsigned e = m.exp(i);
    if (e == 0) continue;
    r.add_term(m.derivative_monomial(i), c * Rational(e));
  }
  return r;
}

std::vector<std::string> default_variable_names(int n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

namespace {

// One monomial-with-coefficient, without sign. |c| must be nonzero.
void print_term(std::ostream& os, const Rational& c_abs, const Monomial& m,
                const std::vector<std::string>& vars, bool force_coeff) {
  bool wrote = false;
  if (c_abs != 1 || m.is_one() || force_coeff) {
    os << c_abs.get_str();
    wrote = true;
  }
  for (int i = 0; i < m.nvars(); ++i) {
    unsigned e = m.exp(i);
    if (!e) continue;
    if (wrote) os << "*";
    os << vars[i];
    if (e > 1) os << "^" << e;
    wrote = true;
  }
}

}  // namespace

std::string print_polynomial(const Polynomial& p,
                             const std::vector<std::string>& vars) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    bool neg = c < 0;
    Rational a = neg ? Rational(-c) : c;
    if (first) {
      // The grammar has no unary minus on variables, so a negative leading
      // term keeps an explicit coefficient: "-1*x1".
      if (neg) os << "-";
      print_term(os, a, m, vars, neg);
      first = false;
    } else {
      os << (neg ? "-" : "+");
      print_term(os, a, m, vars, false);
    }
  }
  return os.str();
}

}  // namespace npcoh
