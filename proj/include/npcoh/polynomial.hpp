#pragma once

#include <map>
#include <string>
#include <vector>

#include "npcoh/monomial.hpp"
#include "npcoh/scalar.hpp"

namespace npcoh {

// Sparse multivariate polynomial with exact rational coefficients.
// Terms are kept in descending lex order; zero coefficients are never
// stored, so the representation is canonical and equality is map equality.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, TermOrderGreater>;

  Polynomial() : nvars_(0) {}
  explicit Polynomial(int nvars) : nvars_(nvars) {}

  static Polynomial zero(int nvars) { return Polynomial(nvars); }
  static Polynomial constant(int nvars, const Rational& c);
  static Polynomial variable(int nvars, int i);
  static Polynomial term(const Monomial& m, const Rational& c);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  Rational coeff(const Monomial& m) const;
  void add_term(const Monomial& m, const Rational& c);

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(const Rational& c) const;
  Polynomial pow(unsigned e) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);

  Polynomial derivative(int i) const;

  bool operator==(const Polynomial& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

 private:
  int nvars_;
  TermMap terms_;
};

// Canonical text form: terms in descending lex order, explicit '*'
// between factors, '^' only for exponents above 1, no redundant unit
// coefficients except when a leading term is negative ("-1*x1+..."), so the
// output re-parses under the input grammar.
std::string print_polynomial(const Polynomial& p,
                             const std::vector<std::string>& vars);

std::vector<std::string> default_variable_names(int n);

}  // namespace npcoh
