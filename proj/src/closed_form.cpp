#include "npcoh/closed_form.hpp"

namespace npcoh {

namespace {

DifferentialForm monomial_form(int n, const Monomial& m) {
  return DifferentialForm::from_polynomial(Polynomial::term(m, Rational(1)));
}

ClosedEntry h0_entry(const Polynomial& f, long p, long N) {
  ClosedEntry e;
  e.k = 0;
  e.kind = DimKind::finite;
  if (p > 0) {
    e.dim = 0;
    return e;
  }
  e.dim = 1;
  e.generators.push_back(DifferentialForm::from_polynomial(
      f.pow(static_cast<unsigned>(-p))));
  e.placement[-p * N] = 1;
  return e;
}

ClosedEntry h1_entry(const Polynomial& f, long p, long N) {
  ClosedEntry e;
  e.k = 1;
  if (p != 0) {
    e.kind = DimKind::sentinel;
    e.note = "no dimension theorem for 1-forms away from p = 0";
    return e;
  }
  e.kind = DimKind::finite;
  e.dim = 1;
  e.generators.push_back(gradient_form(f));
  e.placement[N] = 1;
  return e;
}

ClosedEntry middle_entry(int k, long p) {
  ClosedEntry e;
  e.k = k;
  if (p == k || p == k - 1) {
    e.kind = DimKind::sentinel;
    e.note = "middle degrees are only covered for p outside {k, k-1}";
    return e;
  }
  e.kind = DimKind::finite;
  e.dim = 0;
  return e;
}

// H^{n-1}: zero for q <= 0, a graded count concentrated at (q-1)N for q > 2,
// a finite-plus-infinite split at q = 2, uncovered at q = 1.
ClosedEntry top_minus_one_entry(const Polynomial& f, const WeightSystem& W,
                                const MilnorAlgebra& Q, long q) {
  int n = W.nvars();
  ClosedEntry e;
  e.k = n - 1;
  long sw = W.sum();
  DifferentialForm sigma = sigma_form(W);
  if (q <= 0) {
    e.kind = DimKind::finite;
    e.dim = 0;
    return e;
  }
  if (q == 1) {
    e.kind = DimKind::sentinel;
    e.note = "no dimension theorem for (n-1)-forms at p = n-1";
    return e;
  }
  if (q == 2) {
    e.kind = DimKind::infinite;
    CountVector cv = count_vector(W, Q, q);
    for (const Monomial& u : monomials_of_degree(W, Q.N - sw))
      e.generators.push_back(wedge(monomial_form(n, u), sigma));
    e.note = "splits as a " + std::to_string(cv.s) +
             "-dimensional h*sigma part plus the infinite quotient "
             "(df^d gamma) / (df^d(f beta))";
    return e;
  }
  e.kind = DimKind::finite;
  CountVector cv = count_vector(W, Q, q);
  e.dim = cv.r_total() + cv.s;
  for (long j = q - 1; j >= 2; --j) {
    Polynomial fp = f.pow(static_cast<unsigned>(q - 1 - j));
    for (const Monomial& b : Q.basis) {
      if (quasidegree(W, b) != j * Q.N - sw) continue;
      e.generators.push_back(
          wedge(DifferentialForm::from_polynomial(fp * Polynomial::term(b, Rational(1))),
                sigma));
    }
  }
  Polynomial fq2 = f.pow(static_cast<unsigned>(q - 2));
  for (const Monomial& u : monomials_of_degree(W, Q.N - sw))
    e.generators.push_back(
        wedge(DifferentialForm::from_polynomial(fq2 * Polynomial::term(u, Rational(1))),
              sigma));
  if (e.dim > 0) e.placement[(q - 1) * Q.N] = e.dim;
  return e;
}

// H^n: the quotient algebra for q <= 0, infinite at q = 1, and the quotient
// plus one correction block at degree qN for q > 1.
ClosedEntry top_entry(const Polynomial& f, const WeightSystem& W,
                      const MilnorAlgebra& Q, long q) {
  int n = W.nvars();
  ClosedEntry e;
  e.k = n;
  long sw = W.sum();
  DifferentialForm omega = volume_form(n);
  if (q == 1) {
    e.kind = DimKind::infinite;
    e.note = "the quotient of n-forms by f times n-forms";
    return e;
  }
  e.kind = DimKind::finite;
  for (const Monomial& b : Q.basis) {
    e.generators.push_back(wedge(monomial_form(n, b), omega));
    e.placement[quasidegree(W, b) + sw] += 1;
  }
  e.dim = Q.codimension;
  if (q > 1) {
    CountVector cv = count_vector(W, Q, q);
    for (long j = q - 1; j >= 2; --j) {
      Polynomial fp = f.pow(static_cast<unsigned>(q - j));
      for (const Monomial& b : Q.basis) {
        if (quasidegree(W, b) != j * Q.N - sw) continue;
        e.generators.push_back(wedge(
            DifferentialForm::from_polynomial(fp * Polynomial::term(b, Rational(1))),
            omega));
      }
    }
    Polynomial fq1 = f.pow(static_cast<unsigned>(q - 1));
    for (const Monomial& u : monomials_of_degree(W, Q.N - sw))
      e.generators.push_back(wedge(
          DifferentialForm::from_polynomial(fq1 * Polynomial::term(u, Rational(1))),
          omega));
    long bump = cv.r_total() + cv.s;
    e.dim += bump;
    if (bump > 0) e.placement[q * Q.N] += bump;
  }
  return e;
}

}  // namespace

ClosedReport closed_form_report(const Polynomial& f, const WeightSystem& W,
                                const MilnorAlgebra& Q, long p) {
  int n = W.nvars();
  ClosedReport rep;
  rep.p = p;
  rep.q = n - p;
  rep.entries.push_back(h0_entry(f, p, Q.N));
  if (n >= 2) rep.entries.push_back(h1_entry(f, p, Q.N));
  for (int k = 2; k <= n - 2; ++k) rep.entries.push_back(middle_entry(k, p));
  if (n >= 3) rep.entries.push_back(top_minus_one_entry(f, W, Q, rep.q));
  rep.entries.push_back(top_entry(f, W, Q, rep.q));
  return rep;
}

}  // namespace npcoh
