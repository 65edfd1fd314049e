#include "npcoh/forms.hpp"

#include <bit>
#include <cassert>
#include <sstream>

namespace npcoh {

int mask_size(IndexMask m) { return std::popcount(m); }

int wedge_sign(IndexMask a, IndexMask b) {
  if (a & b) return 0;
  // Count inversions: pairs (i in a, j in b) with j < i.
  int inv = 0;
  while (a) {
    IndexMask low = a & (~a + 1);  // lowest set bit of a
    int i = std::countr_zero(low);
    inv += std::popcount(b & (low - 1));
    (void)i;
    a ^= low;
  }
  return (inv & 1) ? -1 : 1;
}

int mask_position(IndexMask m, int i) {
  assert(m & (IndexMask(1) << i));
  return std::popcount(m & ((IndexMask(1) << i) - 1));
}

bool MaskLexLess::operator()(IndexMask a, IndexMask b) const {
  // Compare the ascending index tuples lexicographically.
  while (a && b) {
    int ia = std::countr_zero(a);
    int ib = std::countr_zero(b);
    if (ia != ib) return ia < ib;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

std::string mask_label(IndexMask m, const std::vector<std::string>& vars) {
  std::ostringstream os;
  bool first = true;
  while (m) {
    int i = std::countr_zero(m);
    if (!first) os << "^";
    os << "d" << vars[i];
    first = false;
    m &= m - 1;
  }
  return os.str();
}

DifferentialForm::DifferentialForm(int n, int k) : n_(n), k_(k) {
  // Degrees above n are allowed and necessarily stay empty (no index subsets
  // of that size exist), so d and wedge on top-degree forms just vanish.
  assert(k >= 0);
}

DifferentialForm DifferentialForm::from_polynomial(const Polynomial& g) {
  DifferentialForm a(g.nvars(), 0);
  a.add_component(0, g);
  return a;
}

const Polynomial DifferentialForm::component(IndexMask m) const {
  auto it = comp_.find(m);
  return it == comp_.end() ? Polynomial::zero(n_) : it->second;
}

void DifferentialForm::add_component(IndexMask m, const Polynomial& g) {
  assert(mask_size(m) == k_);
  if (g.is_zero()) return;
  auto [it, inserted] = comp_.emplace(m, g);
  if (!inserted) {
    it->second += g;
    if (it->second.is_zero()) comp_.erase(it);
  }
}

DifferentialForm DifferentialForm::operator+(const DifferentialForm& o) const {
  assert(n_ == o.n_ && k_ == o.k_);
  DifferentialForm r = *this;
  for (const auto& [m, g] : o.comp_) r.add_component(m, g);
  return r;
}

DifferentialForm DifferentialForm::operator-(const DifferentialForm& o) const {
  assert(n_ == o.n_ && k_ == o.k_);
  DifferentialForm r = *this;
  for (const auto& [m, g] : o.comp_) r.add_component(m, -g);
  return r;
}

DifferentialForm DifferentialForm::scaled(const Rational& c) const {
  DifferentialForm r(n_, k_);
  if (c == 0) return r;
  for (const auto& [m, g] : comp_) r.comp_.emplace(m, g.scaled(c));
  return r;
}

DifferentialForm DifferentialForm::scaled(const Polynomial& g) const {
  DifferentialForm r(n_, k_);
  for (const auto& [m, h] : comp_) r.add_component(m, h * g);
  return r;
}

DifferentialForm wedge(const DifferentialForm& a, const DifferentialForm& b) {
  assert(a.nvars() == b.nvars());
  DifferentialForm r(a.nvars(), a.degree() + b.degree());
  for (const auto& [ma, ga] : a.components()) {
    for (const auto& [mb, gb] : b.components()) {
      int s = wedge_sign(ma, mb);
      if (!s) continue;
      Polynomial g = ga * gb;
      r.add_component(ma | mb, s > 0 ? g : -g);
    }
  }
  return r;
}

DifferentialForm exterior_d(const DifferentialForm& a) {
  int n = a.nvars();
  DifferentialForm r(n, a.degree() + 1);
  for (const auto& [m, g] : a.components()) {
    for (int i = 0; i < n; ++i) {
      IndexMask bi = IndexMask(1) << i;
      if (m & bi) continue;
      Polynomial dg = g.derivative(i);
      if (dg.is_zero()) continue;
      int s = wedge_sign(bi, m);
      r.add_component(bi | m, s > 0 ? dg : -dg);
    }
  }
  return r;
}

DifferentialForm euler_contract(const WeightSystem& W, const DifferentialForm& a) {
  int n = a.nvars();
  DifferentialForm r(n, a.degree() - 1);
  assert(a.degree() >= 1 || a.is_zero());
  for (const auto& [m, g] : a.components()) {
    IndexMask rest = m;
    while (rest) {
      int i = std::countr_zero(rest);
      rest &= rest - 1;
      // i_{d/dx_i} pulls dx_i to the front: sign (-1)^position.
      int s = (mask_position(m, i) & 1) ? -1 : 1;
      Polynomial wx = Polynomial::variable(n, i).scaled(Rational(W.w[i]));
      Polynomial g2 = g * wx;
      r.add_component(m & ~(IndexMask(1) << i), s > 0 ? g2 : -g2);
    }
  }
  return r;
}

DifferentialForm euler_lie(const WeightSystem& W, const DifferentialForm& a) {
  if (a.degree() == 0) {
    DifferentialForm r(a.nvars(), 0);
    r.add_component(0, euler_apply(W, a.component(0)));
    return r;
  }
  DifferentialForm term1 = euler_contract(W, exterior_d(a));
  DifferentialForm term2 = exterior_d(euler_contract(W, a));
  return term1 + term2;
}

DifferentialForm volume_form(int n) {
  DifferentialForm r(n, n);
  r.add_component((IndexMask(1) << n) - 1, Polynomial::constant(n, Rational(1)));
  return r;
}

DifferentialForm sigma_form(const WeightSystem& W) {
  return euler_contract(W, volume_form(W.nvars()));
}

Polynomial divergence(const DifferentialForm& a) {
  int n = a.nvars();
  if (a.degree() != n - 1) throw InputError("divergence needs an (n-1)-form");
  DifferentialForm da = exterior_d(a);
  return da.component((IndexMask(1) << n) - 1);
}

DifferentialForm gradient_form(const Polynomial& g) {
  int n = g.nvars();
  return exterior_d(DifferentialForm::from_polynomial(g));
}

DifferentialForm twisted_d(const Polynomial& f, const DifferentialForm& df,
                           long p, const DifferentialForm& a) {
  long k = a.degree();
  DifferentialForm fda = exterior_d(a).scaled(f);
  if (k == p) return fda;
  return fda - wedge(df, a).scaled(Rational(k - p));
}

DifferentialForm twisted_d(const Polynomial& f, long p, const DifferentialForm& a) {
  return twisted_d(f, gradient_form(f), p, a);
}

std::optional<long> form_quasidegree(const WeightSystem& W,
                                     const DifferentialForm& a) {
  std::optional<long> deg;
  for (const auto& [m, g] : a.components()) {
    long shift = 0;
    IndexMask rest = m;
    while (rest) {
      shift += W.w[std::countr_zero(rest)];
      rest &= rest - 1;
    }
    auto gd = quasihomogeneous_degree(W, g);
    if (!gd) return std::nullopt;
    long d = *gd + shift;
    if (!deg)
      deg = d;
    else if (*deg != d)
      return std::nullopt;
  }
  return deg;
}

std::string print_form(const DifferentialForm& a,
                       const std::vector<std::string>& vars) {
  if (a.degree() == 0) return print_polynomial(a.component(0), vars);
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, g] : a.components()) {
    if (!first) os << " + ";
    os << "(" << print_polynomial(g, vars) << ") " << mask_label(m, vars);
    first = false;
  }
  return os.str();
}

}  // namespace npcoh
