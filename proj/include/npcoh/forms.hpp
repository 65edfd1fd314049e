#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "npcoh/grading.hpp"
#include "npcoh/polynomial.hpp"

namespace npcoh {

// A subset of {0..n-1} naming the dx factors of a wedge monomial
// dx_{i1}^...^dx_{ik} with i1 < ... < ik.
using IndexMask = uint32_t;

int mask_size(IndexMask m);

// Sign of reordering dx_A ^ dx_B into ascending order; 0 when A and B share
// an index.
int wedge_sign(IndexMask a, IndexMask b);

// Position of index i within the ascending enumeration of mask m.
int mask_position(IndexMask m, int i);

std::string mask_label(IndexMask m, const std::vector<std::string>& vars);

// Orders index subsets by their ascending index tuples (lexicographically),
// e.g. for n=4, k=2: {1,2} < {1,3} < {1,4} < {2,3} < {2,4} < {3,4}.
struct MaskLexLess {
  bool operator()(IndexMask a, IndexMask b) const;
};

// Polynomial differential form of fixed degree k in n variables. Components
// are stored per index subset; zero components are dropped.
class DifferentialForm {
 public:
  using CompMap = std::map<IndexMask, Polynomial, MaskLexLess>;

  DifferentialForm() : n_(0), k_(0) {}
  DifferentialForm(int n, int k);

  static DifferentialForm zero(int n, int k) { return DifferentialForm(n, k); }
  static DifferentialForm from_polynomial(const Polynomial& g);  // k = 0

  int nvars() const { return n_; }
  int degree() const { return k_; }
  bool is_zero() const { return comp_.empty(); }
  const CompMap& components() const { return comp_; }

  const Polynomial component(IndexMask m) const;
  void add_component(IndexMask m, const Polynomial& g);

  DifferentialForm operator+(const DifferentialForm& o) const;
  DifferentialForm operator-(const DifferentialForm& o) const;
  DifferentialForm scaled(const Rational& c) const;
  DifferentialForm scaled(const Polynomial& g) const;

  bool operator==(const DifferentialForm& o) const {
    return n_ == o.n_ && k_ == o.k_ && comp_ == o.comp_;
  }
  bool operator!=(const DifferentialForm& o) const { return !(*this == o); }

 private:
  int n_;
  int k_;
  CompMap comp_;
};

DifferentialForm wedge(const DifferentialForm& a, const DifferentialForm& b);
DifferentialForm exterior_d(const DifferentialForm& a);

// Contraction with the Euler field W = sum w_i x_i d/dx_i.
DifferentialForm euler_contract(const WeightSystem& W, const DifferentialForm& a);

// Lie derivative along the Euler field, via the Cartan formula
// L_W = i_W d + d i_W. On a quasihomogeneous form it multiplies by the
// quasidegree.
DifferentialForm euler_lie(const WeightSystem& W, const DifferentialForm& a);

// The volume form dx1^...^dxn and its Euler contraction sigma = i_W(omega).
DifferentialForm volume_form(int n);
DifferentialForm sigma_form(const WeightSystem& W);

// div(a) for an (n-1)-form, defined by d(a) = div(a) * omega.
Polynomial divergence(const DifferentialForm& a);

// Twisted differential on k-forms: a |-> f*da - (k - p)*df^a.
DifferentialForm twisted_d(const Polynomial& f, const DifferentialForm& df,
                           long p, const DifferentialForm& a);
DifferentialForm twisted_d(const Polynomial& f, long p, const DifferentialForm& a);

// Exterior derivative of a function as a 1-form.
DifferentialForm gradient_form(const Polynomial& g);

// Common quasidegree of all components (coefficient degree plus the weights
// of the dx factors); nullopt for zero or mixed-degree forms.
std::optional<long> form_quasidegree(const WeightSystem& W,
                                     const DifferentialForm& a);

// Text rendering: "(3*x1) dx2^dx3^dx4 + ..." with components in subset
// order; a 0-form renders as its bare polynomial.
std::string print_form(const DifferentialForm& a,
                       const std::vector<std::string>& vars);

}  // namespace npcoh
