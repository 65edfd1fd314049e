#pragma once

#include <map>
#include <vector>

#include "npcoh/grading.hpp"
#include "npcoh/linalg.hpp"

namespace npcoh {

struct InfiniteCodimensionError : std::runtime_error {
  explicit InfiniteCodimensionError(const std::string& what)
      : std::runtime_error(what) {}
};

std::vector<Polynomial> jacobian(const Polynomial& f);

// Dimension of the degree-d slice of the ideal generated by gens inside the
// polynomial ring (gens must be quasihomogeneous).
long ideal_slice_dimension(const WeightSystem& W,
                           const std::vector<Polynomial>& gens, long d);

// The quotient by the Jacobian ideal, computed degree by degree up to the
// socle bound sum(N - 2*w_i). The monomial basis picks, in each degree, the
// lex-smallest complement of the ideal slice.
struct MilnorAlgebra {
  long N = 0;                   // quasidegree of f
  long codimension = 0;         // total dimension of the quotient
  std::vector<Monomial> basis;  // ascending by (degree, term order)
  long socle_bound = 0;         // sum(N - 2*w_i), may be negative

  std::vector<long> basis_degrees(const WeightSystem& W) const;
  long basis_count_at_degree(const WeightSystem& W, long d) const;
};

// Throws InputError for non-quasihomogeneous input and
// InfiniteCodimensionError when the quotient fails to vanish on the N
// degrees following the socle bound.
MilnorAlgebra milnor_algebra(const Polynomial& f, const WeightSystem& W);

// r_j = #basis monomials of degree j*N - sum(w) for j = 2..q-1, and
// s = #monomials (of the full ring) of degree N - sum(w).
struct CountVector {
  std::map<long, long> r;
  long s = 0;

  long r_total() const;
};

CountVector count_vector(const WeightSystem& W, const MilnorAlgebra& Q, long q);

// Product formula mu = prod (N - w_i)/w_i, as an exact rational.
Rational milnor_number_oracle(const WeightSystem& W, long N);

// Coefficients of prod (t^(N-w_i) - 1)/(t^w_i - 1): per-degree dimensions of
// the quotient, via exact division in Z[t]. Throws InputError when the
// division is not exact.
std::vector<long> poincare_dimensions(const WeightSystem& W, long N);

}  // namespace npcoh
