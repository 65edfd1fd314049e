#pragma once

#include <optional>
#include <vector>

#include "npcoh/polynomial.hpp"

namespace npcoh {

// Positive integer weights, one per variable. The quasidegree of a monomial
// is the weighted exponent sum; dx_i carries weight w_i as well.
struct WeightSystem {
  std::vector<long> w;

  int nvars() const { return static_cast<int>(w.size()); }
  long sum() const;
  void validate() const;  // throws InputError unless all weights positive

  bool operator==(const WeightSystem& o) const { return w == o.w; }
};

long quasidegree(const WeightSystem& W, const Monomial& m);

// Degree when every term agrees; nullopt for the zero polynomial or a
// mixed-degree polynomial.
std::optional<long> quasihomogeneous_degree(const WeightSystem& W,
                                            const Polynomial& p);

// All monomials of exact quasidegree d, in descending lexicographic order of
// exponent vectors (depth-first over x1 exponents, highest first).
std::vector<Monomial> monomials_of_degree(const WeightSystem& W, long d);

long count_monomials_of_degree(const WeightSystem& W, long d);

// W.g for the Euler field W = sum w_i x_i d/dx_i; acts per term as
// multiplication by the quasidegree.
Polynomial euler_apply(const WeightSystem& W, const Polynomial& g);

struct ResonanceError : std::runtime_error {
  long degree;
  explicit ResonanceError(long deg)
      : std::runtime_error("homotopy equation W.h - p*h = g has no solution: "
                           "a term of g sits at the resonant quasidegree " +
                           std::to_string(deg)),
        degree(deg) {}
};

// Solve W.h - p*h = g term by term (divide each coefficient by deg - p).
// Throws ResonanceError when g has a term of quasidegree exactly p.
Polynomial homotopy_solve(const WeightSystem& W, long p, const Polynomial& g);

}  // namespace npcoh
