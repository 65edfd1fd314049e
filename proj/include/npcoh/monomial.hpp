#pragma once

#include <cassert>
#include <cstdint>
#include <numeric>
#include <vector>

namespace npcoh {

// Exponent vector of a monomial in a fixed number of variables.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(int nvars) : e_(nvars, 0) {}
  Monomial(std::initializer_list<unsigned> e) : e_(e) {}

  static Monomial one(int nvars) { return Monomial(nvars); }

  int nvars() const { return static_cast<int>(e_.size()); }
  unsigned exp(int i) const { return e_[i]; }
  void set_exp(int i, unsigned v) { e_[i] = v; }

  unsigned total_degree() const {
    return std::accumulate(e_.begin(), e_.end(), 0u);
  }

  bool is_one() const {
    for (unsigned v : e_)
      if (v) return false;
    return true;
  }

  Monomial operator*(const Monomial& o) const {
    assert(nvars() == o.nvars());
    Monomial r = *this;
    for (int i = 0; i < nvars(); ++i) r.e_[i] += o.e_[i];
    return r;
  }

  bool divides(const Monomial& o) const {
    assert(nvars() == o.nvars());
    for (int i = 0; i < nvars(); ++i)
      if (e_[i] > o.e_[i]) return false;
    return true;
  }

  // Exact quotient o / this; caller guarantees divisibility.
  Monomial quotient_of(const Monomial& o) const {
    assert(divides(o));
    Monomial r(nvars());
    for (int i = 0; i < nvars(); ++i) r.e_[i] = o.e_[i] - e_[i];
    return r;
  }

  // Monomial part of the partial derivative (exponent of x_i dropped by one).
  Monomial derivative_monomial(int i) const {
    assert(e_[i] > 0);
    Monomial r = *this;
    r.e_[i] -= 1;
    return r;
  }

  bool operator==(const Monomial& o) const { return e_ == o.e_; }
  bool operator!=(const Monomial& o) const { return e_ != o.e_; }

  // Lexicographic term order on exponent vectors, x1 heaviest. On a
  // quasihomogeneous slice this agrees with grading by quasidegree followed
  // by lex, which is the order the reported bases and printed polynomials
  // are pinned to.
  static int cmp(const Monomial& a, const Monomial& b) {
    for (int i = 0; i < a.nvars(); ++i)
      if (a.e_[i] != b.e_[i]) return a.e_[i] < b.e_[i] ? -1 : 1;
    return 0;
  }

 private:
  std::vector<unsigned> e_;
};

// Descending lex: the order polynomials print and iterate in.
struct TermOrderGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return Monomial::cmp(a, b) > 0;
  }
};

struct TermOrderLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return Monomial::cmp(a, b) < 0;
  }
};

}  // namespace npcoh
