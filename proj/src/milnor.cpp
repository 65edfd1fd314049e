#include "npcoh/milnor.hpp"

#include <algorithm>

namespace npcoh {

std::vector<Polynomial> jacobian(const Polynomial& f) {
  std::vector<Polynomial> gens;
  gens.reserve(f.nvars());
  for (int i = 0; i < f.nvars(); ++i) gens.push_back(f.derivative(i));
  return gens;
}

namespace {

// Column indexing for a degree slice: monomials in descending term order, so
// elimination pivots hit large monomials first and the surviving complement
// is the lex-smallest choice.
struct SliceColumns {
  std::vector<Monomial> mons;  // descending
  std::map<Monomial, int, TermOrderGreater> index;

  explicit SliceColumns(const WeightSystem& W, long d) {
    mons = monomials_of_degree(W, d);
    std::sort(mons.begin(), mons.end(), TermOrderGreater());
    for (size_t i = 0; i < mons.size(); ++i) index.emplace(mons[i], i);
  }
};

SparseRow row_of_polynomial(const SliceColumns& cols, const Polynomial& p) {
  std::vector<std::pair<int, Rational>> v;
  v.reserve(p.term_count());
  for (const auto& [m, c] : p.terms()) v.emplace_back(cols.index.at(m), c);
  std::sort(v.begin(), v.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return row_from_rationals(v);
}

// Rank of the degree-d slice of the ideal, plus (optionally) the set of
// non-pivot columns: those monomials span the quotient slice.
long ideal_slice_rank(const WeightSystem& W, const std::vector<Polynomial>& gens,
                      long d, const SliceColumns& cols,
                      std::vector<Monomial>* quotient_basis) {
  Eliminator elim;
  std::vector<bool> pivot(cols.mons.size(), false);
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    auto gd = quasihomogeneous_degree(W, g);
    long rem = d - *gd;
    if (rem < 0) continue;
    for (const Monomial& u : monomials_of_degree(W, rem)) {
      int pc = elim.add_row(row_of_polynomial(cols, g * Polynomial::term(u, Rational(1))));
      if (pc >= 0) pivot[pc] = true;
    }
  }
  if (quotient_basis) {
    for (size_t i = 0; i < cols.mons.size(); ++i)
      if (!pivot[i]) quotient_basis->push_back(cols.mons[i]);
    // Within one degree, report basis monomials in ascending term order.
    std::reverse(quotient_basis->begin(), quotient_basis->end());
  }
  return elim.rank();
}

}  // namespace

long ideal_slice_dimension(const WeightSystem& W,
                           const std::vector<Polynomial>& gens, long d) {
  if (d < 0) return 0;
  SliceColumns cols(W, d);
  return ideal_slice_rank(W, gens, d, cols, nullptr);
}

std::vector<long> MilnorAlgebra::basis_degrees(const WeightSystem& W) const {
  std::vector<long> out;
  out.reserve(basis.size());
  for (const auto& m : basis) out.push_back(quasidegree(W, m));
  return out;
}

long MilnorAlgebra::basis_count_at_degree(const WeightSystem& W, long d) const {
  long c = 0;
  for (const auto& m : basis)
    if (quasidegree(W, m) == d) ++c;
  return c;
}

MilnorAlgebra milnor_algebra(const Polynomial& f, const WeightSystem& W) {
  W.validate();
  if (f.is_zero()) throw InputError("polynomial is zero");
  if (f.nvars() != W.nvars())
    throw InputError("polynomial arity does not match the weight system");
  auto N = quasihomogeneous_degree(W, f);
  if (!N)
    throw InputError("polynomial is not quasihomogeneous for these weights");
  if (*N <= 0) throw InputError("quasidegree of f must be positive");

  MilnorAlgebra Q;
  Q.N = *N;
  Q.socle_bound = 0;
  for (long wi : W.w) Q.socle_bound += Q.N - 2 * wi;

  auto gens = jacobian(f);
  for (long d = 0; d <= Q.socle_bound; ++d) {
    SliceColumns cols(W, d);
    std::vector<Monomial> qb;
    ideal_slice_rank(W, gens, d, cols, &qb);
    for (auto& m : qb) Q.basis.push_back(std::move(m));
  }
  Q.codimension = static_cast<long>(Q.basis.size());

  // A quasihomogeneous isolated singularity has its whole quotient below the
  // socle bound; a nonzero slice in the N degrees after it flags an
  // infinite-codimension germ (e.g. a variable missing from every
  // derivative).
  long from = std::max(Q.socle_bound + 1, 0L);
  for (long d = from; d < from + Q.N; ++d) {
    SliceColumns cols(W, d);
    long rk = ideal_slice_rank(W, gens, d, cols, nullptr);
    if (rk != static_cast<long>(cols.mons.size()))
      throw InfiniteCodimensionError(
          "Jacobian ideal does not reach full rank in degree " +
          std::to_string(d) + ": f has infinite codimension");
  }
  return Q;
}

long CountVector::r_total() const {
  long t = 0;
  for (const auto& [j, v] : r) t += v;
  return t;
}

CountVector count_vector(const WeightSystem& W, const MilnorAlgebra& Q, long q) {
  CountVector cv;
  long sw = W.sum();
  for (long j = 2; j <= q - 1; ++j)
    cv.r[j] = Q.basis_count_at_degree(W, j * Q.N - sw);
  cv.s = count_monomials_of_degree(W, Q.N - sw);
  return cv;
}

Rational milnor_number_oracle(const WeightSystem& W, long N) {
  Rational mu(1);
  for (long wi : W.w) {
    Rational factor(N - wi, wi);
    factor.canonicalize();  // the two-argument constructor does not reduce
    mu *= factor;
  }
  return mu;
}

std::vector<long> poincare_dimensions(const WeightSystem& W, long N) {
  // Numerator prod (t^(N-w_i) - 1), denominator prod (t^w_i - 1), with the
  // sign arranged so both are polynomials with nonnegative leading
  // coefficient: each factor (t^a - 1) contributes one sign flip.
  auto mul = [](const std::vector<Integer>& a, const std::vector<Integer>& b) {
    std::vector<Integer> c(a.size() + b.size() - 1, Integer(0));
    for (size_t i = 0; i < a.size(); ++i)
      for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
  };
  std::vector<Integer> num{Integer(1)};
  std::vector<Integer> den{Integer(1)};
  for (long wi : W.w) {
    if (N - wi < 0) throw InputError("weight exceeds quasidegree");
    if (N - wi == 0) return {};  // a factor is zero: empty quotient
    std::vector<Integer> fn(N - wi + 1, Integer(0));
    fn[0] = -1;
    fn[N - wi] = 1;
    std::vector<Integer> fd(wi + 1, Integer(0));
    fd[0] = -1;
    fd[wi] = 1;
    num = mul(num, fn);
    den = mul(den, fd);
  }
  // Exact long division num / den over Z[t].
  std::vector<Integer> rem = num;
  std::vector<Integer> quot(rem.size() >= den.size() ? rem.size() - den.size() + 1 : 0,
                            Integer(0));
  long db = static_cast<long>(den.size()) - 1;
  for (long i = static_cast<long>(rem.size()) - 1; i >= db; --i) {
    if (rem[i] == 0) continue;
    if (!mpz_divisible_p(rem[i].get_mpz_t(), den[db].get_mpz_t()))
      throw InputError("Poincare series division is not exact");
    Integer c = rem[i] / den[db];
    quot[i - db] = c;
    for (long j = 0; j <= db; ++j) rem[i - db + j] -= c * den[j];
  }
  for (const auto& v : rem)
    if (v != 0) throw InputError("Poincare series division is not exact");
  std::vector<long> dims;
  dims.reserve(quot.size());
  for (const auto& v : quot) dims.push_back(static_cast<long>(v.get_si()));
  while (!dims.empty() && dims.back() == 0) dims.pop_back();
  return dims;
}

}  // namespace npcoh
