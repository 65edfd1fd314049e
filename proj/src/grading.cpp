#include "npcoh/grading.hpp"

#include <numeric>

namespace npcoh {

long WeightSystem::sum() const {
  return std::accumulate(w.begin(), w.end(), 0L);
}

void WeightSystem::validate() const {
  if (w.empty()) throw InputError("weight system is empty");
  for (long wi : w)
    if (wi <= 0) throw InputError("weights must be positive integers");
}

long quasidegree(const WeightSystem& W, const Monomial& m) {
  long d = 0;
  for (int i = 0; i < m.nvars(); ++i) d += W.w[i] * static_cast<long>(m.exp(i));
  return d;
}

std::optional<long> quasihomogeneous_degree(const WeightSystem& W,
                                            const Polynomial& p) {
  std::optional<long> deg;
  for (const auto& [m, c] : p.terms()) {
    long d = quasidegree(W, m);
    if (!deg)
      deg = d;
    else if (*deg != d)
      return std::nullopt;
  }
  return deg;
}

namespace {

void enumerate(const WeightSystem& W, int i, long rem, Monomial& cur,
               std::vector<Monomial>& out) {
  int n = W.nvars();
  if (i == n - 1) {
    if (rem % W.w[i] == 0) {
      cur.set_exp(i, static_cast<unsigned>(rem / W.w[i]));
      out.push_back(cur);
      cur.set_exp(i, 0);
    }
    return;
  }
  for (long e = rem / W.w[i]; e >= 0; --e) {
    cur.set_exp(i, static_cast<unsigned>(e));
    enumerate(W, i + 1, rem - e * W.w[i], cur, out);
  }
  cur.set_exp(i, 0);
}

}  // namespace

std::vector<Monomial> monomials_of_degree(const WeightSystem& W, long d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  Monomial cur(W.nvars());
  enumerate(W, 0, d, cur, out);
  return out;
}

long count_monomials_of_degree(const WeightSystem& W, long d) {
  // Degrees stay small enough here that a count via enumeration would also
  // work, but the dynamic program keeps window scans cheap.
  if (d < 0) return 0;
  std::vector<long> cnt(d + 1, 0);
  cnt[0] = 1;
  for (long wi : W.w)
    for (long v = wi; v <= d; ++v) cnt[v] += cnt[v - wi];
  return cnt[d];
}

Polynomial euler_apply(const WeightSystem& W, const Polynomial& g) {
  Polynomial r(g.nvars());
  for (const auto& [m, c] : g.terms()) {
    long d = quasidegree(W, m);
    if (d != 0) r.add_term(m, c * Rational(d));
  }
  return r;
}

Polynomial homotopy_solve(const WeightSystem& W, long p, const Polynomial& g) {
  Polynomial h(g.nvars());
  for (const auto& [m, c] : g.terms()) {
    long d = quasidegree(W, m);
    if (d == p) throw ResonanceError(d);
    h.add_term(m, c / Rational(d - p));
  }
  return h;
}

}  // namespace npcoh
