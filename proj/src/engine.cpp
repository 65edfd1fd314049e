#include "npcoh/engine.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <cstdlib>
#include <thread>

namespace npcoh {

namespace {

std::vector<IndexMask> masks_of_size(int n, int k) {
  std::vector<IndexMask> out;
  if (k < 0 || k > n) return out;
  for (IndexMask m = 0; m < (IndexMask(1) << n); ++m)
    if (mask_size(m) == k) out.push_back(m);
  std::sort(out.begin(), out.end(), MaskLexLess());
  return out;
}

long mask_weight(const WeightSystem& W, IndexMask m) {
  long s = 0;
  while (m) {
    s += W.w[std::countr_zero(m)];
    m &= m - 1;
  }
  return s;
}

}  // namespace

long SliceIndex::index_of(IndexMask mask, const Monomial& mono) const {
  for (const auto& g : groups) {
    if (g.mask != mask) continue;
    auto it = std::lower_bound(g.mons.begin(), g.mons.end(), mono, TermOrderGreater());
    assert(it != g.mons.end() && *it == mono);
    return g.offset + (it - g.mons.begin());
  }
  assert(false && "component outside slice");
  return -1;
}

std::pair<IndexMask, Monomial> SliceIndex::element(long idx) const {
  for (const auto& g : groups) {
    if (idx < g.offset + static_cast<long>(g.mons.size()))
      return {g.mask, g.mons[idx - g.offset]};
  }
  assert(false && "slice index out of range");
  return {0, Monomial()};
}

DifferentialForm SliceIndex::element_form(long idx, int n) const {
  auto [mask, mono] = element(idx);
  DifferentialForm a(n, k);
  a.add_component(mask, Polynomial::term(mono, Rational(1)));
  return a;
}

SliceIndex slice_basis(const WeightSystem& W, int k, long m) {
  SliceIndex s;
  s.k = k;
  s.m = m;
  long off = 0;
  for (IndexMask mask : masks_of_size(W.nvars(), k)) {
    long rem = m - mask_weight(W, mask);
    auto mons = monomials_of_degree(W, rem);
    if (mons.empty()) continue;
    std::sort(mons.begin(), mons.end(), TermOrderGreater());
    s.groups.push_back({mask, off, std::move(mons)});
    off += static_cast<long>(s.groups.back().mons.size());
  }
  s.dim = off;
  return s;
}

int configured_thread_count() {
  const char* env = std::getenv("NPCOH_THREADS");
  long v = 0;
  if (env && *env) {
    char* end = nullptr;
    v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 0)
      throw InputError("NPCOH_THREADS must be a nonnegative integer");
  }
  if (v == 0) {
    unsigned hc = std::thread::hardware_concurrency();
    v = hc ? static_cast<long>(hc) : 1;
  }
  return static_cast<int>(v);
}

namespace {

void parallel_for(long njobs, const std::function<void(long)>& fn) {
  int nthreads = configured_thread_count();
  if (nthreads <= 1 || njobs <= 1) {
    for (long i = 0; i < njobs; ++i) fn(i);
    return;
  }
  std::atomic<long> next{0};
  auto worker = [&] {
    for (;;) {
      long i = next.fetch_add(1);
      if (i >= njobs) return;
      fn(i);
    }
  };
  std::vector<std::thread> pool;
  int spawn = static_cast<int>(std::min<long>(nthreads, njobs));
  pool.reserve(spawn);
  for (int t = 0; t < spawn; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

}  // namespace

long DegreeProfile::total() const {
  long t = 0;
  for (long d : dims) t += d;
  return t;
}

long DegreeProfile::at(long m) const {
  if (m < lo || m > hi) return 0;
  return dims[m - lo];
}

bool DegreeProfile::stabilized(long n_degrees) const {
  if (static_cast<long>(dims.size()) < n_degrees) return false;
  for (long i = 0; i < n_degrees; ++i)
    if (dims[dims.size() - 1 - i] != 0) return false;
  return true;
}

int DegreeProfile::nonzero_beyond_half() const {
  int c = 0;
  for (long m = lo; m <= hi; ++m)
    if (2 * m > hi && at(m) != 0) ++c;
  return c;
}

TwistedComplex::TwistedComplex(Polynomial f, WeightSystem W, long p)
    : f_(std::move(f)), W_(std::move(W)), p_(p) {
  W_.validate();
  auto N = quasihomogeneous_degree(W_, f_);
  if (!N || *N <= 0)
    throw InputError("twisted complex needs a quasihomogeneous f of positive degree");
  N_ = *N;
  df_ = gradient_form(f_);
}

long TwistedComplex::slice_dim(int k, long m) const {
  if (k < 0 || k > n() || m < 0) return 0;
  long dim = 0;
  for (IndexMask mask : masks_of_size(n(), k))
    dim += count_monomials_of_degree(W_, m - mask_weight(W_, mask));
  return dim;
}

SparseRow TwistedComplex::image_row(const SliceIndex& target,
                                    const DifferentialForm& img,
                                    Rational* scale) const {
  std::vector<std::pair<int, Rational>> v;
  for (const auto& [mask, g] : img.components())
    for (const auto& [mono, c] : g.terms())
      v.emplace_back(static_cast<int>(target.index_of(mask, mono)), c);
  std::sort(v.begin(), v.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return row_from_rationals(v, scale);
}

void TwistedComplex::out_rows(
    const SliceIndex& src, const SliceIndex& dst,
    const std::function<void(long, SparseRow, Rational)>& sink) const {
  for (long i = 0; i < src.dim; ++i) {
    DifferentialForm img = twisted_d(f_, df_, p_, src.element_form(i, n()));
    Rational s(1);
    SparseRow r = image_row(dst, img, &s);
    sink(i, std::move(r), std::move(s));
  }
}

long TwistedComplex::rank_out(int k, long m) {
  if (k < 0 || k >= n() || m < 0) return 0;
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = rank_cache_.find({k, m});
    if (it != rank_cache_.end()) return it->second;
  }
  long rank = 0;
  if (slice_dim(k, m) > 0 && slice_dim(k + 1, m + N_) > 0) {
    SliceIndex src = slice_basis(W_, k, m);
    SliceIndex dst = slice_basis(W_, k + 1, m + N_);
    Eliminator elim;
    out_rows(src, dst,
             [&](long, SparseRow r, Rational) { elim.add_row(std::move(r)); });
    rank = elim.rank();
  }
  std::lock_guard<std::mutex> lock(mu_);
  rank_cache_.emplace(std::make_pair(k, m), rank);
  return rank;
}

long TwistedComplex::cohomology_dimension(int k, long m) {
  if (k < 0 || k > n() || m < 0) return 0;
  long dim = slice_dim(k, m);
  if (dim == 0) return 0;
  return dim - rank_out(k, m) - rank_out(k - 1, m - N_);
}

DegreeProfile TwistedComplex::profile(int k, long lo, long hi) {
  DegreeProfile prof;
  prof.lo = lo;
  prof.hi = hi;
  prof.dims.assign(hi - lo + 1, 0);
  // Ranks at (k, m) and (k-1, m-N) decide every entry; prefetch them in
  // parallel, then assemble.
  std::vector<std::pair<int, long>> jobs;
  for (long m = lo; m <= hi; ++m) {
    if (slice_dim(k, m) == 0) continue;
    jobs.emplace_back(k, m);
    if (m - N_ >= 0 && k >= 1) jobs.emplace_back(k - 1, m - N_);
  }
  parallel_for(static_cast<long>(jobs.size()),
               [&](long i) { rank_out(jobs[i].first, jobs[i].second); });
  for (long m = lo; m <= hi; ++m) prof.dims[m - lo] = cohomology_dimension(k, m);
  return prof;
}

long TwistedComplex::default_window_top() const {
  long q = std::max<long>(n(), n() - p_);
  long socle = 0;
  for (long wi : W_.w) socle += std::max(N_ - 2 * wi, 0L);
  return q * N_ + socle + 2 * N_;
}

std::vector<DifferentialForm> TwistedComplex::witness_cocycles(int k, long m) {
  std::vector<DifferentialForm> out;
  long dim = slice_dim(k, m);
  if (dim == 0) return out;
  SliceIndex slice = slice_basis(W_, k, m);

  // Kernel of the outgoing map: insert image rows with dependency tracking;
  // every row that dies yields one exact kernel vector. Dependencies are
  // over the rows as inserted, which row_from_rationals rescaled, so each
  // coefficient picks up the scale of its row.
  std::vector<std::vector<std::pair<int, Integer>>> kernel;
  std::vector<Rational> scales(dim, Rational(1));
  if (k < n() && slice_dim(k + 1, m + N_) > 0) {
    SliceIndex dst = slice_basis(W_, k + 1, m + N_);
    Eliminator elim(true);
    out_rows(slice, dst, [&](long i, SparseRow r, Rational s) {
      scales[i] = std::move(s);
      if (elim.add_row(std::move(r)) < 0) kernel.push_back(elim.last_dependency());
    });
  } else {
    // Zero outgoing map: the kernel is the whole slice.
    for (long i = 0; i < dim; ++i)
      kernel.push_back({{static_cast<int>(i), Integer(1)}});
  }

  // Image of the incoming map, then greedily extend by kernel vectors; the
  // survivors represent a basis of the quotient.
  Eliminator quot;
  long image_rank = 0;
  if (k >= 1 && m - N_ >= 0 && slice_dim(k - 1, m - N_) > 0) {
    SliceIndex below = slice_basis(W_, k - 1, m - N_);
    for (long i = 0; i < below.dim; ++i) {
      DifferentialForm img = twisted_d(f_, df_, p_, below.element_form(i, n()));
      quot.add_row(image_row(slice, img));
    }
    image_rank = quot.rank();
  }

  for (const auto& kv : kernel) {
    std::vector<std::pair<int, Rational>> coeffs;
    coeffs.reserve(kv.size());
    for (const auto& [idx, val] : kv)
      coeffs.emplace_back(idx, Rational(val) * scales[idx]);
    SparseRow r = row_from_rationals(coeffs);
    long before = quot.rank();
    quot.add_row(r);
    if (quot.rank() == before) continue;  // already a coboundary
    DifferentialForm w(n(), k);
    for (const auto& [idx, val] : r.ent) {
      auto [mask, mono] = slice.element(idx);
      w.add_component(mask, Polynomial::term(mono, Rational(val)));
    }
    // Certificates: a witness is a genuine cocycle and independent of the
    // image (the quotient rank increase already established the latter).
    DifferentialForm dw = twisted_d(f_, df_, p_, w);
    if (!dw.is_zero()) throw std::logic_error("witness failed the cocycle check");
    out.push_back(std::move(w));
  }
  long expected = cohomology_dimension(k, m);
  if (static_cast<long>(out.size()) != expected)
    throw std::logic_error("witness count disagrees with the slice dimension");
  if (quot.rank() != image_rank + static_cast<long>(out.size()))
    throw std::logic_error("witness rank certificate failed");
  return out;
}

DifferentialForm divide_by_df(const Polynomial& f, const WeightSystem& W,
                              const DifferentialForm& a, DivideMode mode) {
  int n = W.nvars();
  auto N = quasihomogeneous_degree(W, f);
  if (!N || *N <= 0) throw InputError("divide_by_df needs quasihomogeneous f");
  auto deg = form_quasidegree(W, a);
  if (!deg && !a.is_zero())
    throw InputError("divide_by_df needs a quasihomogeneous form");
  int k = a.degree();
  DifferentialForm df = gradient_form(f);

  // The exterior derivative preserves quasidegree, so in both modes the
  // unknown lives N below a.
  int src_k = mode == DivideMode::wedge ? k - 1 : k - 2;
  long shift = *N;
  if (mode == DivideMode::wedge) {
    if (k < 1 || k > n) throw InputError("wedge division needs a form degree in [1, n]");
    if (k < n && !wedge(df, a).is_zero())
      throw InputError("df^a is nonzero: no wedge division exists");
  } else {
    if (k < 2 || k > n) throw InputError("wedge_d division needs a form degree in [2, n]");
  }
  if (a.is_zero()) return DifferentialForm(n, src_k);

  long src_m = *deg - shift;
  SliceIndex src = slice_basis(W, src_k, src_m);
  SliceIndex dst = slice_basis(W, k, *deg);
  Eliminator elim(true);
  std::vector<Rational> scales;
  scales.reserve(src.dim + 1);
  auto to_row = [&](const DifferentialForm& img) {
    std::vector<std::pair<int, Rational>> v;
    for (const auto& [mask, g] : img.components())
      for (const auto& [mono, c] : g.terms())
        v.emplace_back(static_cast<int>(dst.index_of(mask, mono)), c);
    std::sort(v.begin(), v.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    Rational s(1);
    SparseRow r = row_from_rationals(v, &s);
    scales.push_back(std::move(s));
    return r;
  };
  for (long i = 0; i < src.dim; ++i) {
    DifferentialForm e = src.element_form(i, n);
    DifferentialForm img =
        mode == DivideMode::wedge ? wedge(df, e) : wedge(df, exterior_d(e));
    elim.add_row(to_row(img));
  }
  if (elim.add_row(to_row(a)) >= 0)
    throw DivisionError("no polynomial solution in the quasihomogeneous slice");
  // The dependency expresses: sum dep_i * s_i * image(e_i) + dep_a * s_a * a = 0,
  // with s_* the row_from_rationals scales of the inserted rows.
  const auto& dep = elim.last_dependency();
  Rational lead;
  for (const auto& [idx, val] : dep)
    if (idx == src.dim) lead = Rational(val) * scales[idx];
  assert(lead != 0);
  DifferentialForm beta(n, src_k);
  for (const auto& [idx, val] : dep) {
    if (idx == src.dim) continue;
    auto [mask, mono] = src.element(idx);
    beta.add_component(mask,
                       Polynomial::term(mono, -(Rational(val) * scales[idx]) / lead));
  }
  return beta;
}

}  // namespace npcoh
