#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <vector>

#include "npcoh/forms.hpp"
#include "npcoh/linalg.hpp"
#include "npcoh/milnor.hpp"

namespace npcoh {

struct DivisionError : std::runtime_error {
  explicit DivisionError(const std::string& what) : std::runtime_error(what) {}
};

// Ordered monomial basis of the quasidegree-m slice of k-forms: index
// subsets in ascending subset order, monomials in descending term order
// within each subset.
struct SliceIndex {
  struct Group {
    IndexMask mask;
    long offset;
    std::vector<Monomial> mons;  // descending term order
  };
  int k = 0;
  long m = 0;
  long dim = 0;
  std::vector<Group> groups;

  long index_of(IndexMask mask, const Monomial& mono) const;
  std::pair<IndexMask, Monomial> element(long idx) const;
  DifferentialForm element_form(long idx, int n) const;
};

SliceIndex slice_basis(const WeightSystem& W, int k, long m);

// Number of worker threads: the threads environment knob, 0 or unset
// meaning hardware concurrency. Throws InputError on malformed values.
int configured_thread_count();

// Per-degree cohomology dimensions of one twisted complex over a window.
struct DegreeProfile {
  long lo = 0, hi = -1;
  std::vector<long> dims;

  long total() const;
  long at(long m) const;
  // All of the final n_degrees entries vanish (finite-dimensionality proof
  // for theorem windows).
  bool stabilized(long n_degrees) const;
  // Nonzero entries strictly above hi/2; three or more counts as evidence of
  // an infinite-dimensional graded piece.
  int nonzero_beyond_half() const;

  bool operator==(const DegreeProfile& o) const {
    return lo == o.lo && hi == o.hi && dims == o.dims;
  }
};

// The complex (Omega^*, a |-> f da - (deg - p) df^a) for one fixed f and p,
// with exact slice-by-slice linear algebra and memoized ranks.
class TwistedComplex {
 public:
  TwistedComplex(Polynomial f, WeightSystem W, long p);

  const Polynomial& f() const { return f_; }
  const WeightSystem& weights() const { return W_; }
  long p() const { return p_; }
  long N() const { return N_; }
  int n() const { return W_.nvars(); }

  long slice_dim(int k, long m) const;

  // Rank of the outgoing differential on the (k, m) slice.
  long rank_out(int k, long m);

  // dim ker(out at (k, m)) - rank(in from (k-1, m-N)).
  long cohomology_dimension(int k, long m);

  DegreeProfile profile(int k, long lo, long hi);

  // Cocycle representatives completing the incoming image to the kernel of
  // the (k, m) slice, in deterministic order. Each witness is re-verified:
  // its twisted differential vanishes and appending it to the image matrix
  // raises the rank by one.
  std::vector<DifferentialForm> witness_cocycles(int k, long m);

  // Window top for this p: q*N + sum(max(N - 2w_i, 0)) + 2N with
  // q = max(n, n - p); covers every closed-form class degree plus a
  // verification margin.
  long default_window_top() const;

 private:
  SparseRow image_row(const SliceIndex& target, const DifferentialForm& img,
                      Rational* scale = nullptr) const;
  void out_rows(const SliceIndex& src, const SliceIndex& dst,
                const std::function<void(long, SparseRow, Rational)>& sink) const;

  Polynomial f_;
  WeightSystem W_;
  long p_;
  long N_;
  DifferentialForm df_;

  std::mutex mu_;
  std::map<std::pair<int, long>, long> rank_cache_;
};

enum class DivideMode { wedge, wedge_d };

// Solve a = df^beta (wedge) or a = df^d(gamma) (wedge_d) inside the exact
// quasihomogeneous slice determined by a's degree. Throws InputError when
// preconditions fail and DivisionError when no polynomial solution exists.
DifferentialForm divide_by_df(const Polynomial& f, const WeightSystem& W,
                              const DifferentialForm& a, DivideMode mode);

}  // namespace npcoh
