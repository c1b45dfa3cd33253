#pragma once

// Multigraded Čech computation of H^i_I(S) for a square-free monomial ideal
// I = (f_1, ..., f_r) in S = k[x_1, ..., x_n].
//
// Degree reduction. For a subset T ⊆ [r] write f_T = Π_{t∈T} f_t and
// U_T = ∪_{t∈T} supp(f_t). The localization S_{f_T} has k-basis the Laurent
// monomials x^a with a_j ≥ 0 for every j ∉ U_T, so its degree-a piece is k
// when N(a) = {j : a_j < 0} ⊆ U_T and 0 otherwise. Hence the degree-a strand
// of the Čech complex
//     0 → S → ⊕_{|T|=1} S_{f_T} → ⊕_{|T|=2} S_{f_T} → ...
// is the complex C(N) spanned by the "active" subsets T with N ⊆ U_T, with
// the usual alternating signs, and depends only on the pattern N = N(a).
// The table therefore has one entry per (i, N), N ⊆ [n]. Patterns with
// N ⊄ U_[r] have no active term at all.
//
// Multiplication by x_j sends degree a to a + e_j. Unless a_j = -1 the
// pattern is unchanged and the map is the identity of C(N). When a_j = -1 it
// is the inclusion C(N) ⊆ C(N ∖ {j}): the active sets of N are active for
// N ∖ {j}, and the active sets form an up-set so C(N) is a subcomplex.
// Multiplication by x_j on H^i_I(S) is thus surjective iff every comparison
// map H^i(C(N)) → H^i(C(N ∖ {j})) with j ∈ N is. A monomial acts as a
// composite of variables, so surjectivity for all variables gives it for all
// monomials. Whether this extends to arbitrary nonzero polynomials is not
// decided here.
//
// Artinian test. H^i_I(S)_{x_j} = 0 iff every pattern with j ∉ N vanishes in
// row i (those are the degrees on which x_j acts invertibly). The module is
// supported at the maximal ideal, i.e. artinian, iff this holds for every j,
// i.e. iff the row vanishes outside N = [n].

#include <algorithm>
#include <cstdint>
#include <optional>
#include <thread>
#include <unordered_map>
#include <vector>

#include <gmpxx.h>

#include "loccoh/ideals.hpp"
#include "loccoh/linalg.hpp"

namespace loccoh {

// 2^r * max_k C(r, k): the cell count that the budget is measured against.
inline std::uint64_t cech_cell_estimate(int r) {
  std::uint64_t binom = 1;
  for (int k = 1; k <= r / 2; ++k) binom = binom * static_cast<std::uint64_t>(r - k + 1) / k;
  return (std::uint64_t{1} << r) * binom;
}

// Generator data shared by every pattern: the k-subsets of [r] in
// lexicographic order and the support union of every subset.
class CechLattice {
public:
  CechLattice(const SquareFreeIdeal& I, const Limits& limits = {}) : n_(I.n()) {
    detail::require_proper_nonzero(I, "Čech complex");
    r_ = I.generator_count();
    if (r_ > limits.max_generators || r_ >= VarSet::kMaxBits) {
      throw CapExceeded("generator count " + std::to_string(r_) + " exceeds cap " +
                        std::to_string(limits.max_generators));
    }
    if (cech_cell_estimate(r_) > limits.matrix_cell_budget) {
      throw CapExceeded("Čech complex with " + std::to_string(r_) + " generators needs about " +
                        std::to_string(cech_cell_estimate(r_)) + " matrix cells, over the budget of " +
                        std::to_string(limits.matrix_cell_budget));
    }
    const auto& gens = I.generators();
    unions_.assign(std::size_t{1} << r_, VarSet{});
    for (std::size_t m = 1; m < unions_.size(); ++m) {
      const int low = std::countr_zero(static_cast<std::uint32_t>(m));
      unions_[m] = unions_[m & (m - 1)] | gens[low];
    }
    by_size_.reserve(r_ + 1);
    for (int k = 0; k <= r_; ++k) by_size_.push_back(combinations(r_, k));
  }

  int n() const { return n_; }
  int r() const { return r_; }
  VarSet union_of(VarSet subset) const { return unions_[subset.bits()]; }
  VarSet total_support() const { return unions_.back(); }
  const std::vector<VarSet>& subsets_of_size(int k) const { return by_size_[k]; }

private:
  int n_ = 0;
  int r_ = 0;
  std::vector<VarSet> unions_;
  std::vector<std::vector<VarSet>> by_size_;
};

// The strand C(N) of the Čech complex. terms[k] lists the active k-subsets
// of generator indices; differentials[k] maps terms[k] to terms[k+1].
struct GradedComplex {
  int r = 0;
  VarSet pattern;
  std::vector<std::vector<VarSet>> terms;
  std::vector<IntMatrix> differentials;

  std::size_t term_count(int k) const { return terms[k].size(); }

  // dim H^k for k = 0..r.
  std::vector<std::size_t> cohomology_dims(FieldSpec field = {}) const {
    std::vector<std::size_t> ranks(r + 1, 0), dims(r + 1, 0);
    for (int k = 0; k < r; ++k) ranks[k] = rank(differentials[k], field);
    for (int k = 0; k <= r; ++k) {
      dims[k] = terms[k].size() - ranks[k] - (k > 0 ? ranks[k - 1] : 0);
    }
    return dims;
  }
};

inline GradedComplex build_graded_complex(const CechLattice& lattice, VarSet pattern) {
  if (!pattern.subset_of(VarSet::full(lattice.n()))) throw InputError("pattern uses a variable outside the context");
  const int r = lattice.r();
  GradedComplex c;
  c.r = r;
  c.pattern = pattern;
  c.terms.resize(r + 1);
  for (int k = 0; k <= r; ++k)
    for (VarSet T : lattice.subsets_of_size(k))
      if (pattern.subset_of(lattice.union_of(T))) c.terms[k].push_back(T);

  c.differentials.reserve(r);
  for (int k = 0; k < r; ++k) {
    const auto& src = c.terms[k];
    const auto& dst = c.terms[k + 1];
    std::unordered_map<VarSet::mask_type, std::size_t> row_of;
    row_of.reserve(dst.size());
    for (std::size_t i = 0; i < dst.size(); ++i) row_of.emplace(dst[i].bits(), i);
    IntMatrix d(dst.size(), src.size());
    for (std::size_t col = 0; col < src.size(); ++col) {
      for (int t = 0; t < r; ++t) {
        if (src[col].contains(t)) continue;
        auto it = row_of.find(src[col].with(t).bits());
        if (it != row_of.end()) d(it->second, col) = (src[col].rank_of(t) % 2 == 0) ? 1 : -1;
      }
    }
    c.differentials.push_back(std::move(d));
  }
  return c;
}

inline GradedComplex build_graded_complex(const SquareFreeIdeal& I, VarSet pattern, const Limits& limits = {}) {
  return build_graded_complex(CechLattice(I, limits), pattern);
}

// dim_k H^i_I(S)_N for i = 0..n and every pattern N ⊆ [n].
class CohomologyTable {
public:
  struct Entry {
    int i;
    VarSet pattern;
    std::size_t dim;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  CohomologyTable(SquareFreeIdeal ideal, FieldSpec field)
      : ideal_(std::move(ideal)), field_(field),
        dims_(ideal_.n() + 1, std::vector<std::size_t>(std::size_t{1} << ideal_.n(), 0)) {}

  const SquareFreeIdeal& ideal() const { return ideal_; }
  FieldSpec field() const { return field_; }
  int n() const { return ideal_.n(); }

  std::size_t dim(int i, VarSet pattern) const {
    if (i < 0 || i > n()) return 0;
    return dims_[i][pattern.bits()];
  }
  void set(int i, VarSet pattern, std::size_t d) { dims_.at(i).at(pattern.bits()) = d; }

  bool row_is_zero(int i) const {
    if (i < 0 || i > n()) return true;
    return std::all_of(dims_[i].begin(), dims_[i].end(), [](std::size_t d) { return d == 0; });
  }

  // Nonzero entries sorted by i, then lexicographically by pattern.
  std::vector<Entry> entries() const {
    std::vector<Entry> out;
    for (int i = 0; i <= n(); ++i)
      for (std::size_t m = 0; m < dims_[i].size(); ++m)
        if (dims_[i][m] != 0) out.push_back({i, VarSet(static_cast<VarSet::mask_type>(m)), dims_[i][m]});
    std::sort(out.begin(), out.end(), [](const Entry& a, const Entry& b) {
      return a.i != b.i ? a.i < b.i : lex_less(a.pattern, b.pattern);
    });
    return out;
  }

  friend bool operator==(const CohomologyTable& a, const CohomologyTable& b) {
    return a.ideal_ == b.ideal_ && a.field_ == b.field_ && a.dims_ == b.dims_;
  }

private:
  SquareFreeIdeal ideal_;
  FieldSpec field_;
  std::vector<std::vector<std::size_t>> dims_;
};

struct TableOptions {
  FieldSpec field{};
  Limits limits{};
  // Patterns are independent; > 1 splits them across worker threads that
  // write disjoint slots.
  unsigned threads = 1;
};

inline CohomologyTable local_cohomology_table(const SquareFreeIdeal& I, const TableOptions& opts = {}) {
  const CechLattice lattice(I, opts.limits);
  CohomologyTable table(I, opts.field);
  const int n = I.n();
  const int top = std::min(lattice.r(), n);
  const std::size_t patterns = std::size_t{1} << n;
  const VarSet support = lattice.total_support();

  std::vector<std::vector<std::size_t>> slots(patterns);
  auto work = [&](std::size_t begin, std::size_t stride) {
    for (std::size_t m = begin; m < patterns; m += stride) {
      VarSet N(static_cast<VarSet::mask_type>(m));
      if (!N.empty() && !N.subset_of(support)) continue;
      slots[m] = build_graded_complex(lattice, N).cohomology_dims(opts.field);
    }
  };
  const unsigned threads = std::max(1u, opts.threads);
  if (threads == 1) {
    work(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t, threads);
  }
  for (std::size_t m = 0; m < patterns; ++m) {
    const auto& dims = slots[m];
    for (int i = 0; i < static_cast<int>(dims.size()); ++i) {
      if (dims[i] == 0) continue;
      // Positions above n cannot carry cohomology (Grothendieck); a nonzero
      // value there would be an engine bug.
      if (i > top) throw Error("nonzero Čech cohomology above min(r, n)");
      table.set(i, VarSet(static_cast<VarSet::mask_type>(m)), dims[i]);
    }
  }
  return table;
}

inline CohomologyTable local_cohomology_table(const SquareFreeIdeal& I, FieldSpec field, const Limits& limits = {}) {
  return local_cohomology_table(I, TableOptions{field, limits, 1});
}

// --- Table-level analyses -------------------------------------------------

inline bool is_vanishing(const CohomologyTable& t, int i) { return t.row_is_zero(i); }

// cd(I, S) = max{i : H^i_I(S) ≠ 0}; -1 when every row vanishes.
inline int cohomological_dimension(const CohomologyTable& t) {
  for (int i = t.n(); i >= 0; --i)
    if (!t.row_is_zero(i)) return i;
  return -1;
}

inline bool is_artinian(const CohomologyTable& t, int i) {
  const VarSet all = VarSet::full(t.n());
  const std::size_t patterns = std::size_t{1} << t.n();
  for (std::size_t m = 0; m < patterns; ++m) {
    VarSet N(static_cast<VarSet::mask_type>(m));
    if (N != all && t.dim(i, N) != 0) return false;
  }
  return true;
}

// Largest i with H^i_I(S) not artinian; nullopt when all are artinian.
inline std::optional<int> q_invariant(const CohomologyTable& t) {
  for (int i = t.n(); i >= 0; --i)
    if (!is_artinian(t, i)) return i;
  return std::nullopt;
}

inline bool is_vanishing(const SquareFreeIdeal& I, int i, FieldSpec field = {}, const Limits& limits = {}) {
  return is_vanishing(local_cohomology_table(I, field, limits), i);
}
inline int cohomological_dimension(const SquareFreeIdeal& I, FieldSpec field = {}, const Limits& limits = {}) {
  return cohomological_dimension(local_cohomology_table(I, field, limits));
}
inline bool is_artinian(const SquareFreeIdeal& I, int i, FieldSpec field = {}, const Limits& limits = {}) {
  return is_artinian(local_cohomology_table(I, field, limits), i);
}
inline std::optional<int> q_invariant(const SquareFreeIdeal& I, FieldSpec field = {}, const Limits& limits = {}) {
  return q_invariant(local_cohomology_table(I, field, limits));
}

// --- Multiplication maps --------------------------------------------------

// The map H^i(C(N)) → H^i(C(N ∖ {j})) induced by x_j, with j ∈ N, written
// in the chosen cohomology bases (target_dim × source_dim). Bases are
// cocycle representatives picked greedily modulo boundaries from the kernel
// basis in lexicographic subset order, so the matrix is reproducible.
struct InducedMap {
  int degree = 0;
  int variable = 0;
  VarSet source_pattern;
  VarSet target_pattern;
  std::size_t source_dim = 0;
  std::size_t target_dim = 0;
  Matrix<mpq_class> matrix;
  std::size_t rank = 0;

  bool surjective() const { return rank == target_dim; }
  bool injective() const { return rank == source_dim; }
};

// 0/1 matrix of the inclusion C(src) ⊆ C(tgt) at position k.
inline IntMatrix chain_map_matrix(const GradedComplex& src, const GradedComplex& tgt, int k) {
  const auto& from = src.terms.at(k);
  const auto& to = tgt.terms.at(k);
  IntMatrix m(to.size(), from.size());
  for (std::size_t c = 0; c < from.size(); ++c) {
    auto it = std::find(to.begin(), to.end(), from[c]);
    if (it == to.end()) throw InputError("source term is not active in the target complex");
    m(static_cast<std::size_t>(it - to.begin()), c) = 1;
  }
  return m;
}

namespace detail {

template <typename F>
struct CohomologyBasis {
  std::vector<Vec<F>> boundaries;
  std::vector<Vec<F>> representatives;
  std::size_t ambient = 0;
};

template <typename F>
CohomologyBasis<F> cohomology_basis(const GradedComplex& c, int k, const F& f) {
  CohomologyBasis<F> out;
  out.ambient = c.terms[k].size();
  if (out.ambient == 0) return out;
  std::vector<Vec<F>> cocycles;
  if (k < c.r) {
    cocycles = kernel_basis(to_field(c.differentials[k], f), f);
  } else {
    for (std::size_t e = 0; e < out.ambient; ++e) {
      Vec<F> v(out.ambient, f.zero());
      v[e] = f.one();
      cocycles.push_back(std::move(v));
    }
  }
  if (k > 0) out.boundaries = column_vectors(to_field(c.differentials[k - 1], f), f);

  std::vector<Vec<F>> cols = out.boundaries;
  cols.insert(cols.end(), cocycles.begin(), cocycles.end());
  auto m = from_columns(cols, out.ambient, f);
  for (auto p : rref(m, f))
    if (p >= out.boundaries.size()) out.representatives.push_back(cocycles[p - out.boundaries.size()]);
  return out;
}

template <typename F>
InducedMap induced_map(const GradedComplex& src, const GradedComplex& tgt, int k, const F& f) {
  InducedMap map;
  const auto sb = cohomology_basis(src, k, f);
  const auto tb = cohomology_basis(tgt, k, f);
  map.source_dim = sb.representatives.size();
  map.target_dim = tb.representatives.size();
  map.matrix = Matrix<mpq_class>(map.target_dim, map.source_dim, mpq_class(0));
  if (map.source_dim == 0 || map.target_dim == 0) return map;

  const IntMatrix inclusion = chain_map_matrix(src, tgt, k);
  std::vector<Vec<F>> cols = tb.boundaries;
  cols.insert(cols.end(), tb.representatives.begin(), tb.representatives.end());
  const std::size_t lhs = cols.size();
  for (const auto& z : sb.representatives) {
    Vec<F> image(tb.ambient, f.zero());
    for (std::size_t r = 0; r < inclusion.rows(); ++r)
      for (std::size_t c = 0; c < inclusion.cols(); ++c)
        if (inclusion(r, c) != 0) image[r] = f.add(image[r], z[c]);
    cols.push_back(std::move(image));
  }
  auto m = from_columns(cols, tb.ambient, f);
  const auto pivots = rref(m, f);
  const std::size_t first_rep = tb.boundaries.size();
  FieldMatrix<F> coeffs(map.target_dim, map.source_dim, f.zero());
  for (std::size_t row = 0; row < pivots.size(); ++row) {
    const std::size_t p = pivots[row];
    if (p >= lhs) throw Error("induced map: image is not a cocycle of the target complex");
    if (p < first_rep) continue;
    for (std::size_t s = 0; s < map.source_dim; ++s) coeffs(p - first_rep, s) = m(row, lhs + s);
  }
  for (std::size_t r = 0; r < map.target_dim; ++r)
    for (std::size_t c = 0; c < map.source_dim; ++c) map.matrix(r, c) = f.to_rational(coeffs(r, c));
  auto coeff_copy = coeffs;
  map.rank = rref(coeff_copy, f).size();
  return map;
}

} // namespace detail

inline InducedMap multiplication_map(const CechLattice& lattice, int i, int j, VarSet pattern, FieldSpec field = {}) {
  if (j < 0 || j >= lattice.n()) throw InputError("variable index out of range");
  if (!pattern.contains(j)) {
    throw InputError("invalid pattern: the multiplying variable must be negative in the source degree");
  }
  if (i < 0 || i > lattice.r()) {
    InducedMap zero;
    zero.degree = i;
    zero.variable = j;
    zero.source_pattern = pattern;
    zero.target_pattern = pattern.without(j);
    return zero;
  }
  const GradedComplex src = build_graded_complex(lattice, pattern);
  const GradedComplex tgt = build_graded_complex(lattice, pattern.without(j));
  InducedMap map = with_field(field, [&](const auto& f) { return detail::induced_map(src, tgt, i, f); });
  map.degree = i;
  map.variable = j;
  map.source_pattern = pattern;
  map.target_pattern = pattern.without(j);
  return map;
}

inline InducedMap multiplication_map(const SquareFreeIdeal& I, int i, int j, VarSet pattern, FieldSpec field = {},
                                     const Limits& limits = {}) {
  return multiplication_map(CechLattice(I, limits), i, j, pattern, field);
}

// Is H^i_I(S) --x--> H^i_I(S) onto, for the monomial x ≠ 1?
inline bool is_multiplication_surjective(const CohomologyTable& table, const CechLattice& lattice, int i,
                                         SquareFreeMonomial x) {
  if (x.is_unit()) throw InputError("multiplication by the unit monomial is not a test");
  const std::size_t patterns = std::size_t{1} << table.n();
  for (int j : x.support.elements()) {
    for (std::size_t m = 0; m < patterns; ++m) {
      VarSet N(static_cast<VarSet::mask_type>(m));
      if (!N.contains(j)) continue;
      const std::size_t target = table.dim(i, N.without(j));
      if (target == 0) continue;
      if (table.dim(i, N) < target) return false;
      if (!multiplication_map(lattice, i, j, N, table.field()).surjective()) return false;
    }
  }
  return true;
}

inline bool is_multiplication_surjective(const SquareFreeIdeal& I, int i, SquareFreeMonomial x,
                                         FieldSpec field = {}, const Limits& limits = {}) {
  const CechLattice lattice(I, limits);
  return is_multiplication_surjective(local_cohomology_table(I, field, limits), lattice, i, x);
}

// Divisible by every nonzero monomial: surjectivity for each variable.
inline bool is_divisible(const CohomologyTable& table, const CechLattice& lattice, int i) {
  for (int j = 0; j < table.n(); ++j)
    if (!is_multiplication_surjective(table, lattice, i, SquareFreeMonomial{VarSet::singleton(j)})) return false;
  return true;
}

inline bool is_divisible(const SquareFreeIdeal& I, int i, FieldSpec field = {}, const Limits& limits = {}) {
  const CechLattice lattice(I, limits);
  return is_divisible(local_cohomology_table(I, field, limits), lattice, i);
}

} // namespace loccoh
