#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "loccoh/complex.hpp"
#include "loccoh/ideals.hpp"
#include "loccoh/linalg.hpp"

namespace loccoh {

// Reduced cohomology dimensions by degree d >= -1. Only nonzero degrees are stored.
struct CohomologyVector {
  std::map<int, std::size_t> dims;

  std::size_t operator[](int d) const {
    auto it = dims.find(d);
    return it == dims.end() ? 0 : it->second;
  }
  bool is_zero() const { return dims.empty(); }
  std::int64_t euler_characteristic() const {
    std::int64_t chi = 0;
    for (auto [d, v] : dims) chi += (d % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(v);
    return chi;
  }
  friend bool operator==(const CohomologyVector&, const CohomologyVector&) = default;
};

// lk_Δ(F) = {G : G ∩ F = ∅, G ∪ F ∈ Δ}.
inline SimplicialComplex link(const SimplicialComplex& delta, VarSet face) {
  if (!delta.contains(face)) throw InputError("link: the given set is not a face of the complex");
  std::vector<VarSet> facets;
  for (VarSet f : delta.facets())
    if (face.subset_of(f)) facets.push_back(f - face);
  return SimplicialComplex::from_facets(delta.n(), std::move(facets));
}

// Σ over faces F (including ∅) of (-1)^{|F|-1}; zero for VOID.
inline std::int64_t reduced_euler_characteristic(const SimplicialComplex& delta) {
  if (delta.is_void()) return 0;
  std::int64_t chi = 0;
  for (int s = 0; s <= delta.dimension() + 1; ++s) {
    const auto count = static_cast<std::int64_t>(delta.faces_of_size(s).size());
    chi += ((s - 1) % 2 == 0 ? 1 : -1) * count;
  }
  return chi;
}

// Coboundary δ: C^{d} -> C^{d+1} where `lower` are the faces with d+1
// vertices and `upper` those with d+2. (δφ)(G) = Σ_{v∈G} (-1)^{pos(v,G)} φ(G∖v).
inline IntMatrix coboundary_matrix(const std::vector<VarSet>& lower, const std::vector<VarSet>& upper) {
  std::unordered_map<VarSet::mask_type, std::size_t> index;
  for (std::size_t c = 0; c < lower.size(); ++c) index.emplace(lower[c].bits(), c);
  IntMatrix m(upper.size(), lower.size());
  for (std::size_t r = 0; r < upper.size(); ++r) {
    for (int v : upper[r].elements()) {
      auto it = index.find(upper[r].without(v).bits());
      if (it == index.end()) continue;
      m(r, it->second) = (upper[r].rank_of(v) % 2 == 0) ? 1 : -1;
    }
  }
  return m;
}

// dim H̃^d(Δ; k) for every d, by exact ranks of the coboundary maps.
// Conventions: H̃^{-1}(EMPTY) = k, VOID has no cohomology at all.
inline CohomologyVector reduced_cohomology(const SimplicialComplex& delta, FieldSpec field = {}) {
  CohomologyVector out;
  if (delta.is_void()) return out;
  const int top = delta.dimension();
  std::vector<VarSet> current = delta.faces_of_size(0);
  std::size_t rank_in = 0;
  for (int d = -1; d <= top; ++d) {
    std::vector<VarSet> next = delta.faces_of_size(d + 2);
    const std::size_t rank_out = next.empty() ? 0 : rank(coboundary_matrix(current, next), field);
    const std::size_t h = current.size() - rank_out - rank_in;
    if (h != 0) out.dims[d] = h;
    rank_in = rank_out;
    current = std::move(next);
  }
  return out;
}

// Hochster's formula for the local cohomology of the Stanley-Reisner ring:
//   dim H^i_m(S/I)_a = dim H̃^{i-|F|-1}(lk_Δ F; k)   where F = {j : a_j < 0},
// when a ≤ 0 and F ∈ Δ, and 0 otherwise.
class HochsterTable {
public:
  struct Entry {
    int i;
    VarSet face;
    std::size_t dim;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  HochsterTable(int n, std::vector<Entry> entries) : n_(n), entries_(std::move(entries)) {
    std::sort(entries_.begin(), entries_.end(), [](const Entry& a, const Entry& b) {
      return a.i != b.i ? a.i < b.i : lex_less(a.face, b.face);
    });
  }

  int n() const { return n_; }
  // Nonzero entries, sorted by (i, face).
  const std::vector<Entry>& entries() const { return entries_; }

  std::size_t entry(int i, VarSet face) const {
    for (const auto& e : entries_)
      if (e.i == i && e.face == face) return e.dim;
    return 0;
  }

  bool row_is_zero(int i) const {
    return std::none_of(entries_.begin(), entries_.end(), [&](const Entry& e) { return e.i == i; });
  }

  // Dimension of H^i_m(S/I) in multidegree a.
  std::size_t dim_at(int i, std::span<const int> degree) const {
    VarSet neg;
    for (std::size_t j = 0; j < degree.size(); ++j) {
      if (degree[j] > 0) return 0;
      if (degree[j] < 0) neg = neg.with(static_cast<int>(j));
    }
    return entry(i, neg);
  }

private:
  int n_;
  std::vector<Entry> entries_;
};

inline HochsterTable hochster_table(const SquareFreeIdeal& I, FieldSpec field = {}) {
  detail::require_proper(I, "hochster_table");
  const SimplicialComplex delta = stanley_reisner(I);
  std::vector<HochsterTable::Entry> entries;
  for (int s = 0; s <= delta.dimension() + 1; ++s) {
    for (VarSet face : delta.faces_of_size(s)) {
      const CohomologyVector cv = reduced_cohomology(link(delta, face), field);
      for (auto [d, dim] : cv.dims) entries.push_back({d + s + 1, face, dim});
    }
  }
  return HochsterTable(I.n(), std::move(entries));
}

// depth(S/I) = min{i : H^i_m(S/I) ≠ 0}.
inline int depth_quotient(const SquareFreeIdeal& I, FieldSpec field = {}) {
  const auto table = hochster_table(I, field);
  int depth = I.n();
  for (const auto& e : table.entries()) depth = std::min(depth, e.i);
  return depth;
}

// H^i_m(S/I) has finite length iff only the F = ∅ column is nonzero in row i;
// every nonempty face contributes infinitely many multidegrees.
inline bool finite_length(const SquareFreeIdeal& I, int i, FieldSpec field = {}) {
  const auto table = hochster_table(I, field);
  return std::none_of(table.entries().begin(), table.entries().end(),
                      [&](const auto& e) { return e.i == i && !e.face.empty(); });
}

// The length of H^i_m(S/I) when it is finite.
inline std::optional<std::size_t> local_cohomology_length(const SquareFreeIdeal& I, int i,
                                                          FieldSpec field = {}) {
  const auto table = hochster_table(I, field);
  std::size_t length = 0;
  for (const auto& e : table.entries()) {
    if (e.i != i) continue;
    if (!e.face.empty()) return std::nullopt;
    length += e.dim;
  }
  return length;
}

} // namespace loccoh
