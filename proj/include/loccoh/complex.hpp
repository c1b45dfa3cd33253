#pragma once

#include <algorithm>
#include <vector>

#include "loccoh/error.hpp"
#include "loccoh/varset.hpp"

namespace loccoh {

// A finite simplicial complex on the vertex set {0, ..., n-1}, stored by its
// facets. Two degenerate complexes are kept apart:
//   VOID  - no faces at all (facet list empty),
//   EMPTY - only the empty face (facet list = {∅}).
class SimplicialComplex {
public:
  SimplicialComplex() = default;

  static SimplicialComplex void_complex(int n) { return SimplicialComplex(n, {}); }
  static SimplicialComplex empty_complex(int n) { return SimplicialComplex(n, {VarSet{}}); }
  static SimplicialComplex simplex(int n, VarSet vertices) { return SimplicialComplex(n, {vertices}); }

  // Facets may be redundant; they are minimized to the maximal ones.
  static SimplicialComplex from_facets(int n, std::vector<VarSet> facets) {
    for (VarSet f : facets) {
      if (!f.subset_of(VarSet::full(n))) throw InputError("facet uses a vertex outside the ambient set");
    }
    return SimplicialComplex(n, minimize_antichain(std::move(facets), /*keep_minimal=*/false));
  }

  int n() const { return n_; }
  const std::vector<VarSet>& facets() const { return facets_; }
  bool is_void() const { return facets_.empty(); }
  bool is_empty_complex() const { return facets_.size() == 1 && facets_.front().empty(); }

  // Largest face size minus one; -1 for EMPTY, -2 for VOID.
  int dimension() const {
    int d = -2;
    for (VarSet f : facets_) d = std::max(d, f.size() - 1);
    return d;
  }

  bool contains(VarSet face) const {
    return std::any_of(facets_.begin(), facets_.end(), [&](VarSet f) { return face.subset_of(f); });
  }

  // Faces with exactly `size` vertices, in lexicographic order. Only the
  // requested size is enumerated.
  std::vector<VarSet> faces_of_size(int size) const {
    std::vector<VarSet> out;
    if (size < 0) return out;
    for (VarSet facet : facets_) {
      if (facet.size() < size) continue;
      auto verts = facet.elements();
      for (VarSet pick : combinations(static_cast<int>(verts.size()), size)) {
        VarSet face;
        for (int p : pick.elements()) face = face.with(verts[p]);
        out.push_back(face);
      }
    }
    std::sort(out.begin(), out.end(), [](VarSet a, VarSet b) { return a.bits() < b.bits(); });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    std::sort(out.begin(), out.end(), LexLess{});
    return out;
  }

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

private:
  SimplicialComplex(int n, std::vector<VarSet> facets) : n_(n), facets_(std::move(facets)) {}

  int n_ = 0;
  std::vector<VarSet> facets_;
};

} // namespace loccoh
