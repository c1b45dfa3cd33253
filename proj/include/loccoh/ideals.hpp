#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "loccoh/complex.hpp"
#include "loccoh/error.hpp"
#include "loccoh/varset.hpp"

namespace loccoh {

// Resource guards. Downstream cost grows like 2^n * 2^r, so both are capped.
struct Limits {
  int max_vars = 16;
  int max_generators = 20;
  // Refuse a Čech computation when 2^r * max_k C(r, k) exceeds this.
  std::uint64_t matrix_cell_budget = std::uint64_t{1} << 20;
};

// The ambient polynomial ring k[x_1, ..., x_n], identified by its variable names.
class VariableContext {
public:
  explicit VariableContext(std::vector<std::string> names, const Limits& limits = {})
      : names_(std::move(names)) {
    const int n = static_cast<int>(names_.size());
    if (n < 1) throw InputError("a variable context needs at least one variable");
    if (n > VarSet::kMaxBits - 1) throw CapExceeded("at most 31 variables are representable");
    if (n > limits.max_vars) {
      throw CapExceeded("variable count " + std::to_string(n) + " exceeds cap " +
                        std::to_string(limits.max_vars));
    }
    std::set<std::string_view> seen;
    for (const auto& name : names_) {
      if (name.empty()) throw InputError("variable names must be non-empty");
      for (unsigned char c : name) {
        if (!std::isgraph(c) || c == ',' || c == '*') {
          throw InputError("variable name '" + name + "' contains a non-identifier character");
        }
      }
      if (!seen.insert(name).second) throw InputError("duplicate variable name '" + name + "'");
    }
  }

  // x1, ..., xn
  static std::shared_ptr<const VariableContext> standard(int n, const Limits& limits = {}) {
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    return std::make_shared<const VariableContext>(std::move(names), limits);
  }

  int n() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int i) const { return names_.at(i); }

  int index_of(std::string_view name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) throw InputError("unknown variable '" + std::string(name) + "'");
    return static_cast<int>(it - names_.begin());
  }

  VarSet set_of(const std::vector<std::string>& vars) const {
    VarSet s;
    for (const auto& v : vars) s = s.with(index_of(v));
    return s;
  }

  std::vector<std::string> names_of(VarSet s) const {
    std::vector<std::string> out;
    for (int i : s.elements()) out.push_back(names_[i]);
    return out;
  }

  friend bool operator==(const VariableContext&, const VariableContext&) = default;

private:
  std::vector<std::string> names_;
};

using ContextPtr = std::shared_ptr<const VariableContext>;

// A product of distinct variables; the empty support is the unit monomial 1.
struct SquareFreeMonomial {
  VarSet support;
  bool is_unit() const { return support.empty(); }
  friend bool operator==(SquareFreeMonomial, SquareFreeMonomial) = default;
};

// The prime ideal generated by a nonempty set of variables.
class CoordinatePrime {
public:
  explicit CoordinatePrime(VarSet variables) : vars_(variables) {
    if (vars_.empty()) throw InputError("a coordinate prime needs at least one variable");
  }
  VarSet variables() const { return vars_; }
  int height() const { return vars_.size(); }
  friend bool operator==(CoordinatePrime, CoordinatePrime) = default;

private:
  VarSet vars_;
};

// A square-free monomial ideal, stored by its minimal generators in
// lexicographic order. No generator divides another. The empty generator
// list is the zero ideal; the single generator 1 is the unit ideal.
class SquareFreeIdeal {
public:
  SquareFreeIdeal(ContextPtr ctx, std::vector<VarSet> generators) : ctx_(std::move(ctx)) {
    if (!ctx_) throw InputError("missing variable context");
    for (VarSet g : generators) {
      if (!g.subset_of(VarSet::full(ctx_->n()))) {
        throw InputError("generator uses a variable outside the context");
      }
    }
    gens_ = minimize_antichain(std::move(generators));
  }

  static SquareFreeIdeal zero(ContextPtr ctx) { return {std::move(ctx), {}}; }
  static SquareFreeIdeal unit(ContextPtr ctx) { return {std::move(ctx), {VarSet{}}}; }
  static SquareFreeIdeal maximal(ContextPtr ctx) {
    std::vector<VarSet> gens;
    for (int i = 0; i < ctx->n(); ++i) gens.push_back(VarSet::singleton(i));
    return {std::move(ctx), std::move(gens)};
  }
  static SquareFreeIdeal prime(ContextPtr ctx, CoordinatePrime p) {
    std::vector<VarSet> gens;
    for (int i : p.variables().elements()) gens.push_back(VarSet::singleton(i));
    return {std::move(ctx), std::move(gens)};
  }

  const ContextPtr& context() const { return ctx_; }
  int n() const { return ctx_->n(); }
  const std::vector<VarSet>& generators() const { return gens_; }
  int generator_count() const { return static_cast<int>(gens_.size()); }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().empty(); }
  bool is_proper() const { return !is_unit(); }

  // Union of all generator supports.
  VarSet support() const {
    VarSet s;
    for (VarSet g : gens_) s = s | g;
    return s;
  }

  bool contains(SquareFreeMonomial m) const {
    return std::any_of(gens_.begin(), gens_.end(), [&](VarSet g) { return g.subset_of(m.support); });
  }

  friend bool operator==(const SquareFreeIdeal& a, const SquareFreeIdeal& b) {
    return *a.ctx_ == *b.ctx_ && a.gens_ == b.gens_;
  }

private:
  ContextPtr ctx_;
  std::vector<VarSet> gens_;
};

namespace detail {

inline void require_same_context(const SquareFreeIdeal& a, const SquareFreeIdeal& b) {
  if (a.context() != b.context() && !(*a.context() == *b.context())) throw ContextMismatch();
}

inline void require_proper_nonzero(const SquareFreeIdeal& I, const char* what) {
  if (I.is_zero()) throw DegenerateIdeal(std::string(what) + ": the zero ideal is not allowed");
  if (I.is_unit()) throw DegenerateIdeal(std::string(what) + ": the unit ideal is not allowed");
}

inline void require_proper(const SquareFreeIdeal& I, const char* what) {
  if (I.is_unit()) throw DegenerateIdeal(std::string(what) + ": the unit ideal is not allowed");
}

} // namespace detail

// I ∩ J: generated by the lcms (support unions) of generator pairs.
inline SquareFreeIdeal intersect(const SquareFreeIdeal& I, const SquareFreeIdeal& J) {
  detail::require_same_context(I, J);
  std::vector<VarSet> gens;
  gens.reserve(I.generators().size() * J.generators().size());
  for (VarSet g : I.generators())
    for (VarSet h : J.generators()) gens.push_back(g | h);
  return {I.context(), std::move(gens)};
}

inline SquareFreeIdeal sum(const SquareFreeIdeal& I, const SquareFreeIdeal& J) {
  detail::require_same_context(I, J);
  std::vector<VarSet> gens = I.generators();
  gens.insert(gens.end(), J.generators().begin(), J.generators().end());
  return {I.context(), std::move(gens)};
}

// Intersection of the coordinate primes on the given variable sets.
inline SquareFreeIdeal intersection_of_primes(ContextPtr ctx, const std::vector<VarSet>& primes) {
  if (primes.empty()) return SquareFreeIdeal::unit(std::move(ctx));
  SquareFreeIdeal acc = SquareFreeIdeal::prime(ctx, CoordinatePrime(primes.front()));
  for (std::size_t i = 1; i < primes.size(); ++i) {
    acc = intersect(acc, SquareFreeIdeal::prime(ctx, CoordinatePrime(primes[i])));
  }
  return acc;
}

// Minimal primes as the minimal transversals of the generator hypergraph.
// Berge-style incremental expansion: after processing each edge, keep only
// the minimal partial transversals. Returned in lexicographic order.
inline std::vector<CoordinatePrime> minimal_primes(const SquareFreeIdeal& I, const Limits& limits = {}) {
  detail::require_proper_nonzero(I, "minimal_primes");
  if (I.generator_count() > limits.max_generators) {
    throw CapExceeded("generator count " + std::to_string(I.generator_count()) + " exceeds cap " +
                      std::to_string(limits.max_generators));
  }
  std::vector<VarSet> partial{VarSet{}};
  for (VarSet edge : I.generators()) {
    std::vector<VarSet> next;
    for (VarSet t : partial) {
      if (t.intersects(edge)) {
        next.push_back(t);
      } else {
        for (int v : edge.elements()) next.push_back(t.with(v));
      }
    }
    partial = minimize_antichain(std::move(next));
  }
  std::vector<CoordinatePrime> out;
  out.reserve(partial.size());
  for (VarSet t : partial) out.emplace_back(t);
  return out;
}

// True iff the radical of I is the maximal ideal; I is radical, so this
// means every variable is a generator.
inline bool is_m_primary(const SquareFreeIdeal& I) {
  detail::require_proper(I, "is_m_primary");
  VarSet singles;
  for (VarSet g : I.generators())
    if (g.size() == 1) singles = singles | g;
  return singles == VarSet::full(I.n());
}

// Δ = {F ⊆ [n] : no generator support lies in F}, found by scanning all
// subsets and keeping the maximal faces. Independent of minimal_primes.
inline SimplicialComplex stanley_reisner(const SquareFreeIdeal& I) {
  detail::require_proper(I, "stanley_reisner");
  const int n = I.n();
  const auto& gens = I.generators();
  auto is_face = [&](VarSet F) {
    return std::none_of(gens.begin(), gens.end(), [&](VarSet g) { return g.subset_of(F); });
  };
  std::vector<VarSet> facets;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t m = 0; m < total; ++m) {
    VarSet F(static_cast<VarSet::mask_type>(m));
    if (!is_face(F)) continue;
    bool maximal = true;
    for (int j = 0; j < n && maximal; ++j) {
      if (!F.contains(j) && is_face(F.with(j))) maximal = false;
    }
    if (maximal) facets.push_back(F);
  }
  return SimplicialComplex::from_facets(n, std::move(facets));
}

// Krull dimension of S/I: the largest facet size of the Stanley-Reisner complex.
inline int dim_quotient(const SquareFreeIdeal& I) {
  detail::require_proper(I, "dim_quotient");
  int d = 0;
  const auto delta = stanley_reisner(I);
  for (VarSet f : delta.facets()) d = std::max(d, f.size());
  return d;
}

// Smallest height of a minimal prime; 0 for the zero ideal.
inline int height(const SquareFreeIdeal& I, const Limits& limits = {}) {
  detail::require_proper(I, "height");
  if (I.is_zero()) return 0;
  int h = I.n();
  for (const auto& p : minimal_primes(I, limits)) h = std::min(h, p.height());
  return h;
}

// All minimal primes share one height.
inline bool is_unmixed(const SquareFreeIdeal& I, const Limits& limits = {}) {
  auto primes = minimal_primes(I, limits);
  return std::all_of(primes.begin(), primes.end(),
                     [&](const CoordinatePrime& p) { return p.height() == primes.front().height(); });
}

} // namespace loccoh
