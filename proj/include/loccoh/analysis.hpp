#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "loccoh/cech.hpp"
#include "loccoh/graphs.hpp"
#include "loccoh/ideals.hpp"
#include "loccoh/simplicial.hpp"

namespace loccoh {

struct HypothesisCheck {
  std::string name;
  bool holds = false;
  std::string evidence;
  // Evaluated on the equal-characteristic quotient models S/q rather than
  // on a mixed-characteristic ring.
  bool model_level = false;
  // True when the check carries no information beyond another hypothesis.
  bool vacuous = false;
};

struct SvtVerdicts {
  bool connected = false;
  bool vanishing_top_minus_one = false;
  bool agreement = false;
  // dim(S/I) ≥ 1; for m-primary I the equivalence is out of its range.
  bool applicable = false;
  int cd = -1;
  std::optional<int> q;
  int depth = 0;
  int dim_quotient = 0;
  int height = 0;
  bool hlv = false;
  bool grade = false;
};

struct AnalysisReport {
  SquareFreeIdeal ideal;
  FieldSpec field;
  std::vector<CoordinatePrime> minimal_primes;
  std::vector<HypothesisCheck> hypotheses;
  SvtVerdicts verdicts;
  std::map<std::string, double> timings_ms;
};

// Hartshorne-Lichtenbaum sentinel: H^n_I(S) = 0 exactly when I is not m-primary.
inline bool hlv_check(const CohomologyTable& t) {
  return is_vanishing(t, t.n()) == !is_m_primary(t.ideal());
}

// Grade sentinel: rows below height(I) vanish and row height(I) does not.
inline bool grade_check(const CohomologyTable& t, const Limits& limits = {}) {
  const int h = height(t.ideal(), limits);
  for (int i = 0; i < h; ++i)
    if (!t.row_is_zero(i)) return false;
  return !t.row_is_zero(h);
}

inline bool hlv_check(const SquareFreeIdeal& I, FieldSpec field = {}, const Limits& limits = {}) {
  return hlv_check(local_cohomology_table(I, field, limits));
}
inline bool grade_check(const SquareFreeIdeal& I, FieldSpec field = {}, const Limits& limits = {}) {
  return grade_check(local_cohomology_table(I, field, limits), limits);
}

// Per pattern N, exactness of
//   ... → H^i_{I+J} → H^i_I ⊕ H^i_J → H^i_{I∩J} → H^{i+1}_{I+J} → ...
// forces Σ_i (-1)^i (h_{I+J} - h_I - h_J + h_{I∩J}) = 0.
inline bool mayer_vietoris_check(const CohomologyTable& tI, const CohomologyTable& tJ, const CohomologyTable& tSum,
                                 const CohomologyTable& tMeet) {
  const int n = tI.n();
  const std::size_t patterns = std::size_t{1} << n;
  for (std::size_t m = 0; m < patterns; ++m) {
    VarSet N(static_cast<VarSet::mask_type>(m));
    std::int64_t alt = 0;
    for (int i = 0; i <= n; ++i) {
      const auto term = static_cast<std::int64_t>(tSum.dim(i, N)) - static_cast<std::int64_t>(tI.dim(i, N)) -
                        static_cast<std::int64_t>(tJ.dim(i, N)) + static_cast<std::int64_t>(tMeet.dim(i, N));
      alt += (i % 2 == 0) ? term : -term;
    }
    if (alt != 0) return false;
  }
  return true;
}

inline bool mayer_vietoris_check(const SquareFreeIdeal& I, const SquareFreeIdeal& J, FieldSpec field = {},
                                 const Limits& limits = {}) {
  detail::require_same_context(I, J);
  const SquareFreeIdeal s = sum(I, J), meet = intersect(I, J);
  for (const auto* ideal : {&I, &J, &s, &meet}) detail::require_proper_nonzero(*ideal, "mayer_vietoris_check");
  return mayer_vietoris_check(local_cohomology_table(I, field, limits), local_cohomology_table(J, field, limits),
                              local_cohomology_table(s, field, limits), local_cohomology_table(meet, field, limits));
}

namespace detail {

class Stopwatch {
public:
  double lap_ms() {
    const auto now = std::chrono::steady_clock::now();
    const double ms = std::chrono::duration<double, std::milli>(now - last_).count();
    last_ = now;
    return ms;
  }

private:
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

inline std::string join_ints(const std::vector<int>& v) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << ']';
  return out.str();
}

} // namespace detail

// Evaluates both sides of the second vanishing theorem on S/I together with
// its hypotheses and the sentinel checks. The table may be supplied (e.g.
// from a cache); otherwise it is computed.
inline AnalysisReport svt_check(const SquareFreeIdeal& I, const TableOptions& opts = {},
                                const CohomologyTable* precomputed = nullptr) {
  detail::require_proper_nonzero(I, "svt_check");
  detail::Stopwatch clock;
  AnalysisReport rep{I, opts.field, minimal_primes(I, opts.limits), {}, {}, {}};
  const int n = I.n();
  auto& v = rep.verdicts;

  v.connected = punctured_spectrum_connected(I, opts.limits);
  v.dim_quotient = dim_quotient(I);
  v.height = height(I, opts.limits);
  rep.timings_ms["graphs"] = clock.lap_ms();

  std::optional<CohomologyTable> computed;
  if (!precomputed) computed.emplace(local_cohomology_table(I, opts));
  const CohomologyTable& table = precomputed ? *precomputed : *computed;
  rep.timings_ms["cohomology_table"] = clock.lap_ms();

  v.vanishing_top_minus_one = n >= 1 && is_vanishing(table, n - 1);
  v.cd = cohomological_dimension(table);
  v.q = q_invariant(table);
  v.hlv = hlv_check(table);
  v.grade = grade_check(table, opts.limits);
  v.applicable = v.dim_quotient >= 1;
  v.agreement = v.vanishing_top_minus_one == (v.connected && v.dim_quotient >= 2);
  v.depth = depth_quotient(I, opts.field);
  rep.timings_ms["analyses"] = clock.lap_ms();

  rep.hypotheses.push_back({"dim_quotient_positive", v.applicable,
                            "dim(S/I) = " + std::to_string(v.dim_quotient), false, false});
  rep.hypotheses.push_back({"dim_quotient_at_least_2", v.dim_quotient >= 2,
                            "dim(S/I) = " + std::to_string(v.dim_quotient), false, false});

  std::vector<int> prime_dims;
  std::vector<int> h2_lengths;
  bool dims_ok = true, finite_ok = true;
  for (const auto& q : rep.minimal_primes) {
    prime_dims.push_back(n - q.height());
    dims_ok = dims_ok && n - q.height() >= 3;
    const auto len = local_cohomology_length(SquareFreeIdeal::prime(I.context(), q), 2, opts.field);
    finite_ok = finite_ok && len.has_value();
    h2_lengths.push_back(len ? static_cast<int>(*len) : -1);
  }
  rep.hypotheses.push_back({"prime_quotients_dim_at_least_3", dims_ok,
                            "dim(S/q) per minimal prime = " + detail::join_ints(prime_dims), true, false});
  // S/q is a polynomial ring, so H^2_m(S/q) is 0 unless dim(S/q) = 2. Once the
  // dimension hypothesis holds this check adds nothing.
  rep.hypotheses.push_back({"prime_quotients_h2_finite_length", finite_ok,
                            "length of H^2_m(S/q) per minimal prime (-1 = infinite) = " +
                                detail::join_ints(h2_lengths),
                            true, dims_ok});
  rep.timings_ms["hypotheses"] = clock.lap_ms();
  return rep;
}

// --- Randomized sweep -----------------------------------------------------

// Random square-free ideal: 1..generator_bound supports of size 2..n-1
// (1..n-1 when n ≤ 2), minimized.
inline SquareFreeIdeal random_ideal(const ContextPtr& ctx, int generator_bound, std::mt19937_64& rng) {
  const int n = ctx->n();
  const int lo = n <= 2 ? 1 : 2;
  const int hi = std::max(lo, n - 1);
  std::uniform_int_distribution<int> count(1, std::max(1, generator_bound));
  std::uniform_int_distribution<int> size(lo, hi);
  std::vector<VarSet> gens;
  const int g = count(rng);
  for (int k = 0; k < g; ++k) {
    std::vector<int> vars(n);
    for (int i = 0; i < n; ++i) vars[i] = i;
    std::shuffle(vars.begin(), vars.end(), rng);
    VarSet s;
    const int sz = std::min(size(rng), n);
    for (int i = 0; i < sz; ++i) s = s.with(vars[i]);
    gens.push_back(s);
  }
  return {ctx, std::move(gens)};
}

struct SweepSummary {
  int n = 0;
  int requested = 0;
  std::uint64_t seed = 0;
  std::string field;
  int trials = 0;
  int agreements = 0;
  int failures = 0;
  int skipped = 0;
  int planted = 0;
  int planted_agreements = 0;
  std::optional<SquareFreeIdeal> first_counterexample;
};

namespace detail {

inline bool svt_sides_agree(const SquareFreeIdeal& I, const TableOptions& opts) {
  const bool vanishing = is_vanishing(local_cohomology_table(I, opts), I.n() - 1);
  const bool rhs = dim_quotient(I) >= 2 && punctured_spectrum_connected(I, opts.limits);
  return vanishing == rhs;
}

} // namespace detail

// Checks H^{n-1}_I(S) = 0 ⟺ (dim S/I ≥ 2 ∧ Spec°(S/I) connected) on `trials`
// seeded random ideals plus any planted ones. Ideals with dim(S/I) = 0 are
// skipped and redrawn.
inline SweepSummary random_svt_sweep(int n, int generator_bound, int trials, std::uint64_t seed,
                                     const TableOptions& opts = {},
                                     std::span<const SquareFreeIdeal> planted = {}) {
  if (n < 2) throw InputError("sweep needs at least two variables");
  if (trials < 0) throw InputError("trial count must be nonnegative");
  auto ctx = VariableContext::standard(n, opts.limits);
  std::mt19937_64 rng(seed);
  SweepSummary out;
  out.n = n;
  out.requested = trials;
  out.seed = seed;
  out.field = opts.field.label();

  auto record = [&](const SquareFreeIdeal& I) {
    const bool ok = detail::svt_sides_agree(I, opts);
    if (ok) {
      ++out.agreements;
    } else {
      ++out.failures;
      if (!out.first_counterexample) out.first_counterexample = I;
    }
    return ok;
  };

  for (const auto& I : planted) {
    if (I.n() != n) throw InputError("planted ideal lives in a different number of variables");
    ++out.planted;
    if (record(I)) ++out.planted_agreements;
  }

  const long max_draws = 50L * std::max(trials, 1);
  long draws = 0;
  while (out.trials < trials && draws < max_draws) {
    ++draws;
    SquareFreeIdeal I = random_ideal(ctx, generator_bound, rng);
    if (I.is_zero() || I.is_unit() || dim_quotient(I) == 0) {
      ++out.skipped;
      continue;
    }
    ++out.trials;
    record(I);
  }
  return out;
}

} // namespace loccoh
