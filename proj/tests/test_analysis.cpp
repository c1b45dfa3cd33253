#include <gtest/gtest.h>

#include <random>

#include "loccoh/analysis.hpp"
#include "loccoh/io.hpp"

using namespace loccoh;

namespace {

SquareFreeIdeal fixture(const std::string& name, const Limits& limits = {}) {
  return load_ideal(std::string(LOCCOH_FIXTURE_DIR) + "/" + name, limits);
}

const HypothesisCheck& hypothesis(const AnalysisReport& rep, const std::string& name) {
  for (const auto& h : rep.hypotheses)
    if (h.name == name) return h;
  throw std::runtime_error("missing hypothesis " + name);
}

} // namespace

TEST(Svt, TwoBlockExample) {
  const auto rep = svt_check(fixture("ex43.json"));
  EXPECT_TRUE(rep.verdicts.connected);
  EXPECT_TRUE(rep.verdicts.vanishing_top_minus_one);
  EXPECT_TRUE(rep.verdicts.agreement);
  EXPECT_EQ(rep.verdicts.dim_quotient, 5);
  EXPECT_TRUE(hypothesis(rep, "prime_quotients_dim_at_least_3").holds);
  EXPECT_TRUE(hypothesis(rep, "prime_quotients_dim_at_least_3").model_level);
  const auto& fl = hypothesis(rep, "prime_quotients_h2_finite_length");
  EXPECT_TRUE(fl.holds);
  EXPECT_NE(fl.evidence.find("[0,0]"), std::string::npos);
}

TEST(Svt, DisconnectedBlocks) {
  const auto rep = svt_check(fixture("ex46.json"));
  EXPECT_FALSE(rep.verdicts.connected);
  EXPECT_FALSE(rep.verdicts.vanishing_top_minus_one);
  EXPECT_TRUE(rep.verdicts.agreement);
}

TEST(Svt, ThreePairs) {
  const auto rep = svt_check(fixture("ex47.json"));
  EXPECT_TRUE(rep.verdicts.connected);
  EXPECT_TRUE(rep.verdicts.vanishing_top_minus_one);
  EXPECT_TRUE(rep.verdicts.agreement);
  EXPECT_GE(rep.verdicts.depth, 2);
}

TEST(Svt, ReducedInterlockedBlocks) {
  const auto rep = svt_check(fixture("ex45_reduced.json"));
  EXPECT_TRUE(rep.verdicts.connected);
  EXPECT_TRUE(rep.verdicts.vanishing_top_minus_one);
  EXPECT_TRUE(rep.verdicts.agreement);
}

TEST(Svt, FullInterlockedBlocksRefusedByDefaultBudget) {
  EXPECT_THROW(svt_check(fixture("ex45_n3.json")), CapExceeded);
}

TEST(Svt, DimensionZeroIsNotApplicable) {
  const auto rep = svt_check(SquareFreeIdeal::maximal(VariableContext::standard(2)));
  EXPECT_FALSE(rep.verdicts.applicable);
  EXPECT_FALSE(hypothesis(rep, "dim_quotient_positive").holds);
}

TEST(Sentinels, Examples) {
  EXPECT_TRUE(hlv_check(SquareFreeIdeal::maximal(VariableContext::standard(3))));
  EXPECT_TRUE(hlv_check(SquareFreeIdeal(VariableContext::standard(3), {VarSet::of({0})})));
  EXPECT_TRUE(hlv_check(fixture("ex43.json")));

  auto c4 = VariableContext::standard(4);
  EXPECT_TRUE(grade_check(SquareFreeIdeal::prime(c4, CoordinatePrime(VarSet::of({0, 1})))));
  EXPECT_TRUE(grade_check(fixture("two_planes.json")));
  EXPECT_TRUE(grade_check(SquareFreeIdeal::maximal(c4)));
}

TEST(Sentinels, GradeDetectsCorruptedTable) {
  const auto I = fixture("two_planes.json");
  auto t = local_cohomology_table(I);
  EXPECT_TRUE(grade_check(t));
  t.set(1, VarSet::of({0}), 1);
  EXPECT_FALSE(grade_check(t));
}

TEST(MayerVietoris, Examples) {
  auto ctx = std::make_shared<const VariableContext>(std::vector<std::string>{"x", "y"});
  EXPECT_TRUE(mayer_vietoris_check(SquareFreeIdeal(ctx, {VarSet::of({0})}), SquareFreeIdeal(ctx, {VarSet::of({1})})));

  const auto I43 = fixture("ex43.json");
  const auto primes43 = minimal_primes(I43);
  EXPECT_TRUE(mayer_vietoris_check(SquareFreeIdeal::prime(I43.context(), primes43[0]),
                                   SquareFreeIdeal::prime(I43.context(), primes43[1])));
}

TEST(MayerVietoris, DisconnectedBlocksTopMinusOneIsInjectiveHull) {
  const auto I46 = fixture("ex46.json");
  const auto primes = minimal_primes(I46);
  const auto q1 = SquareFreeIdeal::prime(I46.context(), primes[0]);
  const auto q2 = SquareFreeIdeal::prime(I46.context(), primes[1]);
  EXPECT_TRUE(mayer_vietoris_check(q1, q2));

  const auto meet = local_cohomology_table(intersect(q1, q2));
  const auto m = local_cohomology_table(sum(q1, q2));
  for (std::uint32_t p = 0; p < 64; ++p) EXPECT_EQ(meet.dim(5, VarSet(p)), m.dim(6, VarSet(p)));
  ASSERT_EQ(meet.entries().size(), 3u);
  EXPECT_EQ(meet.dim(5, VarSet::full(6)), 1u);
}

TEST(MayerVietoris, DetectsCorruption) {
  const auto I = fixture("two_planes.json");
  const auto primes = minimal_primes(I);
  const auto P = SquareFreeIdeal::prime(I.context(), primes[0]);
  const auto Q = SquareFreeIdeal::prime(I.context(), primes[1]);
  const auto tP = local_cohomology_table(P), tQ = local_cohomology_table(Q);
  const auto tS = local_cohomology_table(sum(P, Q));
  auto tM = local_cohomology_table(intersect(P, Q));
  EXPECT_TRUE(mayer_vietoris_check(tP, tQ, tS, tM));
  tM.set(3, VarSet::full(4), 2);
  EXPECT_FALSE(mayer_vietoris_check(tP, tQ, tS, tM));
}

TEST(Sentinels, HoldOnRandomInstances) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 4;
    auto ctx = VariableContext::standard(n);
    const auto I = random_ideal(ctx, 5, rng);
    const auto J = random_ideal(ctx, 5, rng);
    EXPECT_TRUE(hlv_check(I));
    EXPECT_TRUE(grade_check(I));
    EXPECT_TRUE(mayer_vietoris_check(I, J));
  }
}

TEST(Divisibility, ArtinianRowsOfHeightThreePrimes) {
  const auto I = fixture("ex43.json");
  for (const auto& q : minimal_primes(I)) {
    const auto Q = SquareFreeIdeal::prime(I.context(), q);
    const auto t = local_cohomology_table(Q);
    if (!is_artinian(t, 3)) {
      // q ≠ m, so H^3_q(S) is nonzero off the full pattern and the property is skipped.
      EXPECT_FALSE(t.row_is_zero(3));
      continue;
    }
    EXPECT_TRUE(is_divisible(Q, 3));
  }
  // The m-primary case is artinian and divisible.
  const auto m = SquareFreeIdeal::maximal(VariableContext::standard(4));
  EXPECT_TRUE(is_artinian(m, 4));
  EXPECT_TRUE(is_divisible(m, 4));
}

TEST(Sweep, FourVariablesHundredTrials) {
  const auto s = random_svt_sweep(4, 5, 100, 1);
  EXPECT_EQ(s.trials, 100);
  EXPECT_EQ(s.agreements, 100);
  EXPECT_EQ(s.failures, 0);
  EXPECT_FALSE(s.first_counterexample.has_value());
}

TEST(Sweep, TwoVariablesSkipsDimensionZero) {
  const auto s = random_svt_sweep(2, 3, 30, 5);
  EXPECT_GT(s.skipped, 0);
  EXPECT_EQ(s.failures, 0);
  EXPECT_EQ(s.trials, 30);
}

TEST(Sweep, PlantedThreePairs) {
  const auto planted = fixture("ex47.json");
  const auto ctx6 = VariableContext::standard(6);
  const SquareFreeIdeal moved(ctx6, planted.generators());
  const std::vector<SquareFreeIdeal> extra{moved};
  const auto s = random_svt_sweep(6, 5, 25, 7, {}, extra);
  EXPECT_EQ(s.planted, 1);
  EXPECT_EQ(s.planted_agreements, 1);
  EXPECT_EQ(s.failures, 0);
  EXPECT_EQ(s.trials, 25);
}

TEST(Sweep, Reproducible) {
  const auto a = random_svt_sweep(5, 5, 20, 99);
  const auto b = random_svt_sweep(5, 5, 20, 99);
  EXPECT_EQ(a.agreements, b.agreements);
  EXPECT_EQ(a.skipped, b.skipped);
}
