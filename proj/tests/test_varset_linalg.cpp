#include <gtest/gtest.h>

#include <random>

#include "loccoh/complex.hpp"
#include "loccoh/linalg.hpp"
#include "loccoh/varset.hpp"
#include "oracles.hpp"

using namespace loccoh;

TEST(VarSet, BasicOperations) {
  const auto a = VarSet::of({0, 2, 3});
  EXPECT_EQ(a.size(), 3);
  EXPECT_TRUE(a.contains(2));
  EXPECT_FALSE(a.contains(1));
  EXPECT_EQ(a.elements(), (std::vector<int>{0, 2, 3}));
  EXPECT_EQ(a.rank_of(3), 2);
  EXPECT_EQ(a.complement(5), VarSet::of({1, 4}));
  EXPECT_EQ(a - VarSet::of({2}), VarSet::of({0, 3}));
  EXPECT_TRUE(VarSet::of({0, 3}).subset_of(a));
  EXPECT_EQ(VarSet::full(3), VarSet::of({0, 1, 2}));
}

TEST(VarSet, CombinationsAreLexOrderedAndComplete) {
  const auto c = combinations(5, 2);
  ASSERT_EQ(c.size(), 10u);
  EXPECT_EQ(c.front(), VarSet::of({0, 1}));
  EXPECT_EQ(c[1], VarSet::of({0, 2}));
  EXPECT_EQ(c.back(), VarSet::of({3, 4}));
  for (std::size_t i = 1; i < c.size(); ++i) EXPECT_TRUE(lex_less(c[i - 1], c[i]));
  EXPECT_EQ(combinations(4, 0).size(), 1u);
}

TEST(VarSet, MinimizeAntichain) {
  std::vector<VarSet> s{VarSet::of({0, 1}), VarSet::of({0}), VarSet::of({1, 2}), VarSet::of({0, 1, 2})};
  EXPECT_EQ(minimize_antichain(s), (std::vector<VarSet>{VarSet::of({0}), VarSet::of({1, 2})}));
  EXPECT_EQ(minimize_antichain(s, false), (std::vector<VarSet>{VarSet::of({0, 1, 2})}));
}

TEST(Complex, VoidAndEmptyAreDistinct) {
  const auto v = SimplicialComplex::void_complex(3);
  const auto e = SimplicialComplex::empty_complex(3);
  EXPECT_TRUE(v.is_void());
  EXPECT_FALSE(v.is_empty_complex());
  EXPECT_TRUE(e.is_empty_complex());
  EXPECT_EQ(e.dimension(), -1);
  EXPECT_EQ(v.dimension(), -2);
  EXPECT_TRUE(e.contains(VarSet{}));
  EXPECT_FALSE(v.contains(VarSet{}));
}

TEST(Complex, FacesOfSize) {
  const auto hollow = SimplicialComplex::from_facets(3, {VarSet::of({0, 1}), VarSet::of({0, 2}), VarSet::of({1, 2})});
  EXPECT_EQ(hollow.faces_of_size(1).size(), 3u);
  EXPECT_EQ(hollow.faces_of_size(2).size(), 3u);
  EXPECT_TRUE(hollow.faces_of_size(3).empty());
  EXPECT_EQ(hollow.dimension(), 1);
}

TEST(Field, Validation) {
  EXPECT_THROW(FieldSpec::prime_field(4), InputError);
  EXPECT_THROW(FieldSpec::prime_field(1), InputError);
  EXPECT_EQ(FieldSpec::prime_field(7).label(), "GF(7)");
  EXPECT_EQ(FieldSpec::rationals().label(), "QQ");
}

TEST(Rank, KnownMatrices) {
  IntMatrix m(3, 3);
  // [[1,2,3],[4,5,6],[7,8,9]] has rank 2.
  int v = 1;
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) m(r, c) = v++;
  EXPECT_EQ(rank_over_rationals(m), 2u);
  EXPECT_EQ(rank_mod_prime(m, 5), 2u);
  // Every row reduces to (1,2,0) mod 3.
  EXPECT_EQ(rank_mod_prime(m, 3), 1u);

  // [[2,0],[0,2]] is singular only in characteristic 2.
  IntMatrix d(2, 2);
  d(0, 0) = 2;
  d(1, 1) = 2;
  EXPECT_EQ(rank(d, FieldSpec::rationals()), 2u);
  EXPECT_EQ(rank(d, FieldSpec::prime_field(2)), 0u);
  EXPECT_EQ(rank(IntMatrix(0, 4), FieldSpec{}), 0u);
}

TEST(Rank, Int64PathAgreesWithBigIntAndNaive) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> entry(-3, 3), dim(1, 9);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t R = dim(rng), C = dim(rng);
    IntMatrix m(R, C);
    std::vector<std::vector<mpq_class>> q(R, std::vector<mpq_class>(C));
    const bool low_rank = trial % 3 == 0;
    for (std::size_t r = 0; r < R; ++r)
      for (std::size_t c = 0; c < C; ++c) {
        m(r, c) = (low_rank && r >= 2) ? m(r % 2, c) * (r + 1) : entry(rng);
        q[r][c] = static_cast<long>(m(r, c));
      }
    const auto expected = oracle::naive_rank(q);
    EXPECT_EQ(rank_over_rationals(m), expected);
    EXPECT_EQ(rank_over_rationals_bigint(m), expected);
  }
}

TEST(Rank, OverflowFallsBackToBigInt) {
  // A Hilbert-like matrix with large integer entries forces int64 overflow.
  const std::size_t n = 12;
  IntMatrix m(n, n);
  std::vector<std::vector<mpq_class>> q(n, std::vector<mpq_class>(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      m(r, c) = static_cast<std::int64_t>((r + 1) * 1000003 + (c + 1) * (c + 1) * (r + 7) * 99991);
      q[r][c] = static_cast<long>(m(r, c));
    }
  EXPECT_EQ(rank_over_rationals(m), oracle::naive_rank(q));
}

TEST(Rref, KernelVectorsAreAnnihilated) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> entry(-2, 2);
  for (int trial = 0; trial < 50; ++trial) {
    IntMatrix m(4, 7);
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 7; ++c) m(r, c) = entry(rng);
    for (auto spec : {FieldSpec::rationals(), FieldSpec::prime_field(5)}) {
      with_field(spec, [&](const auto& f) {
        const auto fm = to_field(m, f);
        const auto ker = kernel_basis(fm, f);
        EXPECT_EQ(ker.size() + rank(m, spec), 7u);
        for (const auto& v : ker)
          for (std::size_t r = 0; r < 4; ++r) {
            auto acc = f.zero();
            for (std::size_t c = 0; c < 7; ++c) acc = f.add(acc, f.mul(fm(r, c), v[c]));
            EXPECT_TRUE(f.is_zero(acc));
          }
        EXPECT_EQ(rank_of_vectors(column_vectors(fm, f), 4, f), rank(m, spec));
      });
    }
  }
}
