#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "clhs/constraints.hpp"
#include "clhs/errors.hpp"
#include "clhs/oracle.hpp"
#include "test_support.hpp"

namespace clhs {
namespace {

const std::vector<double> kLeft6 = {23.98, 26.91, 26.52, 21.99, 29.23, 21.10};
const std::vector<double> kRight6 = {22.18, 20.45, 23.77, 18.31, 16.45, 25.49};

TEST(CompatibilityMatrix, DecreasingWorkedExample) {
  const auto expected = CompatibilityMatrix::from_rows({{1, 1, 1, 0, 1, 0},
                                      {1, 1, 1, 1, 1, 1},
                                      {1, 1, 1, 0, 1, 0},
                                      {1, 1, 1, 1, 1, 1},
                                      {1, 1, 1, 1, 1, 1},
                                      {0, 1, 1, 0, 1, 0}});
  const auto c = compatibility_matrix(kLeft6, kRight6, Relation::greater);
  EXPECT_EQ(c, expected);
  EXPECT_EQ(c.diagonal_sum(), 5u);
  EXPECT_FALSE(c.diagonal_all_ones());
}

TEST(CompatibilityMatrix, Singletons) {
  const std::vector<double> one{1.0};
  const std::vector<double> two{2.0};
  EXPECT_EQ(compatibility_matrix(one, two, Relation::less), CompatibilityMatrix::from_rows({{1}}));
  EXPECT_EQ(compatibility_matrix(two, one, Relation::less), CompatibilityMatrix::from_rows({{0}}));
}

TEST(CompatibilityMatrix, TieIsIncompatible) {
  const std::vector<double> x{1.0};
  EXPECT_EQ(compatibility_matrix(x, x, Relation::less), CompatibilityMatrix::from_rows({{0}}));
  EXPECT_EQ(compatibility_matrix(x, x, Relation::greater), CompatibilityMatrix::from_rows({{0}}));
}

TEST(CompatibilityMatrix, LengthMismatch) {
  const std::vector<double> a{1.0, 2.0};
  const std::vector<double> b{1.0};
  EXPECT_THROW(compatibility_matrix(a, b, Relation::less), DomainError);
  EXPECT_THROW(score_vector(a, b, Relation::less), DomainError);
}

TEST(ScoreVector, DecreasingWorkedExample) {
  const auto s = score_vector(compatibility_matrix(kLeft6, kRight6, Relation::greater));
  EXPECT_EQ(s.scores, (std::vector<std::size_t>{4, 6, 4, 6, 6, 3}));
  EXPECT_EQ(s.sorted, (std::vector<std::size_t>{3, 4, 4, 6, 6, 6}));
  EXPECT_EQ(score_vector(kLeft6, kRight6, Relation::greater), s);
}

TEST(ScoreVector, AllOnesAndAllZeros) {
  const auto ones = score_vector(CompatibilityMatrix::from_rows({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}}));
  EXPECT_EQ(ones.scores, (std::vector<std::size_t>{3, 3, 3}));
  const auto zeros = score_vector(CompatibilityMatrix::from_rows({{0, 0}, {0, 0}}));
  EXPECT_EQ(zeros.scores, (std::vector<std::size_t>{0, 0}));
}

TEST(ScoreVector, FastPathMatchesMatrixWithTies) {
  std::mt19937_64 gen(3);
  std::uniform_int_distribution<int> small(0, 5);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + trial % 9;
    std::vector<double> left(n), right(n);
    for (auto& v : left) v = small(gen);
    for (auto& v : right) v = small(gen);
    for (Relation rel : {Relation::less, Relation::greater}) {
      EXPECT_EQ(score_vector(left, right, rel),
                score_vector(compatibility_matrix(left, right, rel)));
    }
  }
}

TEST(ExistenceCriterion, Examples) {
  EXPECT_TRUE(existence_criterion({{}, {3, 4, 4, 6, 6, 6}}));
  const std::vector<double> left{0.9};
  const std::vector<double> right{0.5};
  const auto s = score_vector(left, right, Relation::less);
  EXPECT_EQ(s.scores, std::vector<std::size_t>{0});
  EXPECT_FALSE(existence_criterion(s));
  ScoreVector tight{{}, {1, 2, 3}};
  EXPECT_TRUE(existence_criterion(tight));
  EXPECT_EQ(criterion_slack(tight), 0);
  EXPECT_EQ(criterion_slack({{}, {0, 2, 2}}), -1);
}

TEST(BoundsPrecondition, Examples) {
  const auto u01 = Distribution::uniform(0.0, 1.0);
  const auto u02 = Distribution::uniform(0.0, 2.0);
  EXPECT_TRUE(bounds_precondition(u01, u02, Relation::less));
  EXPECT_FALSE(bounds_precondition(u02, u01, Relation::less));
  EXPECT_NE(bounds_violation(u02, u01, Relation::less).find("h_left <= h_right"),
            std::string::npos);
  EXPECT_TRUE(bounds_precondition(Distribution::uniform(20.0, 30.0),
                                  Distribution::uniform(16.0, 26.0), Relation::greater));
  EXPECT_FALSE(bounds_precondition(Distribution::uniform(0.5, 1.0),
                                   Distribution::uniform(0.0, 2.0), Relation::less));
}

TEST(BoundsPrecondition, UnboundedMarginalIsAnError) {
  try {
    (void)bounds_precondition(Distribution::normal(0.0, 1.0), Distribution::uniform(0.0, 1.0),
                              Relation::less);
    FAIL() << "expected SpecError";
  } catch (const SpecError& e) {
    EXPECT_STREQ(e.what(), "constraint requires bounded marginals");
  }
}

TEST(PermuteToSatisfy, DecreasingWorkedExample) {
  Rng rng(6);
  const auto out = permute_to_satisfy(kLeft6, kRight6, Relation::greater, rng);
  for (std::size_t i = 0; i < out.size(); ++i) EXPECT_GT(kLeft6[i], out[i]) << i;
  auto a = out;
  auto b = kRight6;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  EXPECT_EQ(a, b);
  // the published arrangement is itself admissible
  const std::vector<double> published = {20.45, 25.49, 22.18, 18.31, 23.77, 16.45};
  EXPECT_TRUE(compatibility_matrix(kLeft6, published, Relation::greater).diagonal_all_ones());
}

TEST(PermuteToSatisfy, DecreasingWorkedExampleReachesSeveralArrangements) {
  const auto count = oracle::count_satisfying_permutations(kLeft6, kRight6, Relation::greater);
  std::set<std::vector<double>> seen;
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    Rng rng(seed);
    seen.insert(permute_to_satisfy(kLeft6, kRight6, Relation::greater, rng));
  }
  EXPECT_GT(seen.size(), 1u);
  EXPECT_LE(seen.size(), count);
}

TEST(PermuteToSatisfy, Singleton) {
  Rng rng(1);
  const std::vector<double> left{1.0};
  const std::vector<double> right{2.0};
  EXPECT_EQ(permute_to_satisfy(left, right, Relation::less, rng), right);
}

TEST(PermuteToSatisfy, UniqueSolution) {
  const std::vector<double> left{1.0, 2.0};
  const std::vector<double> right{1.5, 2.5};
  ASSERT_EQ(oracle::count_satisfying_permutations(left, right, Relation::less), 1u);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Rng rng(seed);
    EXPECT_EQ(permute_to_satisfy(left, right, Relation::less, rng), right);
    const std::vector<double> swapped{2.5, 1.5};
    EXPECT_EQ(permute_to_satisfy(left, swapped, Relation::less, rng), right);
  }
}

TEST(PermuteToSatisfy, RefusesWhenCriterionFails) {
  Rng rng(1);
  const std::vector<double> left{0.9};
  const std::vector<double> right{0.5};
  EXPECT_THROW(permute_to_satisfy(left, right, Relation::less, rng), NoSatisfyingPermutation);
  const std::vector<double> same{1.0, 2.0};
  EXPECT_THROW(permute_to_satisfy(same, same, Relation::less, rng), NoSatisfyingPermutation);
}

TEST(PermuteToSatisfy, LeavesLeftAndMultisetIntact) {
  std::mt19937_64 gen(77);
  int successes = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    const auto pair = testing::random_bounded_pair(gen);
    const std::size_t n = 1 + trial % 40;
    const auto left = testing::naive_uniform_lhs(n, pair.b_left, pair.h_left, gen);
    const auto right = testing::naive_uniform_lhs(n, pair.b_right, pair.h_right, gen);
    if (!existence_criterion(score_vector(left, right, pair.relation))) continue;
    Rng rng(trial);
    const auto left_copy = left;
    const auto out = permute_to_satisfy(left, right, pair.relation, rng);
    ASSERT_EQ(left, left_copy);
    for (std::size_t i = 0; i < n; ++i) ASSERT_TRUE(satisfies(left[i], out[i], pair.relation));
    auto a = out;
    auto b = right;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    ASSERT_EQ(a, b);
    ++successes;
  }
  EXPECT_GT(successes, 500);
}

TEST(PermuteToSatisfy, HandlesDuplicatedValues) {
  // Ties in the left column are broken by index; ties across columns never pair.
  Rng rng(3);
  const std::vector<double> left{1.0, 1.0, 2.0, 2.0};
  const std::vector<double> right{3.0, 1.5, 2.5, 1.5};
  const auto out = permute_to_satisfy(left, right, Relation::less, rng);
  for (std::size_t i = 0; i < left.size(); ++i) EXPECT_LT(left[i], out[i]);
}

TEST(ExistenceCriterionProperty, AgreesWithOracleOnGenericColumns) {
  // Not restricted to LHS inputs: arbitrary reals and heavy ties.
  std::mt19937_64 gen(2718);
  std::uniform_real_distribution<double> real(-1.0, 1.0);
  std::uniform_int_distribution<int> coarse(0, 3);
  for (int trial = 0; trial < 3000; ++trial) {
    const std::size_t n = 1 + trial % 7;
    std::vector<double> left(n), right(n);
    const bool ties = trial % 2 == 0;
    for (auto& v : left) v = ties ? coarse(gen) : real(gen);
    for (auto& v : right) v = ties ? coarse(gen) : real(gen);
    for (Relation rel : {Relation::less, Relation::greater}) {
      ASSERT_EQ(existence_criterion(score_vector(compatibility_matrix(left, right, rel))),
                oracle::brute_force_exists(left, right, rel))
          << "trial " << trial;
    }
  }
}

}  // namespace
}  // namespace clhs
