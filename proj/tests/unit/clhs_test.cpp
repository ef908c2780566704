#include <gtest/gtest.h>

#include <algorithm>

#include "clhs/constraints.hpp"
#include "clhs/errors.hpp"
#include "clhs/io.hpp"
#include "clhs/sampling.hpp"

namespace clhs {
namespace {

DesignSpec pair_spec(double b1, double h1, double b2, double h2, Relation rel = Relation::less) {
  return DesignSpec({Distribution::uniform(b1, h1, "x1"), Distribution::uniform(b2, h2, "x2")},
                    {{0, rel}});
}

DesignSpec chain(bool shifted) {
  std::vector<Distribution> vars;
  std::vector<ConstraintLink> links;
  for (int i = 1; i <= 10; ++i) {
    const double step = (i - 1) / 2.0;
    vars.push_back(shifted ? Distribution::uniform(step, 2.0 + step, "x" + std::to_string(i))
                           : Distribution::uniform(0.0, 1.0 + step, "x" + std::to_string(i)));
    if (i > 1) links.push_back({static_cast<std::size_t>(i - 2), Relation::less});
  }
  return DesignSpec(vars, links);
}

void expect_valid_design(const SampleMatrix& m, const DesignSpec& spec) {
  const auto strata = verify_lhs(m, spec);
  for (std::size_t j = 0; j < strata.size(); ++j) EXPECT_TRUE(strata[j]) << "column " << j;
  for (const auto& link : spec.links()) {
    const auto l = m.column(link.left);
    const auto r = m.column(link.right());
    for (std::size_t i = 0; i < m.rows(); ++i) {
      ASSERT_TRUE(satisfies(l[i], r[i], link.relation)) << "link " << link.left << " row " << i;
    }
  }
}

TEST(Clhs, TwoUniformsIncreasing) {
  const auto spec = pair_spec(0.0, 1.0, 0.0, 2.0);
  Rng rng(100);
  const auto m = clhs(spec, 100, rng);
  expect_valid_design(m, spec);
}

TEST(Clhs, TenVariableChains) {
  for (bool shifted : {true, false}) {
    const auto spec = chain(shifted);
    Rng rng(shifted ? 1 : 2);
    expect_valid_design(clhs(spec, 10, rng), spec);
  }
}

TEST(Clhs, NoLinksEqualsLhs) {
  const auto spec = DesignSpec({Distribution::normal(0.0, 1.0, "x")});
  Rng a(8);
  Rng b(8);
  EXPECT_EQ(clhs(spec, 64, a), lhs(spec, 64, b));
}

TEST(Clhs, FirstColumnIsTheInitialLhsColumn) {
  const auto spec = chain(false);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Rng a(seed);
    Rng b(seed);
    const auto constrained = clhs(spec, 30, a);
    const auto plain = lhs(spec, 30, b);
    EXPECT_TRUE(std::equal(constrained.column(0).begin(), constrained.column(0).end(),
                           plain.column(0).begin()));
  }
}

TEST(Clhs, UnlinkedColumnsKeepTheirDraw) {
  // x2 -> x3 unlinked: x3 must equal the plain LHS draw.
  const auto spec = DesignSpec({Distribution::uniform(0.0, 1.0, "x1"),
                                Distribution::uniform(0.0, 2.0, "x2"),
                                Distribution::uniform(5.0, 6.0, "x3")},
                               {{0, Relation::less}});
  Rng a(4);
  Rng b(4);
  const auto constrained = clhs(spec, 40, a);
  const auto plain = lhs(spec, 40, b);
  EXPECT_TRUE(std::equal(constrained.column(2).begin(), constrained.column(2).end(),
                         plain.column(2).begin()));
  expect_valid_design(constrained, spec);
}

TEST(Clhs, DecreasingChainFromShippedWeldingDesign) {
  const auto spec =
      parse_design_spec(read_file(std::string(CLHS_DESIGNS_DIR) + "/welding_young_modulus.json"));
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Rng rng(seed);
    expect_valid_design(clhs(spec, 800, rng), spec);
  }
}

TEST(Clhs, NonUniformBoundedMarginals) {
  // each marginal is a shifted copy of its predecessor, so F_right <= F_left
  const auto spec = DesignSpec({Distribution::truncated_normal(0.0, 1.0, -2.0, 2.0, "a"),
                                Distribution::truncated_normal(1.0, 1.0, -1.0, 3.0, "b"),
                                Distribution::truncated_normal(2.5, 1.0, 0.5, 4.5, "c")},
                               {{0, Relation::less}, {1, Relation::less}});
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Rng rng(seed);
    expect_valid_design(clhs(spec, 200, rng), spec);
  }
}

TEST(Clhs, BoundsAloneDoNotGuaranteeExistenceForNonUniformMarginals) {
  // Bounds satisfy the precondition, but TN(1, 0.5) on [-1, 3] is not
  // stochastically below U[0, 3.5]: around the 10% quantile the truncated
  // normal sits above the uniform, so the criterion fails for large n.
  const auto spec = DesignSpec({Distribution::truncated_normal(1.0, 0.5, -1.0, 3.0, "b"),
                                Distribution::uniform(0.0, 3.5, "c")},
                               {{0, Relation::less}});
  Rng rng(1);
  EXPECT_THROW(clhs(spec, 200, rng, 50), RetryExhausted);
}

TEST(Clhs, Deterministic) {
  const auto spec = chain(true);
  Rng a(42);
  Rng b(42);
  EXPECT_EQ(clhs(spec, 100, a), clhs(spec, 100, b));
}

TEST(Clhs, RetryExhaustionReportsColumnAndSlack) {
  // identical bounds: the criterion essentially never holds for n = 100
  const auto spec = pair_spec(0.0, 1.0, 0.0, 1.0);
  Rng rng(1);
  try {
    (void)clhs(spec, 100, rng, 5);
    FAIL() << "expected RetryExhausted";
  } catch (const RetryExhausted& e) {
    EXPECT_EQ(e.column(), 1u);
    EXPECT_EQ(e.column_name(), "x2");
    EXPECT_LT(e.last_slack(), 0);
    EXPECT_DOUBLE_EQ(e.link_gamma(), 0.5);
    EXPECT_NE(std::string(e.what()).find("x2"), std::string::npos);
  }
}

TEST(Clhs, InvalidArguments) {
  const auto spec = pair_spec(0.0, 1.0, 0.0, 2.0);
  Rng rng(1);
  EXPECT_THROW(clhs(spec, 0, rng), DomainError);
  EXPECT_THROW(clhs(spec, 10, rng, 0), DomainError);
}

TEST(Clhs, BoundViolationRejectedBeforeSampling) {
  EXPECT_THROW(pair_spec(0.0, 2.0, 0.0, 1.0), SpecError);
  EXPECT_THROW(DesignSpec({Distribution::normal(0.0, 1.0, "a"), Distribution::uniform(0.0, 1.0, "b")},
                          {{0, Relation::less}}),
               SpecError);
}

TEST(ClhsProperty, LhsPreservedAndConstraintsHoldAcrossSeeds) {
  const std::vector<DesignSpec> specs = {pair_spec(0.0, 1.0, 0.0, 2.0),
                                         pair_spec(0.0, 1.0, 0.0, 1.1),
                                         pair_spec(20.0, 30.0, 16.0, 26.0, Relation::greater),
                                         chain(true), chain(false)};
  for (const auto& spec : specs) {
    for (std::size_t n : {1u, 2u, 7u, 50u}) {
      for (std::uint64_t seed = 0; seed < 25; ++seed) {
        Rng rng(seed * 31 + n);
        expect_valid_design(clhs(spec, n, rng), spec);
      }
    }
  }
}

}  // namespace
}  // namespace clhs
