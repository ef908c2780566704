#include <gtest/gtest.h>

#include "clhs/constraints.hpp"
#include "clhs/curves.hpp"
#include "clhs/errors.hpp"
#include "clhs/io.hpp"

namespace clhs {
namespace {

TEST(InterpolateCurve, Midpoint) {
  const std::vector<double> levels{0, 1};
  const std::vector<double> values{0, 2};
  EXPECT_DOUBLE_EQ(interpolate_curve(levels, values, 0.5), 1.0);
}

TEST(InterpolateCurve, ExactAtKnots) {
  const std::vector<double> levels{20, 200, 400, 600};
  const std::vector<double> values{0.1, 0.7, -3.3, 1.0 / 3.0};
  for (std::size_t k = 0; k < levels.size(); ++k) {
    EXPECT_EQ(interpolate_curve(levels, values, levels[k]), values[k]);
  }
}

TEST(InterpolateCurve, Errors) {
  const std::vector<double> levels{0, 1, 2};
  const std::vector<double> values{0, 1, 4};
  EXPECT_THROW((void)interpolate_curve(levels, values, -0.1), DomainError);
  EXPECT_THROW((void)interpolate_curve(levels, values, 2.1), DomainError);
  EXPECT_THROW((void)interpolate_curve(levels, std::vector<double>{0, 1}, 1.0), DomainError);
  EXPECT_THROW((void)interpolate_curve(std::vector<double>{0, 0, 1}, values, 0.5), DomainError);
}

TEST(InterpolateCurve, WeldingRowAt560) {
  const auto spec = parse_design_spec(
      read_file(std::string(CLHS_DESIGNS_DIR) + "/welding_young_modulus.json"));
  std::vector<double> levels;
  for (const auto& v : spec.metadata()["levels"]) levels.push_back(v.get<double>());
  ASSERT_EQ(levels.size(), 7u);
  Rng rng(560);
  const auto m = clhs(spec, 3, rng);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::vector<double> row(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) row[j] = m(i, j);
    // 560 lies on the 400 -> 600 segment, 80% of the way
    const double expected = row[2] + 0.8 * (row[3] - row[2]);
    const double got = interpolate_curve(levels, row, 560.0);
    EXPECT_NEAR(got, expected, 1e-12);
    EXPECT_LT(got, row[2]);  // decreasing curve
    EXPECT_GT(got, row[3]);
  }
}

TEST(CurveTable, KnotsAndGrid) {
  SampleMatrix m({"a", "b", "c"}, 2);
  m.set_column(0, std::vector<double>{1, 10});
  m.set_column(1, std::vector<double>{2, 20});
  m.set_column(2, std::vector<double>{4, 40});
  const std::vector<double> knots{0, 1, 2};
  const auto at_knots = make_curve_table(m, knots);
  EXPECT_EQ(at_knots.levels, knots);
  EXPECT_EQ(at_knots.rows[1], (std::vector<double>{10, 20, 40}));

  const auto grid = even_grid(knots, 5);
  EXPECT_EQ(grid, (std::vector<double>{0, 0.5, 1, 1.5, 2}));
  const auto fine = make_curve_table(m, knots, grid);
  EXPECT_EQ(fine.rows[0], (std::vector<double>{1, 1.5, 2, 3, 4}));
  EXPECT_EQ(write_curve_table(at_knots), "row,0,1,2\n1,1,2,4\n2,10,20,40\n");

  EXPECT_THROW(make_curve_table(m, std::vector<double>{0, 1}), DomainError);
}

}  // namespace
}  // namespace clhs
