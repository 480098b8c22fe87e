#include <cmath>
#include <string>

#include <gtest/gtest.h>

#include "coocc/error.hpp"
#include "coocc/imputer.hpp"
#include "generators.hpp"

using namespace coocc;
using coocc::testing::Gen;

TEST(Impute, CompleteTensorUnchanged) {
  Gen g(71);
  const auto t = g.tensor(4, 5, 2);
  EXPECT_EQ(impute(t, 3), t);
}

TEST(Impute, DeterministicAndObservedUntouched) {
  const auto t = coocc::testing::tensor_from({{"1.01.1", "..0110"}, {"010.10", "1111.0"}});
  const auto a = impute(t, 17);
  EXPECT_EQ(a, impute(t, 17));
  EXPECT_FALSE(a.has_missing());
  for (std::size_t i = 0; i < t.cells().size(); ++i) {
    if (t.cells()[i] != Cell::Missing) EXPECT_EQ(a.cells()[i], t.cells()[i]);
  }
}

TEST(Impute, FrequencyMatchesObservedEstimate) {
  // 4 of 10 observed present; the adjusted count 5 gives an estimate of 0.5
  const std::size_t missing = 10000;
  std::string slice = "1111000000" + std::string(missing, '.');
  const auto t = coocc::testing::tensor_from({{slice}, {std::string(slice.size(), '1')}});
  const auto filled = impute(t, 5);
  std::size_t present = 0;
  for (std::size_t u = 10; u < slice.size(); ++u) present += filled.at(0, u, 0) == Cell::Present;
  EXPECT_NEAR(static_cast<double>(present) / missing, 0.5, 3 * std::sqrt(0.25 / missing));
}

TEST(Impute, TooFewObservedCells) {
  const auto t = coocc::testing::tensor_from({{"1..."}, {"0110"}});
  try {
    impute(t, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TooFewUnits);
  }
}

TEST(DrawMask, CountAndSliceFloor) {
  Gen g(72);
  const auto t = g.tensor(10, 8, 2);
  const auto mask = draw_mask(t, 0.05, 9, 0);
  std::size_t masked = 0;
  for (bool b : mask) masked += b;
  EXPECT_EQ(masked, static_cast<std::size_t>(std::ceil(0.05 * 160)));
  EXPECT_EQ(mask, draw_mask(t, 0.05, 9, 0));
  EXPECT_NE(mask, draw_mask(t, 0.05, 9, 1));
  for (std::size_t s = 0; s < 20; ++s) {
    std::size_t left = 0;
    for (std::size_t u = 0; u < 8; ++u) left += !mask[s * 8 + u];
    EXPECT_GE(left, 3u);
  }
}

TEST(ImputeCompare, ZeroFractionIsExactlyOne) {
  Gen g(73);
  const auto t = g.tensor(8, 6, 2);
  ImputeCheckConfig c;
  c.missing_fraction = 0.0;
  c.repetitions = 3;
  const auto r = impute_compare(t, c);
  EXPECT_EQ(r.mean_correlation, 1.0);
  EXPECT_EQ(r.min_correlation, 1.0);
}

TEST(ImputeCompare, OracleRestorationIsExactlyOne) {
  Gen g(74);
  const auto t = g.tensor(8, 6, 2);
  ImputeCheckConfig c;
  c.missing_fraction = 0.1;
  c.repetitions = 4;
  c.imputation = [&t](const PresenceTensor& masked, std::uint64_t) {
    EXPECT_TRUE(masked.has_missing());
    return t;
  };
  const auto r = impute_compare(t, c);
  EXPECT_EQ(r.mean_correlation, 1.0);
  for (const auto& rep : r.repetitions) EXPECT_EQ(rep.masked, 10u);
}

TEST(ImputeCompare, Validation) {
  Gen g(75);
  const auto t = g.tensor(4, 5, 2);
  ImputeCheckConfig c;
  c.missing_fraction = 0.2;
  EXPECT_THROW(impute_compare(t, c), Error);
  c.missing_fraction = 0.05;
  c.repetitions = 0;
  EXPECT_THROW(impute_compare(t, c), Error);
}
