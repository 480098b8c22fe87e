#include <cmath>

#include <gtest/gtest.h>

#include "coocc/beta.hpp"
#include "coocc/error.hpp"
#include "coocc/stats.hpp"
#include "coocc/synthetic.hpp"
#include "generators.hpp"

using namespace coocc;
using coocc::testing::Gen;
using Eigen::MatrixXd;
using Eigen::VectorXd;

TEST(BetaIndex, Examples) {
  VectorXd same(2);
  same << 0.5, 0.5;
  EXPECT_EQ(beta_index(same, 1, 2)(0), 1.0);
  VectorXd spread(2);
  spread << 0.0, 2.0;
  EXPECT_NEAR(beta_index(spread, 1, 2)(0), 1.0 - std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(beta_index(spread, 1, 2)(0), -0.41421, 1e-5);
  EXPECT_NEAR(beta_index(spread, 1, 2, Deviation::Population)(0), 0.0, 1e-15);
  try {
    beta_index(VectorXd::Ones(3), 3, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NeedMultiplePeriods);
  }
}

TEST(BetaIndex, LayoutIsPeriodMajor) {
  VectorXd n(6);  // units a, b, c over two periods
  n << 1, 2, 3, 1, 4, 3;
  const auto b = beta_index(n, 3, 2);
  EXPECT_EQ(b(0), 1.0);
  EXPECT_NEAR(b(1), 1.0 - std::sqrt(2.0), 1e-15);
  EXPECT_EQ(b(2), 1.0);
}

TEST(BetaIndexProperties, FuzzedBoundsAndShiftInvariance) {
  Gen g(81);
  for (int trial = 0; trial < 500; ++trial) {
    const auto n = static_cast<std::size_t>(g.integer(1, 10));
    const auto l = static_cast<std::size_t>(g.integer(2, 5));
    VectorXd s = g.matrix(static_cast<Eigen::Index>(n * l), 1).col(0) * std::pow(10.0, g.real(-3, 6));
    const auto b = beta_index(s, n, l);
    for (Eigen::Index i = 0; i < b.size(); ++i) EXPECT_LE(b(i), 1.0);
    const std::size_t u = static_cast<std::size_t>(g.integer(0, static_cast<std::int64_t>(n) - 1));
    for (std::size_t r = 0; r < l; ++r) s(static_cast<Eigen::Index>(r * n + u)) = 0.25;
    EXPECT_EQ(beta_index(s, n, l)(static_cast<Eigen::Index>(u)), 1.0);
  }
  VectorXd s(4);
  s << 1, 5, 2, 9;
  VectorXd shifted = s;
  shifted(0) += 3;
  shifted(2) += 3;
  EXPECT_NEAR(beta_index(shifted, 2, 2)(0), beta_index(s, 2, 2)(0), 1e-15);
}

TEST(Pairwise, Examples) {
  MatrixXd t(3, 2);
  t << 0, 0, 0, 2, 5, 7;
  EXPECT_EQ(pairwise_similarity(t, 1, 1), 1.0);
  EXPECT_NEAR(pairwise_similarity(t, 0, 1), 1.0 - std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(pairwise_similarity(t, 1, 2), 1.0, 1e-15);  // parallel trajectories
  EXPECT_THROW(pairwise_similarity(MatrixXd::Ones(3, 1), 0, 1), Error);
}

TEST(Pairwise, SymmetricUnitDiagonalAndPeriodTranslation) {
  Gen g(82);
  for (int trial = 0; trial < 50; ++trial) {
    const auto m = g.integer(2, 12), l = g.integer(2, 4);
    const MatrixXd t = g.matrix(m, l);
    const MatrixXd s = similarity_matrix(t);
    EXPECT_EQ(s, s.transpose());
    for (Eigen::Index i = 0; i < m; ++i) EXPECT_EQ(s(i, i), 1.0);
    EXPECT_LE(s.maxCoeff(), 1.0);
    MatrixXd moved = t;
    for (Eigen::Index r = 0; r < l; ++r) moved.col(r).array() += g.real(-5, 5);
    EXPECT_LT((similarity_matrix(moved) - s).cwiseAbs().maxCoeff(), 1e-12);
    const MatrixXd p = period_similarity_matrix(t, 0);
    EXPECT_EQ(p, p.transpose());
    for (Eigen::Index i = 0; i < m; ++i) EXPECT_EQ(p(i, i), 1.0);
  }
}

TEST(Pairwise, EntityAxisUsesSwappedTensor) {
  Gen g(83);
  const auto t = g.tensor(6, 5, 2);
  const auto m = pairwise_matrix(t, Axis::Entity, {});
  EXPECT_EQ(m.labels, t.entities());
  EXPECT_EQ(m.values.rows(), 6);
  const auto u = pairwise_matrix(t, Axis::Unit, {}, 1);
  EXPECT_EQ(u.labels, t.units());
}

TEST(BetweenPeriodJaccard, IdenticalSlicesGiveOne) {
  const auto t = coocc::testing::tensor_from({{"10110", "10110"}, {"01101", "01101"}});
  for (double j : between_period_jaccard(t)) EXPECT_EQ(j, 1.0);
  const auto empty = coocc::testing::tensor_from({{"10110", "10110"}, {"00101", "00101"}});
  EXPECT_TRUE(std::isnan(between_period_jaccard(empty)[1]));
}

TEST(CompareIndices, BothLinksAndRandomised) {
  Gen g(84);
  const auto t = g.tensor(10, 6, 2);
  CompareConfig c;
  c.links = {LinkKind::Logit, LinkKind::Probit};
  c.replicates = 8;
  c.seed = 3;
  c.pair_alpha = true;
  const auto r = compare_indices(t, c);
  ASSERT_EQ(r.links.size(), 4u);
  EXPECT_EQ(r.links[0].link, LinkKind::Logit);
  EXPECT_FALSE(r.links[0].randomized);
  EXPECT_TRUE(r.links[1].randomized);
  EXPECT_EQ(r.links[2].link, LinkKind::Probit);
  for (const auto& s : r.links) {
    EXPECT_EQ(s.beta.size(), 6);
    EXPECT_LE(s.beta.maxCoeff(), 1.0);
  }
  EXPECT_EQ(r.affinities.size(), 45u * 2u);
  const auto serial = pair_affinities_serial(t);
  ASSERT_EQ(serial.size(), r.affinities.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    EXPECT_EQ(serial[i].a, r.affinities[i].a);
    EXPECT_EQ(serial[i].b, r.affinities[i].b);
    EXPECT_TRUE(serial[i].alpha == r.affinities[i].alpha ||
                (std::isnan(serial[i].alpha) && std::isnan(r.affinities[i].alpha)));
  }
}

TEST(Stats, RanksAndCorrelations) {
  const std::vector<double> v{3, 1, 3, 2};
  EXPECT_EQ(average_ranks(v), (std::vector<double>{3.5, 1, 3.5, 2}));
  const std::vector<double> x{1, 2, 3, 4, 5}, y{2, 4, 6, 8, 11};
  EXPECT_EQ(spearman(x, y), 1.0);
  EXPECT_EQ(pearson(x, x), 1.0);
  EXPECT_NEAR(standard_deviation(std::vector<double>{0, 2}), std::sqrt(2.0), 1e-15);
  EXPECT_THROW(pearson(x, std::vector<double>(5, 1.0)), Error);
}

TEST(SyntheticPanel, ShapeAndGradient) {
  const auto t = synthetic_panel();
  EXPECT_EQ(t.num_entities(), 200u);
  EXPECT_EQ(t.num_units(), 16u);
  EXPECT_EQ(t.num_periods(), 2u);
  EXPECT_EQ(t, synthetic_panel());
  const auto p = unit_prevalence(t);
  EXPECT_LT(p.front(), p.back());
  EXPECT_GT(spearman(p, std::vector<double>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15}), 0.9);
}
