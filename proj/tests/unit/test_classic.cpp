#include <algorithm>
#include <numeric>

#include <gtest/gtest.h>

#include "coocc/classic.hpp"
#include "coocc/error.hpp"
#include "generators.hpp"

using namespace coocc;
using coocc::testing::Gen;

namespace {
const std::vector<std::uint8_t> kA{1, 1, 1, 0, 0};
const std::vector<std::uint8_t> kB{0, 1, 1, 1, 0};
}  // namespace

TEST(Jaccard, Examples) {
  EXPECT_DOUBLE_EQ(jaccard(kA, kB), 0.5);
  EXPECT_DOUBLE_EQ(jaccard(kA, kA), 1.0);
  EXPECT_DOUBLE_EQ(jaccard(std::vector<std::uint8_t>{1, 0}, std::vector<std::uint8_t>{0, 1}), 0.0);
  const std::vector<std::uint8_t> zero(4, 0);
  EXPECT_THROW(jaccard(zero, zero), Error);
  EXPECT_THROW(jaccard(kA, zero), Error);  // length mismatch
}

TEST(SorensenDice, Examples) {
  EXPECT_DOUBLE_EQ(sorensen_dice(kA, kB), 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(sorensen_dice(kB, kB), 1.0);
  EXPECT_DOUBLE_EQ(sorensen_dice(std::vector<std::uint8_t>{1, 0}, std::vector<std::uint8_t>{0, 1}), 0.0);
  const std::vector<std::uint8_t> zero(3, 0);
  EXPECT_THROW(sorensen_dice(zero, zero), Error);
}

TEST(Simpson, Examples) {
  EXPECT_DOUBLE_EQ(simpson_diversity(std::vector<std::uint64_t>{2, 2}), 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(simpson_diversity(std::vector<std::uint64_t>{9}), 1.0);
  EXPECT_DOUBLE_EQ(simpson_diversity(std::vector<std::uint64_t>{1, 1, 1, 1}), 0.0);
  try {
    simpson_diversity(std::vector<std::uint64_t>{1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Undefined);
  }
}

TEST(ClassicProperties, BoundsOrderingAndPermutation) {
  Gen g(2024);
  for (int trial = 0; trial < 500; ++trial) {
    const auto n = static_cast<std::size_t>(g.integer(1, 40));
    auto a = g.bits(n, g.real(0.05, 0.95));
    auto b = g.bits(n, g.real(0.05, 0.95));
    if (std::all_of(a.begin(), a.end(), [](auto x) { return x == 0; }) &&
        std::all_of(b.begin(), b.end(), [](auto x) { return x == 0; })) {
      continue;
    }
    const double j = jaccard(a, b), d = sorensen_dice(a, b);
    EXPECT_GE(j, 0.0);
    EXPECT_LE(d, 1.0);
    EXPECT_LE(j, d + 1e-15);

    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::shuffle(perm.begin(), perm.end(), g.engine());
    std::vector<std::uint8_t> pa(n), pb(n);
    for (std::size_t i = 0; i < n; ++i) {
      pa[i] = a[perm[i]];
      pb[i] = b[perm[i]];
    }
    EXPECT_EQ(jaccard(pa, pb), j);
    EXPECT_EQ(sorensen_dice(pa, pb), d);

    std::vector<std::uint64_t> counts(static_cast<std::size_t>(g.integer(1, 6)));
    for (auto& c : counts) c = static_cast<std::uint64_t>(g.integer(0, 20));
    if (std::accumulate(counts.begin(), counts.end(), std::uint64_t{0}) >= 2) {
      const double s = simpson_diversity(counts);
      EXPECT_GE(s, 0.0);
      EXPECT_LE(s, 1.0);
      std::shuffle(counts.begin(), counts.end(), g.engine());
      EXPECT_DOUBLE_EQ(simpson_diversity(counts), s);
    }
  }
}
