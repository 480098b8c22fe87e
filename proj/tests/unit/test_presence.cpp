#include <gtest/gtest.h>

#include "coocc/error.hpp"
#include "coocc/presence.hpp"
#include "generators.hpp"

using namespace coocc;
using coocc::testing::Gen;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::BadParams;
}

}  // namespace

TEST(PresenceCsv, SmallestCompleteGrid) {
  const auto t = parse_presence_csv(
      "entity,unit,period,present\nA,u1,p,1\nB,u1,p,1\nA,u2,p,1\nB,u2,p,1\n");
  EXPECT_EQ(t.num_entities(), 2u);
  EXPECT_EQ(t.num_units(), 2u);
  EXPECT_EQ(t.num_periods(), 1u);
  EXPECT_FALSE(t.has_missing());
}

TEST(PresenceCsv, EmptyFieldIsMissing) {
  const auto t = parse_presence_csv(
      "entity,unit,period,present\nA,u1,p,1\nB,u1,p,\nA,u2,p,1\nB,u2,p,1\n");
  EXPECT_EQ(t.missing_count(), 1u);
  EXPECT_EQ(t.at(1, 0, 0), Cell::Missing);
}

TEST(PresenceCsv, Errors) {
  EXPECT_EQ(code_of([] {
              parse_presence_csv("entity,unit,period,present\nA,u1,p,1\nA,u1,p,0\nB,u1,p,1\n"
                                 "A,u2,p,1\nB,u2,p,1\n");
            }),
            ErrorCode::DuplicateCell);
  EXPECT_EQ(code_of([] {
              parse_presence_csv("entity,unit,period,present\nA,u1,p,1\nB,u1,p,yes\n"
                                 "A,u2,p,1\nB,u2,p,1\n");
            }),
            ErrorCode::BadValue);
  EXPECT_EQ(code_of([] {
              parse_presence_csv("entity,unit,period,present\nA,u1,p,1\nB,u1,p,1\nA,u2,p,1\n");
            }),
            ErrorCode::IncompleteGrid);
  EXPECT_EQ(code_of([] { parse_presence_csv("entity,unit,present\nA,u1,1\n"); }),
            ErrorCode::MalformedCsv);
  EXPECT_EQ(code_of([] {
              parse_presence_csv("entity,unit,period,present\nA,u1,p,1,9\nB,u1,p,1\n");
            }),
            ErrorCode::MalformedCsv);
}

TEST(PresenceCsv, AxesInFirstAppearanceOrder) {
  const auto t = parse_presence_csv(
      "entity,unit,period,present\nZ,b,2,1\nA,b,2,0\nZ,a,2,1\nA,a,2,1\n"
      "Z,b,1,0\nA,b,1,1\nZ,a,1,0\nA,a,1,1\n");
  EXPECT_EQ(t.entities(), (std::vector<std::string>{"Z", "A"}));
  EXPECT_EQ(t.units(), (std::vector<std::string>{"b", "a"}));
  EXPECT_EQ(t.periods(), (std::vector<std::string>{"2", "1"}));
  EXPECT_EQ(t.at(t.entity_index("A"), t.unit_index("b"), t.period_index("1")), Cell::Present);
  EXPECT_EQ(code_of([&] { (void)t.entity_index("Q"); }), ErrorCode::UnknownIdentifier);
}

TEST(PresenceTensor, ShapeInvariants) {
  EXPECT_EQ(code_of([] { PresenceTensor({"a"}, {"u", "v"}, {"p"}, {Cell::Absent, Cell::Present}); }),
            ErrorCode::InvalidShape);
  EXPECT_EQ(code_of([] {
              PresenceTensor({"a", "a"}, {"u", "v"}, {"p"}, std::vector<Cell>(4, Cell::Absent));
            }),
            ErrorCode::InvalidShape);
  EXPECT_EQ(code_of([] {
              PresenceTensor({"a", "b"}, {"u", "v"}, {"p"}, std::vector<Cell>(3, Cell::Absent));
            }),
            ErrorCode::InvalidShape);
  // a slice with no observed cell cannot be imputed later
  EXPECT_EQ(code_of([] {
              PresenceTensor({"a", "b"}, {"u", "v"}, {"p"},
                             {Cell::Missing, Cell::Missing, Cell::Present, Cell::Absent});
            }),
            ErrorCode::Unimputable);
}

TEST(Cooccurrence, DirectCount) {
  // a on units {1,2,3}, b on {2,3,4}, n = 5
  const auto t = coocc::testing::tensor_from({{"11100"}, {"01110"}});
  EXPECT_EQ(cooccurrence_counts(t, 0, 1, 0), (CooccurrenceCounts{5, 3, 3, 2}));
  EXPECT_EQ(cooccurrence_counts(t, 0, 0, 0), (CooccurrenceCounts{5, 3, 3, 3}));
}

TEST(Cooccurrence, DisjointSupports) {
  const auto t = coocc::testing::tensor_from({{"11000"}, {"00110"}});
  EXPECT_EQ(cooccurrence_counts(t, 0, 1, 0).both, 0u);
}

TEST(Cooccurrence, MissingIsRejected) {
  const auto t = coocc::testing::tensor_from({{"11.00"}, {"00110"}});
  EXPECT_EQ(code_of([&] { (void)cooccurrence_counts(t, 0, 1, 0); }), ErrorCode::MissingData);
}

TEST(Prevalence, Counts) {
  const auto t = coocc::testing::tensor_from(
      {{"1111111111111111"}, {"111111111111111."}, {"0000000000000000"}});
  const auto p = prevalence(t);
  EXPECT_EQ(p.slice(0, 0).present, 16u);
  EXPECT_EQ(p.slice(0, 0).observed, 16u);
  EXPECT_EQ(p.slice(1, 0).observed, 15u);
  EXPECT_EQ(p.slice(2, 0).present, 0u);
}

TEST(PresenceProperties, RoundTripSymmetryAndRichness) {
  Gen g(101);
  for (int trial = 0; trial < 50; ++trial) {
    const auto k = static_cast<std::size_t>(g.integer(2, 8));
    const auto n = static_cast<std::size_t>(g.integer(2, 10));
    const auto l = static_cast<std::size_t>(g.integer(1, 3));
    const auto t = g.tensor(k, n, l);
    EXPECT_EQ(parse_presence_csv(to_csv(t)), t);

    const auto a = static_cast<std::size_t>(g.integer(0, static_cast<std::int64_t>(k) - 1));
    const auto b = static_cast<std::size_t>(g.integer(0, static_cast<std::int64_t>(k) - 1));
    const auto r = static_cast<std::size_t>(g.integer(0, static_cast<std::int64_t>(l) - 1));
    const auto ab = cooccurrence_counts(t, a, b, r);
    const auto ba = cooccurrence_counts(t, b, a, r);
    EXPECT_EQ(ab.total, ba.total);
    EXPECT_EQ(ab.both, ba.both);
    EXPECT_EQ(ab.count_a, ba.count_b);
    const std::size_t lo = ab.count_a + ab.count_b > ab.total ? ab.count_a + ab.count_b - ab.total : 0;
    EXPECT_GE(ab.both, lo);
    EXPECT_LE(ab.both, std::min(ab.count_a, ab.count_b));

    const auto p = prevalence(t);
    for (std::size_t period = 0; period < l; ++period) {
      std::size_t by_unit = 0, by_entity = 0;
      for (std::size_t u = 0; u < n; ++u) by_unit += p.unit_richness(u, period);
      for (std::size_t e = 0; e < k; ++e) by_entity += p.slice(e, period).present;
      EXPECT_EQ(by_unit, by_entity);
    }
  }
}

TEST(PresenceTensor, SwapRolesExchangesAxes) {
  Gen g(7);
  const auto t = g.tensor(3, 4, 2);
  const auto s = t.swap_roles();
  EXPECT_EQ(s.entities(), t.units());
  EXPECT_EQ(s.units(), t.entities());
  for (std::size_t e = 0; e < 3; ++e)
    for (std::size_t u = 0; u < 4; ++u)
      for (std::size_t r = 0; r < 2; ++r) EXPECT_EQ(s.at(u, e, r), t.at(e, u, r));
  EXPECT_EQ(s.swap_roles(), t);
}
