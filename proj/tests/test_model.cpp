#include <gtest/gtest.h>

#include <cmath>

#include "ligraph/fixtures.hpp"
#include "ligraph/model.hpp"

using namespace ligraph;

namespace {
const DynamicGraph& home() { return builtin_fixture("home_visits").graph; }
}  // namespace

TEST(IntensityModel, RateAppliesCappedMultipliers) {
  const IntensityModel m({1.5, 2.0}, {{0, 1, 3.0, 2}, {1, 1, 0.5, 1}});
  const std::vector<unsigned> none{0, 0}, one{1, 0}, many{5, 4};
  EXPECT_DOUBLE_EQ(m.rate(1, none), 2.0);
  EXPECT_DOUBLE_EQ(m.rate(1, one), 6.0);
  EXPECT_DOUBLE_EQ(m.rate(1, many), 2.0 * 9.0 * 0.5);
  EXPECT_DOUBLE_EQ(m.rate(0, many), 1.5);
}

TEST(IntensityModel, RejectsBadParameters) {
  EXPECT_THROW(IntensityModel({-1.0}, {}), ModelError);
  EXPECT_THROW(IntensityModel({NAN}, {}), ModelError);
  EXPECT_THROW(IntensityModel({1.0, 1.0}, {{0, 1, 0.0, 1}}), ModelError);
  EXPECT_THROW(IntensityModel({1.0, 1.0}, {{0, 1, 2.0, 0}}), ModelError);
  EXPECT_THROW(IntensityModel({1.0, 1.0}, {{0, 1, 2.0, 1}, {0, 1, 3.0, 1}}), ModelError);
  EXPECT_THROW(IntensityModel({1.0, 1.0}, {{0, 2, 2.0, 1}}), ModelError);
  EXPECT_NO_THROW(IntensityModel({0.0, 1.0}, {}));
}

TEST(IntensityModel, EqualityIgnoresMultiplierOrder) {
  const IntensityModel x({1, 1, 1}, {{0, 1, 2.0, 1}, {1, 2, 3.0, 1}});
  const IntensityModel y({1, 1, 1}, {{1, 2, 3.0, 1}, {0, 1, 2.0, 1}});
  EXPECT_EQ(x, y);
}

TEST(ValidateModel, FlagsDependenceOutsideClosure) {
  const auto& g = home();
  const IntensityModel m({1, 1, 1, 1}, {{g.index_of("vi"), g.index_of("d"), 2.0, 1}});
  const auto v = validate_model(g, m);
  ASSERT_FALSE(v.ok());
  ASSERT_EQ(v.violations.size(), 1U);
  EXPECT_EQ(v.violations[0].from, g.index_of("vi"));
  EXPECT_EQ(v.violations[0].to, g.index_of("d"));
  EXPECT_THROW(require_valid_model(g, m), ModelError);
}

TEST(ValidateModel, UnitMultipliersAreAlwaysFine) {
  const auto& g = home();
  std::vector<Multiplier> all;
  for (std::size_t j = 0; j < 4; ++j) {
    for (std::size_t k = 0; k < 4; ++k) all.push_back({j, k, 1.0, 1});
  }
  EXPECT_TRUE(validate_model(g, IntensityModel({1, 1, 1, 1}, all)).ok());
}

TEST(ValidateModel, SelfMultipliersAreLegal) {
  const auto& g = home();
  EXPECT_TRUE(validate_model(g, IntensityModel({1, 1, 1, 1}, {{0, 0, 2.0, 3}})).ok());
}

TEST(ValidateModel, MarkCountMismatch) {
  EXPECT_FALSE(validate_model(home(), IntensityModel({1, 1}, {})).ok());
}

TEST(MakeModel, ConstructorEnforcesFaithfulness) {
  const auto& g = home();
  EXPECT_THROW(make_model(g, {1, 1, 1, 1}, {{g.index_of("vi"), g.index_of("d"), 2.0, 1}}), ModelError);
  for (const auto& f : builtin_fixtures()) {
    ASSERT_TRUE(f.model.has_value());
    EXPECT_TRUE(validate_model(f.graph, *f.model).ok()) << f.name;
  }
}

TEST(Fixtures, ModelsHaveNonUnitMultiplierOnEveryEdge) {
  for (const auto& f : builtin_fixtures()) {
    for (const auto& [j, k] : f.graph.edges()) {
      bool found = false;
      for (const auto& m : f.model->multipliers_into(k)) found = found || (m.from == j && m.factor != 1.0);
      EXPECT_TRUE(found) << f.name << ": " << f.graph.label(j) << " -> " << f.graph.label(k);
    }
  }
}
