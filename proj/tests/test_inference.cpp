#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "ligraph/fixtures.hpp"
#include "ligraph/inference.hpp"
#include "ligraph/simulate.hpp"

using namespace ligraph;

namespace {

const DynamicGraph single_mark({"x"}, {});
const DynamicGraph two_node({"j", "k"}, {{0, 1}});

double total_window(const std::vector<History>& hs) {
  double s = 0.0;
  for (const auto& h : hs) s += h.end();
  return s;
}

double rejection_rate(const DynamicGraph& g, const IntensityModel& m, std::size_t k, VertexSet cand, VertexSet given,
                      std::size_t sets, std::size_t per_set, double horizon, std::uint64_t seed) {
  std::size_t rejected = 0, tested = 0;
  for (std::size_t s = 0; s < sets; ++s) {
    const auto hs = simulate(g, m, {horizon, substream_seed(seed, s), per_set});
    const auto r = lr_test(hs, k, cand, given);
    if (!r.testable) continue;
    ++tested;
    rejected += r.rejects(0.05);
  }
  return tested == 0 ? -1.0 : static_cast<double>(rejected) / static_cast<double>(tested);
}

}  // namespace

TEST(FitRates, PooledPoissonRate) {
  const auto hs = simulate(single_mark, IntensityModel({2.0}, {}), {5.0, 1, 10000});
  const auto est = fit_rates(hs, 0, {});
  // Signature is the capped count of x itself: before and after its first event.
  double n = 0, e = 0;
  for (const auto& r : est) {
    n += static_cast<double>(r.events);
    e += r.exposure;
  }
  EXPECT_NEAR(n / e, 2.0, 0.05);
}

TEST(FitRates, EmptyInputIsDomainError) {
  EXPECT_THROW(fit_rates(std::vector<History>{}, 0, {}), std::domain_error);
}

TEST(FitRates, UnrealizedSignaturesAreNotEmitted) {
  // j never fires: only signatures with j = 0 can appear.
  const auto hs = simulate(two_node, IntensityModel({0.0, 1.0}, {{0, 1, 4.0, 1}}), {5.0, 3, 200});
  for (const auto& r : fit_rates(hs, 1, VertexSet::of({0}))) {
    EXPECT_EQ(r.stratum.signature[0], 0U);
    EXPECT_TRUE(r.defined());
    EXPECT_TRUE(r.rate().has_value());
  }
  const RateEstimate undefined{{1, {}, {}, false}, 0, 0.0};
  EXPECT_FALSE(undefined.rate().has_value());
}

TEST(FitRates, ExposureAccountsForEveryHistoryWindow) {
  for (const auto& f : builtin_fixtures()) {
    const auto hs = simulate(f.graph, *f.model, {10.0, 9, 300});
    f.graph.vertices().for_each([&](std::size_t k) {
      for (VertexSet cond : {VertexSet{}, f.graph.vertices().without(k), parents(f.graph, VertexSet::single(k))}) {
        double exposure = 0.0;
        std::size_t events = 0;
        for (const auto& r : fit_rates(hs, k, cond)) {
          exposure += r.exposure;
          events += r.events;
        }
        EXPECT_NEAR(exposure, total_window(hs), 1e-9 * total_window(hs));
        std::size_t truth = 0;
        for (const auto& h : hs) {
          for (const auto& e : h.events) truth += e.mark == k;
        }
        EXPECT_EQ(events, truth);
      }
    });
  }
}

TEST(FitRates, RemainderPoolsSmallStrata) {
  const auto& f = builtin_fixture("chemo_reconstructed");
  const auto hs = simulate(f.graph, *f.model, {10.0, 4, 200});
  const VertexSet cond = f.graph.vertices().without(0);
  FitOptions opts;
  opts.min_exposure = 50.0;
  const auto pooled = fit_rates(hs, 0, cond, opts);
  const auto full = fit_rates(hs, 0, cond);
  EXPECT_LT(pooled.size(), full.size());
  EXPECT_TRUE(pooled.back().stratum.remainder);
  double a = 0, b = 0;
  for (const auto& r : pooled) a += r.exposure;
  for (const auto& r : full) b += r.exposure;
  EXPECT_NEAR(a, b, 1e-9 * b);
}

TEST(FitRates, StandardErrorShrinksWithSampleSize) {
  const IntensityModel m({2.0}, {});
  auto spread = [&](std::size_t n, std::uint64_t seed) {
    std::vector<double> rates;
    for (std::size_t s = 0; s < 200; ++s) {
      const auto hs = simulate(single_mark, m, {1.0, substream_seed(seed, s), n});
      double ev = 0, ex = 0;
      for (const auto& r : fit_rates(hs, 0, {})) {
        ev += static_cast<double>(r.events);
        ex += r.exposure;
      }
      rates.push_back(ev / ex);
    }
    const double mean = std::accumulate(rates.begin(), rates.end(), 0.0) / static_cast<double>(rates.size());
    double v = 0.0;
    for (double r : rates) v += (r - mean) * (r - mean);
    return std::sqrt(v / static_cast<double>(rates.size() - 1));
  };
  const double ratio = spread(50, 1) / spread(500, 2);
  EXPECT_NEAR(ratio, std::sqrt(10.0), 0.3 * std::sqrt(10.0));
}

TEST(LrTest, StatisticIsNonNegative) {
  for (const auto& f : builtin_fixtures()) {
    for (std::size_t s = 0; s < 20; ++s) {
      const auto hs = simulate(f.graph, *f.model, {10.0, s, 100});
      f.graph.vertices().for_each([&](std::size_t k) {
        const VertexSet others = f.graph.vertices().without(k);
        for_each_subset(others, [&](VertexSet cand) {
          const auto r = lr_test(hs, k, cand, {});
          EXPECT_GE(r.statistic, -1e-9);
          EXPECT_GE(r.p_value, 0.0);
          EXPECT_LE(r.p_value, 1.0);
        });
      });
    }
  }
}

TEST(LrTest, IdenticalModelsAreUntestable) {
  const auto hs = simulate(two_node, IntensityModel({1.0, 1.0}, {{0, 1, 4.0, 1}}), {5.0, 2, 100});
  const auto r = lr_test(hs, 1, {}, VertexSet::of({0}));
  EXPECT_EQ(r.statistic, 0.0);
  EXPECT_EQ(r.df, 0);
  EXPECT_FALSE(r.testable);
  EXPECT_FALSE(r.rejects(0.05));
}

TEST(LrTest, RejectsInvalidArguments) {
  const auto hs = simulate(two_node, IntensityModel({1.0, 1.0}, {}), {5.0, 2, 10});
  EXPECT_THROW(lr_test(hs, 1, VertexSet::of({0}), VertexSet::of({0})), std::invalid_argument);
  EXPECT_THROW(lr_test(hs, 1, VertexSet::of({1}), {}), std::invalid_argument);
}

TEST(LrTest, CalibratedUnderIrrelevantCandidate) {
  const IntensityModel m({0.3, 0.3}, {});
  const double rate = rejection_rate(two_node, m, 1, VertexSet::of({0}), {}, 1000, 100, 5.0, 41);
  EXPECT_GE(rate, 0.02);
  EXPECT_LE(rate, 0.08);
}

TEST(LrTest, AsymmetryOnSingleEdge) {
  const IntensityModel m({0.3, 0.2}, {{0, 1, 4.0, 1}});
  // k depends on j ...
  EXPECT_GE(rejection_rate(two_node, m, 1, VertexSet::of({0}), {}, 100, 300, 5.0, 3), 0.8);
  // ... but j does not depend on k.
  const double back = rejection_rate(two_node, m, 0, VertexSet::of({1}), {}, 400, 300, 5.0, 4);
  EXPECT_GE(back, 0.01);
  EXPECT_LE(back, 0.1);
}

TEST(Audit, StatementsCoverLocalSeparatorsAndNearMisses) {
  const auto& g = builtin_fixture("home_visits").graph;
  const auto entries = audit_statements(g);
  auto find = [&](Query q) {
    for (const auto& e : entries) {
      if (e.statement == q) return &e;
    }
    return static_cast<const AuditEntry*>(nullptr);
  };
  const auto* implied = find({g.set_of({"vi"}), g.set_of({"d"}), g.set_of({"ho", "hs"})});
  ASSERT_NE(implied, nullptr);
  EXPECT_TRUE(implied->implied);
  const auto* near = find({g.set_of({"vi"}), g.set_of({"d"}), g.set_of({"ho"})});
  ASSERT_NE(near, nullptr);
  EXPECT_FALSE(near->implied);
  for (const auto& e : entries) EXPECT_EQ(e.implied, delta_separated_moral(g, e.statement));
}

TEST(Verify, HomeVisitsImpliedAndSpuriousDependence) {
  const auto& f = builtin_fixture("home_visits");
  const auto& g = f.graph;
  const auto report = verify_graph(g, *f.model, {10.0, 2024, 500}, {0.05, 200, 0.0});
  for (const auto& e : report.entries) {
    if (e.statement == Query{g.set_of({"vi"}), g.set_of({"d"}), g.set_of({"ho", "hs"})}) {
      EXPECT_TRUE(e.within_band()) << *e.rejection_rate;
    }
    if (e.statement == Query{g.set_of({"vi"}), g.set_of({"d"}), g.set_of({"ho"})}) {
      ASSERT_TRUE(e.rejection_rate.has_value());
      EXPECT_GE(*e.rejection_rate, 0.8);
    }
  }
}

TEST(Verify, UnitMultipliersRejectNothingBeyondBand) {
  const auto& g = builtin_fixture("chain").graph;
  const IntensityModel flat({0.3, 0.3, 0.3}, {});
  const VerifyOptions opts{0.05, 300, 0.0};
  const auto report = verify_graph(g, flat, {5.0, 5, 100}, opts);
  for (const auto& e : report.entries) {
    if (!e.rejection_rate) continue;
    const double se = std::sqrt(0.05 * 0.95 / static_cast<double>(e.tests));
    EXPECT_LE(*e.rejection_rate, 0.05 + 3 * se);
  }
}

TEST(Verify, DeterministicForAnyThreadCount) {
  const auto& f = builtin_fixture("chain");
  auto rates = [&] {
    std::vector<std::size_t> out;
    for (const auto& e : verify_graph(f.graph, *f.model, {10.0, 1, 100}, {0.05, 20, 0.0}).entries) out.push_back(e.rejections);
    return out;
  };
  const auto a = rates();
  ::setenv("LIGRAPH_THREADS", "2", 1);
  const auto b = rates();
  ::unsetenv("LIGRAPH_THREADS");
  EXPECT_EQ(a, b);
}
