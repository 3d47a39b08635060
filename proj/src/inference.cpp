#include "ligraph/inference.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <tuple>

#include <boost/math/special_functions/gamma.hpp>

#include "ligraph/markov.hpp"
#include "ligraph/parallel.hpp"

namespace ligraph {

namespace {

struct Tally {
  std::size_t events = 0;
  double exposure = 0.0;
};

unsigned cap_of(const FitOptions& o, std::size_t mark) {
  return mark < o.caps.size() ? std::max(1U, o.caps[mark]) : 1U;
}

}  // namespace

std::vector<RateEstimate> fit_rates(std::span<const History> histories, std::size_t k, VertexSet conditioning,
                                    const FitOptions& options) {
  if (histories.empty()) throw std::domain_error("fit_rates: no histories");
  const VertexSet cond = conditioning.with(k);
  const auto marks = cond.indices();
  std::vector<std::size_t> slot(kMaxVertices, SIZE_MAX);
  for (std::size_t i = 0; i < marks.size(); ++i) slot[marks[i]] = i;

  std::map<std::vector<unsigned>, Tally> strata;
  std::vector<unsigned> sig(marks.size());
  for (const History& h : histories) {
    std::fill(sig.begin(), sig.end(), 0U);
    const double end = h.end();
    double prev = 0.0;
    for (const Event& e : h.events) {
      if (e.time > end) break;
      Tally& cur = strata[sig];
      cur.exposure += e.time - prev;
      if (e.mark == k) ++cur.events;
      if (e.mark < kMaxVertices && slot[e.mark] != SIZE_MAX) {
        unsigned& c = sig[slot[e.mark]];
        c = std::min(c + 1, cap_of(options, e.mark));
      }
      prev = e.time;
    }
    strata[sig].exposure += end - prev;
  }

  std::vector<RateEstimate> out;
  Tally pooled;
  bool any_pooled = false;
  for (const auto& [signature, tally] : strata) {
    if (tally.exposure <= 0.0 && tally.events == 0) continue;
    if (tally.exposure < options.min_exposure) {
      pooled.events += tally.events;
      pooled.exposure += tally.exposure;
      any_pooled = true;
      continue;
    }
    out.push_back({{k, cond, signature, false}, tally.events, tally.exposure});
  }
  if (any_pooled && (pooled.exposure > 0.0 || pooled.events > 0)) {
    out.push_back({{k, cond, {}, true}, pooled.events, pooled.exposure});
  }
  return out;
}

double stratified_loglik(std::span<const RateEstimate> estimates) {
  double ll = 0.0;
  for (const auto& est : estimates) {
    if (est.events == 0) continue;
    if (est.exposure <= 0.0) return -std::numeric_limits<double>::infinity();
    const double n = static_cast<double>(est.events);
    ll += n * std::log(n / est.exposure) - n;
  }
  return ll;
}

LrTestResult lr_test(std::span<const History> histories, std::size_t k, VertexSet candidate, VertexSet given,
                     const FitOptions& options) {
  if (candidate.intersects(given)) throw std::invalid_argument("lr_test: candidate and given must be disjoint");
  if (candidate.contains(k)) throw std::invalid_argument("lr_test: the target cannot be a candidate");
  const auto null_fit = fit_rates(histories, k, given, options);
  const auto alt_fit = fit_rates(histories, k, given | candidate, options);
  LrTestResult r;
  r.loglik_null = stratified_loglik(null_fit);
  r.loglik_alt = stratified_loglik(alt_fit);
  r.statistic = 2.0 * (r.loglik_alt - r.loglik_null);
  r.df = static_cast<int>(alt_fit.size()) - static_cast<int>(null_fit.size());
  r.testable = r.df > 0;
  if (r.testable) {
    r.p_value = boost::math::gamma_q(0.5 * r.df, 0.5 * std::max(0.0, r.statistic));
  }
  return r;
}

std::vector<AuditEntry> audit_statements(const DynamicGraph& g) {
  std::vector<AuditEntry> out;
  auto add = [&](Query q, std::string kind, bool implied) {
    for (const auto& e : out) {
      if (e.statement == q) return;
    }
    AuditEntry e;
    e.statement = q;
    e.kind = std::move(kind);
    e.implied = implied;
    out.push_back(std::move(e));
  };
  for (const auto& s : local_statements(g)) add(s.query(), "local", true);
  const VertexSet v = g.vertices();
  v.for_each([&](std::size_t j) {
    v.for_each([&](std::size_t k) {
      if (j == k) return;
      const VertexSet a = VertexSet::single(j);
      const VertexSet b = VertexSet::single(k);
      const VertexSet within = v - (a | b);
      if (within.size() > kMaxSeparatorSearch) return;
      const auto seps = minimal_separators(g, a, b, within);
      if (seps.empty()) {
        add({a, b, within}, "pairwise", delta_separated_moral(g, {a, b, within}));
        return;
      }
      for (auto c : seps) add({a, b, c}, "separator", true);
      for (auto c : seps) {
        c.for_each([&](std::size_t x) {
          const VertexSet smaller = c.without(x);
          if (!delta_separated_moral(g, {a, b, smaller})) add({a, b, smaller}, "near-miss", false);
        });
      }
    });
  });
  return out;
}

VerifyReport verify_graph(const DynamicGraph& g, const IntensityModel& model, const SimulationConfig& cfg,
                          const VerifyOptions& options) {
  require_valid_model(g, model);
  if (options.test_sets == 0 || cfg.replicates == 0) throw std::invalid_argument("verify: nothing to simulate");
  VerifyReport report;
  report.alpha = options.alpha;
  report.test_sets = options.test_sets;
  report.histories_per_set = cfg.replicates;
  report.entries = audit_statements(g);

  // Per target, cap each mark's count at the model's cap for its effect on the target.
  std::vector<FitOptions> fit(g.universe_size());
  for (std::size_t k = 0; k < g.universe_size(); ++k) {
    fit[k].min_exposure = options.min_exposure;
    fit[k].caps.assign(g.universe_size(), 1U);
    for (const auto& m : model.multipliers_into(k)) fit[k].caps[m.from] = m.cap;
  }

  const std::size_t n_entries = report.entries.size();
  // outcome[s * n_entries + i]: 0 untestable, 1 accepted, 2 rejected
  std::vector<unsigned char> outcome(options.test_sets * n_entries, 0);
  parallel_for(options.test_sets, [&](std::size_t s) {
    const std::uint64_t set_seed = substream_seed(cfg.seed, s);
    std::vector<History> data(cfg.replicates);
    for (std::size_t i = 0; i < cfg.replicates; ++i) {
      RandomStream rng(substream_seed(set_seed, i));
      data[i] = simulate_one(g, model, cfg.horizon, rng);
    }
    for (std::size_t e = 0; e < n_entries; ++e) {
      const Query& q = report.entries[e].statement;
      const std::size_t k = q.b.first();
      const auto r = lr_test(data, k, q.a, q.c, fit[k]);
      outcome[s * n_entries + e] = r.testable ? (r.rejects(options.alpha) ? 2 : 1) : 0;
    }
  });

  for (std::size_t e = 0; e < n_entries; ++e) {
    AuditEntry& entry = report.entries[e];
    for (std::size_t s = 0; s < options.test_sets; ++s) {
      const auto o = outcome[s * n_entries + e];
      if (o == 0) {
        ++entry.untestable;
      } else {
        ++entry.tests;
        if (o == 2) ++entry.rejections;
      }
    }
    if (entry.tests == 0) continue;
    entry.rejection_rate = static_cast<double>(entry.rejections) / static_cast<double>(entry.tests);
    const double se = std::sqrt(options.alpha * (1.0 - options.alpha) / static_cast<double>(entry.tests));
    if (entry.implied) {
      entry.band_low = std::max(0.0, options.alpha - 3.0 * se);
      entry.band_high = std::min(1.0, options.alpha + 3.0 * se);
    } else {
      entry.band_low = std::min(1.0, options.alpha + 3.0 * se);
      entry.band_high = 1.0;
    }
  }
  return report;
}

}  // namespace ligraph
