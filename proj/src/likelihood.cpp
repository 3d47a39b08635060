#include "ligraph/likelihood.hpp"

#include <cmath>
#include <stdexcept>

namespace ligraph {

namespace {

double window_end(const History& h, double t) {
  if (!(t >= 0.0) || t > h.horizon) throw std::invalid_argument("loglik: t must lie in [0, horizon]");
  return std::min(t, h.end());
}

void prepare(const IntensityModel& model, const DynamicGraph& g, const History& h) {
  require_valid_model(g, model);
  validate_history(g, h);
}

// Joint route over the marks in `marks`, reading every event of h.
LogLik joint(const IntensityModel& model, const DynamicGraph& g, const History& h, VertexSet marks, double t) {
  const double end = window_end(h, t);
  const auto ks = marks.indices();
  std::vector<unsigned> counts(g.universe_size(), 0);
  auto total_rate = [&] {
    double r = 0.0;
    for (auto k : ks) r += model.rate(k, counts);
    return r;
  };
  double events = 0.0;
  double exposure = 0.0;
  double prev = 0.0;
  for (const Event& e : h.events) {
    if (e.time > end) break;
    exposure += total_rate() * (e.time - prev);
    if (marks.contains(e.mark)) {
      const double r = model.rate(e.mark, counts);
      if (r <= 0.0) return LogLik::impossible();
      events += std::log(r);
    }
    ++counts[e.mark];
    prev = e.time;
  }
  exposure += total_rate() * (end - prev);
  return LogLik::of(events - exposure);
}

// Single-mark route on a history already restricted to cl(k).
MarkTerm mark_term(const IntensityModel& model, const DynamicGraph& g, const History& restricted, double t,
                   std::size_t k) {
  const double end = window_end(restricted, t);
  std::vector<unsigned> counts(g.universe_size(), 0);
  MarkTerm out;
  double prev = 0.0;
  for (const Event& e : restricted.events) {
    if (e.time > end) break;
    const double r = model.rate(k, counts);
    out.exposure_term += r * (e.time - prev);
    if (e.mark == k) {
      if (r <= 0.0) {
        out.impossible = true;
      } else {
        out.event_term += std::log(r);
      }
    }
    ++counts[e.mark];
    prev = e.time;
  }
  out.exposure_term += model.rate(k, counts) * (end - prev);
  return out;
}

MarkTerm mark_term_of(const IntensityModel& model, const DynamicGraph& g, const History& h, double t, std::size_t k) {
  return mark_term(model, g, restrict_history(h, closure(g, VertexSet::single(k))), t, k);
}

}  // namespace

LogLik loglik(const IntensityModel& model, const DynamicGraph& g, const History& h, double t) {
  prepare(model, g, h);
  return joint(model, g, h, g.vertices(), t);
}

LogLik mark_loglik(const IntensityModel& model, const DynamicGraph& g, const History& h, double t, std::size_t k) {
  prepare(model, g, h);
  if (!g.vertices().contains(k)) throw std::domain_error("mark_loglik: unknown mark");
  const MarkTerm term = mark_term_of(model, g, h, t, k);
  return term.impossible ? LogLik::impossible() : LogLik::of(term.total());
}

LogLikelihoodBreakdown loglik_breakdown(const IntensityModel& model, const DynamicGraph& g, const History& h, double t) {
  prepare(model, g, h);
  LogLikelihoodBreakdown out;
  out.per_mark.resize(g.universe_size());
  g.vertices().for_each([&](std::size_t k) {
    out.per_mark[k] = mark_term_of(model, g, h, t, k);
    out.impossible = out.impossible || out.per_mark[k].impossible;
    out.total += out.per_mark[k].total();
  });
  if (out.impossible) out.total = -std::numeric_limits<double>::infinity();
  return out;
}

LogLik marginal_ancestral_loglik(const IntensityModel& model, const DynamicGraph& g, const History& h, VertexSet a,
                                 double t) {
  prepare(model, g, h);
  const VertexSet s = ancestral_closure(g, a);
  return joint(model, g, restrict_history(h, s), s, t);
}

}  // namespace ligraph
