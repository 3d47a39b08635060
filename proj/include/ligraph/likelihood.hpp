#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "ligraph/graph.hpp"
#include "ligraph/history.hpp"
#include "ligraph/model.hpp"

namespace ligraph {

// A log-likelihood value, or the distinguished "impossible history" result
// when some event occurred while the model gave its mark rate zero.
class LogLik {
 public:
  static LogLik of(double v) { return LogLik(v, false); }
  static LogLik impossible() { return LogLik(-std::numeric_limits<double>::infinity(), true); }

  bool is_impossible() const { return impossible_; }
  // -infinity when impossible.
  double value() const { return value_; }

 private:
  LogLik(double v, bool impossible) : value_(v), impossible_(impossible) {}
  double value_;
  bool impossible_;
};

struct MarkTerm {
  double event_term = 0.0;     // sum of log rates at the mark's events
  double exposure_term = 0.0;  // integral of the mark's rate (entered with a minus sign)
  bool impossible = false;
  double total() const { return event_term - exposure_term; }
};

struct LogLikelihoodBreakdown {
  double total = 0.0;
  std::vector<MarkTerm> per_mark;  // indexed by mark; zero terms for marks outside the graph
  bool impossible = false;
};

// log L(t | H_t) = sum over events up to t of log rate_{mark}(event time)
//                  - integral_0^{min(t, stopped_at)} sum_k rate_k(s) ds,
// computed jointly over all marks with the integral taken segment by segment.
// Requires t <= horizon; throws std::invalid_argument otherwise.
LogLik loglik(const IntensityModel& model, const DynamicGraph& g, const History& h, double t);

// Mark-specific term L_k(t | H_t), evaluated on H restricted to cl(k). The
// result is therefore bit-identical whether h is the full history or any
// restriction of it containing cl(k).
LogLik mark_loglik(const IntensityModel& model, const DynamicGraph& g, const History& h, double t, std::size_t k);

LogLikelihoodBreakdown loglik_breakdown(const IntensityModel& model, const DynamicGraph& g, const History& h, double t);

// Joint log-likelihood of the marks in S = An(a), computed on H restricted to
// S as if the marks outside S did not exist. S is ancestral, so none of its
// rates read marks outside it.
LogLik marginal_ancestral_loglik(const IntensityModel& model, const DynamicGraph& g, const History& h, VertexSet a,
                                 double t);

}  // namespace ligraph
