#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ligraph/graph.hpp"
#include "ligraph/history.hpp"
#include "ligraph/model.hpp"
#include "ligraph/separation.hpp"
#include "ligraph/simulate.hpp"

namespace ligraph {

// Signature of the past used to stratify the rate of `target`: for each mark j
// of `conditioning` (which always contains the target), the number of past
// events of j, capped at caps[j]. A remainder stratum pools strata whose
// exposure fell below FitOptions::min_exposure.
struct Stratum {
  std::size_t target = 0;
  VertexSet conditioning;
  std::vector<unsigned> signature;  // one entry per member of `conditioning`, ascending
  bool remainder = false;
};

// Occurrence/exposure estimate for one stratum.
struct RateEstimate {
  Stratum stratum;
  std::size_t events = 0;
  double exposure = 0.0;

  bool defined() const { return exposure > 0.0; }
  // n / e; empty when the exposure is zero.
  std::optional<double> rate() const {
    if (!defined()) return std::nullopt;
    return static_cast<double>(events) / exposure;
  }
};

struct FitOptions {
  // caps[j] bounds the count of mark j in signatures; marks beyond the vector use 1.
  std::vector<unsigned> caps;
  // Strata with exposure below this are pooled into one remainder stratum.
  double min_exposure = 0.0;
};

// Closed-form MLE of a piecewise-constant rate for mark k, one estimate per
// signature of conditioning u {k} realized with positive exposure. The
// signatures partition each history's window [0, end()]. Throws
// std::domain_error on an empty history set.
std::vector<RateEstimate> fit_rates(std::span<const History> histories, std::size_t k, VertexSet conditioning,
                                    const FitOptions& options = {});

// Maximized log-likelihood of the stratified model: sum of n log(n/e) - n.
double stratified_loglik(std::span<const RateEstimate> estimates);

struct LrTestResult {
  double statistic = 0.0;  // 2 (loglik_alt - loglik_null)
  int df = 0;
  double p_value = 1.0;    // chi-square upper tail; 1 when untestable
  double loglik_null = 0.0;
  double loglik_alt = 0.0;
  bool testable = false;   // false when the alternative adds no realized strata

  bool rejects(double alpha) const { return testable && p_value < alpha; }
};

// Likelihood-ratio test of "candidate -/-> {k} | given". The null stratifies
// k's rate by given u {k}, the alternative by given u {k} u candidate.
// Requires candidate disjoint from given and k not in candidate.
LrTestResult lr_test(std::span<const History> histories, std::size_t k, VertexSet candidate, VertexSet given,
                     const FitOptions& options = {});

struct VerifyOptions {
  double alpha = 0.05;
  std::size_t test_sets = 200;  // independent simulated data sets per statement
  double min_exposure = 0.0;
};

struct AuditEntry {
  Query statement;       // candidate a, target b = {k}, conditioning c
  std::string kind;      // "local", "separator", "near-miss" or "pairwise"
  bool implied = false;  // delta-separation holds
  std::size_t tests = 0;       // testable data sets
  std::size_t untestable = 0;  // data sets where the alternative added no strata
  std::size_t rejections = 0;
  std::optional<double> rejection_rate;  // empty when never testable
  double band_low = 0.0;  // implied: alpha +- 3 binomial SE; otherwise [alpha + 3 SE, 1]
  double band_high = 1.0;
  bool within_band() const {
    return rejection_rate && *rejection_rate >= band_low && *rejection_rate <= band_high;
  }
};

struct VerifyReport {
  double alpha = 0.05;
  std::size_t test_sets = 0;
  std::size_t histories_per_set = 0;
  std::vector<AuditEntry> entries;
};

// Statements audited by verify_graph(): every local statement, and for each
// ordered pair (j, k) every minimal separator C of {j} from {k} (implied),
// each C minus one vertex that no longer separates (near-miss, not implied),
// or the pairwise statement when no separator exists (not implied).
std::vector<AuditEntry> audit_statements(const DynamicGraph& g);

// Simulates options.test_sets data sets of cfg.replicates histories each
// (data set s uses master seed substream_seed(cfg.seed, s)) and runs the LR
// test of every audit statement on each, counting rejections at options.alpha.
// Signature caps for target k follow the model's multiplier caps into k.
VerifyReport verify_graph(const DynamicGraph& g, const IntensityModel& model, const SimulationConfig& cfg,
                          const VerifyOptions& options = {});

}  // namespace ligraph
