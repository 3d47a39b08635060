#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ligraph/graph.hpp"

namespace ligraph {

class ModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Rate of mark `to` is multiplied by `factor` for each past occurrence of
// `from`, counting at most `cap` occurrences.
struct Multiplier {
  std::size_t from = 0;
  std::size_t to = 0;
  double factor = 1.0;
  unsigned cap = 1;
  friend bool operator==(const Multiplier&, const Multiplier&) = default;
};

// Piecewise-constant intensities:
//   rate_k(H) = baseline_k * prod_j factor_jk ^ min(count_j(H), cap_jk).
// Rates change only at event times.
class IntensityModel {
 public:
  IntensityModel() = default;
  // Checks shapes and values only (baselines >= 0 and finite, factors > 0 and
  // finite, caps >= 1, no duplicate (from, to)); graph faithfulness is checked
  // by validate_model().
  IntensityModel(std::vector<double> baselines, std::vector<Multiplier> multipliers);

  std::size_t num_marks() const { return baselines_.size(); }
  double baseline(std::size_t k) const { return baselines_.at(k); }
  const std::vector<double>& baselines() const { return baselines_; }
  // Sorted by (from, to).
  const std::vector<Multiplier>& multipliers() const { return multipliers_; }
  // Multipliers acting on mark k, sorted by source.
  const std::vector<Multiplier>& multipliers_into(std::size_t k) const { return by_target_.at(k); }

  // counts[j] = number of past events of mark j.
  double rate(std::size_t k, std::span<const unsigned> counts) const;

  friend bool operator==(const IntensityModel& a, const IntensityModel& b) {
    return a.baselines_ == b.baselines_ && a.multipliers_ == b.multipliers_;
  }

 private:
  std::vector<double> baselines_;
  std::vector<Multiplier> multipliers_;
  std::vector<std::vector<Multiplier>> by_target_;
};

struct ModelViolation {
  std::size_t from = 0;
  std::size_t to = 0;
  double factor = 1.0;
};

struct ModelValidation {
  std::vector<ModelViolation> violations;
  std::string message;  // empty when ok
  bool ok() const { return violations.empty() && message.empty(); }
};

// Checks that the model covers exactly the graph's marks and that every
// multiplier with factor != 1 reads from the closure of its target.
ModelValidation validate_model(const DynamicGraph& g, const IntensityModel& m);

// Throws ModelError unless validate_model(g, m) is ok.
void require_valid_model(const DynamicGraph& g, const IntensityModel& m);

// Builds a model and rejects any dependence outside cl(k).
IntensityModel make_model(const DynamicGraph& g, std::vector<double> baselines, std::vector<Multiplier> multipliers);

}  // namespace ligraph
