#include "ligraph/model.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <tuple>
#include <utility>

namespace ligraph {

IntensityModel::IntensityModel(std::vector<double> baselines, std::vector<Multiplier> multipliers)
    : baselines_(std::move(baselines)), multipliers_(std::move(multipliers)), by_target_(baselines_.size()) {
  // Canonical order, so equality and the order of factors in rate() ignore input order.
  std::sort(multipliers_.begin(), multipliers_.end(),
            [](const Multiplier& x, const Multiplier& y) { return std::tie(x.from, x.to) < std::tie(y.from, y.to); });
  for (std::size_t k = 0; k < baselines_.size(); ++k) {
    if (!std::isfinite(baselines_[k]) || baselines_[k] < 0.0) {
      throw ModelError("baseline of mark " + std::to_string(k) + " must be finite and nonnegative");
    }
  }
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& m : multipliers_) {
    if (m.from >= baselines_.size() || m.to >= baselines_.size()) throw ModelError("multiplier refers to an unknown mark");
    if (!std::isfinite(m.factor) || m.factor <= 0.0) throw ModelError("multiplier factors must be finite and positive");
    if (m.cap < 1) throw ModelError("multiplier caps must be at least 1");
    if (!seen.emplace(m.from, m.to).second) {
      throw ModelError("duplicate multiplier " + std::to_string(m.from) + " -> " + std::to_string(m.to));
    }
    by_target_[m.to].push_back(m);
  }
}

double IntensityModel::rate(std::size_t k, std::span<const unsigned> counts) const {
  double r = baselines_.at(k);
  for (const auto& m : by_target_[k]) {
    const unsigned n = std::min(counts[m.from], m.cap);
    for (unsigned i = 0; i < n; ++i) r *= m.factor;
  }
  return r;
}

ModelValidation validate_model(const DynamicGraph& g, const IntensityModel& m) {
  ModelValidation out;
  if (m.num_marks() != g.universe_size()) {
    out.message = "model has " + std::to_string(m.num_marks()) + " marks, graph has " + std::to_string(g.universe_size());
    return out;
  }
  for (const auto& mult : m.multipliers()) {
    if (mult.factor == 1.0) continue;
    if (!closure(g, VertexSet::single(mult.to)).contains(mult.from)) {
      out.violations.push_back({mult.from, mult.to, mult.factor});
    }
  }
  return out;
}

void require_valid_model(const DynamicGraph& g, const IntensityModel& m) {
  const auto v = validate_model(g, m);
  if (v.ok()) return;
  std::string msg = v.message;
  for (const auto& x : v.violations) {
    if (!msg.empty()) msg += "; ";
    msg += "rate of '" + g.label(x.to) + "' depends on '" + g.label(x.from) + "', which is outside its closure";
  }
  throw ModelError("model is not faithful to the graph: " + msg);
}

IntensityModel make_model(const DynamicGraph& g, std::vector<double> baselines, std::vector<Multiplier> multipliers) {
  IntensityModel m(std::move(baselines), std::move(multipliers));
  require_valid_model(g, m);
  return m;
}

}  // namespace ligraph
