#include "ligraph/simulate.hpp"

#include <cmath>
#include <stdexcept>

#include "ligraph/parallel.hpp"

namespace ligraph {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(seed + (index + 1) * 0x9E3779B97F4A7C15ULL);
}

History simulate_one(const DynamicGraph& g, const IntensityModel& model, double horizon, RandomStream& rng) {
  if (!(horizon > 0.0) || !std::isfinite(horizon)) throw std::invalid_argument("horizon must be positive and finite");
  const std::size_t n = g.universe_size();
  const auto marks = g.vertices().indices();
  std::vector<unsigned> counts(n, 0);
  std::vector<double> rates(n, 0.0);
  History h;
  h.horizon = horizon;
  double t = 0.0;
  while (true) {
    double total = 0.0;
    for (auto k : marks) {
      rates[k] = model.rate(k, counts);
      if (!std::isfinite(rates[k])) throw ModelError("non-finite rate for mark '" + g.label(k) + "'");
      total += rates[k];
    }
    if (!std::isfinite(total)) throw ModelError("total rate overflowed");
    if (total <= 0.0) break;
    double next = t;
    while (next == t) next = t + rng.exponential(total);  // redraw on an exact tie
    if (next > horizon) break;
    double pick = rng.uniform() * total;
    // Default covers rounding that leaves `pick` past the last positive rate.
    std::size_t mark = marks.front();
    for (auto k : marks) {
      if (rates[k] > 0.0) mark = k;
    }
    for (auto k : marks) {
      if (rates[k] <= 0.0) continue;
      if (pick < rates[k]) {
        mark = k;
        break;
      }
      pick -= rates[k];
    }
    t = next;
    h.events.push_back({t, mark});
    ++counts[mark];
    if (g.absorbing().contains(mark)) {
      h.stopped_at = t;
      break;
    }
  }
  return h;
}

std::vector<History> simulate(const DynamicGraph& g, const IntensityModel& model, const SimulationConfig& cfg) {
  require_valid_model(g, model);
  if (!(cfg.horizon > 0.0)) throw std::invalid_argument("horizon must be positive");
  std::vector<History> out(cfg.replicates);
  parallel_for(cfg.replicates, [&](std::size_t i) {
    RandomStream rng(substream_seed(cfg.seed, i));
    out[i] = simulate_one(g, model, cfg.horizon, rng);
  });
  return out;
}

}  // namespace ligraph
