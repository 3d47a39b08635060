#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "ligraph/graph.hpp"
#include "ligraph/history.hpp"
#include "ligraph/model.hpp"

namespace ligraph {

struct SimulationConfig {
  double horizon = 1.0;
  std::uint64_t seed = 0;
  std::size_t replicates = 1;
};

// SplitMix64 finalizer.
std::uint64_t splitmix64(std::uint64_t x);

// Seed of substream `index` under master seed `seed`:
//   splitmix64(seed + (index + 1) * 0x9E3779B97F4A7C15).
std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index);

// mt19937_64 plus distribution code written out here so that draws do not
// depend on the standard library's distribution implementations.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}
  // Uniform on the open interval (0, 1), 53-bit resolution.
  double uniform() { return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53; }
  double exponential(double rate) { return -std::log(uniform()) / rate; }

 private:
  std::mt19937_64 engine_;
};

// Competing-exponentials simulation of one history: with rates r_k held
// constant since the last event, the next event comes after Exp(sum r_k) and
// carries mark k with probability r_k / sum r_k. Stops at the horizon or at the
// first absorbing event, which sets stopped_at. When all rates are zero the
// history simply runs to the horizon.
History simulate_one(const DynamicGraph& g, const IntensityModel& model, double horizon, RandomStream& rng);

// Replicate i draws from RandomStream(substream_seed(cfg.seed, i)); output is
// identical for any thread count.
std::vector<History> simulate(const DynamicGraph& g, const IntensityModel& model, const SimulationConfig& cfg);

}  // namespace ligraph
