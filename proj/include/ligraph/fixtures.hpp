#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ligraph/graph.hpp"
#include "ligraph/model.hpp"
#include "ligraph/separation.hpp"

namespace ligraph {

struct FixtureAssertion {
  Query query;
  bool separated = false;  // expected delta-separation result
  std::string note;
};

struct Fixture {
  std::string name;
  std::string description;
  DynamicGraph graph;
  std::optional<IntensityModel> model;
  std::vector<FixtureAssertion> assertions;
};

// Built-in example graphs: "skin_disease", "home_visits",
// "chemo_reconstructed" and "chain".
const std::vector<Fixture>& builtin_fixtures();
// Throws std::out_of_range for an unknown name.
const Fixture& builtin_fixture(const std::string& name);

struct FixtureCheck {
  std::string fixture;
  FixtureAssertion assertion;
  bool moral = false;
  bool trail = false;
  bool passed() const { return moral == assertion.separated && trail == assertion.separated; }
};

struct FixtureReport {
  std::vector<FixtureCheck> checks;
  std::size_t failures() const;
  bool ok() const { return failures() == 0; }
};

// Evaluates every assertion of every built-in fixture with both algorithms.
FixtureReport run_fixtures();

}  // namespace ligraph
