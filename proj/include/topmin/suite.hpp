// Seeded property suite covering every checkable claim at desk scale.
// Same RunConfig, same report bytes.
#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "topmin/io.hpp"
#include "topmin/piece_catalog.hpp"

namespace topmin {

struct RunConfig {
  std::uint64_t seed = 20240917;
  /// Overrides every randomized case count when positive.
  int counts = 0;
  bool json = false;
};

struct PropertyResult {
  std::string id;
  std::string title;
  std::size_t cases = 0;
  std::size_t passed = 0;
  /// Case descriptions and archived witnesses for failed cases.
  std::vector<std::string> failures;

  bool pass() const { return cases == passed && failures.empty(); }
};

struct SuiteReport {
  RunConfig config;
  std::vector<PropertyResult> properties;

  bool pass() const;
  std::string to_text() const;
  Json to_json() const;
};

PropertyResult sphere_ladder_property(const RunConfig& cfg);
PropertyResult milnor_property(const RunConfig& cfg);
PropertyResult index_additivity_property(const RunConfig& cfg);
PropertyResult census_property(const RunConfig& cfg);
PropertyResult dichotomy_property(const RunConfig& cfg);
PropertyResult width_descent_property(const RunConfig& cfg);
PropertyResult constructions_property(const RunConfig& cfg);
PropertyResult catalog_property(std::span<const LocalPiece> pieces);

/// The census configurations: (label, configuration, expected index sum).
struct CensusCase {
  std::string label;
  SurfaceConfiguration config;
  int expected;
};
std::vector<CensusCase> census_cases();

SuiteReport run_suite(const RunConfig& cfg, std::span<const LocalPiece> pieces);
SuiteReport run_suite(const RunConfig& cfg);

}  // namespace topmin
