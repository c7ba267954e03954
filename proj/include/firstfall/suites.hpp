#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "firstfall/ring.hpp"

namespace firstfall {

struct SuiteOptions {
  int trials = 100;
  std::uint64_t seed = 7;
  int bound = 12;
  int jobs = 1;
};

/// One generated instance and the indicator values observed on it.
struct TrialRecord {
  int index = 0;
  std::uint64_t seed = 0;
  std::string shape;
  std::vector<std::pair<std::string, std::string>> values;
  bool applicable = false;  ///< the property's hypothesis held
  bool violation = false;
  std::string note;
};

struct SuiteResult {
  std::string name;
  int trials = 0;
  int applicable = 0;
  int violations = 0;
  double seconds = 0;
  std::vector<TrialRecord> records;  ///< sorted by seed

  bool passed() const noexcept { return violations == 0; }
  std::string csv() const;
  nlohmann::json summary() const;
};

/// Suites: thm5, thm8, prop3, diem, regular, gb, constructions.
std::vector<std::string> suite_names();
SuiteResult run_suite(const std::string& name, const SuiteOptions& opt);

/// Random homogeneous system with h_last = l * h_first for a random linear
/// form l, so a non-Koszul syzygy sits in degree deg(h_first) + 1.
SystemInstance planted_dependency_system(const RingSpec& r, const std::vector<MultiDegree>& mdegs, std::uint64_t seed);

}  // namespace firstfall
