#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "firstfall/ring.hpp"

namespace firstfall {

inline constexpr const char* kToolVersion = "1.0.0";

struct ReportOptions {
  int bound = 20;
  double omega = 2.81;
  std::optional<std::uint64_t> seed;
  bool timings = true;
};

/// Every indicator, the syzygy profile up to the first fall, complexity rows
/// for the chosen omega and the omega = 2 comparison, annotations and caveats.
/// Affine input is reduced to its top homogeneous components first.
nlohmann::json build_report(const SystemInstance& sys, const ReportOptions& opt);

/// Canonical text of a report: two-space indentation and a trailing newline.
std::string dump_report(const nlohmann::json& report);

}  // namespace firstfall
