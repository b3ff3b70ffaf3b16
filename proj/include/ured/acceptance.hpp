#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace ured {

struct criterion_result {
  int id = 0;
  std::string name;
  bool passed = false;
  bool runtime_ok = true;
  double limit_seconds = 0;    // 0 = no limit for this criterion
  double elapsed_seconds = 0;  // reported on stderr only, never serialized
  nlohmann::json details;      // deterministic numbers backing the verdict
};

struct acceptance_report {
  std::uint64_t seed = 0;
  bool all_passed = false;
  std::vector<criterion_result> criteria;
  double total_seconds = 0;
};

/// Runs every acceptance criterion at its pinned tolerance. The criteria
/// 1-10 payload is computed twice and compared byte-for-byte as part of the
/// determinism criterion.
acceptance_report run_acceptance(std::uint64_t seed);

/// Deterministic JSON document for the report (no timings inside).
nlohmann::json acceptance_report_json(const acceptance_report& report);

/// One "PASS"/"FAIL" line per criterion plus a summary; returns the exit
/// code (0 when everything passed).
int print_acceptance(const acceptance_report& report, std::ostream& out);

}  // namespace ured
