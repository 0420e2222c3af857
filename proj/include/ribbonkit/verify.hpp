#pragma once

// Acceptance checks, one per criterion, runnable per p.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

namespace ribbonkit::verify {

struct Options {
  int r_max = 6;
  std::uint64_t seed = 1;
};

struct CheckRecord {
  std::string check;
  int p = 0;
  bool pass = false;
  std::string detail;
  double elapsed = 0.0;

  nlohmann::json to_json() const;
};

struct Check {
  std::string name;
  std::string suite;
  std::string title;
};

/// The ten acceptance checks in criterion order.
const std::vector<Check>& checks();
/// Suite names accepted by `run_suites`, plus "all".
std::vector<std::string> suite_names();
bool is_suite(const std::string& name);

/// Runs one named check at one p; library errors become failures.
CheckRecord run_check(const std::string& name, int p, const Options& options);

/// Runs every check of the selected suite for p in [p_lo, p_hi], reporting each record to `sink`.
/// Returns true iff every check passed.
bool run_suite(const std::string& suite, int p_lo, int p_hi, const Options& options,
               const std::function<void(const CheckRecord&)>& sink);

}  // namespace ribbonkit::verify
