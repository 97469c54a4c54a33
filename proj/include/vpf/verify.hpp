#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "vpf/reesdata.hpp"

namespace vpf {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::size_t grid_points = 0;
  std::optional<Point> witness;  // always set when passed == false
  std::string detail;
};

struct RunReport {
  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs;  // label, digest
  std::vector<CheckResult> checks;
  std::vector<std::string> warnings;
  std::vector<std::string> flags;  // known discrepancies in reference data
  double seconds = 0;

  bool passed() const;
  void add(CheckResult c);
};

/// FNV-1a 64-bit, as 16 hex digits.
std::string digest(const std::string& text);

/// Runs the series-identity, nonnegativity, oracle-equivalence, support and
/// line-order checks for every Tor index, on T-degrees up to tmax.
RunReport verify_spec(const ToriSpec& spec, std::int64_t tmax);

/// Deterministic: the duration is left out.
nlohmann::json to_json(const RunReport& r);
std::string to_text(const RunReport& r);

}  // namespace vpf
