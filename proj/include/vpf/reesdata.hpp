#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "vpf/hilbert.hpp"

namespace vpf {

/// Shift data of Tor_i(R_I, k), i = 0, 1, ..., each as a module over
/// B = k[T_1..T_r] with deg T_i = (d_i, 1).
struct ToriSpec {
  std::vector<std::int64_t> degrees;  // nondecreasing
  std::map<int, KappaNumerator> tor;

  DegreeMatrix ring() const { return DegreeMatrix::bigraded(degrees); }
  /// Empty numerator over the ring when index i is absent.
  KappaNumerator kappa(int i) const;
  /// sum_i (-1)^i kappa_i.
  KappaNumerator euler_characteristic() const;

  friend bool operator==(const ToriSpec& x, const ToriSpec& y) {
    return x.degrees == y.degrees && x.tor == y.tor;
  }
};

class UnsupportedRankError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Complete intersections with two or three generators. Degrees are sorted.
ToriSpec ci_shifts(std::span<const std::int64_t> degrees);

/// Error with the location of the offending field, e.g. "tor[1].shifts[0].c".
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& where, const std::string& what)
      : std::runtime_error(where + ": " + what), where_(where) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

/// Reads the JSON document
///   {"generators": [[d_1, 1], ...], "tor": [{"index": i, "shifts": [{"a": [mu, t], "c": n}, ...]}, ...]}
/// Unknown fields are rejected, except "regions", which carries derived
/// output and is ignored. Repeated shifts are merged.
ToriSpec ingest(const std::string& document);
ToriSpec ingest_file(const std::string& path);

/// Canonical form: keys sorted, shifts in lexicographic order, two-space indent.
std::string serialize(const ToriSpec& spec);

}  // namespace vpf
