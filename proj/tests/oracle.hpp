#pragma once

// Brute-force reference values, independent of the library's DP tables.

#include <cstdint>
#include <vector>

#include "vpf/scalar.hpp"

namespace oracle {

// Enumerates every lambda in N^n with A lambda = u by bounding each
// coordinate with the rows where the column is positive.
inline std::int64_t count(const std::vector<std::vector<std::int64_t>>& cols, const std::vector<std::int64_t>& u) {
  for (auto x : u)
    if (x < 0) return 0;
  std::int64_t found = 0;
  std::vector<std::int64_t> rest = u;
  auto walk = [&](auto&& self, std::size_t j) -> void {
    if (j == cols.size()) {
      bool zero = true;
      for (auto x : rest) zero = zero && x == 0;
      found += zero;
      return;
    }
    std::int64_t cap = -1;
    for (std::size_t i = 0; i < rest.size(); ++i)
      if (cols[j][i] > 0) {
        std::int64_t c = rest[i] / cols[j][i];
        cap = cap < 0 ? c : std::min(cap, c);
      }
    if (cap < 0) cap = 0;
    for (std::int64_t k = 0; k <= cap; ++k) {
      for (std::size_t i = 0; i < rest.size(); ++i) rest[i] -= k * cols[j][i];
      bool ok = true;
      for (auto x : rest) ok = ok && x >= 0;
      if (ok) self(self, j + 1);
      for (std::size_t i = 0; i < rest.size(); ++i) rest[i] += k * cols[j][i];
    }
  };
  walk(walk, 0);
  return found;
}

// Monomials of bidegree (mu, t) in variables of degrees (d_i, 1).
inline std::int64_t bigraded(const std::vector<std::int64_t>& degrees, std::int64_t mu, std::int64_t t) {
  if (mu < 0 || t < 0) return 0;
  std::int64_t found = 0;
  auto walk = [&](auto&& self, std::size_t j, std::int64_t left_t, std::int64_t left_mu) -> void {
    if (j + 1 == degrees.size()) {
      found += left_mu == degrees[j] * left_t;
      return;
    }
    for (std::int64_t k = 0; k <= left_t && k * degrees[j] <= left_mu; ++k)
      self(self, j + 1, left_t - k, left_mu - k * degrees[j]);
  };
  if (degrees.empty()) return mu == 0 && t == 0;
  walk(walk, 0, t, mu);
  return found;
}

struct Shift {
  std::int64_t mu, t, c;
};

inline std::int64_t module(const std::vector<std::int64_t>& degrees, const std::vector<Shift>& kappa, std::int64_t mu,
                           std::int64_t t) {
  std::int64_t v = 0;
  for (const auto& s : kappa) v += s.c * bigraded(degrees, mu - s.mu, t - s.t);
  return v;
}

}  // namespace oracle
