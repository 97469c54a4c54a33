#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "vpf/hilbert.hpp"
#include "vpf/quasipoly.hpp"

namespace vpf {

/// The ray {origin + lambda (slope, 1) : lambda >= 0}, read as mu = slope * t + intercept.
struct HalfLine {
  std::int64_t slope = 0;
  std::int64_t intercept = 0;
  Point origin;
  std::size_t shift_index = 0;  // position of origin in the shift list

  std::int64_t value(std::int64_t t) const { return slope * t + intercept; }
  friend bool operator==(const HalfLine& x, const HalfLine& y) {
    return x.slope == y.slope && x.intercept == y.intercept && x.origin == y.origin;
  }
};

/// Every half-line through every shift, one per slope.
std::vector<HalfLine> half_lines(const std::vector<Point>& shifts, std::span<const std::int64_t> slopes);

/// Ordinate where two non-parallel lines meet.
Rational intersection_ordinate(const HalfLine& x, const HalfLine& y);

/// max(1, ceil of the largest intersection ordinate over all non-parallel
/// pairs of half-lines). Lines with a single slope meet nowhere; then the
/// largest shift ordinate is used so every ray has started.
std::int64_t stability_threshold(const std::vector<Point>& shifts, std::span<const std::int64_t> slopes);

/// Half-lines ordered by value at t0 + 1, ties by (slope, intercept), then by shift.
std::vector<HalfLine> sort_lines(const std::vector<Point>& shifts, std::span<const std::int64_t> slopes,
                                 std::int64_t t0);

/// Points between lines[lower] and lines[upper] (upper = lower + 1 except in
/// the one-ray case).
struct Region {
  /// c * (chamber piece)(u - shift); absent for the one-ray case.
  struct Term {
    Point shift;
    BigInt coefficient;
    std::size_t chamber = 0;
  };
  std::size_t lower = 0;
  std::size_t upper = 0;
  QuasiPolynomial qp;
  std::vector<Term> terms;
};

/// Piecewise description of u -> hf_module(kappa, u) for t >= t0.
///
/// Boundary rule: a point on a line of slope below the top degree belongs to
/// the region above the line; a point on a top-slope line belongs to the
/// region below. Rays of the top slope bound the support from above, and
/// this keeps each term's chamber constant on each region.
struct RegionDecomposition {
  std::vector<std::int64_t> ring_degrees;
  std::vector<std::int64_t> slopes;  // distinct degrees
  std::int64_t t0 = 1;
  std::vector<HalfLine> lines;
  Lattice lattice = Lattice::standard(2);
  std::vector<Region> regions;
  bool one_ray = false;  // all degrees equal

  const BigInt& modulus() const { return lattice.det(); }
  bool empty() const { return lines.empty(); }
  /// Index into regions, or -1 when the point lies outside [L_0(t), L_m(t)].
  std::ptrdiff_t region_of(std::int64_t mu, std::int64_t t) const;
};

class PreStableRangeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class TotalBettiError : public std::runtime_error {
 public:
  TotalBettiError(const std::string& what, std::int64_t t)
      : std::runtime_error(what + " at t = " + std::to_string(t)), t_(t) {}
  std::int64_t witness() const { return t_; }

 private:
  std::int64_t t_;
};

/// kappa must live over a ring with columns (d_i, 1), d_i nondecreasing.
RegionDecomposition region_decomposition(const KappaNumerator& kappa, const FitLimits& limits = {});

/// Value at (mu, t); PreStableRangeError for t < t0 (use hf_module there).
BigInt eval_betti(const RegionDecomposition& dec, std::int64_t mu, std::int64_t t);

/// Sum over mu of eval_betti at fixed t.
BigInt total_betti(const RegionDecomposition& dec, std::int64_t t);

/// Polynomial in t (one variable) through total_betti on t0 .. t0 + n, checked
/// on t0 + n + 1 .. check_until. n is the number of ring generators.
Polynomial total_betti_polynomial(const RegionDecomposition& dec, std::int64_t check_until = 0);

}  // namespace vpf
