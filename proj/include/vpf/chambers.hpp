#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "vpf/exactlinalg.hpp"
#include "vpf/vpfcore.hpp"

namespace vpf {

/// Raised when fewer than two distinct degrees leave no two-dimensional cone.
class DegenerateGradingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A maximal cone of the chamber complex, given by its closure.
struct Chamber {
  std::vector<Point> generators;    // extremal rays
  std::vector<Point> inequalities;  // closure = {x : h . x >= 0 for every h}
  // Column subsets sigma of A (as column indices) with C inside Pos(A_sigma).
  std::vector<std::vector<Eigen::Index>> index_set;
  Lattice lattice;  // intersection of the Lambda_sigma over index_set

  bool contains(const Point& u) const;
  bool contains_interior(const Point& u) const;
  /// h . u for the r-th inequality.
  std::int64_t form(std::size_t r, const Point& u) const { return inequalities[r].dot(u); }
};

/// Sorted distinct values of a degree list.
std::vector<std::int64_t> distinct_degrees(std::span<const std::int64_t> degrees);

/// Chambers of the matrix with columns (d_i, 1), ordered by slope. Throws
/// std::invalid_argument for a decreasing list and DegenerateGradingError when
/// fewer than two degrees are distinct.
std::vector<Chamber> chamber_complex_2xn(std::span<const std::int64_t> degrees);

/// Indices of all chambers whose closure contains u.
std::vector<std::size_t> locate(const std::vector<Chamber>& chambers, const Point& u);

/// Intersection of span{(e_i,1),(e_j,1)} over all pairs of distinct degrees.
Lattice global_lattice(std::span<const std::int64_t> degrees);

/// The cone of a square invertible degree matrix, as its single chamber.
Chamber simplicial_chamber(const DegreeMatrix& a);

}  // namespace vpf
