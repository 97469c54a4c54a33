#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "vpf/scalar.hpp"

namespace vpf {

/// The d x n matrix of generator degrees of a positively graded polynomial
/// ring. Columns are nonnegative and nonzero. Counting works at any rank;
/// chamber fitting needs rank d.
class DegreeMatrix {
 public:
  explicit DegreeMatrix(Matrix<std::int64_t> columns);
  /// Columns (d_i, 1) for the given degrees.
  static DegreeMatrix bigraded(std::span<const std::int64_t> degrees);

  Eigen::Index rows() const { return a_.rows(); }
  Eigen::Index cols() const { return a_.cols(); }
  Point column(Eigen::Index j) const { return a_.col(j); }
  const Matrix<std::int64_t>& entries() const { return a_; }
  bool full_rank() const { return full_rank_; }
  /// True when the last row is all ones and d == 2.
  bool is_bigraded() const;
  /// First-row entries of a bigraded matrix.
  std::vector<std::int64_t> degrees() const;

  friend bool operator==(const DegreeMatrix& a, const DegreeMatrix& b) { return a.a_ == b.a_; }

 private:
  Matrix<std::int64_t> a_;
  bool full_rank_ = false;
};

/// Dense table of integer coefficients indexed by the box lo <= u <= hi.
class CoefficientTable {
 public:
  CoefficientTable(Point lo, Point hi);

  const Point& lo() const { return lo_; }
  const Point& hi() const { return hi_; }
  bool covers(const Point& u) const;
  /// Coefficient at u; throws std::out_of_range outside the box.
  const BigInt& at(const Point& u) const;
  BigInt& at(const Point& u);
  std::size_t size() const { return data_.size(); }

  /// Multiplies in place by 1/(1 - t^a) truncated to the box (a >= 0, a != 0).
  void multiply_geometric(const Point& a);

 private:
  std::size_t offset(const Point& u) const;

  Point lo_, hi_;
  std::vector<std::size_t> strides_;
  std::vector<BigInt> data_;
};

/// Coefficients of prod_j 1/(1 - t^{a_j}) for 0 <= u <= bound.
CoefficientTable series_coeffs(const DegreeMatrix& a, const Point& bound);

/// Number of lambda in N^n with A lambda = u; zero for any u outside Pos(A),
/// including points with negative coordinates.
BigInt count(const DegreeMatrix& a, const Point& u);

/// Value of the partition function read from a precomputed table; zero for
/// negative coordinates, std::out_of_range above the table bound.
BigInt count(const CoefficientTable& table, const Point& u);

/// Exact membership of u in the rational cone spanned by the columns.
bool in_pos_cone(const DegreeMatrix& a, const RatVector& u);

}  // namespace vpf
