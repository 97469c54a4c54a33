#pragma once

// Exact integer and rational linear algebra over arbitrary-precision scalars.
//
// The dense routines are templates over the scalar type so that they work on
// any Eigen matrix of an exact ring (BigInt) or field (Rational). Nothing in
// this header touches floating point.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "vpf/scalar.hpp"

namespace vpf {

class RankError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <typename Scalar>
struct HermiteForm {
  Matrix<Scalar> h;  ///< [B | 0], B lower triangular, 0 <= B(i,j) < B(i,i) for j < i
  Matrix<Scalar> u;  ///< unimodular, h = m * u
};

namespace detail {

// a*p + b*q = g with g = gcd(a, b) >= 0.
template <typename Scalar>
void extended_gcd(const Scalar& a, const Scalar& b, Scalar& g, Scalar& p, Scalar& q) {
  Scalar old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    Scalar quot = old_r / r;
    Scalar tmp = old_r - quot * r;
    old_r = r;
    r = tmp;
    tmp = old_s - quot * s;
    old_s = s;
    s = tmp;
    tmp = old_t - quot * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  g = old_r;
  p = old_s;
  q = old_t;
}

template <typename Scalar>
Scalar floor_quotient(const Scalar& a, const Scalar& b) {
  Scalar q = a / b;
  Scalar r = a - q * b;
  if (r != 0 && ((r < 0) != (b < 0))) q -= 1;
  return q;
}

}  // namespace detail

/// Column-style Hermite normal form: H = M * U with U unimodular.
/// Throws RankError when M does not have full row rank.
template <typename Scalar>
HermiteForm<Scalar> hnf(const Matrix<Scalar>& m) {
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  if (rows > cols) throw RankError("hnf: more rows than columns, cannot have full row rank");

  Matrix<Scalar> h = m;
  Matrix<Scalar> u = Matrix<Scalar>::Identity(cols, cols);

  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = i + 1; j < cols; ++j) {
      if (h(i, j) == 0) continue;
      Scalar a = h(i, i), b = h(i, j), g, p, q;
      detail::extended_gcd(a, b, g, p, q);
      Scalar ag = a / g, bg = b / g;
      // [col_i col_j] <- [col_i col_j] * [[p, -bg], [q, ag]], determinant 1
      Vector<Scalar> hi = h.col(i), hj = h.col(j);
      h.col(i) = hi * p + hj * q;
      h.col(j) = hj * ag - hi * bg;
      Vector<Scalar> ui = u.col(i), uj = u.col(j);
      u.col(i) = ui * p + uj * q;
      u.col(j) = uj * ag - ui * bg;
    }
    if (h(i, i) == 0) throw RankError("hnf: matrix is rank deficient");
    if (h(i, i) < 0) {
      h.col(i) = -h.col(i);
      u.col(i) = -u.col(i);
    }
    for (Eigen::Index j = 0; j < i; ++j) {
      Scalar f = detail::floor_quotient(h(i, j), h(i, i));
      if (f == 0) continue;
      h.col(j) -= h.col(i) * f;
      u.col(j) -= u.col(i) * f;
    }
  }
  return {std::move(h), std::move(u)};
}

/// Fraction-free (Bareiss) determinant; exact for integral domains.
template <typename Scalar>
Scalar determinant(Matrix<Scalar> a) {
  const Eigen::Index n = a.rows();
  if (n != a.cols()) throw std::invalid_argument("determinant: matrix is not square");
  if (n == 0) return Scalar(1);
  Scalar sign = 1, prev = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      Eigen::Index swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return Scalar(0);
      a.row(k).swap(a.row(swap));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i)
      for (Eigen::Index j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

/// Reduced row echelon form over a field, returning the pivot columns.
template <typename Field>
std::vector<Eigen::Index> row_reduce(Matrix<Field>& a) {
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < a.cols() && row < a.rows(); ++col) {
    Eigen::Index sel = row;
    while (sel < a.rows() && a(sel, col) == 0) ++sel;
    if (sel == a.rows()) continue;
    a.row(row).swap(a.row(sel));
    Field inv = Field(1) / a(row, col);
    a.row(row) *= inv;
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col) == 0) continue;
      Field f = a(r, col);
      a.row(r) -= a.row(row) * f;
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

/// Exact solution of M x = b over a field. Returns nullopt when the system is
/// inconsistent; free variables of an underdetermined system are set to zero.
template <typename Field>
std::optional<Vector<Field>> solve_exact(const Matrix<Field>& m, const Vector<Field>& b) {
  if (m.rows() != b.size()) throw std::invalid_argument("solve_exact: dimension mismatch");
  Matrix<Field> aug(m.rows(), m.cols() + 1);
  aug.leftCols(m.cols()) = m;
  aug.col(m.cols()) = b;
  auto pivots = row_reduce(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  Vector<Field> x = Vector<Field>::Zero(m.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) x(pivots[r]) = aug(static_cast<Eigen::Index>(r), m.cols());
  return x;
}

/// Exact inverse over a field; throws RankError for singular input.
template <typename Field>
Matrix<Field> inverse_exact(const Matrix<Field>& m) {
  const Eigen::Index n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("inverse_exact: matrix is not square");
  Matrix<Field> aug(n, 2 * n);
  aug.leftCols(n) = m;
  aug.rightCols(n) = Matrix<Field>::Identity(n, n);
  auto pivots = row_reduce(aug);
  if (static_cast<Eigen::Index>(pivots.size()) < n || pivots[n - 1] != n - 1)
    throw RankError("inverse_exact: matrix is singular");
  return aug.rightCols(n);
}

template <typename Scalar>
Eigen::Index rank_exact(const Matrix<Scalar>& m) {
  Matrix<Rational> a = m.template cast<Rational>();
  return static_cast<Eigen::Index>(row_reduce(a).size());
}

/// A full-rank sublattice of Z^d, stored by its column-style HNF basis.
class Lattice {
 public:
  /// The standard lattice Z^d.
  static Lattice standard(Eigen::Index dim);

  Eigen::Index dim() const { return basis_.rows(); }
  /// Columns form a lower-triangular HNF basis.
  const IntMatrix& basis() const { return basis_; }
  const BigInt& det() const { return det_; }
  /// det as a machine index; throws std::overflow_error for huge quotients.
  std::size_t index() const;

  bool contains(const IntVector& v) const;
  bool contains(const Point& p) const { return contains(to_int_vector(p)); }
  /// Canonical coset representative: 0 <= r_i < basis(i,i).
  IntVector reduce(const IntVector& v) const;
  IntVector reduce(const Point& p) const { return reduce(to_int_vector(p)); }
  /// Mixed-radix position of the canonical representative of v.
  std::size_t residue_index(const IntVector& v) const;
  std::size_t residue_index(const Point& p) const { return residue_index(to_int_vector(p)); }
  IntVector residue_at(std::size_t index) const;

  bool is_sublattice_of(const Lattice& other) const;
  friend bool operator==(const Lattice& a, const Lattice& b) { return a.basis_ == b.basis_; }

 private:
  friend Lattice lattice_from_columns(const IntMatrix& columns);
  explicit Lattice(IntMatrix hnf_basis);

  IntMatrix basis_;
  BigInt det_;
};

/// Integer span of the columns; throws RankError unless they span Q^d.
Lattice lattice_from_columns(const IntMatrix& columns);
Lattice lattice_from_columns(const std::vector<Point>& vectors);

/// Throws std::invalid_argument on dimension mismatch.
Lattice lattice_intersect(const Lattice& a, const Lattice& b);

/// All det(L) canonical coset representatives, in residue_index order.
std::vector<IntVector> residues(const Lattice& lattice);

}  // namespace vpf
