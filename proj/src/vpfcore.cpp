#include "vpf/vpfcore.hpp"

#include <stdexcept>

#include "vpf/exactlinalg.hpp"

namespace vpf {

DegreeMatrix::DegreeMatrix(Matrix<std::int64_t> columns) : a_(std::move(columns)) {
  if (a_.rows() == 0) throw std::invalid_argument("DegreeMatrix: grading rank must be positive");
  for (Eigen::Index j = 0; j < a_.cols(); ++j) {
    bool nonzero = false;
    for (Eigen::Index i = 0; i < a_.rows(); ++i) {
      if (a_(i, j) < 0) throw std::invalid_argument("DegreeMatrix: negative entry in column " + std::to_string(j));
      nonzero = nonzero || a_(i, j) != 0;
    }
    // A zero column would make every graded piece infinite.
    if (!nonzero) throw std::invalid_argument("DegreeMatrix: zero column " + std::to_string(j) + " (grading not positive)");
  }
  full_rank_ = rank_exact(Matrix<BigInt>(a_.cast<BigInt>())) == a_.rows();
}

DegreeMatrix DegreeMatrix::bigraded(std::span<const std::int64_t> degrees) {
  Matrix<std::int64_t> a(2, static_cast<Eigen::Index>(degrees.size()));
  for (std::size_t j = 0; j < degrees.size(); ++j) {
    a(0, static_cast<Eigen::Index>(j)) = degrees[j];
    a(1, static_cast<Eigen::Index>(j)) = 1;
  }
  return DegreeMatrix(std::move(a));
}

bool DegreeMatrix::is_bigraded() const {
  return rows() == 2 && (a_.row(1).array() == 1).all();
}

std::vector<std::int64_t> DegreeMatrix::degrees() const {
  if (!is_bigraded()) throw std::logic_error("DegreeMatrix::degrees: matrix is not of the form (d_i, 1)");
  std::vector<std::int64_t> out(static_cast<std::size_t>(cols()));
  for (Eigen::Index j = 0; j < cols(); ++j) out[static_cast<std::size_t>(j)] = a_(0, j);
  return out;
}

CoefficientTable::CoefficientTable(Point lo, Point hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_.size() != hi_.size()) throw std::invalid_argument("CoefficientTable: bound dimension mismatch");
  strides_.resize(static_cast<std::size_t>(lo_.size()));
  std::size_t total = 1;
  for (Eigen::Index i = lo_.size() - 1; i >= 0; --i) {
    if (hi_(i) < lo_(i)) throw std::invalid_argument("CoefficientTable: empty box");
    strides_[static_cast<std::size_t>(i)] = total;
    total *= static_cast<std::size_t>(hi_(i) - lo_(i) + 1);
  }
  data_.assign(total, BigInt(0));
}

bool CoefficientTable::covers(const Point& u) const {
  if (u.size() != lo_.size()) return false;
  return (u.array() >= lo_.array()).all() && (u.array() <= hi_.array()).all();
}

std::size_t CoefficientTable::offset(const Point& u) const {
  if (!covers(u)) throw std::out_of_range("CoefficientTable: point " + to_string(u) + " outside table box");
  std::size_t off = 0;
  for (Eigen::Index i = 0; i < u.size(); ++i)
    off += static_cast<std::size_t>(u(i) - lo_(i)) * strides_[static_cast<std::size_t>(i)];
  return off;
}

const BigInt& CoefficientTable::at(const Point& u) const { return data_[offset(u)]; }
BigInt& CoefficientTable::at(const Point& u) { return data_[offset(u)]; }

void CoefficientTable::multiply_geometric(const Point& a) {
  if (a.size() != lo_.size()) throw std::invalid_argument("multiply_geometric: dimension mismatch");
  if ((a.array() < 0).any() || (a.array() == 0).all())
    throw std::invalid_argument("multiply_geometric: exponent must be nonnegative and nonzero");
  // c[u] += c[u - a] in increasing row-major order realises the series
  // 1 + t^a + t^{2a} + ... because u - a precedes u.
  std::ptrdiff_t shift = 0;
  for (Eigen::Index i = 0; i < a.size(); ++i)
    shift += static_cast<std::ptrdiff_t>(a(i)) * static_cast<std::ptrdiff_t>(strides_[static_cast<std::size_t>(i)]);

  const Eigen::Index d = lo_.size();
  Point u = lo_;
  for (std::size_t off = 0; off < data_.size(); ++off) {
    bool inside = true;
    for (Eigen::Index i = 0; i < d && inside; ++i) inside = u(i) - a(i) >= lo_(i);
    if (inside) data_[off] += data_[off - static_cast<std::size_t>(shift)];
    for (Eigen::Index i = d - 1; i >= 0; --i) {
      if (++u(i) <= hi_(i)) break;
      u(i) = lo_(i);
    }
  }
}

CoefficientTable series_coeffs(const DegreeMatrix& a, const Point& bound) {
  if (bound.size() != a.rows()) throw std::invalid_argument("series_coeffs: bound dimension mismatch");
  if ((bound.array() < 0).any()) throw std::invalid_argument("series_coeffs: bound must be nonnegative");
  CoefficientTable table(Point::Zero(bound.size()), bound);
  table.at(Point::Zero(bound.size())) = 1;
  for (Eigen::Index j = 0; j < a.cols(); ++j) table.multiply_geometric(a.column(j));
  return table;
}

BigInt count(const DegreeMatrix& a, const Point& u) {
  if (u.size() != a.rows()) throw std::invalid_argument("count: dimension mismatch");
  if ((u.array() < 0).any()) return 0;
  return series_coeffs(a, u).at(u);
}

BigInt count(const CoefficientTable& table, const Point& u) {
  if ((u.array() < 0).any()) return 0;
  return table.at(u);
}

bool in_pos_cone(const DegreeMatrix& a, const RatVector& u) {
  const Eigen::Index d = a.rows();
  const Eigen::Index n = a.cols();
  if (u.size() != d) throw std::invalid_argument("in_pos_cone: dimension mismatch");
  if (u.isZero()) return true;
  // Caratheodory: u lies in the cone iff it lies in the cone of some
  // linearly independent subset of at most d columns.
  RatMatrix cols = a.entries().cast<Rational>();
  std::vector<Eigen::Index> pick;
  bool found = false;
  auto visit = [&](auto&& self, Eigen::Index next) -> void {
    if (found) return;
    if (!pick.empty()) {
      RatMatrix sub(d, static_cast<Eigen::Index>(pick.size()));
      for (std::size_t k = 0; k < pick.size(); ++k) sub.col(static_cast<Eigen::Index>(k)) = cols.col(pick[k]);
      if (rank_exact(sub) == sub.cols()) {
        auto x = solve_exact(sub, u);
        if (x && (x->array() >= 0).all()) {
          found = true;
          return;
        }
      } else {
        return;
      }
    }
    if (static_cast<Eigen::Index>(pick.size()) == d) return;
    for (Eigen::Index j = next; j < n && !found; ++j) {
      pick.push_back(j);
      self(self, j + 1);
      pick.pop_back();
    }
  };
  visit(visit, 0);
  return found;
}

}  // namespace vpf
