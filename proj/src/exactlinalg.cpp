#include "vpf/exactlinalg.hpp"

#include <limits>

namespace vpf {

Lattice::Lattice(IntMatrix hnf_basis) : basis_(std::move(hnf_basis)), det_(1) {
  for (Eigen::Index i = 0; i < basis_.rows(); ++i) det_ *= basis_(i, i);
}

Lattice Lattice::standard(Eigen::Index dim) { return Lattice(IntMatrix::Identity(dim, dim)); }

std::size_t Lattice::index() const {
  if (det_ > BigInt(std::numeric_limits<std::int64_t>::max()))
    throw std::overflow_error("lattice index " + det_.str() + " is too large to enumerate");
  return det_.convert_to<std::size_t>();
}

bool Lattice::contains(const IntVector& v) const {
  if (v.size() != dim()) throw std::invalid_argument("Lattice::contains: dimension mismatch");
  IntVector rest = v;
  for (Eigen::Index i = 0; i < dim(); ++i) {
    if (rest(i) % basis_(i, i) != 0) return false;
    BigInt x = rest(i) / basis_(i, i);
    rest -= basis_.col(i) * x;
  }
  return true;
}

IntVector Lattice::reduce(const IntVector& v) const {
  if (v.size() != dim()) throw std::invalid_argument("Lattice::reduce: dimension mismatch");
  IntVector rest = v;
  for (Eigen::Index i = 0; i < dim(); ++i) {
    BigInt x = floor_div(rest(i), basis_(i, i));
    if (x != 0) rest -= basis_.col(i) * x;
  }
  return rest;
}

std::size_t Lattice::residue_index(const IntVector& v) const {
  IntVector r = reduce(v);
  std::size_t idx = 0, stride = 1;
  for (Eigen::Index i = 0; i < dim(); ++i) {
    idx += r(i).convert_to<std::size_t>() * stride;
    stride *= basis_(i, i).convert_to<std::size_t>();
  }
  return idx;
}

IntVector Lattice::residue_at(std::size_t index) const {
  IntVector r(dim());
  for (Eigen::Index i = 0; i < dim(); ++i) {
    auto radix = basis_(i, i).convert_to<std::size_t>();
    r(i) = static_cast<std::uint64_t>(index % radix);
    index /= radix;
  }
  return r;
}

bool Lattice::is_sublattice_of(const Lattice& other) const {
  if (dim() != other.dim()) return false;
  for (Eigen::Index j = 0; j < dim(); ++j)
    if (!other.contains(IntVector(basis_.col(j)))) return false;
  return true;
}

Lattice lattice_from_columns(const IntMatrix& columns) {
  const Eigen::Index d = columns.rows();
  if (columns.cols() < d) throw RankError("lattice_from_columns: fewer vectors than dimensions");
  auto form = hnf(columns);
  return Lattice(form.h.leftCols(d));
}

Lattice lattice_from_columns(const std::vector<Point>& vectors) {
  if (vectors.empty()) throw RankError("lattice_from_columns: no vectors");
  IntMatrix m(vectors.front().size(), static_cast<Eigen::Index>(vectors.size()));
  for (std::size_t j = 0; j < vectors.size(); ++j) {
    if (vectors[j].size() != m.rows()) throw std::invalid_argument("lattice_from_columns: ragged input");
    m.col(static_cast<Eigen::Index>(j)) = to_int_vector(vectors[j]);
  }
  return lattice_from_columns(m);
}

Lattice lattice_intersect(const Lattice& a, const Lattice& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("lattice_intersect: dimension mismatch");
  const Eigen::Index d = a.dim();
  // Integer kernel of [A | -B] gives pairs (x, y) with A x = B y.
  IntMatrix stacked(d, 2 * d);
  stacked.leftCols(d) = a.basis();
  stacked.rightCols(d) = -b.basis();
  auto form = hnf(stacked);
  IntMatrix kernel_x = form.u.block(0, d, d, d);
  return lattice_from_columns(IntMatrix(a.basis() * kernel_x));
}

std::vector<IntVector> residues(const Lattice& lattice) {
  std::size_t n = lattice.index();
  std::vector<IntVector> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(lattice.residue_at(i));
  return out;
}

}  // namespace vpf
