#include "vpf/chambers.hpp"

#include <algorithm>
#include <string>

namespace vpf {

bool Chamber::contains(const Point& u) const {
  for (std::size_t r = 0; r < inequalities.size(); ++r)
    if (form(r, u) < 0) return false;
  return true;
}

bool Chamber::contains_interior(const Point& u) const {
  for (std::size_t r = 0; r < inequalities.size(); ++r)
    if (form(r, u) <= 0) return false;
  return true;
}

std::vector<std::int64_t> distinct_degrees(std::span<const std::int64_t> degrees) {
  std::vector<std::int64_t> e(degrees.begin(), degrees.end());
  std::sort(e.begin(), e.end());
  e.erase(std::unique(e.begin(), e.end()), e.end());
  return e;
}

namespace {

void check_degrees(std::span<const std::int64_t> degrees) {
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    if (degrees[i] < 0) throw std::invalid_argument("degree " + std::to_string(degrees[i]) + " is negative");
    if (i > 0 && degrees[i] < degrees[i - 1])
      throw std::invalid_argument("degrees must be nondecreasing (position " + std::to_string(i) + ")");
  }
  if (distinct_degrees(degrees).size() < 2)
    throw DegenerateGradingError("need at least two distinct degrees for a two-dimensional cone");
}

Lattice pair_lattice(std::int64_t di, std::int64_t dj) {
  return lattice_from_columns(std::vector<Point>{make_point({di, 1}), make_point({dj, 1})});
}

}  // namespace

std::vector<Chamber> chamber_complex_2xn(std::span<const std::int64_t> degrees) {
  check_degrees(degrees);
  auto e = distinct_degrees(degrees);
  std::vector<Chamber> out;
  for (std::size_t l = 0; l + 1 < e.size(); ++l) {
    const std::int64_t lo = e[l], hi = e[l + 1];
    std::vector<std::vector<Eigen::Index>> index_set;
    Lattice lat = Lattice::standard(2);
    bool first = true;
    for (std::size_t i = 0; i < degrees.size(); ++i) {
      if (degrees[i] > lo) continue;
      for (std::size_t j = i + 1; j < degrees.size(); ++j) {
        if (degrees[j] < hi) continue;
        index_set.push_back({static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)});
        Lattice pair = pair_lattice(degrees[i], degrees[j]);
        lat = first ? pair : lattice_intersect(lat, pair);
        first = false;
      }
    }
    out.push_back(Chamber{{make_point({lo, 1}), make_point({hi, 1})},
                          {make_point({1, -lo}), make_point({-1, hi})},
                          std::move(index_set),
                          std::move(lat)});
  }
  return out;
}

std::vector<std::size_t> locate(const std::vector<Chamber>& chambers, const Point& u) {
  std::vector<std::size_t> hits;
  for (std::size_t k = 0; k < chambers.size(); ++k)
    if (chambers[k].contains(u)) hits.push_back(k);
  return hits;
}

Lattice global_lattice(std::span<const std::int64_t> degrees) {
  auto e = distinct_degrees(degrees);
  if (e.size() < 2) throw DegenerateGradingError("need at least two distinct degrees for a global lattice");
  Lattice lat = pair_lattice(e[0], e[1]);
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = i + 1; j < e.size(); ++j) lat = lattice_intersect(lat, pair_lattice(e[i], e[j]));
  return lat;
}

Chamber simplicial_chamber(const DegreeMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("simplicial_chamber: matrix must be square");
  const Eigen::Index d = a.rows();
  IntMatrix m = a.entries().cast<BigInt>();
  // Rows of adj(A) = det * A^{-1} are the facet normals, up to sign.
  BigInt det = determinant(m);
  RatMatrix inv = inverse_exact(RatMatrix(m.cast<Rational>()));
  Chamber c{{}, {}, {{}}, lattice_from_columns(m)};
  for (Eigen::Index j = 0; j < d; ++j) {
    c.generators.push_back(a.column(j));
    c.index_set.front().push_back(j);
    Point h(d);
    for (Eigen::Index k = 0; k < d; ++k) {
      Rational v = inv(j, k) * Rational(det);
      if (det < 0) v = -v;
      h(k) = to_int64(to_bigint(v));
    }
    c.inequalities.push_back(h);
  }
  return c;
}

}  // namespace vpf
