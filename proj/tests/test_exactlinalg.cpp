#include <algorithm>
#include <random>

#include "doctest.h"
#include "vpf/exactlinalg.hpp"

using namespace vpf;

namespace {

IntMatrix int_matrix(std::initializer_list<std::initializer_list<long>> rows) {
  IntMatrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& r : rows) {
    Eigen::Index j = 0;
    for (long v : r) m(i, j++) = v;
    ++i;
  }
  return m;
}

void check_hnf_shape(const IntMatrix& m) {
  auto [h, u] = hnf(m);
  CHECK(h == IntMatrix(m * u));
  BigInt det = determinant(u);
  CHECK((det == 1 || det == -1));
  for (Eigen::Index i = 0; i < h.rows(); ++i) {
    CHECK(h(i, i) > 0);
    for (Eigen::Index j = i + 1; j < h.cols(); ++j) CHECK(h(i, j) == 0);
    for (Eigen::Index j = 0; j < i; ++j) {
      CHECK(h(i, j) >= 0);
      CHECK(h(i, j) < h(i, i));
    }
  }
}

}  // namespace

TEST_CASE("hnf of the (2,3,6) degree matrix") {
  IntMatrix a = int_matrix({{2, 3, 6}, {1, 1, 1}});
  auto [h, u] = hnf(a);
  CHECK(h == int_matrix({{1, 0, 0}, {0, 1, 0}}));
  check_hnf_shape(a);
}

TEST_CASE("hnf of identity and of (2,3,6,7)") {
  auto [h, u] = hnf(IntMatrix(IntMatrix::Identity(2, 2)));
  CHECK(h == IntMatrix::Identity(2, 2));
  CHECK(u == IntMatrix::Identity(2, 2));
  IntMatrix a = int_matrix({{2, 3, 6, 7}, {1, 1, 1, 1}});
  CHECK(hnf(a).h == int_matrix({{1, 0, 0, 0}, {0, 1, 0, 0}}));
  check_hnf_shape(a);
}

TEST_CASE("hnf rejects rank-deficient input") {
  CHECK_THROWS_AS(hnf(int_matrix({{1, 2}, {2, 4}})), RankError);
  CHECK_THROWS_AS(hnf(int_matrix({{1}, {0}})), RankError);
}

TEST_CASE("hnf on random full-rank matrices") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> entry(-9, 9);
  int checked = 0;
  while (checked < 100) {
    IntMatrix m(3, 5);
    for (Eigen::Index i = 0; i < 3; ++i)
      for (Eigen::Index j = 0; j < 5; ++j) m(i, j) = entry(rng);
    if (rank_exact(m) < 3) continue;
    check_hnf_shape(m);
    ++checked;
  }
}

TEST_CASE("lattice_from_columns determinants") {
  auto full = lattice_from_columns(std::vector<Point>{make_point({2, 1}), make_point({3, 1})});
  CHECK(full.det() == 1);
  CHECK(full.contains(make_point({1, 0})));
  CHECK(full.contains(make_point({0, 1})));

  auto four = lattice_from_columns(std::vector<Point>{make_point({2, 1}), make_point({6, 1})});
  CHECK(four.det() == 4);
  // Brute-force coset count on a 10x10 box.
  std::vector<IntVector> reps;
  for (int x = 0; x < 10; ++x)
    for (int y = 0; y < 10; ++y) {
      IntVector v = to_int_vector(make_point({x, y}));
      bool seen = false;
      for (const auto& r : reps) seen = seen || four.contains(IntVector(v - r));
      if (!seen) reps.push_back(v);
    }
  CHECK(reps.size() == 4);

  CHECK(Lattice::standard(3).det() == 1);
  CHECK_THROWS_AS(lattice_from_columns(std::vector<Point>{make_point({1, 2}), make_point({2, 4})}), RankError);
}

TEST_CASE("lattice_intersect") {
  auto l13 = lattice_from_columns(std::vector<Point>{make_point({2, 1}), make_point({6, 1})});
  auto l23 = lattice_from_columns(std::vector<Point>{make_point({3, 1}), make_point({6, 1})});
  CHECK(lattice_intersect(l13, l13) == l13);
  CHECK(lattice_intersect(l13, l23).det() == 12);

  auto a = lattice_from_columns(std::vector<Point>{make_point({2, 0}), make_point({0, 1})});
  auto b = lattice_from_columns(std::vector<Point>{make_point({3, 0}), make_point({0, 1})});
  auto c = lattice_intersect(a, b);
  CHECK(c.det() == 6);
  CHECK(c == lattice_from_columns(std::vector<Point>{make_point({6, 0}), make_point({0, 1})}));
  for (int x = -20; x <= 20; ++x)
    for (int y = -20; y <= 20; ++y) {
      Point p = make_point({x, y});
      CHECK(c.contains(p) == (a.contains(p) && b.contains(p)));
    }
  CHECK_THROWS_AS(lattice_intersect(a, Lattice::standard(3)), std::invalid_argument);
}

TEST_CASE("intersection membership on random vectors") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> entry(-6, 6), probe(-200, 200);
  for (int inst = 0; inst < 10; ++inst) {
    std::vector<Point> g1, g2;
    for (int k = 0; k < 2; ++k) {
      g1.push_back(make_point({entry(rng), entry(rng)}));
      g2.push_back(make_point({entry(rng), entry(rng)}));
    }
    if ((g1[0](0) * g1[1](1) - g1[0](1) * g1[1](0)) == 0) continue;
    if ((g2[0](0) * g2[1](1) - g2[0](1) * g2[1](0)) == 0) continue;
    auto l1 = lattice_from_columns(g1), l2 = lattice_from_columns(g2);
    auto both = lattice_intersect(l1, l2);
    CHECK((l1.det() * l2.det()) % both.det() == 0);
    for (int k = 0; k < 1000; ++k) {
      Point p = make_point({probe(rng), probe(rng)});
      CHECK(both.contains(p) == (l1.contains(p) && l2.contains(p)));
    }
  }
}

TEST_CASE("residues") {
  auto one = Lattice::standard(2);
  auto r1 = residues(one);
  REQUIRE(r1.size() == 1);
  CHECK(r1[0] == IntVector::Zero(2));

  auto sq = lattice_from_columns(std::vector<Point>{make_point({2, 0}), make_point({0, 2})});
  auto r = residues(sq);
  CHECK(r.size() == 4);
  std::vector<Point> pts;
  for (const auto& v : r) pts.push_back(to_point(v));
  std::sort(pts.begin(), pts.end(), PointLess{});
  CHECK(pts == std::vector<Point>{make_point({0, 0}), make_point({0, 1}), make_point({1, 0}), make_point({1, 1})});

  auto l13 = lattice_from_columns(std::vector<Point>{make_point({2, 1}), make_point({6, 1})});
  auto l23 = lattice_from_columns(std::vector<Point>{make_point({3, 1}), make_point({6, 1})});
  auto big = lattice_intersect(l13, l23);
  auto reps = residues(big);
  CHECK(reps.size() == 12);
  // Partition: each box point reduces to exactly one representative.
  for (int x = -15; x <= 15; ++x)
    for (int y = -15; y <= 15; ++y) {
      IntVector v = to_int_vector(make_point({x, y}));
      int hits = 0;
      for (const auto& rep : reps) hits += big.contains(IntVector(v - rep));
      CHECK(hits == 1);
      CHECK(reps[big.residue_index(v)] == big.reduce(v));
    }
}

TEST_CASE("pair lattices have determinant |d_j - d_i|") {
  std::vector<long> degrees{1, 2, 4, 7, 11, 15};
  for (std::size_t i = 0; i < degrees.size(); ++i)
    for (std::size_t j = i + 1; j < degrees.size(); ++j) {
      auto l = lattice_from_columns(std::vector<Point>{make_point({degrees[i], 1}), make_point({degrees[j], 1})});
      CHECK(l.det() == degrees[j] - degrees[i]);
    }
}

TEST_CASE("solve_exact") {
  RatVector b(2);
  b << 5, 3;
  CHECK(*solve_exact(RatMatrix(RatMatrix::Identity(2, 2)), b) == b);
  RatMatrix m(2, 2);
  m << 2, 1, 1, 1;
  RatVector x(2);
  x << 2, 1;
  CHECK(*solve_exact(m, b) == x);

  RatMatrix v(3, 3);
  v << 1, 0, 0, 1, 1, 1, 1, 2, 4;
  RatVector y(3);
  y << 0, 1, 4;
  RatVector coeffs(3);
  coeffs << 0, 0, 1;
  CHECK(*solve_exact(v, y) == coeffs);

  RatMatrix bad(2, 1);
  bad << 1, 1;
  RatVector rhs(2);
  rhs << 1, 2;
  CHECK_FALSE(solve_exact(bad, rhs).has_value());
}

TEST_CASE("determinant and inverse") {
  IntMatrix m = int_matrix({{2, 3, 1}, {4, 1, 0}, {0, 5, 7}});
  CHECK(determinant(m) == -50);
  RatMatrix r = m.cast<Rational>();
  CHECK(RatMatrix(r * inverse_exact(r)) == RatMatrix::Identity(3, 3));
  CHECK_THROWS_AS(inverse_exact(RatMatrix(RatMatrix::Zero(2, 2))), RankError);
}
