#include "doctest.h"
#include "vpf/chambers.hpp"

using namespace vpf;

namespace {
std::vector<std::int64_t> deg(std::initializer_list<std::int64_t> d) { return d; }
}  // namespace

TEST_CASE("chamber_complex_2xn examples") {
  auto c4 = chamber_complex_2xn(deg({2, 3, 6, 7}));
  REQUIRE(c4.size() == 3);
  CHECK(c4[0].generators == std::vector<Point>{make_point({2, 1}), make_point({3, 1})});
  CHECK(c4[1].generators == std::vector<Point>{make_point({3, 1}), make_point({6, 1})});
  CHECK(c4[2].generators == std::vector<Point>{make_point({6, 1}), make_point({7, 1})});

  auto c3 = chamber_complex_2xn(deg({2, 3, 6}));
  REQUIRE(c3.size() == 2);
  // mu - 2t >= 0, 3t - mu >= 0 and mu - 3t >= 0, 6t - mu >= 0
  CHECK(c3[0].inequalities == std::vector<Point>{make_point({1, -2}), make_point({-1, 3})});
  CHECK(c3[1].inequalities == std::vector<Point>{make_point({1, -3}), make_point({-1, 6})});

  auto dup = chamber_complex_2xn(deg({5, 5, 5, 9}));
  REQUIRE(dup.size() == 1);
  CHECK(dup[0].generators == std::vector<Point>{make_point({5, 1}), make_point({9, 1})});
  CHECK(dup[0].index_set.size() == 3);
}

TEST_CASE("chamber_complex_2xn errors") {
  CHECK_THROWS_AS(chamber_complex_2xn(deg({4, 4, 4})), DegenerateGradingError);
  CHECK_THROWS_AS(chamber_complex_2xn(deg({3})), DegenerateGradingError);
  CHECK_THROWS_AS(chamber_complex_2xn(deg({3, 2})), std::invalid_argument);
}

TEST_CASE("chamber index sets and lattices") {
  auto c = chamber_complex_2xn(deg({2, 3, 6}));
  // C1 sits in cone{2,3} and cone{2,6}; C2 in cone{2,6} and cone{3,6}.
  CHECK(c[0].index_set == std::vector<std::vector<Eigen::Index>>{{0, 1}, {0, 2}});
  CHECK(c[1].index_set == std::vector<std::vector<Eigen::Index>>{{0, 2}, {1, 2}});
  CHECK(c[0].lattice.det() == 4);
  CHECK(c[1].lattice.det() == 12);
}

TEST_CASE("locate") {
  auto c = chamber_complex_2xn(deg({2, 3, 6}));
  CHECK(locate(c, make_point({7, 3})) == std::vector<std::size_t>{0});
  CHECK(locate(c, make_point({9, 3})) == std::vector<std::size_t>{0, 1});
  CHECK(locate(c, make_point({1, 1})).empty());
}

TEST_CASE("global_lattice") {
  CHECK(global_lattice(deg({2, 3, 6})).det() == 12);
  CHECK(global_lattice(deg({1, 2})).det() == 1);
  CHECK(global_lattice(deg({2, 4})).det() == 2);
  CHECK_THROWS_AS(global_lattice(deg({5, 5})), DegenerateGradingError);
}

TEST_CASE("chamber properties over random degree sets") {
  std::vector<std::vector<std::int64_t>> sets{{1, 2, 4, 7}, {0, 3, 3, 8, 11}, {2, 5, 6, 9, 13, 15}, {1, 1, 2, 2}};
  for (const auto& d : sets) {
    auto ch = chamber_complex_2xn(d);
    auto global = global_lattice(d);
    auto e = distinct_degrees(d);
    for (const auto& c : ch) {
      CHECK(global.is_sublattice_of(c.lattice));
      // The open chamber holds no column.
      for (auto di : d) CHECK_FALSE(c.contains_interior(make_point({di, 1})));
    }
    // Tiling: interiors are disjoint, closures cover the cone.
    for (std::int64_t t = 0; t <= 8; ++t)
      for (std::int64_t mu = 0; mu <= 16 * t; ++mu) {
        Point u = make_point({mu, t});
        bool in_cone = t == 0 ? mu == 0 : (mu >= e.front() * t && mu <= e.back() * t);
        CHECK(!locate(ch, u).empty() == in_cone);
        int interior = 0;
        for (const auto& c : ch) interior += c.contains_interior(u);
        CHECK(interior <= 1);
      }
  }
}

TEST_CASE("simplicial chamber") {
  Matrix<std::int64_t> m(2, 2);
  m << 1, 0, 0, 1;
  auto c = simplicial_chamber(DegreeMatrix(m));
  CHECK(c.lattice.det() == 1);
  CHECK(c.contains(make_point({3, 4})));
  CHECK_FALSE(c.contains(make_point({-1, 4})));
  Matrix<std::int64_t> s(2, 2);
  s << 2, 1, 1, 3;
  auto k = simplicial_chamber(DegreeMatrix(s));
  CHECK(k.lattice.det() == 5);
  CHECK(k.contains(make_point({2, 1})));
  CHECK(k.contains(make_point({1, 3})));
  CHECK_FALSE(k.contains(make_point({1, 0})));
}
