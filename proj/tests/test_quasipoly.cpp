#include <random>

#include "closed_forms.hpp"
#include "doctest.h"
#include "oracle.hpp"
#include "vpf/quasipoly.hpp"

using namespace vpf;

namespace {

const std::vector<std::int64_t> k236{2, 3, 6};

Polynomial linear(const Rational& mu, const Rational& t, const Rational& c) {
  Polynomial p(2);
  p.add_term({1, 0}, mu);
  p.add_term({0, 1}, t);
  p.add_term({0, 0}, c);
  return p;
}

struct Fitted {
  DegreeMatrix a = DegreeMatrix::bigraded(k236);
  std::vector<Chamber> ch = chamber_complex_2xn(k236);
  Lattice global = global_lattice(k236);
  QuasiPolynomial c1 = fit_chamber_qp(a, ch[0], global);
  QuasiPolynomial c2 = fit_chamber_qp(a, ch[1], global);
};

const Fitted& fitted() {
  static Fitted f;
  return f;
}

}  // namespace

TEST_CASE("polynomial arithmetic and translation") {
  Polynomial p(2);
  p.add_term({2, 0}, 1);
  p.add_term({0, 1}, Rational(1, 2));
  CHECK(p.total_degree() == 2);
  CHECK(p.eval(make_point({3, 4})) == 11);
  Polynomial q = translate(p, make_point({1, -2}));
  for (int x = -3; x <= 3; ++x)
    for (int y = -3; y <= 3; ++y) CHECK(q.eval(make_point({x, y})) == p.eval(make_point({x - 1, y + 2})));
  RatMatrix m(2, 2);
  m << 1, 2, 0, 1;
  RatVector c(2);
  c << 3, Rational(-1, 3);
  Polynomial s = substitute_affine(p, m, c);
  for (int x = -3; x <= 3; ++x)
    for (int y = -3; y <= 3; ++y) {
      RatVector at(2);
      at << Rational(x + 2 * y + 3), Rational(y) - Rational(1, 3);
      CHECK(s.eval(to_rat_vector(make_point({x, y}))) == p.eval(at));
    }
  CHECK((p - p).is_zero());
  CHECK(to_string(linear(Rational(1, 4), Rational(-1, 2), 1), {"mu", "t"}) == "1/4*mu - 1/2*t + 1");
}

TEST_CASE("eval of a constant quasi-polynomial") {
  Lattice l = global_lattice(k236);
  QuasiPolynomial q(l, std::vector<Polynomial>(l.index(), Polynomial::constant(2, 7)));
  for (int x = -5; x <= 5; ++x)
    for (int y = -5; y <= 5; ++y) CHECK(eval(q, make_point({x, y})) == 7);
}

TEST_CASE("chamber C1 quasi-polynomial values") {
  const auto& f = fitted();
  CHECK(eval(f.c1, make_point({23, 9})) == 2);
  CHECK(eval(f.c1, make_point({20, 9})) == 1);
  CHECK(eval(f.c1, make_point({19, 9})) == 1);
  CHECK(oracle::bigraded(k236, 23, 9) == 2);
  CHECK(oracle::bigraded(k236, 20, 9) == 1);
  CHECK(oracle::bigraded(k236, 19, 9) == 1);
}

TEST_CASE("fitted pieces reproduce the closed forms") {
  const auto& f = fitted();
  CHECK(f.c1.lattice().det() == 12);
  for (std::size_t k = 0; k < f.c1.pieces().size(); ++k) {
    Point tau = to_point(f.global.residue_at(k));
    std::int64_t i = floor_mod(tau(0) - 2 * tau(1), std::int64_t{4});
    std::int64_t j = floor_mod(tau(0) - 3 * tau(1), std::int64_t{3});
    CHECK(f.c1.pieces()[k] == linear(Rational(1, 4), Rational(-1, 2), Rational(1) - Rational(i, 4)));
    Rational cq = Rational(4 * j - 3 * i, 12) + (j == 0 ? 1 : 0);
    CHECK(f.c2.pieces()[k] == linear(Rational(-1, 12), Rational(1, 2), cq));
  }
  for (std::int64_t t = 1; t <= 40; ++t)
    for (std::int64_t mu = 2 * t; mu <= 6 * t; ++mu) {
      Point u = make_point({mu, t});
      if (mu <= 3 * t) {
        CHECK(eval(f.c1, u) == closed::p_piece(mu, t));
        CHECK(eval(f.c1, u) == closed::h_c1(mu, t));
      }
      if (mu >= 3 * t) {
        CHECK(eval(f.c2, u) == closed::q_piece(mu, t));
        CHECK(eval(f.c2, u) == closed::h_c2(mu, t));
      }
    }
}

TEST_CASE("fit matches count on every closed-chamber lattice point") {
  std::vector<std::vector<std::int64_t>> sets{{2, 3, 6}, {2, 3, 6, 7}, {1, 2, 4, 7}, {1, 1, 3}, {0, 2, 5}};
  for (const auto& d : sets) {
    auto a = DegreeMatrix::bigraded(d);
    auto ch = chamber_complex_2xn(d);
    auto table = series_coeffs(a, make_point({50, 50}));
    for (const auto& c : ch) {
      for (const Lattice& l : {c.lattice, global_lattice(d)}) {
        FitStats stats;
        auto q = fit_chamber_qp(a, c, l, &stats);
        CHECK(q.total_degree() <= static_cast<int>(d.size()) - 2);
        CHECK(stats.cosets == l.index());
        for (std::int64_t t = 0; t <= 50; ++t)
          for (std::int64_t mu = 0; mu <= 50; ++mu) {
            Point u = make_point({mu, t});
            if (c.contains(u)) CHECK(eval(q, u) == Rational(table.at(u)));
          }
      }
    }
  }
}

TEST_CASE("simplicial matrix gives constant pieces") {
  Matrix<std::int64_t> m(2, 2);
  m << 1, 0, 0, 1;
  DegreeMatrix a(m);
  auto q = fit_chamber_qp(a, simplicial_chamber(a), Lattice::standard(2));
  CHECK(q.total_degree() == 0);
  CHECK(eval(q, make_point({4, 9})) == 1);

  Matrix<std::int64_t> s(2, 2);
  s << 2, 1, 1, 3;
  DegreeMatrix b(s);
  auto c = simplicial_chamber(b);
  auto r = fit_chamber_qp(b, c, c.lattice);
  CHECK(r.total_degree() == 0);
  for (int x = 0; x <= 20; ++x)
    for (int y = 0; y <= 20; ++y)
      if (c.contains(make_point({x, y}))) CHECK(eval(r, make_point({x, y})) == count(b, make_point({x, y})));
}

TEST_CASE("three-dimensional fit over a simplicial cone") {
  Matrix<std::int64_t> m(3, 3);
  m << 1, 1, 0, 0, 1, 1, 1, 0, 2;
  DegreeMatrix a(m);
  auto c = simplicial_chamber(a);
  auto q = fit_chamber_qp(a, c, c.lattice);
  CHECK(q.total_degree() == 0);
  for (int x = 0; x <= 8; ++x)
    for (int y = 0; y <= 8; ++y)
      for (int z = 0; z <= 8; ++z) {
        Point u = make_point({x, y, z});
        if (c.contains(u)) CHECK(eval(q, u) == count(a, u));
      }
}

TEST_CASE("a wrong lattice is rejected") {
  auto a = DegreeMatrix::bigraded(k236);
  auto ch = chamber_complex_2xn(k236);
  CHECK_THROWS_AS(fit_chamber_qp(a, ch[1], Lattice::standard(2)), InterpolationError);
  try {
    fit_chamber_qp(a, ch[1], Lattice::standard(2));
  } catch (const InterpolationError& e) {
    CHECK(ch[1].contains(e.witness()));
  }
}

TEST_CASE("shift") {
  const auto& f = fitted();
  CHECK(shift(f.c1, Point::Zero(2), 1) == f.c1);
  auto moved = shift(f.c1, make_point({5, 1}), 1);
  CHECK(eval(moved, make_point({28, 10})) == eval(f.c1, make_point({23, 9})));
  CHECK(eval(moved, make_point({28, 10})) == 2);
  auto neg = shift(f.c1, Point::Zero(2), -1);
  for (int x = 0; x < 30; ++x) CHECK(eval(neg, make_point({x, 7})) == -eval(f.c1, make_point({x, 7})));

  std::mt19937 rng(5);
  std::uniform_int_distribution<int> small(-30, 30), coef(-3, 3);
  for (int k = 0; k < 1000; ++k) {
    const QuasiPolynomial& q = k % 2 ? f.c1 : f.c2;
    Point a = make_point({small(rng), small(rng)});
    Point xi = make_point({small(rng), small(rng)});
    Rational c(coef(rng));
    CHECK(eval(shift(q, a, c), xi) == c * eval(q, Point(xi - a)));
  }
}

TEST_CASE("add and refine") {
  const auto& f = fitted();
  auto zero = QuasiPolynomial::zero(f.global);
  CHECK(add(f.c1, zero) == f.c1);
  auto cancel = add(f.c1, shift(f.c1, Point::Zero(2), -1));
  for (const auto& p : cancel.pieces()) CHECK(p.is_zero());

  auto sum = add(add(shift(f.c1, make_point({5, 1}), 1), shift(f.c1, make_point({8, 1}), 1)),
                 add(shift(f.c1, make_point({9, 1}), 1), shift(f.c1, make_point({11, 2}), -1)));
  CHECK(eval(sum, make_point({28, 10})) == 3);

  // Different lattices are brought to their intersection.
  auto a = DegreeMatrix::bigraded(k236);
  auto ch = chamber_complex_2xn(k236);
  auto small = fit_chamber_qp(a, ch[0], ch[0].lattice);
  CHECK(small.lattice().det() == 4);
  auto mixed = add(small, f.c2);
  CHECK(mixed.lattice().det() == 12);
  for (int t = 0; t < 10; ++t)
    for (int mu = 0; mu < 40; ++mu) {
      Point u = make_point({mu, t});
      CHECK(eval(mixed, u) == eval(small, u) + eval(f.c2, u));
    }
  CHECK(refine(small, f.global).lattice() == f.global);
  CHECK_THROWS_AS(refine(f.c1, ch[0].lattice), std::invalid_argument);
}

TEST_CASE("equal_on_region") {
  const auto& f = fitted();
  auto all = [](const Point&) { return true; };
  CHECK(equal_on_region(f.c1, f.c1, all, make_point({0, 0}), make_point({20, 20})));

  std::vector<Polynomial> pieces = f.c1.pieces();
  std::size_t k = f.global.residue_index(make_point({7, 3}));
  pieces[k] += Polynomial::constant(2, 1);
  QuasiPolynomial bumped(f.global, pieces);
  Point w;
  auto only = [](const Point& u) { return u == make_point({7, 3}); };
  CHECK_FALSE(equal_on_region(f.c1, bumped, only, make_point({0, 0}), make_point({20, 20}), &w));
  CHECK(w == make_point({7, 3}));

  // Fitted C1 against the closed form, as a quasi-polynomial over the same lattice.
  std::vector<Polynomial> closed_pieces;
  for (std::size_t r = 0; r < f.global.index(); ++r) {
    Point tau = to_point(f.global.residue_at(r));
    std::int64_t i = floor_mod(tau(0) - 2 * tau(1), std::int64_t{4});
    closed_pieces.push_back(linear(Rational(1, 4), Rational(-1, 2), Rational(1) - Rational(i, 4)));
  }
  QuasiPolynomial p(f.global, closed_pieces);
  auto in_c1 = [](const Point& u) { return u(0) >= 2 * u(1) && u(0) <= 3 * u(1); };
  CHECK(equal_on_region(f.c1, p, in_c1, make_point({0, 0}), make_point({120, 40})));
}

TEST_CASE("piece choice depends only on the residue") {
  const auto& f = fitted();
  std::mt19937 rng(9);
  std::uniform_int_distribution<int> small(-40, 40), mult(-5, 5);
  for (int k = 0; k < 500; ++k) {
    Point xi = make_point({small(rng), small(rng)});
    IntVector lam = f.global.basis() * to_int_vector(make_point({mult(rng), mult(rng)}));
    Point moved = xi + to_point(lam);
    CHECK(f.c1.piece_index(xi) == f.c1.piece_index(moved));
  }
}
