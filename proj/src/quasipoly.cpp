#include "vpf/quasipoly.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace vpf {

Polynomial Polynomial::constant(Eigen::Index vars, const Rational& c) {
  Polynomial p(vars);
  p.add_term(Exponent(static_cast<std::size_t>(vars), 0), c);
  return p;
}

Polynomial Polynomial::variable(Eigen::Index vars, Eigen::Index i) {
  Polynomial p(vars);
  Exponent e(static_cast<std::size_t>(vars), 0);
  e[static_cast<std::size_t>(i)] = 1;
  p.add_term(e, 1);
  return p;
}

int Polynomial::total_degree() const {
  int best = -1;
  for (const auto& [e, c] : terms_) best = std::max(best, std::accumulate(e.begin(), e.end(), 0));
  return best;
}

Rational Polynomial::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Exponent& e, const Rational& c) {
  if (static_cast<Eigen::Index>(e.size()) != vars_) throw std::invalid_argument("Polynomial: exponent arity mismatch");
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(e, c);
  if (fresh) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Rational Polynomial::eval(const RatVector& x) const {
  if (x.size() != vars_) throw std::invalid_argument("Polynomial::eval: dimension mismatch");
  std::vector<std::vector<Rational>> powers(static_cast<std::size_t>(vars_), std::vector<Rational>{Rational(1)});
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      auto& pw = powers[i];
      while (static_cast<int>(pw.size()) <= e[i]) pw.push_back(pw.back() * x(static_cast<Eigen::Index>(i)));
      if (e[i]) term *= pw[static_cast<std::size_t>(e[i])];
    }
    sum += term;
  }
  return sum;
}

Rational Polynomial::eval(const Point& x) const { return eval(to_rat_vector(x)); }

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.vars_ != vars_) throw std::invalid_argument("Polynomial: variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.vars_ != vars_) throw std::invalid_argument("Polynomial: variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.vars_ != b.vars_) throw std::invalid_argument("Polynomial: variable count mismatch");
  Polynomial out(a.vars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Polynomial::Exponent e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

Polynomial translate(const Polynomial& p, const Point& a) {
  if (a.size() != p.vars()) throw std::invalid_argument("translate: dimension mismatch");
  // Taylor shift one variable at a time: x^e -> sum_j C(e,j) (-a)^(e-j) x^j.
  Polynomial cur = p;
  for (Eigen::Index i = 0; i < p.vars(); ++i) {
    if (a(i) == 0) continue;
    const BigInt neg = -a(i);
    Polynomial next(p.vars());
    for (const auto& [e, c] : cur.terms()) {
      const int top = e[static_cast<std::size_t>(i)];
      BigInt binom = 1, pw = 1;
      Polynomial::Exponent f = e;
      // j runs downward from top so (-a)^(top-j) grows with each step.
      for (int j = top; j >= 0; --j) {
        f[static_cast<std::size_t>(i)] = j;
        next.add_term(f, c * Rational(binom * pw));
        binom = binom * j / (top - j + 1);
        pw *= neg;
      }
    }
    cur = std::move(next);
  }
  return cur;
}

Polynomial substitute_affine(const Polynomial& p, const RatMatrix& m, const RatVector& c) {
  if (m.rows() != p.vars() || c.size() != p.vars()) throw std::invalid_argument("substitute_affine: dimension mismatch");
  const Eigen::Index out_vars = m.cols();
  std::vector<std::vector<Polynomial>> powers(static_cast<std::size_t>(p.vars()));
  for (Eigen::Index i = 0; i < p.vars(); ++i) {
    Polynomial lin = Polynomial::constant(out_vars, c(i));
    for (Eigen::Index j = 0; j < out_vars; ++j) lin += Polynomial::variable(out_vars, j) * m(i, j);
    powers[static_cast<std::size_t>(i)] = {Polynomial::constant(out_vars, 1), lin};
  }
  Polynomial out(out_vars);
  for (const auto& [e, coef] : p.terms()) {
    Polynomial term = Polynomial::constant(out_vars, coef);
    for (std::size_t i = 0; i < e.size(); ++i) {
      auto& pw = powers[i];
      while (static_cast<int>(pw.size()) <= e[i]) pw.push_back(pw.back() * pw[1]);
      if (e[i]) term = term * pw[static_cast<std::size_t>(e[i])];
    }
    out += term;
  }
  return out;
}

std::string to_string(const Polynomial& p, const std::vector<std::string>& names) {
  if (p.is_zero()) return "0";
  std::vector<std::pair<Polynomial::Exponent, Rational>> terms(p.terms().begin(), p.terms().end());
  auto degree = [](const Polynomial::Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); };
  std::stable_sort(terms.begin(), terms.end(), [&](const auto& x, const auto& y) {
    int dx = degree(x.first), dy = degree(y.first);
    if (dx != dy) return dx > dy;
    return x.first > y.first;
  });
  std::string out;
  for (const auto& [e, c] : terms) {
    Rational mag = c < 0 ? Rational(-c) : c;
    out += out.empty() ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += i < names.size() ? names[i] : "x" + std::to_string(i);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) out += to_string(mag);
    else if (mag == 1) out += mono;
    else out += to_string(mag) + "*" + mono;
  }
  return out;
}

QuasiPolynomial::QuasiPolynomial(Lattice lattice, std::vector<Polynomial> pieces)
    : lattice_(std::move(lattice)), pieces_(std::move(pieces)) {
  if (pieces_.size() != lattice_.index())
    throw std::invalid_argument("QuasiPolynomial: need one piece per coset (" + lattice_.det().str() + ")");
  for (const auto& p : pieces_)
    if (p.vars() != lattice_.dim()) throw std::invalid_argument("QuasiPolynomial: piece arity mismatch");
}

QuasiPolynomial QuasiPolynomial::zero(const Lattice& lattice) {
  return QuasiPolynomial(lattice, std::vector<Polynomial>(lattice.index(), Polynomial(lattice.dim())));
}

int QuasiPolynomial::total_degree() const {
  int best = -1;
  for (const auto& p : pieces_) best = std::max(best, p.total_degree());
  return best;
}

Rational eval(const QuasiPolynomial& q, const Point& u) { return q.piece(u).eval(u); }

QuasiPolynomial shift(const QuasiPolynomial& q, const Point& a, const Rational& c) {
  const Lattice& l = q.lattice();
  std::vector<Polynomial> pieces(l.index());
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    Point rho = to_point(l.residue_at(i));
    pieces[i] = translate(q.piece(Point(rho - a)), a) * c;
  }
  return QuasiPolynomial(l, std::move(pieces));
}

QuasiPolynomial refine(const QuasiPolynomial& q, const Lattice& finer) {
  if (!finer.is_sublattice_of(q.lattice())) throw std::invalid_argument("refine: target is not a sublattice");
  std::vector<Polynomial> pieces(finer.index());
  for (std::size_t i = 0; i < pieces.size(); ++i) pieces[i] = q.piece(to_point(finer.residue_at(i)));
  return QuasiPolynomial(finer, std::move(pieces));
}

QuasiPolynomial add(const QuasiPolynomial& a, const QuasiPolynomial& b) {
  if (a.vars() != b.vars()) throw std::invalid_argument("add: dimension mismatch");
  if (!(a.lattice() == b.lattice())) {
    Lattice common = lattice_intersect(a.lattice(), b.lattice());
    return add(refine(a, common), refine(b, common));
  }
  std::vector<Polynomial> pieces = a.pieces();
  for (std::size_t i = 0; i < pieces.size(); ++i) pieces[i] += b.pieces()[i];
  return QuasiPolynomial(a.lattice(), std::move(pieces));
}

bool equal_on_region(const QuasiPolynomial& a, const QuasiPolynomial& b, const RegionPredicate& in_region,
                     const Point& lo, const Point& hi, Point* witness) {
  if (lo.size() != a.vars() || hi.size() != a.vars()) throw std::invalid_argument("equal_on_region: dimension mismatch");
  if ((hi.array() < lo.array()).any()) return true;
  Point u = lo;
  while (true) {
    if (in_region(u) && eval(a, u) != eval(b, u)) {
      if (witness) *witness = u;
      return false;
    }
    Eigen::Index i = u.size() - 1;
    for (; i >= 0; --i) {
      if (++u(i) <= hi(i)) break;
      u(i) = lo(i);
    }
    if (i < 0) return true;
  }
}

namespace {

// All exponent vectors e in N^d with lo < |e| <= hi, graded then lexicographic.
std::vector<Polynomial::Exponent> exponents_between(Eigen::Index d, int lo, int hi) {
  std::vector<Polynomial::Exponent> out;
  Polynomial::Exponent e(static_cast<std::size_t>(d), 0);
  for (int total = std::max(lo + 1, 0); total <= hi; ++total) {
    auto fill = [&](auto&& self, std::size_t i, int left) -> void {
      if (i + 1 == e.size()) {
        e[i] = left;
        out.push_back(e);
        return;
      }
      for (int v = left; v >= 0; --v) {
        e[i] = v;
        self(self, i + 1, left - v);
      }
    };
    if (d == 0) {
      if (total == 0) out.push_back(e);
    } else {
      fill(fill, 0, total);
    }
  }
  return out;
}

BigInt monomial_at(const Polynomial::Exponent& e, const Polynomial::Exponent& k) {
  BigInt v = 1;
  for (std::size_t i = 0; i < e.size(); ++i)
    for (int r = 0; r < e[i]; ++r) v *= k[i];
  return v;
}

// Scales a rational matrix by the lcm of its denominators.
std::pair<IntMatrix, BigInt> integerize(const RatMatrix& m) {
  BigInt den = 1;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      BigInt q(boost::multiprecision::denominator(m(i, j)));
      den = den / boost::multiprecision::gcd(den, q) * q;
    }
  IntMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = to_bigint(m(i, j) * Rational(den));
  return {std::move(out), den};
}

BigInt round_half_up(const Rational& x) {
  BigInt num(boost::multiprecision::numerator(x)), den(boost::multiprecision::denominator(x));
  return floor_div(BigInt(2 * num + den), BigInt(2 * den));
}

}  // namespace

QuasiPolynomial fit_chamber_qp(const DegreeMatrix& a, const Chamber& c, const Lattice& l, FitStats* stats,
                               const FitLimits& limits) {
  const Eigen::Index d = a.rows();
  if (l.dim() != d) throw std::invalid_argument("fit_chamber_qp: lattice dimension mismatch");
  if (!a.full_rank()) throw RankError("fit_chamber_qp: degree matrix has rank below " + std::to_string(d));
  const int deg = static_cast<int>(a.cols() - d);

  // Planar chambers with rays (lo,1), (hi,1) get a row-by-row treatment.
  std::int64_t row_lo = 0, row_hi = 0;
  const bool rows = d == 2 && c.generators.size() == 2 && c.generators[0](1) == 1 && c.generators[1](1) == 1;
  Matrix<std::int64_t> hb(d, d);
  for (Eigen::Index j = 0; j < d; ++j) hb.col(j) = to_point(IntVector(l.basis().col(j)));
  // Mixed-radix coset index of (mu, t) for a planar HNF basis, in machine integers.
  auto planar_index = [&](std::int64_t mu, std::int64_t t) {
    std::int64_t r0 = floor_mod(mu, hb(0, 0));
    std::int64_t x = (mu - r0) / hb(0, 0);
    std::int64_t r1 = floor_mod(t - x * hb(1, 0), hb(1, 1));
    return static_cast<std::size_t>(r0 + hb(0, 0) * r1);
  };

  // Grid directions: lowest independent lattice points of the closed cone for
  // planar chambers, so every grid point stays inside; the HNF basis otherwise.
  Matrix<std::int64_t> b = hb;
  if (rows) {
    row_lo = std::min(c.generators[0](0), c.generators[1](0));
    row_hi = std::max(c.generators[0](0), c.generators[1](0));
    std::vector<Point> found;
    const std::size_t zero = planar_index(0, 0);
    for (std::int64_t t = 1; found.size() < 2; ++t)
      for (std::int64_t mu = row_lo * t; mu <= row_hi * t && found.size() < 2; ++mu) {
        if (planar_index(mu, t) != zero) continue;
        if (found.empty() || mu * found[0](1) != t * found[0](0)) found.push_back(make_point({mu, t}));
      }
    b.col(0) = found[0];
    b.col(1) = found[1];
  }
  RatMatrix b_rat = b.cast<Rational>();
  RatMatrix b_inv = inverse_exact(b_rat);

  // Nodes k with |k| <= deg, validation with deg < |k| <= deg + m.
  const auto monomials = exponents_between(d, -1, deg);
  const auto& nodes = monomials;
  const std::size_t n_nodes = nodes.size();
  std::vector<Polynomial::Exponent> checks;
  for (int m = 1; checks.size() < 3 * n_nodes; ++m) checks = exponents_between(d, deg, deg + m);

  RatMatrix vand(static_cast<Eigen::Index>(n_nodes), static_cast<Eigen::Index>(n_nodes));
  for (std::size_t r = 0; r < n_nodes; ++r)
    for (std::size_t s = 0; s < n_nodes; ++s)
      vand(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(s)) = Rational(monomial_at(monomials[s], nodes[r]));
  RatMatrix vand_inv = inverse_exact(vand);

  // k = B^{-1} w turns a k-monomial into a homogeneous w-polynomial of the same degree.
  std::map<Polynomial::Exponent, std::size_t> slot;
  for (std::size_t s = 0; s < n_nodes; ++s) slot[monomials[s]] = s;
  RatMatrix to_w = RatMatrix::Zero(static_cast<Eigen::Index>(n_nodes), static_cast<Eigen::Index>(n_nodes));
  for (std::size_t s = 0; s < n_nodes; ++s) {
    Polynomial mono(d);
    mono.add_term(monomials[s], 1);
    Polynomial in_w = substitute_affine(mono, b_inv, RatVector::Zero(d));
    for (const auto& [e, coef] : in_w.terms())
      to_w(static_cast<Eigen::Index>(slot.at(e)), static_cast<Eigen::Index>(s)) = coef;
  }
  auto [coef_map, coef_den] = integerize(RatMatrix(to_w * vand_inv));

  RatMatrix vcheck(static_cast<Eigen::Index>(checks.size()), static_cast<Eigen::Index>(n_nodes));
  for (std::size_t r = 0; r < checks.size(); ++r)
    for (std::size_t s = 0; s < n_nodes; ++s)
      vcheck(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(s)) = Rational(monomial_at(monomials[s], checks[r]));
  auto [predict, predict_den] = integerize(RatMatrix(vcheck * vand_inv));

  auto offset = [&](const Polynomial::Exponent& k) {
    Point p = Point::Zero(d);
    for (Eigen::Index j = 0; j < d; ++j) p += b.col(j) * k[static_cast<std::size_t>(j)];
    return p;
  };
  std::vector<Point> node_off, check_off;
  for (const auto& k : nodes) node_off.push_back(offset(k));
  for (const auto& k : checks) check_off.push_back(offset(k));

  // u0 + offset must stay in the closed chamber for every grid offset.
  std::vector<std::int64_t> need(c.inequalities.size(), 0);
  for (std::size_t r = 0; r < need.size(); ++r) {
    for (const auto& o : node_off) need[r] = std::max(need[r], -c.form(r, o));
    for (const auto& o : check_off) need[r] = std::max(need[r], -c.form(r, o));
  }
  auto feasible = [&](const Point& u0) {
    for (std::size_t r = 0; r < need.size(); ++r)
      if (c.form(r, u0) < need[r]) return false;
    return true;
  };

  Point inner = Point::Zero(d);
  for (const auto& g : c.generators) inner += g;
  const IntMatrix& lb = l.basis();
  RatMatrix lb_inv = inverse_exact(RatMatrix(lb.cast<Rational>()));
  RatVector lb_inv_inner = lb_inv * to_rat_vector(inner);

  if (l.det() > BigInt(limits.max_cosets))
    throw FitBudgetError("lattice index " + l.det().str() + " exceeds the coset limit");
  const std::size_t cosets = l.index();
  std::vector<Point> base(cosets);
  Point bound = Point::Zero(d);
  auto widen = [&](const Point& p) { bound = bound.cwiseMax(p); };

  if (rows) {
    // Lowest point of every coset in the closed chamber, scanning rows upward.
    std::vector<bool> seen(cosets, false);
    std::size_t left = cosets;
    for (std::int64_t t = 0; left > 0; ++t)
      for (std::int64_t mu = row_lo * t; mu <= row_hi * t && left > 0; ++mu) {
        std::size_t idx = planar_index(mu, t);
        if (seen[idx]) continue;
        seen[idx] = true;
        --left;
        base[idx] = make_point({mu, t});
      }
  }
  for (std::size_t i = 0; i < cosets && !rows; ++i) {
    IntVector tau = l.residue_at(i);
    RatVector lb_inv_tau = lb_inv * tau.cast<Rational>();
    auto candidate = [&](std::int64_t s) {
      IntVector x(d);
      for (Eigen::Index j = 0; j < d; ++j) x(j) = round_half_up(Rational(s) * lb_inv_inner(j) - lb_inv_tau(j));
      return to_point(IntVector(tau + lb * x));
    };
    std::int64_t lo = 0, hi = 1;
    while (!feasible(candidate(hi))) {
      lo = hi;
      hi *= 2;
      if (hi > (std::int64_t{1} << 40)) throw InterpolationError("no interior base point for coset", to_point(tau));
    }
    while (hi - lo > 1) {
      std::int64_t mid = lo + (hi - lo) / 2;
      if (feasible(candidate(mid))) hi = mid;
      else lo = mid;
    }
    base[i] = candidate(hi);
  }
  for (std::size_t i = 0; i < cosets; ++i) {
    if (!feasible(base[i])) throw InterpolationError("grid leaves the chamber", base[i]);
    for (const auto& o : node_off) widen(Point(base[i] + o));
    for (const auto& o : check_off) widen(Point(base[i] + o));
  }

  // Closure points on each extremal ray, found through the residue cycle of s*g.
  std::vector<std::vector<Point>> ray_points(cosets);
  for (const auto& g : c.generators) {
    std::unordered_map<std::size_t, std::int64_t> first;
    std::int64_t period = 0;
    for (std::int64_t s = 0;; ++s) {
      std::size_t idx = l.residue_index(Point(s * g));
      if (s > 0 && idx == l.residue_index(Point(Point::Zero(d)))) {
        period = s;
        break;
      }
      first.emplace(idx, s);
    }
    for (const auto& [idx, s0] : first) {
      int hits = 0;
      for (std::int64_t s = s0; hits <= deg; s += period, ++hits) {
        Point p = s * g;
        if ((p.array() > bound.array()).any()) break;
        ray_points[idx].push_back(p);
      }
    }
  }

  double entries = 1;
  for (Eigen::Index i = 0; i < d; ++i) entries *= static_cast<double>(bound(i) + 1);
  if (entries > static_cast<double>(limits.max_table))
    throw FitBudgetError("count table up to " + to_string(bound) + " exceeds the table limit");
  CoefficientTable table = series_coeffs(a, bound);
  std::vector<Polynomial> pieces(cosets);
  FitStats local;
  local.cosets = cosets;
  local.table_bound = bound;

  IntVector values(static_cast<Eigen::Index>(n_nodes));
  for (std::size_t i = 0; i < cosets; ++i) {
    for (std::size_t r = 0; r < n_nodes; ++r)
      values(static_cast<Eigen::Index>(r)) = table.at(Point(base[i] + node_off[r]));
    local.samples += n_nodes;

    IntVector predicted = predict * values;
    for (std::size_t r = 0; r < checks.size(); ++r) {
      Point p = base[i] + check_off[r];
      if (predicted(static_cast<Eigen::Index>(r)) != predict_den * table.at(p))
        throw InterpolationError("no polynomial of degree " + std::to_string(deg) + " fits the counts", p);
    }
    local.validations += checks.size();

    IntVector coef = coef_map * values;
    Polynomial in_w(d);
    for (std::size_t s = 0; s < n_nodes; ++s)
      in_w.add_term(monomials[s], Rational(coef(static_cast<Eigen::Index>(s))) / Rational(coef_den));
    pieces[i] = translate(in_w, base[i]);

    for (const auto& p : ray_points[i]) {
      if (pieces[i].eval(p) != Rational(table.at(p)))
        throw InterpolationError("fitted piece disagrees with count on the chamber boundary", p);
    }
    local.validations += ray_points[i].size();
  }
  if (stats) *stats = local;
  return QuasiPolynomial(l, std::move(pieces));
}

}  // namespace vpf
