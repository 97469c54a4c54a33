#include "vpf/regions.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

namespace vpf {

std::vector<HalfLine> half_lines(const std::vector<Point>& shifts, std::span<const std::int64_t> slopes) {
  std::vector<HalfLine> out;
  out.reserve(shifts.size() * slopes.size());
  for (std::size_t s = 0; s < shifts.size(); ++s) {
    if (shifts[s].size() != 2) throw std::invalid_argument("half_lines: shifts must be bidegrees");
    for (std::int64_t a : slopes) out.push_back({a, shifts[s](0) - a * shifts[s](1), shifts[s], s});
  }
  return out;
}

Rational intersection_ordinate(const HalfLine& x, const HalfLine& y) {
  if (x.slope == y.slope) throw std::invalid_argument("intersection_ordinate: parallel lines");
  return make_rational(y.intercept - x.intercept, x.slope - y.slope);
}

std::int64_t stability_threshold(const std::vector<Point>& shifts, std::span<const std::int64_t> slopes) {
  std::int64_t t0 = 1;
  for (const Point& s : shifts) t0 = std::max(t0, s(1));
  auto lines = half_lines(shifts, slopes);
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      if (lines[i].slope == lines[j].slope) continue;
      Rational y = intersection_ordinate(lines[i], lines[j]);
      t0 = std::max(t0, to_int64(ceil_div(numerator(y), denominator(y))));
    }
  return t0;
}

std::vector<HalfLine> sort_lines(const std::vector<Point>& shifts, std::span<const std::int64_t> slopes,
                                 std::int64_t t0) {
  auto lines = half_lines(shifts, slopes);
  const std::int64_t t = t0 + 1;
  std::stable_sort(lines.begin(), lines.end(), [t](const HalfLine& x, const HalfLine& y) {
    if (x.value(t) != y.value(t)) return x.value(t) < y.value(t);
    if (x.slope != y.slope) return x.slope < y.slope;
    if (x.intercept != y.intercept) return x.intercept < y.intercept;
    return x.shift_index < y.shift_index;
  });
  return lines;
}

std::ptrdiff_t RegionDecomposition::region_of(std::int64_t mu, std::int64_t t) const {
  if (lines.empty()) return -1;
  if (one_ray) return mu >= lines.front().value(t) && mu <= lines.back().value(t) ? 0 : -1;
  const std::int64_t top = slopes.back();
  std::size_t above = 0;
  for (const HalfLine& l : lines) {
    const std::int64_t v = l.value(t);
    if (mu > v || (mu == v && l.slope < top)) ++above;
  }
  if (above == 0 || above == lines.size()) return -1;
  return static_cast<std::ptrdiff_t>(above) - 1;
}

namespace {

// C(t - s + k, k) as a polynomial in (mu, t).
Polynomial shifted_binomial(std::int64_t s, std::int64_t k) {
  Polynomial p = Polynomial::constant(2, 1);
  for (std::int64_t j = 1; j <= k; ++j) {
    Polynomial f = Polynomial::variable(2, 1);
    f += Polynomial::constant(2, Rational(j - s));
    p = p * f * Rational(1, j);
  }
  return p;
}

RegionDecomposition one_ray_decomposition(const KappaNumerator& kappa, RegionDecomposition dec) {
  dec.one_ray = true;
  const std::int64_t e = dec.slopes.front();
  const auto shifts = kappa.support();
  dec.t0 = stability_threshold(shifts, dec.slopes);
  dec.lines = sort_lines(shifts, dec.slopes, dec.t0);
  const std::int64_t lo = dec.lines.front().intercept;
  const std::int64_t width = dec.lines.back().intercept - lo + 1;
  // Cosets of span{(e,1), (width,0)} are the classes of mu - e t mod width,
  // and each class meets the intercept window exactly once.
  dec.lattice = lattice_from_columns(std::vector<Point>{make_point({e, 1}), make_point({width, 0})});
  const std::int64_t k = static_cast<std::int64_t>(dec.ring_degrees.size()) - 1;
  std::vector<Polynomial> pieces(dec.lattice.index(), Polynomial(2));
  for (std::size_t r = 0; r < pieces.size(); ++r) {
    Point tau = to_point(dec.lattice.residue_at(r));
    const std::int64_t b = lo + floor_mod(tau(0) - e * tau(1) - lo, width);
    for (const auto& [a, c] : kappa.terms())
      if (a(0) - e * a(1) == b) pieces[r] += shifted_binomial(a(1), k) * Rational(c);
  }
  dec.regions.push_back({0, dec.lines.size() - 1, QuasiPolynomial(dec.lattice, std::move(pieces)), {}});
  return dec;
}

}  // namespace

RegionDecomposition region_decomposition(const KappaNumerator& kappa, const FitLimits& limits) {
  const DegreeMatrix& ring = kappa.ring();
  if (!ring.is_bigraded()) throw std::invalid_argument("region_decomposition: ring columns must be (d_i, 1)");
  RegionDecomposition dec;
  dec.ring_degrees = ring.degrees();
  if (!std::is_sorted(dec.ring_degrees.begin(), dec.ring_degrees.end()))
    throw std::invalid_argument("region_decomposition: degrees must be nondecreasing");
  dec.slopes = distinct_degrees(dec.ring_degrees);
  if (kappa.empty()) return dec;
  if (dec.slopes.size() == 1) return one_ray_decomposition(kappa, std::move(dec));

  const auto shifts = kappa.support();
  dec.t0 = stability_threshold(shifts, dec.slopes);
  dec.lines = sort_lines(shifts, dec.slopes, dec.t0);
  dec.lattice = global_lattice(dec.ring_degrees);

  const auto chambers = chamber_complex_2xn(dec.ring_degrees);
  std::vector<QuasiPolynomial> chamber_qp;
  for (const Chamber& c : chambers) chamber_qp.push_back(fit_chamber_qp(ring, c, dec.lattice, nullptr, limits));

  // pos[s][k]: sorted position of the slope-k line through shift s.
  const std::size_t nslopes = dec.slopes.size();
  std::vector<std::vector<std::size_t>> pos(shifts.size(), std::vector<std::size_t>(nslopes));
  for (std::size_t i = 0; i < dec.lines.size(); ++i) {
    const HalfLine& l = dec.lines[i];
    auto k = std::lower_bound(dec.slopes.begin(), dec.slopes.end(), l.slope) - dec.slopes.begin();
    pos[l.shift_index][static_cast<std::size_t>(k)] = i;
  }

  // Shifted chamber pieces are shared between regions; cache them.
  std::vector<std::vector<std::optional<QuasiPolynomial>>> shifted(
      shifts.size(), std::vector<std::optional<QuasiPolynomial>>(chambers.size()));
  std::vector<BigInt> coef;
  for (const auto& [a, c] : kappa.terms()) coef.push_back(c);

  for (std::size_t p = 0; p + 1 < dec.lines.size(); ++p) {
    QuasiPolynomial q = QuasiPolynomial::zero(dec.lattice);
    std::vector<Region::Term> terms;
    for (std::size_t s = 0; s < shifts.size(); ++s) {
      if (p < pos[s].front() || p >= pos[s].back()) continue;
      std::size_t k = 0;
      while (pos[s][k + 1] <= p) ++k;
      if (!shifted[s][k]) shifted[s][k] = shift(chamber_qp[k], shifts[s], Rational(coef[s]));
      q = add(q, *shifted[s][k]);
      terms.push_back({shifts[s], coef[s], k});
    }
    dec.regions.push_back({p, p + 1, std::move(q), std::move(terms)});
  }
  return dec;
}

BigInt eval_betti(const RegionDecomposition& dec, std::int64_t mu, std::int64_t t) {
  if (t < dec.t0)
    throw PreStableRangeError("eval_betti: t = " + std::to_string(t) + " is below the threshold t0 = " +
                              std::to_string(dec.t0) + "; use hf_module for these bidegrees");
  std::ptrdiff_t r = dec.region_of(mu, t);
  if (r < 0) return 0;
  Rational v = eval(dec.regions[static_cast<std::size_t>(r)].qp, make_point({mu, t}));
  if (!is_integer(v)) throw std::logic_error("eval_betti: non-integral value " + to_string(v));
  return to_bigint(v);
}

BigInt total_betti(const RegionDecomposition& dec, std::int64_t t) {
  BigInt sum = 0;
  if (dec.lines.empty()) return sum;
  for (std::int64_t mu = dec.lines.front().value(t); mu <= dec.lines.back().value(t); ++mu)
    sum += eval_betti(dec, mu, t);
  return sum;
}

Polynomial total_betti_polynomial(const RegionDecomposition& dec, std::int64_t check_until) {
  const std::int64_t n = static_cast<std::int64_t>(dec.ring_degrees.size());
  const std::int64_t first = dec.t0, last = dec.t0 + n;
  check_until = std::max(check_until, last + n + 1);
  std::vector<Rational> values;
  for (std::int64_t t = first; t <= last; ++t) values.emplace_back(total_betti(dec, t));

  // Lagrange form, expanded.
  Polynomial out(1);
  for (std::int64_t i = first; i <= last; ++i) {
    Polynomial basis = Polynomial::constant(1, values[static_cast<std::size_t>(i - first)]);
    for (std::int64_t j = first; j <= last; ++j) {
      if (j == i) continue;
      Polynomial f = Polynomial::variable(1, 0);
      f += Polynomial::constant(1, Rational(-j));
      basis = basis * f * make_rational(1, i - j);
    }
    out += basis;
  }
  for (std::int64_t t = last + 1; t <= check_until; ++t)
    if (out.eval(make_point({t})) != Rational(total_betti(dec, t)))
      throw TotalBettiError("total_betti_polynomial: interpolant disagrees with the row sum", t);
  return out;
}

}  // namespace vpf
