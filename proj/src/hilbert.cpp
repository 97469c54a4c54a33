#include "vpf/hilbert.hpp"

namespace vpf {

KappaNumerator::KappaNumerator(DegreeMatrix ring, const std::vector<std::pair<Point, BigInt>>& terms)
    : ring_(std::move(ring)) {
  for (const auto& [a, c] : terms) add(a, c);
}

void KappaNumerator::add(const Point& a, const BigInt& c) {
  if (a.size() != ring_.rows()) throw std::invalid_argument("KappaNumerator: shift " + to_string(a) + " has wrong dimension");
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(a, c);
  if (fresh) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

std::vector<Point> KappaNumerator::support() const {
  std::vector<Point> out;
  for (const auto& [a, c] : terms_) out.push_back(a);
  return out;
}

KappaNumerator operator+(const KappaNumerator& x, const KappaNumerator& y) {
  if (!(x.ring_ == y.ring_)) throw std::invalid_argument("KappaNumerator: rings differ");
  KappaNumerator out = x;
  for (const auto& [a, c] : y.terms_) out.add(a, c);
  return out;
}

BigInt hf_module(const KappaNumerator& kappa, const CoefficientTable& counts, const Point& u, HfDiagnostics* diag) {
  BigInt sum = 0;
  for (const auto& [a, c] : kappa.terms()) sum += c * count(counts, Point(u - a));
  if (sum < 0 && diag) diag->negative.push_back(u);
  return sum;
}

BigInt hf_module(const KappaNumerator& kappa, const Point& u, HfDiagnostics* diag) {
  if (u.size() != kappa.ring().rows()) throw std::invalid_argument("hf_module: dimension mismatch");
  Point reach = Point::Zero(u.size());
  for (const auto& [a, c] : kappa.terms()) reach = reach.cwiseMax(Point(u - a));
  CoefficientTable counts = series_coeffs(kappa.ring(), reach);
  return hf_module(kappa, counts, u, diag);
}

bool series_identity_check(const KappaNumerator& kappa, const Point& bound, Point* witness) {
  const Eigen::Index d = kappa.ring().rows();
  if (bound.size() != d) throw std::invalid_argument("series_identity_check: dimension mismatch");
  // Product route: place kappa on a box reaching its lowest shift, then divide
  // by each (1 - t^{a_j}).
  Point lo = Point::Zero(d);
  for (const auto& [a, c] : kappa.terms()) lo = lo.cwiseMin(a);
  CoefficientTable product(lo, bound.cwiseMax(lo));
  for (const auto& [a, c] : kappa.terms())
    if (product.covers(a)) product.at(a) += c;
  for (Eigen::Index j = 0; j < kappa.ring().cols(); ++j) product.multiply_geometric(kappa.ring().column(j));

  CoefficientTable counts = series_coeffs(kappa.ring(), bound.cwiseMax(Point::Zero(d)));
  Point u = Point::Zero(d);
  if ((bound.array() < 0).any()) return true;
  while (true) {
    if (product.at(u) != hf_module(kappa, counts, u)) {
      if (witness) *witness = u;
      return false;
    }
    Eigen::Index i = d - 1;
    for (; i >= 0; --i) {
      if (++u(i) <= bound(i)) break;
      u(i) = 0;
    }
    if (i < 0) return true;
  }
}

BigradedRing::BigradedRing(std::vector<std::int64_t> degrees)
    : degrees_(std::move(degrees)),
      matrix_(DegreeMatrix::bigraded(degrees_)),
      chambers_(chamber_complex_2xn(degrees_)),
      fitted_(chambers_.size()) {}

const QuasiPolynomial& BigradedRing::chamber_qp(std::size_t k) const {
  if (!fitted_.at(k)) fitted_[k] = fit_chamber_qp(matrix_, chambers_[k], chambers_[k].lattice);
  return *fitted_[k];
}

BigradedValue BigradedRing::hf(const Point& u) const {
  BigradedValue out{count(matrix_, u), std::nullopt, std::nullopt};
  auto hits = locate(chambers_, u);
  if (hits.empty()) {
    if (out.value != 0) throw std::logic_error("nonzero count outside the cone at " + to_string(u));
    return out;
  }
  const QuasiPolynomial& q = chamber_qp(hits.front());
  Rational v = eval(q, u);
  if (v != Rational(out.value))
    throw std::logic_error("chamber quasi-polynomial disagrees with count at " + to_string(u));
  out.chamber = hits.front();
  out.residue = q.lattice().reduce(u);
  return out;
}

BigradedValue hf_bigraded_ring(std::span<const std::int64_t> degrees, const Point& u) {
  return BigradedRing(std::vector<std::int64_t>(degrees.begin(), degrees.end())).hf(u);
}

}  // namespace vpf
