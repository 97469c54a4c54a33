#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vpf/chambers.hpp"
#include "vpf/quasipoly.hpp"
#include "vpf/vpfcore.hpp"

namespace vpf {

/// Signed shift data sum_a c_a t^a over a graded polynomial ring. Repeated
/// shifts are merged and zero coefficients dropped.
class KappaNumerator {
 public:
  using Terms = std::map<Point, BigInt, PointLess>;

  explicit KappaNumerator(DegreeMatrix ring) : ring_(std::move(ring)) {}
  KappaNumerator(DegreeMatrix ring, const std::vector<std::pair<Point, BigInt>>& terms);

  const DegreeMatrix& ring() const { return ring_; }
  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  /// Shift vectors in lexicographic order.
  std::vector<Point> support() const;
  void add(const Point& a, const BigInt& c);

  friend KappaNumerator operator+(const KappaNumerator& x, const KappaNumerator& y);
  friend bool operator==(const KappaNumerator& x, const KappaNumerator& y) {
    return x.ring_ == y.ring_ && x.terms_ == y.terms_;
  }

 private:
  DegreeMatrix ring_;
  Terms terms_;
};

/// Points where a module Hilbert function came out negative. Genuine modules
/// never produce these, so they point at inconsistent shift data.
struct HfDiagnostics {
  std::vector<Point> negative;
};

/// sum_a c_a * count(ring, u - a).
BigInt hf_module(const KappaNumerator& kappa, const Point& u, HfDiagnostics* diag = nullptr);
/// Same, reading counts from a precomputed table that covers u.
BigInt hf_module(const KappaNumerator& kappa, const CoefficientTable& counts, const Point& u,
                 HfDiagnostics* diag = nullptr);

/// Coefficientwise check, on 0 <= u <= bound, that the truncated product of
/// the kappa polynomial with the ring series equals the hf_module table.
bool series_identity_check(const KappaNumerator& kappa, const Point& bound, Point* witness = nullptr);

struct BigradedValue {
  BigInt value;
  std::optional<std::size_t> chamber;  // empty outside the cone
  std::optional<IntVector> residue;    // coset representative that picked the piece
};

/// The ring k[T_1..T_n] with deg T_i = (d_i, 1), evaluated through its
/// chamber quasi-polynomials (fitted over each Lambda_C on first use).
class BigradedRing {
 public:
  explicit BigradedRing(std::vector<std::int64_t> degrees);

  const std::vector<std::int64_t>& degrees() const { return degrees_; }
  const DegreeMatrix& matrix() const { return matrix_; }
  const std::vector<Chamber>& chambers() const { return chambers_; }
  const QuasiPolynomial& chamber_qp(std::size_t k) const;

  /// The value always agrees with count; std::logic_error otherwise.
  BigradedValue hf(const Point& u) const;

 private:
  std::vector<std::int64_t> degrees_;
  DegreeMatrix matrix_;
  std::vector<Chamber> chambers_;
  mutable std::vector<std::optional<QuasiPolynomial>> fitted_;
};

BigradedValue hf_bigraded_ring(std::span<const std::int64_t> degrees, const Point& u);

}  // namespace vpf
