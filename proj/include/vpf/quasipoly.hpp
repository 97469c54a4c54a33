#pragma once

#include <functional>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "vpf/chambers.hpp"
#include "vpf/exactlinalg.hpp"
#include "vpf/vpfcore.hpp"

namespace vpf {

/// Polynomial in a fixed number of variables with exact rational coefficients.
/// Zero coefficients are never stored.
class Polynomial {
 public:
  using Exponent = std::vector<int>;

  explicit Polynomial(Eigen::Index vars = 0) : vars_(vars) {}
  static Polynomial constant(Eigen::Index vars, const Rational& c);
  static Polynomial variable(Eigen::Index vars, Eigen::Index i);

  Eigen::Index vars() const { return vars_; }
  bool is_zero() const { return terms_.empty(); }
  /// -1 for the zero polynomial.
  int total_degree() const;
  const std::map<Exponent, Rational>& terms() const { return terms_; }
  Rational coefficient(const Exponent& e) const;
  void add_term(const Exponent& e, const Rational& c);

  Rational eval(const RatVector& x) const;
  Rational eval(const Point& x) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

 private:
  Eigen::Index vars_;
  std::map<Exponent, Rational> terms_;
};

/// q(x) = p(x - a).
Polynomial translate(const Polynomial& p, const Point& a);
/// q(y) = p(M y + c); M has p.vars() rows.
Polynomial substitute_affine(const Polynomial& p, const RatMatrix& m, const RatVector& c);

/// Human-readable form such as "1/4*mu - 1/2*t + 1"; names default to x0, x1, ...
std::string to_string(const Polynomial& p, const std::vector<std::string>& names = {});

/// One polynomial per coset of a full-rank lattice, indexed by residue_index.
class QuasiPolynomial {
 public:
  QuasiPolynomial(Lattice lattice, std::vector<Polynomial> pieces);
  static QuasiPolynomial zero(const Lattice& lattice);

  const Lattice& lattice() const { return lattice_; }
  Eigen::Index vars() const { return lattice_.dim(); }
  const std::vector<Polynomial>& pieces() const { return pieces_; }
  std::size_t piece_index(const Point& u) const { return lattice_.residue_index(u); }
  const Polynomial& piece(const Point& u) const { return pieces_[piece_index(u)]; }
  int total_degree() const;

  friend bool operator==(const QuasiPolynomial& a, const QuasiPolynomial& b) {
    return a.lattice_ == b.lattice_ && a.pieces_ == b.pieces_;
  }

 private:
  Lattice lattice_;
  std::vector<Polynomial> pieces_;
};

Rational eval(const QuasiPolynomial& q, const Point& u);

/// r(x) = c * q(x - a).
QuasiPolynomial shift(const QuasiPolynomial& q, const Point& a, const Rational& c);
/// Re-expresses q over a sublattice of its lattice.
QuasiPolynomial refine(const QuasiPolynomial& q, const Lattice& finer);
/// Pointwise sum; differing lattices are refined to their intersection.
QuasiPolynomial add(const QuasiPolynomial& a, const QuasiPolynomial& b);

using RegionPredicate = std::function<bool(const Point&)>;

/// Compares evaluations on every point of the box [lo, hi] accepted by the
/// predicate. The first disagreeing point goes to *witness when given.
bool equal_on_region(const QuasiPolynomial& a, const QuasiPolynomial& b, const RegionPredicate& in_region,
                     const Point& lo, const Point& hi, Point* witness = nullptr);

class InterpolationError : public std::runtime_error {
 public:
  InterpolationError(const std::string& what, Point witness)
      : std::runtime_error(what + " at " + vpf::to_string(witness)), witness_(std::move(witness)) {}
  const Point& witness() const { return witness_; }

 private:
  Point witness_;
};

struct FitStats {
  std::size_t cosets = 0;
  std::size_t samples = 0;      // interpolation nodes, all cosets
  std::size_t validations = 0;  // extra interior and boundary checks
  Point table_bound;
};

/// Resource caps checked before any large allocation.
struct FitLimits {
  std::size_t max_cosets = std::numeric_limits<std::size_t>::max();
  std::size_t max_table = std::numeric_limits<std::size_t>::max();  // count-table entries
};

class FitBudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Quasi-polynomial agreeing with count(A, .) on the closed chamber, one piece
/// of degree <= n - d per coset of L. L must be Lambda_C or a sublattice.
/// Throws InterpolationError when the validation sample disagrees and
/// FitBudgetError when the limits would be exceeded.
QuasiPolynomial fit_chamber_qp(const DegreeMatrix& a, const Chamber& c, const Lattice& l, FitStats* stats = nullptr,
                               const FitLimits& limits = {});

}  // namespace vpf
