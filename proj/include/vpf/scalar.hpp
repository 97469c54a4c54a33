#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>
#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

namespace vpf {

// Expression templates are disabled so that the scalars compose with Eigen's
// own expression machinery without surprises.
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<BigInt>;
using IntVector = Vector<BigInt>;
using RatMatrix = Matrix<Rational>;
using RatVector = Vector<Rational>;

/// Integer point of Z^d with machine-sized coordinates (degrees, grid points).
using Point = Vector<std::int64_t>;

Point make_point(std::initializer_list<std::int64_t> coords);

/// Floor division and the matching nonnegative remainder (b != 0).
BigInt floor_div(const BigInt& a, const BigInt& b);
BigInt floor_mod(const BigInt& a, const BigInt& b);
std::int64_t floor_div(std::int64_t a, std::int64_t b);
std::int64_t floor_mod(std::int64_t a, std::int64_t b);
BigInt ceil_div(const BigInt& a, const BigInt& b);

/// num/den for any nonzero den. The two-argument Rational constructor
/// misreads negative denominators, so prefer this.
Rational make_rational(const BigInt& num, const BigInt& den);

bool is_integer(const Rational& q);
/// Throws std::domain_error when q has a nontrivial denominator.
BigInt to_bigint(const Rational& q);
/// Throws std::overflow_error when the value does not fit.
std::int64_t to_int64(const BigInt& v);

IntVector to_int_vector(const Point& p);
RatVector to_rat_vector(const Point& p);
Point to_point(const IntVector& v);

/// Canonical text form: "p" for integers, "p/q" otherwise (q > 0, reduced).
std::string to_string(const Rational& q);
std::string to_string(const BigInt& v);
std::string to_string(const Point& p);
/// Accepts "p" or "p/q" with optional sign; throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Lexicographic order on points, used wherever output must be deterministic.
bool lex_less(const Point& a, const Point& b);

struct PointLess {
  bool operator()(const Point& a, const Point& b) const { return lex_less(a, b); }
};

}  // namespace vpf
