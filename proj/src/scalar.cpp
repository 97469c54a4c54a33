#include "vpf/scalar.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace vpf {

Point make_point(std::initializer_list<std::int64_t> coords) {
  Point p(static_cast<Eigen::Index>(coords.size()));
  Eigen::Index i = 0;
  for (auto c : coords) p(i++) = c;
  return p;
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  BigInt r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

BigInt floor_mod(const BigInt& a, const BigInt& b) { return a - b * floor_div(a, b); }

BigInt ceil_div(const BigInt& a, const BigInt& b) { return -floor_div(-a, b); }

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  std::int64_t r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

std::int64_t floor_mod(std::int64_t a, std::int64_t b) { return a - b * floor_div(a, b); }

bool is_integer(const Rational& q) {
  return boost::multiprecision::denominator(q) == 1;
}

BigInt to_bigint(const Rational& q) {
  if (!is_integer(q)) throw std::domain_error("rational " + to_string(q) + " is not an integer");
  return BigInt(boost::multiprecision::numerator(q));
}

std::int64_t to_int64(const BigInt& v) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min())
    throw std::overflow_error("integer " + v.str() + " exceeds 64 bits");
  return v.convert_to<std::int64_t>();
}

IntVector to_int_vector(const Point& p) {
  IntVector v(p.size());
  for (Eigen::Index i = 0; i < p.size(); ++i) v(i) = p(i);
  return v;
}

RatVector to_rat_vector(const Point& p) {
  RatVector v(p.size());
  for (Eigen::Index i = 0; i < p.size(); ++i) v(i) = p(i);
  return v;
}

Point to_point(const IntVector& v) {
  Point p(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) p(i) = to_int64(v(i));
  return p;
}

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("make_rational: zero denominator");
  return Rational(num) / Rational(den);
}

std::string to_string(const BigInt& v) { return v.str(); }

std::string to_string(const Rational& q) {
  BigInt num(boost::multiprecision::numerator(q));
  BigInt den(boost::multiprecision::denominator(q));
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string to_string(const Point& p) {
  std::string out = "(";
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(p(i));
  }
  return out + ")";
}

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
  auto fail = [&] { throw std::invalid_argument("malformed rational \"" + std::string(whole) + "\""); };
  if (text.empty()) fail();
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) fail();
  for (std::size_t i = start; i < text.size(); ++i)
    if (text[i] < '0' || text[i] > '9') fail();
  std::string digits(text[0] == '+' ? text.substr(1) : text);
  return BigInt(digits);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  BigInt num = parse_integer(text.substr(0, slash), text);
  BigInt den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) throw std::invalid_argument("zero denominator in \"" + std::string(text) + "\"");
  return Rational(num) / Rational(den);
}

bool lex_less(const Point& a, const Point& b) {
  return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(), b.data() + b.size());
}

}  // namespace vpf
