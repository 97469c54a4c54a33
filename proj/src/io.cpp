#include "vpf/io.hpp"

namespace vpf {

using nlohmann::json;

json to_json(const Rational& q) { return to_string(q); }

json to_json(const Lattice& l) {
  json basis = json::array();
  for (Eigen::Index j = 0; j < l.basis().cols(); ++j) {
    json col = json::array();
    for (Eigen::Index i = 0; i < l.basis().rows(); ++i) col.push_back(l.basis()(i, j).str());
    basis.push_back(col);
  }
  return {{"basis_columns", basis}, {"det", l.det().str()}};
}

json to_json(const Polynomial& p, const std::vector<std::string>& names) {
  json terms = json::array();
  // Highest degree first, matching the text form.
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
    terms.push_back({{"exponent", it->first}, {"coefficient", to_string(it->second)}});
  return {{"text", to_string(p, names)}, {"terms", terms}};
}

json to_json(const QuasiPolynomial& q, const std::vector<std::string>& names) {
  json pieces = json::array();
  for (std::size_t r = 0; r < q.pieces().size(); ++r) {
    IntVector tau = q.lattice().residue_at(r);
    json rep = json::array();
    for (Eigen::Index i = 0; i < tau.size(); ++i) rep.push_back(tau(i).str());
    pieces.push_back({{"residue", rep}, {"polynomial", to_json(q.pieces()[r], names)}});
  }
  return {{"lattice", to_json(q.lattice())}, {"pieces", pieces}};
}

std::string affine_text(std::int64_t slope, std::int64_t intercept) {
  if (slope == 0) return std::to_string(intercept);
  std::string s = slope == 1 ? "t" : std::to_string(slope) + "*t";
  if (intercept > 0) s += " + " + std::to_string(intercept);
  if (intercept < 0) s += " - " + std::to_string(-intercept);
  return s;
}

std::string line_text(const HalfLine& l) { return "mu = " + affine_text(l.slope, l.intercept); }

std::string region_bounds_text(const RegionDecomposition& dec, std::size_t r) {
  const Region& reg = dec.regions.at(r);
  const HalfLine& lo = dec.lines[reg.lower];
  const HalfLine& hi = dec.lines[reg.upper];
  if (dec.one_ray) return affine_text(lo.slope, lo.intercept) + " <= mu <= " + affine_text(hi.slope, hi.intercept);
  const std::int64_t top = dec.slopes.back();
  return affine_text(lo.slope, lo.intercept) + (lo.slope < top ? " <= " : " < ") + "mu" +
         (hi.slope < top ? " < " : " <= ") + affine_text(hi.slope, hi.intercept);
}

json to_json(const HalfLine& l) {
  return {{"slope", l.slope},
          {"intercept", l.intercept},
          {"origin", {l.origin(0), l.origin(1)}},
          {"text", line_text(l)}};
}

json to_json(const RegionDecomposition& dec) {
  json lines = json::array();
  for (const auto& l : dec.lines) lines.push_back(to_json(l));
  json regions = json::array();
  for (const auto& r : dec.regions) {
    json q = to_json(r.qp);
    q.erase("lattice");  // shared, listed once
    json terms = json::array();
    for (const auto& t : r.terms)
      terms.push_back({{"shift", {t.shift(0), t.shift(1)}}, {"coefficient", t.coefficient.str()}, {"chamber", t.chamber}});
    regions.push_back({{"lower", r.lower},
                       {"upper", r.upper},
                       {"bounds", region_bounds_text(dec, static_cast<std::size_t>(&r - dec.regions.data()))},
                       {"terms", terms},
                       {"pieces", q["pieces"]}});
  }
  return {{"degrees", dec.ring_degrees},
          {"t0", dec.t0},
          {"modulus", dec.modulus().str()},
          {"lattice", to_json(dec.lattice)},
          {"one_ray", dec.one_ray},
          {"lines", lines},
          {"regions", regions}};
}

}  // namespace vpf
