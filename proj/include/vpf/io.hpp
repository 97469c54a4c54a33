#pragma once

// Structured (JSON) forms of the exact objects. Rationals are strings "p/q"
// in lowest terms ("n" for integers); object keys come out sorted.

#include <string>
#include <vector>

#include "json.hpp"
#include "vpf/quasipoly.hpp"
#include "vpf/regions.hpp"

namespace vpf {

nlohmann::json to_json(const Rational& q);
nlohmann::json to_json(const Lattice& l);
nlohmann::json to_json(const Polynomial& p, const std::vector<std::string>& names);
/// Pieces listed by residue_index with their coset representatives.
nlohmann::json to_json(const QuasiPolynomial& q, const std::vector<std::string>& names = {"mu", "t"});
nlohmann::json to_json(const HalfLine& l);
nlohmann::json to_json(const RegionDecomposition& dec);

/// "mu = 2*t + 3".
std::string line_text(const HalfLine& l);
/// Right-hand side only, "2*t + 3".
std::string affine_text(std::int64_t slope, std::int64_t intercept);
/// Bounds of region r under the decomposition's boundary rule, e.g.
/// "2*t + 3 <= mu < 2*t + 6".
std::string region_bounds_text(const RegionDecomposition& dec, std::size_t r);

}  // namespace vpf
