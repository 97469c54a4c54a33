#pragma once

// The worked complete intersection with generator degrees (2, 3, 6): the
// closed formulas and Betti tables as published, and their comparison with
// the computed decompositions.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vpf/regions.hpp"
#include "vpf/verify.hpp"

namespace vpf::reference {

/// Printed three-branch formula for H(B, (mu, t)), B = k[T1,T2,T3] with
/// degrees (2,1), (3,1), (6,1). branch: 1 for 2t <= mu <= 3t, 2 for 3t <= mu <= 6t.
std::optional<BigInt> hilbert_branch(int branch, std::int64_t mu, std::int64_t t);

/// The printed P and Q quasi-polynomials (P for 2t <= mu <= 3t, Q for 3t <= mu <= 6t).
Rational p_formula(std::int64_t mu, std::int64_t t);
Rational q_formula(std::int64_t mu, std::int64_t t);

struct Bound {
  std::int64_t slope, intercept;
  bool strict;  // "<" rather than "<="
};

struct TableTerm {
  bool q;       // Q rather than P
  Point shift;  // argument (mu - shift0, t - shift1)
  int sign;
};

struct TableRow {
  Bound lower, upper;
  std::vector<TableTerm> terms;
  std::string text;
};

/// Published tables for Tor_0, Tor_1, Tor_2 (index 0..2), rows as printed.
std::vector<TableRow> published_table(int index);
/// Tor_1 with the (Q2 + Q2) row read as Q2 + Q3 and closed at 6t + 2.
std::vector<TableRow> corrected_tor1_table();

/// Value by the first row containing (mu, t); 0 when none does.
Rational table_value(const std::vector<TableRow>& rows, std::int64_t mu, std::int64_t t);
/// Index of the first row containing (mu, t), or -1.
int table_row(const std::vector<TableRow>& rows, std::int64_t mu, std::int64_t t);

struct TableComparison {
  std::size_t points = 0;
  std::vector<Point> mismatches;  // in grid order
  std::vector<int> rows;          // row index per mismatch, -1 when uncovered
};

/// Compares the table with hf_module on t in [tmin, tmax], mu in [2t - 5, 6t + max_shift + 5].
TableComparison compare_table(const std::vector<TableRow>& rows, const KappaNumerator& kappa, std::int64_t tmin,
                              std::int64_t tmax);

/// Tor_1 numerator with the (8, 1) summand replaced by the printed (8, -1).
KappaNumerator printed_sign_tor1();

/// Checks T-degree 0 and 1 against Tor(S, k) and the Koszul complex of a
/// regular sequence of degrees d: Tor_i(R_I)_(mu,0) = [i = 0, mu = 0] and
/// Tor_i(R_I)_(mu,1) = #{(i+1)-subsets of d summing to mu}. First failure to *witness.
bool low_slices_match(const std::vector<std::int64_t>& degrees, int index, const KappaNumerator& kappa,
                      Point* witness = nullptr);

struct Reproduction {
  std::string document;
  RunReport report;
};

/// Full run: HNF, chambers, H(B) checks, decompositions, published-table
/// comparison and the verification suite up to tmax.
Reproduction reproduce_ci_236(std::int64_t tmax = 40);

}  // namespace vpf::reference
