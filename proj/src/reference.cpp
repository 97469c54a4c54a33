#include "vpf/reference.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <sstream>

#include "vpf/io.hpp"

namespace vpf::reference {

namespace {

const std::vector<std::int64_t> kDegrees{2, 3, 6};

// P_1 .. P_5 in the published notation.
const std::vector<Point>& numbered_shifts() {
  static const std::vector<Point> s{make_point({5, 1}), make_point({8, 1}), make_point({9, 1}), make_point({11, 2}),
                                    make_point({11, 1})};
  return s;
}

std::string shift_label(const Point& a) {
  const auto& s = numbered_shifts();
  auto it = std::find(s.begin(), s.end(), a);
  if (it != s.end()) return std::to_string(it - s.begin() + 1);
  if (a.isZero()) return "";
  return to_string(a);
}

TableTerm term(bool q, int k, int sign) {
  return {q, k == 0 ? make_point({0, 0}) : numbered_shifts()[static_cast<std::size_t>(k - 1)], sign};
}

bool above(const Bound& b, std::int64_t mu, std::int64_t t) {
  const std::int64_t v = b.slope * t + b.intercept;
  return b.strict ? mu > v : mu >= v;
}

bool below(const Bound& b, std::int64_t mu, std::int64_t t) {
  const std::int64_t v = b.slope * t + b.intercept;
  return b.strict ? mu < v : mu <= v;
}

std::string matrix_text(const IntMatrix& m) {
  std::string s = "[";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    s += i ? ", [" : "[";
    for (Eigen::Index j = 0; j < m.cols(); ++j) s += (j ? ", " : "") + m(i, j).str();
    s += "]";
  }
  return s + "]";
}

std::string form_text(const Point& h) {
  Polynomial p(2);
  p.add_term({1, 0}, Rational(h(0)));
  p.add_term({0, 1}, Rational(h(1)));
  return to_string(p, {"mu", "t"}) + " >= 0";
}

std::string term_text(const Region::Term& t, bool first) {
  const char* family = t.chamber == 0 ? "P" : "Q";
  std::string s;
  if (t.coefficient < 0)
    s = first ? "-" : " - ";
  else if (!first)
    s = " + ";
  BigInt mag = t.coefficient < 0 ? BigInt(-t.coefficient) : t.coefficient;
  if (mag != 1) s += mag.str() + "*";
  return s + family + shift_label(t.shift);
}

std::string region_rows(const RegionDecomposition& dec) {
  std::ostringstream out;
  for (std::size_t r = 0; r < dec.regions.size(); ++r) {
    const auto& reg = dec.regions[r];
    // Skip regions squeezed between coincident lines.
    if (dec.lines[reg.lower] == dec.lines[reg.upper] ||
        (dec.lines[reg.lower].slope == dec.lines[reg.upper].slope &&
         dec.lines[reg.lower].intercept == dec.lines[reg.upper].intercept))
      continue;
    out << "  " << region_bounds_text(dec, r) << ": ";
    if (reg.terms.empty()) out << "0";
    for (std::size_t k = 0; k < reg.terms.size(); ++k) out << term_text(reg.terms[k], k == 0);
    out << "\n";
  }
  out << "  otherwise: 0\n";
  return out.str();
}

std::string fmt_point(const Point& p) { return to_string(p); }

}  // namespace

std::optional<BigInt> hilbert_branch(int branch, std::int64_t mu, std::int64_t t) {
  const std::int64_t a = floor_div(mu - 2 * t, std::int64_t{4});
  if (branch == 1) {
    if (mu < 2 * t || mu > 3 * t) return std::nullopt;
    return BigInt(a + 1);
  }
  if (mu < 3 * t || mu > 6 * t) return std::nullopt;
  if ((mu - 3 * t) % 3 == 0) return BigInt(a - (mu - 3 * t) / 3 + 1);
  return BigInt(a - floor_div(mu - 3 * t, std::int64_t{3}));
}

Rational p_formula(std::int64_t mu, std::int64_t t) {
  const std::int64_t i = floor_mod(mu - 2 * t, std::int64_t{4});
  return Rational(mu - 2 * t) / 4 - Rational(i) / 4 + 1;
}

Rational q_formula(std::int64_t mu, std::int64_t t) {
  const std::int64_t i = floor_mod(mu - 2 * t, std::int64_t{4});
  const std::int64_t j = floor_mod(mu - 3 * t, std::int64_t{3});
  Rational v = Rational(6 * t - mu + 4 * j - 3 * i) / 12;
  return j == 0 ? v + 1 : v;
}

std::vector<TableRow> published_table(int index) {
  switch (index) {
    case 0:
      return {{{2, 0, false}, {3, 0, false}, {term(false, 0, 1)}, "2t <= mu <= 3t: P"},
              {{3, 0, true}, {6, 0, false}, {term(true, 0, 1)}, "3t < mu <= 6t: Q"}};
    case 1:
      return {
          {{2, 3, false}, {2, 6, true}, {term(false, 1, 1)}, "2t + 3 <= mu < 2t + 6: P1"},
          {{2, 6, false}, {2, 7, true}, {term(false, 1, 1), term(false, 2, 1)}, "2t + 6 <= mu < 2t + 7: P1 + P2"},
          {{2, 7, false},
           {3, 2, true},
           {term(false, 1, 1), term(false, 2, 1), term(false, 3, 1), term(false, 4, -1)},
           "2t + 7 <= mu < 3t + 2: P1 + P2 + P3 - P4"},
          {{3, 2, false},
           {3, 5, true},
           {term(true, 1, 1), term(false, 2, 1), term(false, 3, 1), term(false, 4, -1)},
           "3t + 2 <= mu < 3t + 5: Q1 + P2 + P3 - P4"},
          {{3, 5, false},
           {3, 6, true},
           {term(true, 1, 1), term(true, 2, 1), term(false, 3, 1), term(false, 4, -1)},
           "3t + 5 <= mu < 3t + 6: Q1 + Q2 + P3 - P4"},
          {{3, 6, false},
           {6, -1, true},
           {term(true, 1, 1), term(true, 2, 1), term(true, 3, 1), term(true, 4, -1)},
           "3t + 6 <= mu < 6t - 1: Q1 + Q2 + Q3 - Q4"},
          {{6, -1, false}, {6, 2, true}, {term(true, 2, 1), term(true, 2, 1)}, "6t - 1 <= mu < 6t + 2: Q2 + Q2"},
          {{6, 2, true}, {6, 3, false}, {term(true, 3, 1)}, "6t + 2 < mu <= 6t + 3: Q3"},
      };
    case 2:
      return {{{2, 9, false}, {3, 8, true}, {term(false, 5, 1)}, "2t + 9 <= mu < 3t + 8: P5"},
              {{3, 8, false}, {6, 5, false}, {term(true, 5, 1)}, "3t + 8 <= mu <= 6t + 5: Q5"}};
    default:
      throw std::invalid_argument("published_table: no table for index " + std::to_string(index));
  }
}

std::vector<TableRow> corrected_tor1_table() {
  auto rows = published_table(1);
  rows[6] = {{6, -1, false}, {6, 2, false}, {term(true, 2, 1), term(true, 3, 1)}, "6t - 1 <= mu <= 6t + 2: Q2 + Q3"};
  return rows;
}

int table_row(const std::vector<TableRow>& rows, std::int64_t mu, std::int64_t t) {
  for (std::size_t r = 0; r < rows.size(); ++r)
    if (above(rows[r].lower, mu, t) && below(rows[r].upper, mu, t)) return static_cast<int>(r);
  return -1;
}

Rational table_value(const std::vector<TableRow>& rows, std::int64_t mu, std::int64_t t) {
  int r = table_row(rows, mu, t);
  if (r < 0) return 0;
  Rational v = 0;
  for (const auto& term : rows[static_cast<std::size_t>(r)].terms) {
    const std::int64_t m = mu - term.shift(0), s = t - term.shift(1);
    v += term.sign * (term.q ? q_formula(m, s) : p_formula(m, s));
  }
  return v;
}

TableComparison compare_table(const std::vector<TableRow>& rows, const KappaNumerator& kappa, std::int64_t tmin,
                              std::int64_t tmax) {
  TableComparison out;
  std::int64_t reach = 0;
  for (const auto& a : kappa.support()) reach = std::max(reach, a(0));
  const std::int64_t mu_hi = 6 * tmax + reach + 5;
  CoefficientTable counts = series_coeffs(kappa.ring(), make_point({mu_hi, tmax}));
  for (std::int64_t t = tmin; t <= tmax; ++t)
    for (std::int64_t mu = 2 * t - 5; mu <= 6 * t + reach + 5; ++mu) {
      ++out.points;
      Rational want(hf_module(kappa, counts, make_point({mu, t})));
      if (table_value(rows, mu, t) != want) {
        out.mismatches.push_back(make_point({mu, t}));
        out.rows.push_back(table_row(rows, mu, t));
      }
    }
  return out;
}

KappaNumerator printed_sign_tor1() {
  auto k = ci_shifts(kDegrees).kappa(1);
  k.add(make_point({8, 1}), -1);
  k.add(make_point({8, -1}), 1);
  return k;
}

bool low_slices_match(const std::vector<std::int64_t>& degrees, int index, const KappaNumerator& kappa,
                      Point* witness) {
  // Koszul: Tor_i(I, k) has one generator per (i+1)-subset, in degree its sum.
  std::map<std::int64_t, std::int64_t> koszul;
  const std::size_t r = degrees.size();
  for (std::uint32_t mask = 1; mask < (1u << r); ++mask) {
    if (static_cast<int>(std::popcount(mask)) != index + 1) continue;
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < r; ++i)
      if (mask >> i & 1u) sum += degrees[i];
    ++koszul[sum];
  }
  std::int64_t top = 0;
  for (auto d : degrees) top += d;
  std::int64_t lowest = 0;
  for (const auto& a : kappa.support()) lowest = std::min(lowest, a(0));
  for (std::int64_t t = 0; t <= 1; ++t)
    for (std::int64_t mu = lowest - 2; mu <= top + 2; ++mu) {
      BigInt want = 0;
      if (t == 0) want = index == 0 && mu == 0 ? 1 : 0;
      if (t == 1 && koszul.count(mu)) want = koszul[mu];
      BigInt got = 0;
      for (const auto& [a, c] : kappa.terms()) got += c * count(kappa.ring(), make_point({mu - a(0), t - a(1)}));
      if (got != want) {
        if (witness) *witness = make_point({mu, t});
        return false;
      }
    }
  return true;
}

Reproduction reproduce_ci_236(std::int64_t tmax) {
  const auto start = std::chrono::steady_clock::now();
  Reproduction out;
  RunReport& rep = out.report;
  std::ostringstream doc;
  const ToriSpec spec = ci_shifts(kDegrees);
  const DegreeMatrix a = spec.ring();

  doc << "complete intersection with generator degrees (2, 3, 6)\n";
  doc << "degree matrix A = " << matrix_text(a.entries().cast<BigInt>()) << "\n";
  auto h = hnf(Matrix<BigInt>(a.entries().cast<BigInt>()));
  doc << "HNF(A) = " << matrix_text(h.h) << "\n";
  doc << "U = " << matrix_text(h.u) << "  (HNF = A U)\n\n";

  const auto chambers = chamber_complex_2xn(kDegrees);
  doc << "chambers:\n";
  for (std::size_t k = 0; k < chambers.size(); ++k) {
    doc << "  C" << k + 1 << ": ";
    for (std::size_t r = 0; r < chambers[k].inequalities.size(); ++r)
      doc << (r ? ", " : "") << form_text(chambers[k].inequalities[r]);
    doc << "  (lattice det " << chambers[k].lattice.det().str() << ")\n";
  }

  // Hilbert function of B: fitted pieces and the printed branches against count.
  CheckResult fit{"H(B): chamber quasi-polynomials equal count"};
  CheckResult printed{"H(B): printed three-branch formula equals count"};
  CheckResult pq{"H(B): printed P and Q equal count"};
  std::vector<QuasiPolynomial> qps;
  for (const auto& c : chambers) qps.push_back(fit_chamber_qp(a, c, c.lattice));
  CoefficientTable table = series_coeffs(a, make_point({6 * tmax, tmax}));
  for (std::int64_t t = 1; t <= tmax; ++t)
    for (std::int64_t mu = 2 * t; mu <= 6 * t; ++mu) {
      Point u = make_point({mu, t});
      const BigInt want = table.at(u);
      for (std::size_t k = 0; k < chambers.size(); ++k) {
        if (!chambers[k].contains(u)) continue;
        ++fit.grid_points;
        if (eval(qps[k], u) != Rational(want)) {
          fit.passed = false;
          if (!fit.witness) fit.witness = u;
        }
        ++printed.grid_points;
        auto v = hilbert_branch(static_cast<int>(k) + 1, mu, t);
        if (!v || *v != want) {
          printed.passed = false;
          if (!printed.witness) printed.witness = u;
        }
        ++pq.grid_points;
        Rational f = k == 0 ? p_formula(mu, t) : q_formula(mu, t);
        if (f != Rational(want)) {
          pq.passed = false;
          if (!pq.witness) pq.witness = u;
        }
      }
    }
  rep.add(fit);
  rep.add(printed);
  rep.add(pq);

  doc << "\nH(B, (mu, t)):\n"
      << "  C1: floor((mu - 2t)/4) + 1\n"
      << "  C2, 3 | mu - 3t: floor((mu - 2t)/4) - (mu - 3t)/3 + 1\n"
      << "  C2, otherwise:   floor((mu - 2t)/4) - floor((mu - 3t)/3)\n";
  const Lattice global = global_lattice(kDegrees);
  doc << "fitted pieces over the lattice with basis " << matrix_text(global.basis()) << " (D = " << global.det().str()
      << "), residue: P | Q\n";
  {
    auto p = fit_chamber_qp(a, chambers[0], global);
    auto q = fit_chamber_qp(a, chambers[1], global);
    for (std::size_t r = 0; r < global.index(); ++r)
      doc << "  " << fmt_point(to_point(global.residue_at(r))) << ": " << to_string(p.pieces()[r], {"mu", "t"})
          << " | " << to_string(q.pieces()[r], {"mu", "t"}) << "\n";
  }

  // Betti tables.
  for (int i = 0; i <= 2; ++i) {
    auto dec = region_decomposition(spec.kappa(i));
    doc << "\nbeta_" << i << " (t >= " << dec.t0 << ", D = " << dec.modulus().str() << "):\n" << region_rows(dec);
  }

  // Published tables against the oracle.
  for (int i : {0, 2}) {
    auto cmp = compare_table(published_table(i), spec.kappa(i), region_decomposition(spec.kappa(i)).t0, tmax);
    CheckResult c{"published beta_" + std::to_string(i) + " table equals hf_module"};
    c.grid_points = cmp.points;
    if (!cmp.mismatches.empty()) {
      c.passed = false;
      c.witness = cmp.mismatches.front();
    }
    rep.add(c);
  }
  const std::int64_t t0 = region_decomposition(spec.kappa(1)).t0;
  auto as_printed = compare_table(published_table(1), spec.kappa(1), t0, tmax);
  auto corrected = compare_table(corrected_tor1_table(), spec.kappa(1), t0, tmax);
  const auto rows1 = published_table(1);
  std::size_t in_row7 = 0, uncovered = 0, elsewhere = 0;
  std::optional<Point> row7_witness, gap_witness, other_witness;
  for (std::size_t k = 0; k < as_printed.mismatches.size(); ++k) {
    const Point& u = as_printed.mismatches[k];
    if (as_printed.rows[k] == 6) {
      ++in_row7;
      if (!row7_witness) row7_witness = u;
    } else if (as_printed.rows[k] < 0 && u(0) == 6 * u(1) + 2) {
      ++uncovered;
      if (!gap_witness) gap_witness = u;
    } else {
      ++elsewhere;
      if (!other_witness) other_witness = u;
    }
  }
  CheckResult only_documented{"published beta_1 table differs only in the (Q2 + Q2) row"};
  only_documented.grid_points = as_printed.points;
  if (elsewhere > 0) {
    only_documented.passed = false;
    only_documented.witness = other_witness;
    only_documented.detail = std::to_string(elsewhere) + " undocumented mismatches";
  }
  rep.add(only_documented);
  CheckResult fixed{"beta_1 table with Q2 + Q3 on 6t - 1 <= mu <= 6t + 2 equals hf_module"};
  fixed.grid_points = corrected.points;
  if (!corrected.mismatches.empty()) {
    fixed.passed = false;
    fixed.witness = corrected.mismatches.front();
  }
  rep.add(fixed);
  if (in_row7 + uncovered > 0) {
    std::string f = "published beta_1 row \"6t - 1 <= mu < 6t + 2: (Q2 + Q2)\" disagrees with hf_module at " +
                    std::to_string(in_row7) + " points (first " + fmt_point(*row7_witness) + ")";
    if (uncovered)
      f += "; mu = 6t + 2 is covered by no printed row at " + std::to_string(uncovered) + " points (first " +
           fmt_point(*gap_witness) + "), where the value is Q2 + Q3";
    rep.flags.push_back(f + "; reading Q2 + Q3 closed at 6t + 2 matches everywhere");
  }

  // The printed summand R(-8, 1) as a shift (8, -1), against Tor(S, k) and Koszul.
  CheckResult slices{"Tor_i in T-degrees 0 and 1 match Tor(S, k) and the Koszul complex"};
  for (int i = 0; i <= 2; ++i) {
    Point w;
    ++slices.grid_points;
    if (!low_slices_match(kDegrees, i, spec.kappa(i), &w) && slices.passed) {
      slices.passed = false;
      slices.witness = w;
    }
  }
  rep.add(slices);
  Point w;
  CheckResult sign{"printed shift (8, -1) for Tor_1 is refuted"};
  sign.grid_points = 1;
  if (low_slices_match(kDegrees, 1, printed_sign_tor1(), &w)) {
    sign.passed = false;
    sign.witness = make_point({8, -1});
    sign.detail = "the (8, -1) reading was not refuted";
  } else {
    rep.flags.push_back("printed summand R(-8, 1) / B(-8, 1): the shift must be (8, 1), the bidegree of f3*T1 - f1*T3; "
                        "the (8, -1) reading fails the T-degree 0/1 slices at " + fmt_point(w));
  }
  rep.add(sign);

  doc << "\npublished beta_1 table against hf_module for " << t0 << " <= t <= " << tmax << ":\n";
  for (std::size_t r = 0; r < rows1.size(); ++r) {
    std::size_t bad = 0;
    for (int row : as_printed.rows) bad += row == static_cast<int>(r);
    doc << "  " << (bad ? "DIFFERS " : "agrees  ") << rows1[r].text;
    if (bad) doc << "  (" << bad << " points)";
    doc << "\n";
  }
  if (uncovered) doc << "  DIFFERS mu = 6t + 2 falls in no row  (" << uncovered << " points)\n";

  RunReport suite = verify_spec(spec, tmax);
  for (auto& c : suite.checks) rep.add(c);
  for (auto& wmsg : suite.warnings) rep.warnings.push_back(wmsg);
  rep.command = "reproduce 4.7";
  rep.inputs.push_back({"spec", digest(serialize(spec))});
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out.document = doc.str();
  return out;
}

}  // namespace vpf::reference
