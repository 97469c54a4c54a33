#include "vpf/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "vpf/chambers.hpp"
#include "vpf/io.hpp"
#include "vpf/reference.hpp"
#include "vpf/verify.hpp"

namespace vpf::cli {

namespace {

using nlohmann::json;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Options {
  std::vector<std::int64_t> degrees;
  std::string matrix_file;
  std::vector<std::int64_t> at;
  std::string spec_file;
  int index = 0;
  std::int64_t tmax = -1;
  std::string format = "table";
  std::string out_file;
  std::string example;
};

DegreeMatrix ring_from(const Options& o) {
  if (!o.matrix_file.empty()) {
    std::ifstream in(o.matrix_file);
    if (!in) throw UsageError("cannot read " + o.matrix_file);
    json j;
    try {
      j = json::parse(in);
    } catch (const json::exception& e) {
      throw ParseError(o.matrix_file, e.what());
    }
    if (!j.is_array() || j.empty() || !j[0].is_array() || j[0].empty())
      throw ParseError(o.matrix_file, "expected a nonempty list of rows");
    Matrix<std::int64_t> m(static_cast<Eigen::Index>(j.size()), static_cast<Eigen::Index>(j[0].size()));
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (!j[i].is_array() || j[i].size() != j[0].size())
        throw ParseError(o.matrix_file + ": row " + std::to_string(i), "ragged matrix");
      for (std::size_t k = 0; k < j[i].size(); ++k) {
        if (!j[i][k].is_number_integer())
          throw ParseError(o.matrix_file + ": row " + std::to_string(i), "entries must be integers");
        m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = j[i][k].get<std::int64_t>();
      }
    }
    return DegreeMatrix(m);
  }
  if (o.degrees.empty()) throw UsageError("give --degrees or --matrix");
  return DegreeMatrix::bigraded(o.degrees);
}

ToriSpec spec_from(const Options& o) {
  if (!o.spec_file.empty()) return ingest_file(o.spec_file);
  if (o.degrees.empty()) throw UsageError("give --spec or --degrees");
  return ci_shifts(o.degrees);
}

Point at_point(const Options& o, Eigen::Index dim) {
  if (static_cast<Eigen::Index>(o.at.size()) != dim)
    throw UsageError("--at needs " + std::to_string(dim) + " coordinates");
  Point u(dim);
  for (Eigen::Index i = 0; i < dim; ++i) u(i) = o.at[static_cast<std::size_t>(i)];
  return u;
}

void require_format(const Options& o, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (o.format == f) return;
  std::string list;
  for (const char* f : allowed) list += (list.empty() ? "" : ", ") + std::string(f);
  throw UsageError("--format " + o.format + " not available here (use " + list + ")");
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// count, hilbert

int cmd_count(const Options& o, std::ostream& out) {
  require_format(o, {"table", "structured"});
  DegreeMatrix a = ring_from(o);
  Point u = at_point(o, a.rows());
  BigInt n = count(a, u);
  if (o.format == "structured")
    out << dump({{"at", o.at}, {"count", n.str()}});
  else
    out << n.str() << "\n";
  return 0;
}

int cmd_hilbert(const Options& o, std::ostream& out) {
  require_format(o, {"table", "structured", "csv"});
  std::optional<KappaNumerator> kappa;
  DegreeMatrix ring = DegreeMatrix::bigraded(std::vector<std::int64_t>{1});
  if (!o.spec_file.empty()) {
    kappa = ingest_file(o.spec_file).kappa(o.index);
    ring = kappa->ring();
  } else {
    ring = ring_from(o);
  }
  auto value = [&](const Point& u) { return kappa ? hf_module(*kappa, u) : count(ring, u); };
  if (!o.at.empty()) {
    BigInt v = value(at_point(o, ring.rows()));
    if (o.format == "structured")
      out << dump({{"at", o.at}, {"value", v.str()}});
    else if (o.format == "csv")
      out << "mu,t,value\n" << o.at[0] << "," << o.at[1] << "," << v.str() << "\n";
    else
      out << v.str() << "\n";
    return 0;
  }
  if (!ring.is_bigraded()) throw UsageError("grids need a bigraded ring; give --at for a single value");
  if (o.tmax < 0) throw UsageError("give --at or --tmax");
  const auto deg = ring.degrees();
  const std::int64_t top = *std::max_element(deg.begin(), deg.end());
  std::int64_t reach = 0;
  if (kappa)
    for (const auto& a : kappa->support()) reach = std::max(reach, a(0) - a(1) * top);
  const std::int64_t mu_hi = top * o.tmax + reach;
  CoefficientTable table = series_coeffs(ring, make_point({mu_hi, o.tmax}));
  json rows = json::array();
  std::ostringstream text;
  if (o.format == "csv") text << "mu,t,value\n";
  for (std::int64_t t = 0; t <= o.tmax; ++t)
    for (std::int64_t mu = 0; mu <= mu_hi; ++mu) {
      Point u = make_point({mu, t});
      BigInt v = kappa ? hf_module(*kappa, table, u) : table.at(u);
      if (v == 0) continue;
      if (o.format == "csv")
        text << mu << "," << t << "," << v.str() << "\n";
      else if (o.format == "structured")
        rows.push_back({{"mu", mu}, {"t", t}, {"value", v.str()}});
      else
        text << "(" << mu << ", " << t << "): " << v.str() << "\n";
    }
  out << (o.format == "structured" ? dump({{"nonzero", rows}, {"tmax", o.tmax}}) : text.str());
  return 0;
}

// chambers

std::string inequality_text(const Point& h) {
  Polynomial p(2);
  p.add_term({1, 0}, Rational(h(0)));
  p.add_term({0, 1}, Rational(h(1)));
  return to_string(p, {"mu", "t"}) + " >= 0";
}

int cmd_chambers(const Options& o, std::ostream& out) {
  require_format(o, {"table", "structured"});
  DegreeMatrix a = ring_from(o);
  if (!a.is_bigraded()) throw UsageError("chambers needs a bigraded ring (second row all ones)");
  const auto deg = a.degrees();
  const auto chambers = chamber_complex_2xn(deg);
  json list = json::array();
  std::ostringstream text;
  if (chambers.empty()) text << "single ray: Pos(A) has no two-dimensional chamber\n";
  for (std::size_t k = 0; k < chambers.size(); ++k) {
    const Chamber& c = chambers[k];
    QuasiPolynomial qp = fit_chamber_qp(a, c, c.lattice);
    json ineq = json::array(), rays = json::array();
    for (const auto& h : c.inequalities) ineq.push_back(inequality_text(h));
    for (const auto& g : c.generators) rays.push_back({g(0), g(1)});
    list.push_back({{"inequalities", ineq}, {"rays", rays}, {"quasi_polynomial", to_json(qp)}});
    text << "C" << k + 1 << ":";
    for (std::size_t r = 0; r < c.inequalities.size(); ++r) text << (r ? ", " : " ") << inequality_text(c.inequalities[r]);
    text << "\n  lattice det " << c.lattice.det().str() << ", pieces by residue:\n";
    for (std::size_t r = 0; r < qp.pieces().size(); ++r)
      text << "    " << to_string(to_point(c.lattice.residue_at(r))) << ": "
           << to_string(qp.pieces()[r], {"mu", "t"}) << "\n";
  }
  out << (o.format == "structured" ? dump({{"degrees", deg}, {"chambers", list}}) : text.str());
  return 0;
}

// regions

std::string terms_text(const Region& r) {
  if (r.terms.empty()) return "0";
  std::string s;
  for (std::size_t k = 0; k < r.terms.size(); ++k) {
    const auto& t = r.terms[k];
    const bool neg = t.coefficient < 0;
    s += k ? (neg ? " - " : " + ") : (neg ? "-" : "");
    BigInt mag = neg ? BigInt(-t.coefficient) : t.coefficient;
    if (mag != 1) s += mag.str() + "*";
    s += "C" + std::to_string(t.chamber + 1) + "(mu - " + std::to_string(t.shift(0)) + ", t - " +
         std::to_string(t.shift(1)) + ")";
  }
  return s;
}

std::string regions_table(const RegionDecomposition& dec, int index) {
  std::ostringstream s;
  s << "Tor_" << index << " over degrees (";
  for (std::size_t i = 0; i < dec.ring_degrees.size(); ++i) s << (i ? ", " : "") << dec.ring_degrees[i];
  s << ")\nt0 = " << dec.t0 << "\nD = " << dec.modulus().str() << "\nlines:\n";
  for (std::size_t i = 0; i < dec.lines.size(); ++i) s << "  L_" << i << ": " << line_text(dec.lines[i]) << "\n";
  s << "regions:\n";
  for (std::size_t r = 0; r < dec.regions.size(); ++r) {
    const Region& reg = dec.regions[r];
    s << "  R_" << r << ": " << region_bounds_text(dec, r) << "\n    " << terms_text(reg) << "\n";
    for (std::size_t p = 0; p < reg.qp.pieces().size(); ++p)
      s << "    " << to_string(to_point(dec.lattice.residue_at(p))) << ": "
        << to_string(reg.qp.pieces()[p], {"mu", "t"}) << "\n";
  }
  s << "  otherwise: 0\n";
  return s.str();
}

// Integer-coordinate figure: mu to the right, t upward, lines fanning out.
std::string regions_svg(const RegionDecomposition& dec, int index, std::int64_t tmax) {
  const std::int64_t T = std::max<std::int64_t>(tmax, dec.t0 + 4);
  std::int64_t mu_max = 1, mu_min = 0;
  for (const auto& l : dec.lines) {
    mu_max = std::max(mu_max, l.value(T));
    mu_min = std::min(mu_min, l.origin(0));
  }
  const std::int64_t width = 900, height = 600, margin = 60;
  const std::int64_t sx = std::max<std::int64_t>(1, (width - 2 * margin) / (mu_max - mu_min + 1));
  const std::int64_t sy = std::max<std::int64_t>(1, (height - 2 * margin) / (T + 1));
  auto X = [&](std::int64_t mu) { return margin + (mu - mu_min) * sx; };
  auto Y = [&](std::int64_t t) { return height - margin - t * sy; };
  static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
    << "\" viewBox=\"0 0 " << width << " " << height << "\" font-family=\"monospace\" font-size=\"11\">\n";
  s << "<title>Tor_" << index << ": regions and corresponding polynomials</title>\n";
  s << "<rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";
  s << "<line x1=\"" << X(mu_min) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(mu_max) << "\" y2=\"" << Y(0)
    << "\" stroke=\"black\"/>\n";
  s << "<line x1=\"" << X(0) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(0) << "\" y2=\"" << Y(T)
    << "\" stroke=\"black\"/>\n";
  s << "<text x=\"" << X(mu_max) + 5 << "\" y=\"" << Y(0) + 4 << "\">mu</text>\n";
  s << "<text x=\"" << X(0) - 4 << "\" y=\"" << Y(T) - 8 << "\">t</text>\n";
  s << "<line x1=\"" << X(mu_min) << "\" y1=\"" << Y(dec.t0) << "\" x2=\"" << X(mu_max) << "\" y2=\"" << Y(dec.t0)
    << "\" stroke=\"gray\" stroke-dasharray=\"4 4\"/>\n";
  s << "<text x=\"" << X(mu_min) + 2 << "\" y=\"" << Y(dec.t0) - 4 << "\">t0 = " << dec.t0 << "</text>\n";
  for (std::size_t i = 0; i < dec.lines.size(); ++i) {
    const HalfLine& l = dec.lines[i];
    const std::size_t slope_rank =
        static_cast<std::size_t>(std::find(dec.slopes.begin(), dec.slopes.end(), l.slope) - dec.slopes.begin());
    const std::int64_t t_start = std::max<std::int64_t>(0, l.origin(1));
    s << "<line x1=\"" << X(l.value(t_start)) << "\" y1=\"" << Y(t_start) << "\" x2=\"" << X(l.value(T))
      << "\" y2=\"" << Y(T) << "\" stroke=\"" << palette[slope_rank % 6] << "\"/>\n";
  }
  // Region labels stacked on the right, keyed to where each region meets t = T.
  std::int64_t label_y = margin;
  for (std::size_t r = 0; r < dec.regions.size(); ++r) {
    const Region& reg = dec.regions[r];
    const std::int64_t mid = (dec.lines[reg.lower].value(T) + dec.lines[reg.upper].value(T)) / 2;
    s << "<circle cx=\"" << X(mid) << "\" cy=\"" << Y(T) << "\" r=\"2\" fill=\"black\"/>\n";
    s << "<text x=\"" << X(mid) << "\" y=\"" << Y(T) - 6 << "\">" << r << "</text>\n";
    s << "<text x=\"" << margin << "\" y=\"" << label_y << "\">R_" << r << ": " << region_bounds_text(dec, r)
      << ": " << terms_text(reg) << "</text>\n";
    label_y += 13;
  }
  s << "</svg>\n";
  return s.str();
}

int cmd_regions(const Options& o, std::ostream& out) {
  require_format(o, {"table", "structured", "csv", "svg"});
  const ToriSpec spec = spec_from(o);
  const KappaNumerator kappa = spec.kappa(o.index);
  if (kappa.empty()) {
    out << "Tor_" << o.index << " has no shift data: empty decomposition\n";
    return 0;
  }
  const RegionDecomposition dec = region_decomposition(kappa);
  if (o.format == "structured") {
    ToriSpec one{spec.degrees, {{o.index, kappa}}};
    json doc = json::parse(serialize(one));
    doc["regions"] = to_json(dec);
    out << dump(doc);
  } else if (o.format == "svg") {
    out << regions_svg(dec, o.index, o.tmax < 0 ? dec.t0 + 6 : o.tmax);
  } else if (o.format == "csv") {
    const std::int64_t tmax = o.tmax < 0 ? dec.t0 + 6 : o.tmax;
    out << "mu,t,region,value\n";
    for (std::int64_t t = dec.t0; t <= tmax; ++t)
      for (std::int64_t mu = dec.lines.front().value(t); mu <= dec.lines.back().value(t); ++mu)
        out << mu << "," << t << "," << dec.region_of(mu, t) << "," << eval_betti(dec, mu, t).str() << "\n";
  } else {
    out << regions_table(dec, o.index);
  }
  return 0;
}

// rees-ci, verify, reproduce

int cmd_rees_ci(const Options& o, std::ostream& out) {
  require_format(o, {"table", "structured"});
  if (o.degrees.empty()) throw UsageError("give --degrees");
  const ToriSpec spec = ci_shifts(o.degrees);
  if (o.format == "structured") {
    out << serialize(spec);
    return 0;
  }
  for (const auto& [i, kappa] : spec.tor) {
    out << "Tor_" << i << ":";
    for (const auto& [a, c] : kappa.terms()) out << " " << c.str() << "*(" << a(0) << ", " << a(1) << ")";
    out << "\n";
  }
  return 0;
}

int report_out(const RunReport& rep, const Options& o, std::ostream& out) {
  out << (o.format == "structured" ? dump(to_json(rep)) : to_text(rep));
  return rep.passed() ? 0 : 1;
}

int cmd_verify(const Options& o, std::ostream& out) {
  require_format(o, {"table", "structured"});
  const auto start = std::chrono::steady_clock::now();
  const ToriSpec spec = spec_from(o);
  RunReport rep = verify_spec(spec, o.tmax < 0 ? 40 : o.tmax);
  rep.command = "verify";
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report_out(rep, o, out);
}

int cmd_reproduce(const Options& o, std::ostream& out) {
  require_format(o, {"table", "structured"});
  if (o.example != "4.7") throw UsageError("unknown example '" + o.example + "' (available: 4.7)");
  auto r = reference::reproduce_ci_236(o.tmax < 0 ? 40 : o.tmax);
  if (o.format == "structured") {
    out << dump({{"document", r.document}, {"report", to_json(r.report)}});
    return r.report.passed() ? 0 : 1;
  }
  out << r.document << "\n";
  return report_out(r.report, o, out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Hilbert functions via vector partition functions and Betti regions of powers of ideals", "vpfbetti"};
  app.require_subcommand(1);
  auto degrees = [&](CLI::App* c) {
    return c->add_option("--degrees", o.degrees, "generator degrees d_i, comma separated")->delimiter(',');
  };
  auto spec = [&](CLI::App* c) { return c->add_option("--spec", o.spec_file, "shift data document"); };
  auto fmt = [&](CLI::App* c) {
    return c->add_option("--format", o.format, "table|structured|csv|svg")
        ->check(CLI::IsMember({"table", "structured", "csv", "svg"}));
  };
  auto outf = [&](CLI::App* c) { c->add_option("--out", o.out_file, "write output to this file"); };

  auto* count_cmd = app.add_subcommand("count", "number of lambda >= 0 with A lambda = u");
  degrees(count_cmd);
  count_cmd->add_option("--matrix", o.matrix_file, "file holding A as a list of rows");
  count_cmd->add_option("--at", o.at, "degree u")->delimiter(',')->required();
  fmt(count_cmd);
  outf(count_cmd);

  auto* hilbert_cmd = app.add_subcommand("hilbert", "Hilbert function of B or of a Tor module");
  degrees(hilbert_cmd);
  hilbert_cmd->add_option("--matrix", o.matrix_file, "file holding A as a list of rows");
  spec(hilbert_cmd);
  hilbert_cmd->add_option("--index", o.index, "homological index");
  hilbert_cmd->add_option("--at", o.at, "single degree")->delimiter(',');
  hilbert_cmd->add_option("--tmax", o.tmax, "grid up to this T-degree");
  fmt(hilbert_cmd);
  outf(hilbert_cmd);

  auto* chambers_cmd = app.add_subcommand("chambers", "chambers and their quasi-polynomials");
  degrees(chambers_cmd);
  chambers_cmd->add_option("--matrix", o.matrix_file, "file holding A as a list of rows");
  fmt(chambers_cmd);
  outf(chambers_cmd);

  auto* regions_cmd = app.add_subcommand("regions", "regions and polynomials of the Betti numbers of I^t");
  degrees(regions_cmd);
  spec(regions_cmd);
  regions_cmd->add_option("--index", o.index, "homological index");
  regions_cmd->add_option("--tmax", o.tmax, "last T-degree drawn or listed");
  fmt(regions_cmd);
  outf(regions_cmd);

  auto* ci_cmd = app.add_subcommand("rees-ci", "shift data for a complete intersection");
  degrees(ci_cmd)->required();
  fmt(ci_cmd);
  outf(ci_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "check the decompositions against the oracle");
  degrees(verify_cmd);
  spec(verify_cmd);
  verify_cmd->add_option("--tmax", o.tmax, "largest T-degree checked (default 40)");
  fmt(verify_cmd);
  outf(verify_cmd);

  auto* repro_cmd = app.add_subcommand("reproduce", "worked example end to end");
  repro_cmd->add_option("id", o.example, "example id")->required();
  repro_cmd->add_option("--tmax", o.tmax, "largest T-degree checked (default 40)");
  fmt(repro_cmd);
  outf(repro_cmd);

  std::vector<std::string> argv_store{"vpfbetti"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  std::ostringstream buf;
  int code = 0;
  try {
    if (*count_cmd) code = cmd_count(o, buf);
    else if (*hilbert_cmd) code = cmd_hilbert(o, buf);
    else if (*chambers_cmd) code = cmd_chambers(o, buf);
    else if (*regions_cmd) code = cmd_regions(o, buf);
    else if (*ci_cmd) code = cmd_rees_ci(o, buf);
    else if (*verify_cmd) code = cmd_verify(o, buf);
    else code = cmd_reproduce(o, buf);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  if (o.out_file.empty()) {
    out << buf.str();
  } else {
    std::ofstream f(o.out_file, std::ios::binary);
    if (!f) {
      err << "usage error: cannot write " << o.out_file << "\n";
      return 2;
    }
    f << buf.str();
  }
  return code;
}

}  // namespace vpf::cli
