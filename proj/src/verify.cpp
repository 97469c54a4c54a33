#include "vpf/verify.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "vpf/regions.hpp"

namespace vpf {

using nlohmann::json;

bool RunReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

void RunReport::add(CheckResult c) {
  if (!c.passed && !c.witness) throw std::logic_error("failing check without a witness: " + c.name);
  checks.push_back(std::move(c));
}

std::string digest(const std::string& text) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

std::string tor_name(int i) { return "Tor_" + std::to_string(i); }

void fail_at(CheckResult& c, const Point& u, const std::string& detail) {
  if (!c.passed) return;
  c.passed = false;
  c.witness = u;
  c.detail = detail;
}

void verify_index(RunReport& report, int i, const KappaNumerator& kappa, std::int64_t tmax) {
  const auto degrees = kappa.ring().degrees();
  const std::int64_t top = *std::max_element(degrees.begin(), degrees.end());
  std::int64_t max_a0 = 0, min_a0 = 0;
  for (const auto& a : kappa.support()) {
    max_a0 = std::max(max_a0, a(0));
    min_a0 = std::min(min_a0, a(0));
  }
  const std::int64_t mu_hi = top * tmax + max_a0 + 5;
  const CoefficientTable counts = series_coeffs(kappa.ring(), make_point({mu_hi - min_a0, tmax}));
  const std::string tor = tor_name(i);

  CheckResult series{"series identity " + tor};
  series.grid_points = static_cast<std::size_t>((mu_hi + 1) * (tmax + 1));
  Point w;
  if (!series_identity_check(kappa, make_point({mu_hi, tmax}), &w))
    fail_at(series, w, "kappa * H(B) differs from hf_module");
  report.add(series);

  CheckResult nonneg{"nonnegative " + tor};
  for (std::int64_t t = 0; t <= tmax; ++t)
    for (std::int64_t mu = 0; mu <= mu_hi; ++mu) {
      ++nonneg.grid_points;
      Point u = make_point({mu, t});
      BigInt v = hf_module(kappa, counts, u);
      if (v < 0) fail_at(nonneg, u, "hf_module = " + v.str());
    }
  report.add(nonneg);

  RegionDecomposition dec;
  try {
    dec = region_decomposition(kappa);
  } catch (const std::exception& e) {
    CheckResult broken{"region decomposition " + tor};
    fail_at(broken, make_point({0, 0}), e.what());
    report.add(broken);
    return;
  }
  if (dec.t0 > tmax)
    report.warnings.push_back(tor + ": t0 = " + std::to_string(dec.t0) + " exceeds t-max; region grids are empty");

  CheckResult equiv{"oracle equivalence " + tor}, support{"support " + tor}, order{"line order " + tor};
  for (std::int64_t t = dec.t0; t <= tmax; ++t) {
    const std::int64_t lo = dec.lines.front().value(t), hi = dec.lines.back().value(t);
    for (std::int64_t mu = lo - 5; mu <= hi + 5; ++mu) {
      Point u = make_point({mu, t});
      BigInt want = hf_module(kappa, counts, u);
      BigInt got = eval_betti(dec, mu, t);
      ++equiv.grid_points;
      if (got != want) fail_at(equiv, u, "eval_betti = " + got.str() + ", hf_module = " + want.str());
      if (mu < lo || mu > hi) {
        ++support.grid_points;
        if (want != 0 || got != 0) fail_at(support, u, "nonzero outside [L_0(t), L_m(t)]");
      }
    }
    for (std::size_t k = 0; k + 1 < dec.lines.size(); ++k) {
      ++order.grid_points;
      const HalfLine &x = dec.lines[k], &y = dec.lines[k + 1];
      if (x.value(t) > y.value(t) || (x.shift_index == y.shift_index && x.slope >= y.slope))
        fail_at(order, make_point({x.value(t), t}), "lines " + std::to_string(k) + " and " + std::to_string(k + 1) +
                                                        " out of order");
    }
  }
  report.add(equiv);
  report.add(support);
  report.add(order);
}

}  // namespace

RunReport verify_spec(const ToriSpec& spec, std::int64_t tmax) {
  RunReport report;
  report.command = "verify";
  report.inputs.push_back({"spec", digest(serialize(spec))});
  if (tmax <= 0) {
    report.warnings.push_back("t-max " + std::to_string(tmax) + ": every grid is empty, nothing was checked");
    return report;
  }
  for (const auto& [i, kappa] : spec.tor) {
    if (kappa.empty()) {
      report.warnings.push_back(tor_name(i) + ": empty shift data");
      continue;
    }
    verify_index(report, i, kappa, tmax);
  }
  return report;
}

json to_json(const RunReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    json j{{"name", c.name}, {"passed", c.passed}, {"grid_points", c.grid_points}};
    if (c.witness) j["witness"] = std::vector<std::int64_t>(c.witness->data(), c.witness->data() + c.witness->size());
    if (!c.detail.empty()) j["detail"] = c.detail;
    checks.push_back(j);
  }
  json inputs = json::object();
  for (const auto& [label, d] : r.inputs) inputs[label] = d;
  return {{"command", r.command}, {"inputs", inputs},     {"checks", checks},
          {"passed", r.passed()}, {"warnings", r.warnings}, {"flags", r.flags}};
}

std::string to_text(const RunReport& r) {
  std::ostringstream out;
  out << "run: " << r.command << "\n";
  for (const auto& [label, d] : r.inputs) out << "input " << label << ": " << d << "\n";
  for (const auto& c : r.checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name << " (" << c.grid_points << " points)";
    if (c.witness) out << " witness " << to_string(*c.witness);
    if (!c.detail.empty()) out << ": " << c.detail;
    out << "\n";
  }
  for (const auto& w : r.warnings) out << "warning: " << w << "\n";
  for (const auto& f : r.flags) out << "flag: " << f << "\n";
  out << (r.passed() ? "all checks passed" : "verification FAILED") << " in "
      << static_cast<long long>(r.seconds * 1000) << " ms\n";
  return out.str();
}

}  // namespace vpf
