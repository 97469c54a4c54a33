#include "vpf/reesdata.hpp"

#include <algorithm>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

#include "json.hpp"

namespace vpf {

using nlohmann::json;

KappaNumerator ToriSpec::kappa(int i) const {
  auto it = tor.find(i);
  return it == tor.end() ? KappaNumerator(ring()) : it->second;
}

KappaNumerator ToriSpec::euler_characteristic() const {
  KappaNumerator out(ring());
  for (const auto& [i, k] : tor)
    for (const auto& [a, c] : k.terms()) out.add(a, i % 2 ? BigInt(-c) : c);
  return out;
}

ToriSpec ci_shifts(std::span<const std::int64_t> degrees) {
  if (degrees.size() != 2 && degrees.size() != 3)
    throw UnsupportedRankError("ci_shifts: only 2 or 3 generators are generated; ingest a resolution for " +
                               std::to_string(degrees.size()));
  ToriSpec s;
  s.degrees.assign(degrees.begin(), degrees.end());
  std::sort(s.degrees.begin(), s.degrees.end());
  for (auto d : s.degrees)
    if (d <= 0) throw std::invalid_argument("ci_shifts: degrees must be positive");
  const DegreeMatrix ring = s.ring();
  const auto& d = s.degrees;
  s.tor.emplace(0, KappaNumerator(ring, {{make_point({0, 0}), 1}}));
  if (d.size() == 2) {
    s.tor.emplace(1, KappaNumerator(ring, {{make_point({d[0] + d[1], 1}), 1}}));
    return s;
  }
  const std::int64_t all = d[0] + d[1] + d[2];
  s.tor.emplace(1, KappaNumerator(ring, {{make_point({d[1] + d[2], 1}), 1},
                                         {make_point({d[0] + d[2], 1}), 1},
                                         {make_point({d[0] + d[1], 1}), 1},
                                         {make_point({all, 2}), -1}}));
  s.tor.emplace(2, KappaNumerator(ring, {{make_point({all, 1}), 1}}));
  return s;
}

namespace {

void only_keys(const json& obj, const std::string& where, std::initializer_list<const char*> allowed) {
  if (!obj.is_object()) throw ParseError(where, "expected an object");
  for (const auto& [key, value] : obj.items()) {
    bool ok = std::any_of(allowed.begin(), allowed.end(), [&](const char* k) { return key == k; });
    if (!ok) throw ParseError(where + "." + key, "unknown field");
  }
}

const json& field(const json& obj, const std::string& where, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(where + "." + key, "missing field");
  return *it;
}

std::int64_t small_int(const json& v, const std::string& where) {
  if (!v.is_number_integer()) throw ParseError(where, "expected an integer, got " + v.dump());
  if (v.is_number_unsigned() && v.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX))
    throw ParseError(where, "integer out of range");
  return v.get<std::int64_t>();
}

BigInt big_int(const json& v, const std::string& where) {
  if (v.is_number_integer()) return BigInt(small_int(v, where));
  static const std::regex digits("[+-]?[0-9]+");
  if (v.is_string() && std::regex_match(v.get<std::string>(), digits)) {
    std::string s = v.get<std::string>();
    if (s[0] == '+') s.erase(0, 1);
    return BigInt(s);
  }
  throw ParseError(where, "expected an integer, got " + v.dump());
}

Point pair(const json& v, const std::string& where) {
  if (!v.is_array() || v.size() != 2) throw ParseError(where, "expected a pair [mu, t]");
  return make_point({small_int(v[0], where + "[0]"), small_int(v[1], where + "[1]")});
}

}  // namespace

ToriSpec ingest(const std::string& document) {
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::parse_error& e) {
    throw ParseError("document", std::string("malformed JSON: ") + e.what());
  }
  only_keys(doc, "document", {"generators", "tor", "regions"});

  ToriSpec spec;
  const json& gens = field(doc, "document", "generators");
  if (!gens.is_array() || gens.empty()) throw ParseError("generators", "expected a nonempty list of [d, 1]");
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const std::string where = "generators[" + std::to_string(i) + "]";
    Point g = pair(gens[i], where);
    if (g(1) != 1) throw ParseError(where + "[1]", "generator T-degree must be 1");
    if (g(0) < 0) throw ParseError(where + "[0]", "generator degree must be nonnegative");
    if (!spec.degrees.empty() && g(0) < spec.degrees.back())
      throw ParseError(where, "degrees must be listed in nondecreasing order");
    spec.degrees.push_back(g(0));
  }
  const DegreeMatrix ring = spec.ring();

  const json& tor = field(doc, "document", "tor");
  if (!tor.is_array()) throw ParseError("tor", "expected a list");
  for (std::size_t i = 0; i < tor.size(); ++i) {
    const std::string where = "tor[" + std::to_string(i) + "]";
    only_keys(tor[i], where, {"index", "shifts"});
    const std::int64_t index = small_int(field(tor[i], where, "index"), where + ".index");
    if (index < 0 || index > 1000) throw ParseError(where + ".index", "homological index out of range");
    if (spec.tor.count(static_cast<int>(index)))
      throw ParseError(where + ".index", "index " + std::to_string(index) + " appears twice");
    KappaNumerator k(ring);
    const json& shifts = field(tor[i], where, "shifts");
    if (!shifts.is_array()) throw ParseError(where + ".shifts", "expected a list");
    for (std::size_t j = 0; j < shifts.size(); ++j) {
      const std::string at = where + ".shifts[" + std::to_string(j) + "]";
      only_keys(shifts[j], at, {"a", "c"});
      Point a = pair(field(shifts[j], at, "a"), at + ".a");
      if (a(1) < 0) throw ParseError(at + ".a[1]", "negative T-degree shift");
      k.add(a, big_int(field(shifts[j], at, "c"), at + ".c"));
    }
    spec.tor.emplace(static_cast<int>(index), std::move(k));
  }
  return spec;
}

ToriSpec ingest_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, "cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  return ingest(buf.str());
}

std::string serialize(const ToriSpec& spec) {
  json doc;
  doc["generators"] = json::array();
  for (auto d : spec.degrees) doc["generators"].push_back({d, 1});
  doc["tor"] = json::array();
  for (const auto& [i, k] : spec.tor) {
    json shifts = json::array();
    for (const auto& [a, c] : k.terms()) {
      json coef;
      if (c >= INT64_MIN && c <= INT64_MAX)
        coef = c.convert_to<std::int64_t>();
      else
        coef = c.str();
      shifts.push_back({{"a", {a(0), a(1)}}, {"c", coef}});
    }
    doc["tor"].push_back({{"index", i}, {"shifts", shifts}});
  }
  return doc.dump(2) + "\n";
}

}  // namespace vpf
