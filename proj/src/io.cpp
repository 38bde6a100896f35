#include "arcic/io.hpp"

#include "arcic/error.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>

namespace arcic {

namespace {

bool is_integer_text(const std::string& s) {
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (start == s.size()) return false;
  return std::all_of(s.begin() + static_cast<long>(start), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

Integer json_to_integer(const Json& j, const std::string& path) {
  if (j.is_number_unsigned()) return Integer(j.get<std::uint64_t>());
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (is_integer_text(s)) return Integer(s[0] == '+' ? s.substr(1) : s);
  }
  throw InputError("expected an integer, got " + j.dump(), path);
}

}  // namespace

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError("malformed JSON in '" + path + "': " + e.what());
  }
}

Json canonicalize_input(const Json& cone) {
  if (!cone.is_object()) throw InputError("cone descriptor must be a JSON object", "");
  if (!cone.contains("rank")) throw InputError("missing key 'rank'", "/rank");
  if (!cone.contains("generators")) throw InputError("missing key 'generators'", "/generators");

  const Integer rank = json_to_integer(cone["rank"], "/rank");
  if (rank < 1) throw InputError("rank must be a positive integer, got " + rank.str(), "/rank");
  if (rank > 64) throw InputError("rank " + rank.str() + " is too large", "/rank");
  const auto r = static_cast<std::size_t>(rank);

  const Json& gens = cone["generators"];
  if (!gens.is_array()) throw InputError("'generators' must be an array", "/generators");
  std::vector<std::vector<Integer>> rows;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const std::string path = "/generators/" + std::to_string(i);
    const Json& row = gens[i];
    if (!row.is_array()) throw InputError("generator must be an array of integers", path);
    if (row.size() != r)
      throw InputError("generator has " + std::to_string(row.size()) + " entries, rank is " + std::to_string(r), path);
    std::vector<Integer> coords;
    for (std::size_t k = 0; k < row.size(); ++k) coords.push_back(json_to_integer(row[k], path + "/" + std::to_string(k)));
    rows.push_back(std::move(coords));
  }
  auto key = [](const std::vector<Integer>& v) {
    Integer s = 0;
    for (const auto& c : v) s += c;
    return std::make_pair(s, v);
  };
  std::sort(rows.begin(), rows.end(), [&](const auto& a, const auto& b) { return key(a) < key(b); });
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());

  Json out = cone;  // unknown keys are kept; object keys are sorted by the container
  out["rank"] = integer_to_json(rank);
  out["generators"] = Json::array();
  for (const auto& row : rows) {
    Json a = Json::array();
    for (const auto& c : row) a.push_back(integer_to_json(c));
    out["generators"].push_back(std::move(a));
  }
  return out;
}

ConeInput parse_cone(const Json& cone) {
  Json c = canonicalize_input(cone);
  ConeInput input;
  input.rank = c["rank"].get<std::size_t>();
  for (std::size_t i = 0; i < c["generators"].size(); ++i) {
    std::vector<Integer> coords;
    for (const auto& x : c["generators"][i]) coords.push_back(json_to_integer(x, "/generators/" + std::to_string(i)));
    input.generators.emplace_back(std::move(coords));
  }
  return input;
}

std::vector<Integer> parse_integer_list(const std::string& text, const std::string& path) {
  std::vector<Integer> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), [](char c) { return c == ' ' || c == '\t'; }), item.end());
    if (!is_integer_text(item)) throw InputError("'" + text + "' is not a comma-separated list of integers", path);
    out.emplace_back(item[0] == '+' ? item.substr(1) : item);
  }
  if (out.empty() || (!text.empty() && text.back() == ','))
    throw InputError("'" + text + "' is not a comma-separated list of integers", path);
  return out;
}

LatticePoint parse_point(const std::string& text, std::size_t rank, const std::string& path) {
  auto coords = parse_integer_list(text, path);
  if (coords.size() != rank)
    throw InputError("point has " + std::to_string(coords.size()) + " coordinates, rank is " + std::to_string(rank),
                     path);
  return LatticePoint(std::move(coords));
}

Json integer_to_json(const Integer& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(x);
  return x.str();
}

Json laurent_to_json(const HalfLaurent& x) {
  Json j = Json::object();
  for (const auto& [e, c] : x.terms()) j[std::to_string(e)] = integer_to_json(c);
  return j;
}

Json numeric_to_json(const HalfLaurent& x, const Integer& q, int sign) {
  NumericValue n = specialize(x, q, sign);
  return {{"q", integer_to_json(q)},
          {"sign", sign},
          {"rational", rational_to_string(n.rational)},
          {"sqrt_q", rational_to_string(n.sqrt_q)}};
}

void RunReport::add(std::string label, Json value, Json expected, bool ok) {
  results.push_back({std::move(label), std::move(value), std::move(expected), ok ? "pass" : "fail"});
}

void RunReport::info(std::string label, Json value) {
  results.push_back({std::move(label), std::move(value), nullptr, "info"});
}

bool RunReport::any_failed() const {
  return std::any_of(results.begin(), results.end(), [](const ReportRow& r) { return r.status == "fail"; });
}

std::string RunReport::status() const {
  if (any_failed()) return "fail";
  bool any_pass =
      std::any_of(results.begin(), results.end(), [](const ReportRow& r) { return r.status == "pass"; });
  return any_pass ? "pass" : "indeterminate";
}

Json RunReport::to_json() const {
  Json j = payload;
  j["command"] = command;
  j["inputs"] = inputs;
  Json rows = Json::array();
  for (const auto& r : results)
    rows.push_back({{"label", r.label}, {"value", r.value}, {"expected", r.expected}, {"status", r.status}});
  j["results"] = std::move(rows);
  j["status"] = status();
  return j;
}

std::string serialize(const Json& j) { return j.dump(2) + "\n"; }

Json error_json(const std::string& kind, const std::string& message, const std::string& path) {
  return {{"error", {{"kind", kind}, {"message", message}, {"path", path}}}};
}

}  // namespace arcic
