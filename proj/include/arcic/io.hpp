#pragma once

#include "arcic/laurent.hpp"
#include "arcic/lattice.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace arcic {

using Json = nlohmann::json;

/// Parsed cone descriptor {"rank": r, "generators": [[...], ...]}.
struct ConeInput {
  std::size_t rank = 0;
  std::vector<LatticePoint> generators;
};

/// Reads and parses a JSON file; InputError if unreadable or malformed.
Json read_json_file(const std::string& path);

/// Sorted keys, integer coordinates, generators deduplicated and ordered by
/// (coordinate sum, lex). Idempotent. Schema violations raise InputError
/// carrying a JSON pointer.
Json canonicalize_input(const Json& cone);

/// Validates through canonicalize_input.
ConeInput parse_cone(const Json& cone);

/// "a,b,c" -> point of the given rank; InputError (with `path`) otherwise.
std::vector<Integer> parse_integer_list(const std::string& text, const std::string& path);
LatticePoint parse_point(const std::string& text, std::size_t rank, const std::string& path);

/// JSON number when it fits in 64 bits, decimal string otherwise.
Json integer_to_json(const Integer& x);
/// [c_1, ..., c_r]
template <class Tag>
Json vector_to_json(const IntVector<Tag>& v) {
  Json a = Json::array();
  for (const auto& c : v.coords()) a.push_back(integer_to_json(c));
  return a;
}
/// {"<v-exponent>": coeff, ...}
Json laurent_to_json(const HalfLaurent& x);
/// {"q": q, "sign": s, "rational": "a/b", "sqrt_q": "c/d"}
Json numeric_to_json(const HalfLaurent& x, const Integer& q, int sign);

/// One labelled check in a report.
struct ReportRow {
  std::string label;
  Json value;
  Json expected;
  /// "pass", "fail" or "info".
  std::string status;
};

struct RunReport {
  std::string command;
  Json inputs = Json::object();
  Json payload = Json::object();
  std::vector<ReportRow> results;

  void add(std::string label, Json value, Json expected, bool ok);
  void info(std::string label, Json value);
  bool any_failed() const;
  /// "fail" if any row failed, "pass" if some row passed, else "indeterminate".
  std::string status() const;
  /// Payload keys merged with command, inputs, results and status.
  Json to_json() const;
};

/// Byte-deterministic rendering: sorted keys, two-space indent, trailing newline.
std::string serialize(const Json& j);

Json error_json(const std::string& kind, const std::string& message, const std::string& path);

}  // namespace arcic
