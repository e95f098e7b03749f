#ifndef INDSAT_IO_HPP
#define INDSAT_IO_HPP

// JSON documents. Elements are always 1-based and listed ascending.
//   Family:      {"n": N, "sets": [[...], ...]}  (+ optional "generator")
//   Embedding:   {"poset": "<spec>", "images": [[...], ...]}
//   Pair system: {"n": N, "pairs": [{"x": [...], "y": [...]}, ...]}
//   Report:      {"poset", "family_size", "is_free", "exception_count",
//                 "exceptions", "budget_exceeded"}
//   Solve:       {"status", "value", "witness", "nodes"}
// Writers emit keys in that order and sets in canonical order.

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "indsat/bollobas.hpp"
#include "indsat/embed.hpp"
#include "indsat/setfam.hpp"
#include "indsat/solver.hpp"
#include "indsat/verify.hpp"

namespace indsat {

using Json = nlohmann::ordered_json;

class FormatError : public std::invalid_argument {
 public:
  explicit FormatError(const std::string& what) : std::invalid_argument(what) {}
};

inline Json set_to_json(SubsetMask s) { return Json(s.elements()); }

inline SubsetMask set_from_json(const Json& j, int n) {
  if (!j.is_array()) throw FormatError("a set must be an array of elements");
  std::uint64_t bits = 0;
  for (const Json& e : j) {
    if (!e.is_number_integer()) throw FormatError("set elements must be integers");
    const auto v = e.get<long long>();
    if (v < 1 || v > n) throw FormatError("element " + std::to_string(v) + " outside [1, " + std::to_string(n) + "]");
    const std::uint64_t bit = std::uint64_t{1} << (v - 1);
    if ((bits & bit) != 0) throw FormatError("element " + std::to_string(v) + " repeated within a set");
    bits |= bit;
  }
  return SubsetMask(bits);
}

inline Json sets_to_json(const Family& f) {
  Json sets = Json::array();
  for (SubsetMask s : f) sets.push_back(set_to_json(s));
  return sets;
}

inline Json family_to_json(const Family& f, const Json& generator = Json()) {
  Json j;
  if (!generator.is_null()) j["generator"] = generator;
  j["n"] = f.n();
  j["sets"] = sets_to_json(f);
  return j;
}

inline int ground_size_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer()) throw FormatError("missing integer field \"n\"");
  const auto n = j["n"].get<long long>();
  if (n < 1 || n > kMaxGroundSize) throw FormatError("n = " + std::to_string(n) + " outside [1, 64]");
  return static_cast<int>(n);
}

/// Reads any set order. Duplicate sets are an error unless `lenient`.
inline Family family_from_json(const Json& j, bool lenient = false) {
  const int n = ground_size_from_json(j);
  if (!j.contains("sets") || !j["sets"].is_array()) throw FormatError("missing array field \"sets\"");
  std::vector<SubsetMask> sets;
  for (const Json& s : j["sets"]) sets.push_back(set_from_json(s, n));
  Family f = canonicalize_family(sets, n);
  if (!lenient && f.size() != sets.size()) throw FormatError("family lists a set more than once");
  return f;
}

inline Json embedding_to_json(const ComparabilityMatrix& poset, const Embedding& e) {
  Json j;
  j["poset"] = render_poset_spec(poset.spec());
  Json images = Json::array();
  for (SubsetMask s : e.images) images.push_back(set_to_json(s));
  j["images"] = images;
  return j;
}

inline Embedding embedding_from_json(const Json& j, int n) {
  if (!j.is_object() || !j.contains("images") || !j["images"].is_array()) throw FormatError("missing array field \"images\"");
  Embedding e;
  for (const Json& s : j["images"]) e.images.push_back(set_from_json(s, n));
  return e;
}

inline Json pair_system_to_json(const SetPairSystem& s) {
  Json j;
  j["n"] = s.n;
  Json pairs = Json::array();
  for (const SetPair& p : s.pairs) {
    Json pj;
    pj["x"] = set_to_json(p.x);
    pj["y"] = set_to_json(p.y);
    pairs.push_back(pj);
  }
  j["pairs"] = pairs;
  return j;
}

inline SetPairSystem pair_system_from_json(const Json& j) {
  SetPairSystem s;
  s.n = ground_size_from_json(j);
  if (!j.contains("pairs") || !j["pairs"].is_array()) throw FormatError("missing array field \"pairs\"");
  for (const Json& p : j["pairs"]) {
    if (!p.is_object() || !p.contains("x") || !p.contains("y")) throw FormatError("pairs need \"x\" and \"y\"");
    s.pairs.push_back({set_from_json(p["x"], s.n), set_from_json(p["y"], s.n)});
  }
  return s;
}

inline Json report_to_json(const VerificationReport& r) {
  Json j;
  j["poset"] = r.poset;
  j["family_size"] = r.family_size;
  j["is_free"] = r.is_free;
  j["exception_count"] = r.exception_count;
  j["exceptions"] = sets_to_json(r.exceptions);
  j["exceptions_truncated"] = r.exceptions_truncated;
  j["budget_exceeded"] = r.budget_exceeded;
  return j;
}

inline Json solve_result_to_json(const SolveResult& r) {
  Json j;
  j["status"] = r.status == SolveStatus::exact ? "exact" : "budget_exceeded";
  j["value"] = r.value ? Json(*r.value) : Json();
  j["witness"] = r.witness ? family_to_json(*r.witness) : Json();
  j["nodes"] = r.nodes;
  return j;
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(path + ": " + e.what());
  }
}

}  // namespace indsat

#endif  // INDSAT_IO_HPP
