#pragma once

#include <json.hpp>

#include <algorithm>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "flip/classifier.hpp"
#include "flip/errors.hpp"
#include "flip/nielsen.hpp"
#include "flip/seifert.hpp"
#include "flip/splittings.hpp"
#include "flip/words.hpp"

// JSON wire formats. Parsers validate shape strictly and report the path of
// the offending field; serializers are byte-deterministic (nlohmann objects
// keep keys sorted).

namespace flip {

using nlohmann::json;

namespace detail {

inline const json& require_field(const json& j, const char* key, const std::string& path) {
  if (!j.is_object()) fail(errc::parse_error, path + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(errc::parse_error, path + ": missing field \"" + key + "\"");
  return *it;
}

inline long long require_int(const json& j, const std::string& path) {
  if (j.is_number_unsigned() &&
      j.get<unsigned long long>() >
          static_cast<unsigned long long>((std::numeric_limits<long long>::max)()))
    fail(errc::parse_error, path + ": integer too large");
  if (!j.is_number_integer() && !j.is_number_unsigned())
    fail(errc::parse_error, path + ": expected an integer");
  return j.get<long long>();
}

inline const json& require_array(const json& j, const std::string& path) {
  if (!j.is_array()) fail(errc::parse_error, path + ": expected an array");
  return j;
}

inline std::string require_string(const json& j, const std::string& path) {
  if (!j.is_string()) fail(errc::parse_error, path + ": expected a string");
  return j.get<std::string>();
}

inline json integer_json(const Integer& n) {
  if (n >= (std::numeric_limits<long long>::min)() && n <= (std::numeric_limits<long long>::max)())
    return static_cast<long long>(n);
  return n.str();
}

}  // namespace detail

inline SeifertInvariants invariants_from_json(const json& j, const std::string& path = "$") {
  SeifertInvariants inv;
  inv.genus = detail::require_int(detail::require_field(j, "genus", path), path + ".genus");
  inv.euler_b = detail::require_int(detail::require_field(j, "b", path), path + ".b");
  const json& fibers = detail::require_array(detail::require_field(j, "fibers", path), path + ".fibers");
  for (std::size_t i = 0; i < fibers.size(); ++i) {
    std::string fpath = path + ".fibers[" + std::to_string(i) + "]";
    const json& f = detail::require_array(fibers[i], fpath);
    if (f.size() != 2) fail(errc::parse_error, fpath + ": expected [alpha, beta]");
    inv.fibers.push_back({detail::require_int(f[0], fpath + "[0]"),
                          detail::require_int(f[1], fpath + "[1]")});
  }
  try {
    validate(inv);
  } catch (const Error& e) {
    fail(errc::parse_error, path + ": " + e.what());
  }
  return inv;
}

inline json invariants_to_json(const SeifertInvariants& inv) {
  json fibers = json::array();
  for (const auto& f : inv.fibers) fibers.push_back(json::array({f.alpha, f.beta}));
  return json{{"genus", inv.genus}, {"b", inv.euler_b}, {"fibers", fibers}};
}

// The "case" field may be omitted when the invariants are at hand to infer it
// from; a standalone descriptor must spell it out.
inline SplittingDescriptor splitting_from_json(const json& j, const std::string& path = "$",
                                               const SeifertInvariants* inv = nullptr) {
  std::string kind = detail::require_string(detail::require_field(j, "kind", path), path + ".kind");
  if (kind == "horizontal") return SplittingDescriptor::make_horizontal();
  if (kind == "vertical") {
    VerticalSplitting s;
    if (!j.contains("case") && inv) {
      s.construction_case = infer_vertical_case(*inv);
    } else {
      std::string c =
          detail::require_string(detail::require_field(j, "case", path), path + ".case");
      if (c == "generic")
        s.construction_case = VerticalCase::generic;
      else if (c == "product")
        s.construction_case = VerticalCase::product;
      else if (c == "single_spine")
        s.construction_case = VerticalCase::single_spine;
      else
        fail(errc::parse_error, path + ".case: unknown case \"" + c + "\"");
    }
    const json& idx =
        detail::require_array(detail::require_field(j, "h1_fibers", path), path + ".h1_fibers");
    for (std::size_t i = 0; i < idx.size(); ++i) {
      long long v = detail::require_int(idx[i], path + ".h1_fibers[" + std::to_string(i) + "]");
      if (v < 1 || v > (std::numeric_limits<int>::max)())
        fail(errc::parse_error, path + ".h1_fibers[" + std::to_string(i) + "]: bad fiber index");
      s.h1_fibers.push_back(static_cast<int>(v));
    }
    std::sort(s.h1_fibers.begin(), s.h1_fibers.end());
    return SplittingDescriptor::make_vertical(std::move(s));
  }
  if (kind == "stabilized") {
    SplittingDescriptor base =
        splitting_from_json(detail::require_field(j, "base", path), path + ".base", inv);
    long long extra =
        detail::require_int(detail::require_field(j, "extra_genus", path), path + ".extra_genus");
    if (extra < 1) fail(errc::parse_error, path + ".extra_genus: must be >= 1");
    return SplittingDescriptor::make_stabilized(std::move(base), extra);
  }
  fail(errc::parse_error, path + ".kind: unknown kind \"" + kind + "\"");
}

inline json splitting_to_json(const SplittingDescriptor& d) {
  switch (d.kind) {
    case SplittingDescriptor::Kind::horizontal:
      return json{{"kind", "horizontal"}};
    case SplittingDescriptor::Kind::stabilized:
      return json{{"kind", "stabilized"},
                  {"base", splitting_to_json(*d.base)},
                  {"extra_genus", d.extra_genus}};
    case SplittingDescriptor::Kind::vertical:
      break;
  }
  return json{{"kind", "vertical"},
              {"case", vertical_case_name(d.vertical->construction_case)},
              {"h1_fibers", d.vertical->h1_fibers}};
}

inline json presentation_to_json(const FinitePresentation& p) {
  json gens = json::array();
  for (const auto& g : p.generators) gens.push_back(g.name());
  json rels = json::array();
  for (const auto& r : p.relators) {
    json rel = json::array();
    for (const auto& s : r) rel.push_back(json::array({s.gen.name(), s.exp}));
    rels.push_back(rel);
  }
  return json{{"generators", gens}, {"relators", rels}};
}

inline json verdict_to_json(const Verdict& v) {
  json trace = json::array();
  for (const auto& f : v.trace)
    trace.push_back(json{{"rule", rule_name(f.rule)},
                         {"theorem", rule_citation(f.rule)},
                         {"matched", f.matched},
                         {"detail", f.detail}});
  return json{{"outcome", outcome_name(v.outcome)}, {"trace", trace}};
}

inline json manifold_class_to_json(const ManifoldClass& c) {
  json j{{"kind", manifold_kind_name(c.kind)}};
  if (c.lens) {
    j["p"] = detail::integer_json(c.lens->p);
    j["q"] = detail::integer_json(c.lens->q);
  }
  return j;
}

inline FiniteGroupTable group_table_from_json(const json& j, const std::string& path = "$") {
  long long order = detail::require_int(detail::require_field(j, "order", path), path + ".order");
  if (order < 1 || order > 100000) fail(errc::parse_error, path + ".order: out of range");
  const json& mul = detail::require_array(detail::require_field(j, "mul", path), path + ".mul");
  if (static_cast<long long>(mul.size()) != order)
    fail(errc::parse_error, path + ".mul: expected " + std::to_string(order) + " rows");
  std::vector<std::vector<int>> rows;
  for (std::size_t a = 0; a < mul.size(); ++a) {
    std::string rpath = path + ".mul[" + std::to_string(a) + "]";
    const json& row = detail::require_array(mul[a], rpath);
    std::vector<int> r;
    for (std::size_t b = 0; b < row.size(); ++b) {
      long long v = detail::require_int(row[b], rpath + "[" + std::to_string(b) + "]");
      if (v < 0 || v >= order)
        fail(errc::parse_error, rpath + "[" + std::to_string(b) + "]: entry out of range");
      r.push_back(static_cast<int>(v));
    }
    rows.push_back(std::move(r));
  }
  try {
    return FiniteGroupTable::from_multiplication(rows);
  } catch (const Error& e) {
    fail(errc::parse_error, path + ": " + e.what());
  }
}

inline std::map<Generator, int> assignment_from_json(const json& j, const std::string& path = "$") {
  if (!j.is_object()) fail(errc::parse_error, path + ": expected an object");
  std::map<Generator, int> out;
  for (auto it = j.begin(); it != j.end(); ++it) {
    Generator g;
    try {
      g = generator_from_name(it.key());
    } catch (const Error&) {
      fail(errc::parse_error, path + ": bad generator name \"" + it.key() + "\"");
    }
    long long v = detail::require_int(it.value(), path + "." + it.key());
    if (v < 0 || v > (std::numeric_limits<int>::max)())
      fail(errc::parse_error, path + "." + it.key() + ": out of range");
    out[g] = static_cast<int>(v);
  }
  return out;
}

inline std::vector<ElementTuple> tuples_from_json(const json& j, const std::string& path = "$") {
  const json& arr = detail::require_array(j, path);
  std::vector<ElementTuple> out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    std::string tpath = path + "[" + std::to_string(i) + "]";
    const json& t = detail::require_array(arr[i], tpath);
    ElementTuple tup;
    for (std::size_t k = 0; k < t.size(); ++k) {
      long long v = detail::require_int(t[k], tpath + "[" + std::to_string(k) + "]");
      if (v < 0 || v > (std::numeric_limits<int>::max)())
        fail(errc::parse_error, tpath + "[" + std::to_string(k) + "]: out of range");
      tup.push_back(static_cast<int>(v));
    }
    out.push_back(std::move(tup));
  }
  return out;
}

inline json consistency_report_to_json(const ConsistencyReport& r) {
  return json{{"verdict", verdict_to_json(r.verdict)},
              {"oracle", equivalence_name(r.oracle)},
              {"contradiction", r.contradiction},
              {"note", r.note},
              {"tuple_a", r.tuple_a},
              {"tuple_b", r.tuple_b}};
}

inline json error_to_json(const Error& e) {
  return json{{"error", json{{"code", errc_name(e.code())}, {"message", e.what()}}}};
}

}  // namespace flip
