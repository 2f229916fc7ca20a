#pragma once

// JSON encodings of the library types. Requires nlohmann/json.

#if __has_include(<nlohmann/json.hpp>)
#include <nlohmann/json.hpp>
#else
#include "json.hpp"
#endif

#include <string>
#include <vector>

#include "satgenus/bounds.hpp"
#include "satgenus/braid.hpp"
#include "satgenus/covering.hpp"
#include "satgenus/error.hpp"
#include "satgenus/oracle.hpp"
#include "satgenus/permutation.hpp"

namespace satgenus {

using Json = nlohmann::json;

namespace detail {

template <class T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ValidationError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ValidationError(std::string("field '") + key + "' has the wrong type");
  }
}

}  // namespace detail

inline Json tuple_to_json(const std::vector<Permutation>& images) {
  Json out = Json::array();
  for (const auto& p : images) out.push_back(format_cycles(p));
  return out;
}

// {"strands": n, "bands": [{"conjugator": "<word>", "index": k}, ...]}
inline BandFactorization band_factorization_from_json(const Json& j) {
  BandFactorization f{detail::field<int>(j, "strands"), {}};
  if (f.strands < 1) throw ValidationError("band factorization needs at least one strand");
  const Json bands = detail::field<Json>(j, "bands");
  if (!bands.is_array()) throw ValidationError("field 'bands' must be an array");
  for (const auto& b : bands) {
    f.bands.push_back(Band{parse_braid(detail::field<std::string>(b, "conjugator"), f.strands),
                           detail::field<int>(b, "index")});
  }
  expand_bands(f);
  return f;
}

inline Json to_json(const BandFactorization& f) {
  Json bands = Json::array();
  for (const auto& b : f.bands) bands.push_back({{"conjugator", format_braid(b.conjugator)}, {"index", b.index}});
  return {{"strands", f.strands}, {"bands", bands}};
}

// {"degree": n, "base": {"genus": g, "boundary": 1}, "branch": B,
//  "cover": {"components": m, "genus": g, "boundary": k}}
inline Json to_json(const CoverData& c) {
  return {{"degree", c.degree},
          {"base", {{"genus", c.base.genus}, {"boundary", c.base.boundary}}},
          {"branch", c.branch},
          {"cover", {{"components", c.cover.components}, {"genus", c.cover.genus}, {"boundary", c.cover.boundary}}}};
}

inline CoverData cover_data_from_json(const Json& j) {
  CoverData c;
  c.degree = detail::field<int>(j, "degree");
  const Json base = detail::field<Json>(j, "base");
  c.base = SurfaceShape{1, detail::field<int>(base, "genus"), detail::field<int>(base, "boundary")};
  c.branch = detail::field<int>(j, "branch");
  const Json cover = detail::field<Json>(j, "cover");
  c.cover = SurfaceShape{detail::field<int>(cover, "components"), detail::field<int>(cover, "genus"),
                         detail::field<int>(cover, "boundary")};
  check_cover(c);
  return c;
}

inline Json to_json(const BoundReport& r) {
  Json inputs = Json::object();
  for (const auto& in : r.inputs) inputs[in.name] = in.value;
  return {{"quantity", std::string(to_string(r.quantity))},
          {"value", r.value},
          {"clamped", r.clamped},
          {"formula_id", std::string(to_string(r.formula))},
          {"inputs", inputs}};
}

/// Rebuilds a report and re-evaluates it; a value that does not match its
/// formula is rejected.
inline BoundReport bound_report_from_json(const Json& j) {
  const auto quantity = quantity_from_string(detail::field<std::string>(j, "quantity"));
  const auto formula = formula_from_string(detail::field<std::string>(j, "formula_id"));
  if (!quantity) throw ValidationError("unknown quantity");
  if (!formula) throw ValidationError("unknown formula_id");
  BoundReport r{*quantity, detail::field<long>(j, "value"), detail::field<long>(j, "clamped"), *formula, {}};
  const Json inputs = detail::field<Json>(j, "inputs");
  if (!inputs.is_object()) throw ValidationError("'inputs' must be an object");
  for (const auto& [name, value] : inputs.items()) {
    if (!value.is_number_integer()) throw ValidationError("input '" + name + "' must be an integer");
    r.inputs.push_back({name, value.get<long>()});
  }
  if (recompute(r) != r.value) throw ValidationError("bound value does not match its formula");
  return r;
}

inline Json to_json(const CoverWitness& w) { return {{"images", tuple_to_json(w.images)}, {"cover", to_json(w.cover)}}; }

inline Json to_json(const Violation& v) {
  return {{"rule", v.rule}, {"detail", v.detail}, {"witness", to_json(v.witness)}};
}

inline Json to_json(const EnumerationReport& r) {
  Json violations = Json::array();
  for (const auto& v : r.violations) violations.push_back(to_json(v));
  Json histogram = Json::object();
  for (const auto& [k, count] : r.boundary_histogram) histogram[std::to_string(k)] = count;
  Json out = {{"base_genus", r.base_genus},
              {"degree", r.degree},
              {"total_tuples", r.total_tuples},
              {"abelian_tuples", r.abelian_tuples},
              {"violations", violations},
              {"min_genus_overall", {{"genus", r.min_genus_overall}, {"witness", to_json(r.min_overall_witness)}}},
              {"boundary_k_histogram", histogram}};
  if (r.min_genus_connected_boundary) {
    out["min_genus_connected_boundary"] = {{"genus", *r.min_genus_connected_boundary},
                                           {"witness", to_json(*r.min_connected_boundary_witness)}};
  } else {
    out["min_genus_connected_boundary"] = nullptr;
  }
  return out;
}

inline Json to_json(const SharpnessReport& r) {
  Json counterexamples = Json::array();
  for (const auto& v : r.counterexamples) counterexamples.push_back(to_json(v));
  Json out = {{"sharp", r.sharp}, {"covers_checked", r.covers_checked}, {"counterexamples", counterexamples}};
  out["even_equality_attained"] = r.even_equality_attained ? Json(*r.even_equality_attained) : Json(nullptr);
  return out;
}

inline Json to_json(const RealizabilityTable& t) {
  Json rows = Json::array();
  for (const auto& [key, images] : t.rows) {
    const auto& [m, k, genus] = key;
    rows.push_back({{"components", m}, {"boundary", k}, {"genus", genus}, {"witness", tuple_to_json(images)}});
  }
  return {{"base_genus", t.base_genus},
          {"degree", t.degree},
          {"rows", rows},
          {"cyclic_row_present", t.cyclic_row_present},
          {"example_row_present", t.example_row_present}};
}

inline Json to_json(const OrevkovGapReport& r) {
  return {{"n", r.n},
          {"N", r.twists},
          {"b1", r.b1},
          {"g4_K1", to_json(r.g4_k1)},
          {"b2", r.b2},
          {"g4_K2", to_json(r.g4_k2)},
          {"bound", to_json(r.bound)},
          {"K1_components", r.k1_components},
          {"K2_components", r.k2_components},
          {"gap", r.gap}};
}

}  // namespace satgenus
