#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include <json.hpp>

#include "zonotopal/zonotopal.hpp"

namespace zonotopal {

using Json = nlohmann::ordered_json;

// All indices are 1-based on the wire; rationals are "p/q" strings.

inline Json json_rational(const Rational& q) { return to_string(q); }

inline Json json_point(const QRow& p) {
  Json out = Json::array();
  for (const auto& v : p) out.push_back(json_rational(v));
  return out;
}

inline Json json_index_set(const IndexSet& indices) {
  Json out = Json::array();
  for (int i : indices) out.push_back(i + 1);
  return out;
}

inline Json json_int_rows(const std::vector<IntRow>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) out.push_back(r);
  return out;
}

inline Json json_poly(const MultiPoly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms())
    terms.push_back(Json{{"exponents", e}, {"coefficient", json_rational(c)}});
  return Json{{"terms", terms}, {"pretty", to_string(p)}};
}

inline Json json_graded_dims(const GradedDims& d) {
  return Json{{"dims", d.dims}, {"truncated", d.truncated}};
}

inline Json json_subspace(const RationalSubspace& r) {
  return Json{{"indices", json_index_set(r.indices)},
              {"dimension", r.dimension},
              {"basis", json_int_rows(r.basis)}};
}

inline Json json_face(const RegularFace& f) {
  return Json{{"signs", signs_string(f.signs)}, {"witness", json_point(f.witness)}};
}

inline Json json_betti(const BettiTable& b) {
  Json entries = Json::object();
  for (const auto& [h, dim] : b.entries) entries[std::to_string(h)] = dim;
  return Json{{"entries", entries}, {"truncated", b.truncated}, {"max_degree", b.max_h}};
}

inline Json json_cs_table(const CompactSupportTable& t) {
  Json entries = Json::object();
  long long total = 0;
  for (const auto& [h, dim] : t.entries) {
    entries[std::to_string(h)] = dim;
    total += dim;
  }
  Json out{{"stratum", t.stratum},
           {"entries", entries},
           {"truncated", t.truncated},
           {"max_degree", t.max_degree},
           {"grading_offset", t.grading_offset},
           {"grading_note", t.grading_note}};
  if (!t.truncated) out["total"] = total;
  return out;
}

inline Json json_filtration(const FiltrationReport& r) {
  Json levels = Json::array();
  for (const auto& level : r.levels) {
    Json subspaces = Json::array();
    for (const auto& e : level.subspaces)
      subspaces.push_back(
          Json{{"subspace", json_subspace(e.subspace)}, {"d_dimension", e.d_dim}});
    levels.push_back(Json{{"i", level.i}, {"dim_g", level.dim_g}, {"subspaces", subspaces}});
  }
  return Json{{"levels", levels}, {"total", r.total}};
}

inline Json json_lamain(const LamainReport& r) {
  Json lines = Json::array();
  for (const auto& line : r.per_degree)
    lines.push_back(Json{{"degree", line.degree},
                         {"intersection_dim", line.intersection_dim},
                         {"boundary_dim", line.boundary_dim},
                         {"contained", line.contained}});
  return Json{{"holds", r.holds}, {"per_degree", lines}};
}

// The one wire format for the list X.
struct InputSpec {
  int dim = 0;
  std::vector<IntRow> vectors;
  std::vector<std::string> labels;  // optional, echoed back

  VectorList list() const { return VectorList(dim, vectors); }

  Json to_json() const {
    Json out{{"dim", dim}, {"vectors", json_int_rows(vectors)}};
    if (!labels.empty()) out["labels"] = labels;
    return out;
  }
};

inline InputSpec parse_input(const Json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("vectors"))
    throw std::invalid_argument("input must be an object with 'dim' and 'vectors'");
  InputSpec spec;
  if (!j["dim"].is_number_integer()) throw std::invalid_argument("'dim' must be an integer");
  spec.dim = j["dim"].get<int>();
  if (spec.dim < 1) throw std::invalid_argument("'dim' must be positive");
  if (!j["vectors"].is_array() || j["vectors"].empty())
    throw std::invalid_argument("'vectors' must be a nonempty array");
  for (const auto& row : j["vectors"]) {
    if (!row.is_array() || row.size() != static_cast<std::size_t>(spec.dim))
      throw std::invalid_argument("each vector must have 'dim' integer entries");
    IntRow v;
    for (const auto& entry : row) {
      if (!entry.is_number_integer()) throw std::invalid_argument("vector entries must be integers");
      v.push_back(entry.get<std::int64_t>());
    }
    if (std::all_of(v.begin(), v.end(), [](std::int64_t e) { return e == 0; }))
      throw std::invalid_argument("vectors must be nonzero");
    spec.vectors.push_back(std::move(v));
  }
  if (j.contains("labels")) {
    if (!j["labels"].is_array() || j["labels"].size() != spec.vectors.size())
      throw std::invalid_argument("'labels' must list one string per vector");
    for (const auto& l : j["labels"]) spec.labels.push_back(l.get<std::string>());
  }
  return spec;
}

}  // namespace zonotopal
