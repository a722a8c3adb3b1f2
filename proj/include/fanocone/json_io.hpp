#pragma once

// JSON input/output for presentations and results.  Input format
// "fanocone/1":
//   {"format": "fanocone/1", "kind": "weighted_action", "weights": [2, 1]}
//   {"format": "fanocone/1", "kind": "presentation", "n": 2, "r": "1/1",
//    "strata": [{"isotropy_order": 1, "component_id": "Y", "complex_dim": 1,
//                "betti": [1, 0, 1]}, ...],
//    "charts": [{"label": "p", "m": 2, "weights": [1, 1]}, ...]}
// Optional everywhere: "name" (free text), "homology_sphere_link" (bool).
// Rationals are strings "p/q"; unknown fields are rejected.

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "fanocone/cone_model.hpp"
#include "fanocone/discrepancy.hpp"
#include "fanocone/orb_topology.hpp"
#include "fanocone/rational.hpp"
#include "fanocone/reeb_orbits.hpp"
#include "fanocone/ss_engine.hpp"
#include "fanocone/sympath_index.hpp"

namespace fanocone::io {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kFormat = "fanocone/1";

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct InputDocument {
  std::string name;
  std::optional<WeightedAction> weights;  // set for kind = weighted_action
  ConePresentation presentation;
  bool homology_sphere_link = false;
};

namespace detail {

inline void check_keys(const Json& obj, const std::string& path, std::initializer_list<std::string_view> allowed) {
  if (!obj.is_object()) throw InputError(path + ": expected an object");
  for (const auto& [key, value] : obj.items()) {
    bool ok = false;
    for (auto a : allowed) ok = ok || key == a;
    if (!ok) throw InputError(path + ": unknown field \"" + key + "\"");
  }
}

inline const Json& require(const Json& obj, const std::string& path, const char* key) {
  if (!obj.contains(key)) throw InputError(path + ": missing field \"" + key + "\"");
  return obj.at(key);
}

inline std::int64_t get_int(const Json& v, const std::string& path) {
  if (!v.is_number_integer()) throw InputError(path + ": expected an integer");
  return v.get<std::int64_t>();
}

inline std::string get_string(const Json& v, const std::string& path) {
  if (!v.is_string()) throw InputError(path + ": expected a string");
  return v.get<std::string>();
}

inline Rational get_rational(const Json& v, const std::string& path) {
  if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
  try {
    return Rational::parse(get_string(v, path));
  } catch (const std::invalid_argument& e) {
    throw InputError(path + ": " + e.what());
  }
}

inline std::vector<std::int64_t> get_int_array(const Json& v, const std::string& path) {
  if (!v.is_array()) throw InputError(path + ": expected an array");
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(get_int(v[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

}  // namespace detail

inline InputDocument parse_input(const Json& doc) {
  using namespace detail;
  InputDocument out;
  if (!doc.is_object()) throw InputError("top level: expected an object");
  if (doc.contains("format") && get_string(doc["format"], "format") != kFormat)
    throw InputError("format: unsupported format \"" + doc["format"].get<std::string>() + "\"");
  const std::string kind = get_string(require(doc, "top level", "kind"), "kind");
  if (doc.contains("name")) out.name = get_string(doc["name"], "name");
  if (doc.contains("homology_sphere_link")) {
    if (!doc["homology_sphere_link"].is_boolean()) throw InputError("homology_sphere_link: expected a boolean");
    out.homology_sphere_link = doc["homology_sphere_link"].get<bool>();
  }

  if (kind == "weighted_action") {
    check_keys(doc, "top level", {"format", "kind", "name", "homology_sphere_link", "weights"});
    WeightedAction w{get_int_array(require(doc, "top level", "weights"), "weights")};
    try {
      out.presentation = from_weighted_action(w);
    } catch (const std::invalid_argument& e) {
      throw InputError(std::string("weights: ") + e.what());
    }
    out.weights = std::move(w);
    return out;
  }
  if (kind != "presentation") throw InputError("kind: expected \"weighted_action\" or \"presentation\"");

  check_keys(doc, "top level", {"format", "kind", "name", "homology_sphere_link", "n", "r", "strata", "charts"});
  auto& p = out.presentation;
  p.n = static_cast<int>(get_int(require(doc, "top level", "n"), "n"));
  p.r = get_rational(require(doc, "top level", "r"), "r");

  const Json& strata = require(doc, "top level", "strata");
  if (!strata.is_array()) throw InputError("strata: expected an array");
  for (std::size_t i = 0; i < strata.size(); ++i) {
    const std::string path = "strata[" + std::to_string(i) + "]";
    const Json& s = strata[i];
    check_keys(s, path, {"isotropy_order", "component_id", "complex_dim", "betti", "chart_ref"});
    Stratum st;
    st.isotropy_order = get_int(require(s, path, "isotropy_order"), path + ".isotropy_order");
    st.component_id = get_string(require(s, path, "component_id"), path + ".component_id");
    st.complex_dim = static_cast<int>(get_int(require(s, path, "complex_dim"), path + ".complex_dim"));
    st.betti = get_int_array(require(s, path, "betti"), path + ".betti");
    if (s.contains("chart_ref")) st.chart_ref = get_string(s["chart_ref"], path + ".chart_ref");
    p.strata.push_back(std::move(st));
  }

  const Json& charts = require(doc, "top level", "charts");
  if (!charts.is_array()) throw InputError("charts: expected an array");
  for (std::size_t i = 0; i < charts.size(); ++i) {
    const std::string path = "charts[" + std::to_string(i) + "]";
    const Json& c = charts[i];
    check_keys(c, path, {"label", "m", "weights"});
    ChartData ch;
    ch.label = get_string(require(c, path, "label"), path + ".label");
    ch.m = get_int(require(c, path, "m"), path + ".m");
    ch.weights = get_int_array(require(c, path, "weights"), path + ".weights");
    p.charts.push_back(std::move(ch));
  }

  auto violations = validate_presentation(p);
  if (!violations.empty()) {
    std::string msg = "invalid presentation";
    for (const auto& v : violations) msg += "\n  " + v.str();
    throw InputError(msg);
  }
  return out;
}

inline InputDocument parse_input_text(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  return parse_input(doc);
}

inline Json to_json(const ConePresentation& p) {
  Json out;
  out["format"] = kFormat;
  out["kind"] = "presentation";
  out["n"] = p.n;
  out["r"] = p.r.str();
  out["strata"] = Json::array();
  for (const auto& s : p.strata) {
    Json js;
    js["isotropy_order"] = s.isotropy_order;
    js["component_id"] = s.component_id;
    js["complex_dim"] = s.complex_dim;
    js["betti"] = s.betti;
    if (!s.chart_ref.empty()) js["chart_ref"] = s.chart_ref;
    out["strata"].push_back(std::move(js));
  }
  out["charts"] = Json::array();
  for (const auto& c : p.charts) {
    Json jc;
    jc["label"] = c.label;
    jc["m"] = c.m;
    jc["weights"] = c.weights;
    out["charts"].push_back(std::move(jc));
  }
  return out;
}

// Presentation form of any input; re-imports to an equal document.
inline Json export_document(const InputDocument& doc) {
  Json out;
  Json body = to_json(doc.presentation);
  for (auto& [k, v] : body.items()) {
    if (k == "kind") {
      out["kind"] = v;
      if (!doc.name.empty()) out["name"] = doc.name;
      if (doc.homology_sphere_link) out["homology_sphere_link"] = true;
      continue;
    }
    out[k] = v;
  }
  return out;
}

inline Json to_json(const DiscrepancyResult& d) {
  Json out;
  out["md"] = d.md.str();
  out["capped_by_r"] = d.capped_by_r;
  out["klt"] = d.klt;
  if (!d.diagnosis.empty()) out["diagnosis"] = d.diagnosis;
  out["minimizers"] = Json::array();
  for (const auto& m : d.minimizers) out["minimizers"].push_back(Json{{"chart", m.chart_label}, {"k", m.k}});
  return out;
}

inline Json to_json(const OrbitFamily& f) {
  return Json{{"isotropy_order", f.isotropy_order},
              {"k", f.k},
              {"ell", f.ell},
              {"component_id", f.component_id},
              {"period", f.period.str()},
              {"stratum_dim", f.stratum_dim},
              {"rs", f.rs.str()},
              {"lcz", f.lcz.str()},
              {"z2", f.z2},
              {"lsft", f.lsft.str()}};
}

inline Json to_json(const FamilySignature& s) {
  return Json{{"isotropy_order", s.isotropy_order}, {"k", s.k}, {"ell", s.ell}, {"component_id", s.component_id}};
}

// Rows sorted by (degree, p).
inline Json to_json(const E1Page& page) {
  Json rows = Json::array();
  for (const auto& [key, list] : page.entries)
    for (const auto& c : list)
      rows.push_back(Json{{"degree", key.degree.str()},
                          {"p", key.p},
                          {"z2", key.z2},
                          {"rank", c.rank},
                          {"j", c.j},
                          {"source", to_json(c.source)}});
  return Json{{"N", page.N}, {"max_degree", page.max_degree.str()}, {"entries", std::move(rows)}};
}

inline Json to_json(const SHProfile& sh) {
  Json out;
  out["min_degree"] = sh.min_degree.str();
  out["certified"] = sh.certified;
  out["survivor"] = Json{{"p", sh.survivor_p}, {"source", to_json(sh.survivor)}};
  out["degenerate"] = sh.degenerate;
  Json ranks = Json::object();
  for (const auto& [deg, rank] : sh.ranks) ranks[deg.str()] = rank;
  out["ranks"] = std::move(ranks);
  if (!sh.obstructions.empty()) out["obstructions"] = sh.obstructions;
  return out;
}

inline Json to_json(const IndexBundle& b) {
  Json out{{"rs", b.rs.str()}, {"lcz", b.lcz.str()}, {"kernel_half_dim", b.kernel_half_dim}};
  out["z2"] = b.z2 ? Json(*b.z2) : Json(nullptr);
  return out;
}

}  // namespace fanocone::io
