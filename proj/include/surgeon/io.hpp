#pragma once

// JSON diagram files and report serialization. Rationals are written as
// "p/q" strings (just "p" when integral); integers as JSON numbers.

#include "surgeon/d3.hpp"
#include "surgeon/invariants.hpp"
#include "surgeon/model.hpp"
#include "surgeon/surgery.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>

namespace surgeon {

using Json = nlohmann::ordered_json;

/// Malformed diagram file. `location` is "line:column" for syntax errors and
/// a JSON pointer for schema errors.
class DiagramFileError : public std::runtime_error {
 public:
  DiagramFileError(std::string location, const std::string& what)
      : std::runtime_error(location + ": " + what), location_(std::move(location)) {}
  const std::string& location() const { return location_; }

 private:
  std::string location_;
};

namespace detail {

inline std::string line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return std::to_string(line) + ":" + std::to_string(col);
}

inline void require_keys(const Json& obj, const std::string& where, std::initializer_list<std::string_view> allowed,
                         std::initializer_list<std::string_view> required) {
  if (!obj.is_object()) throw DiagramFileError(where, "expected an object");
  for (const auto& [key, _] : obj.items()) {
    bool known = false;
    for (auto a : allowed) known = known || key == a;
    if (!known) throw DiagramFileError(where + "/" + key, "unknown key '" + key + "'");
  }
  for (auto r : required)
    if (!obj.contains(std::string(r))) throw DiagramFileError(where, "missing key '" + std::string(r) + "'");
}

inline std::int64_t get_int(const Json& v, const std::string& where) {
  if (!v.is_number_integer()) throw DiagramFileError(where, "expected an integer");
  return v.get<std::int64_t>();
}

inline std::string get_string(const Json& v, const std::string& where) {
  if (!v.is_string()) throw DiagramFileError(where, "expected a string");
  return v.get<std::string>();
}

inline std::vector<std::int64_t> get_int_array(const Json& v, const std::string& where) {
  if (!v.is_array()) throw DiagramFileError(where, "expected an array of integers");
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(get_int(v[i], where + "/" + std::to_string(i)));
  return out;
}

}  // namespace detail

/// Parses a diagram file. Only the structure is checked here; run
/// validate() for the diagram invariants.
inline SurgeryDiagram parse_diagram(std::string_view text) {
  Json root;
  try {
    root = Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    const std::size_t byte = e.byte > 0 ? e.byte - 1 : 0;
    throw DiagramFileError(detail::line_column(text, byte), "invalid JSON");
  }
  detail::require_keys(root, "", {"components", "linking", "knots"}, {"components", "linking"});

  SurgeryDiagram d;
  const Json& comps = root["components"];
  if (!comps.is_array()) throw DiagramFileError("/components", "expected an array");
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const std::string where = "/components/" + std::to_string(i);
    const Json& c = comps[i];
    detail::require_keys(c, where, {"name", "tb", "rot", "coeff"}, {"name", "tb", "rot", "coeff"});
    const std::string coeff = detail::get_string(c["coeff"], where + "/coeff");
    try {
      d.components.push_back({detail::get_string(c["name"], where + "/name"), detail::get_int(c["tb"], where + "/tb"),
                              detail::get_int(c["rot"], where + "/rot"), ContactCoefficient::parse(coeff)});
    } catch (const std::invalid_argument& e) {
      throw DiagramFileError(where + "/coeff", e.what());
    }
  }

  const Json& link = root["linking"];
  if (!link.is_array()) throw DiagramFileError("/linking", "expected an array of rows");
  for (std::size_t i = 0; i < link.size(); ++i)
    d.linking.push_back(detail::get_int_array(link[i], "/linking/" + std::to_string(i)));

  if (root.contains("knots")) {
    const Json& knots = root["knots"];
    if (!knots.is_array()) throw DiagramFileError("/knots", "expected an array");
    for (std::size_t i = 0; i < knots.size(); ++i) {
      const std::string where = "/knots/" + std::to_string(i);
      const Json& k = knots[i];
      if (!k.is_object() || !k.contains("kind")) throw DiagramFileError(where, "missing key 'kind'");
      const std::string kind = detail::get_string(k["kind"], where + "/kind");
      CompanionKnot knot;
      if (kind == "legendrian") {
        detail::require_keys(k, where, {"name", "kind", "tb", "rot", "lk"}, {"name", "tb", "rot", "lk"});
        knot.data = LegendrianKnotData{detail::get_int(k["tb"], where + "/tb"), detail::get_int(k["rot"], where + "/rot")};
      } else if (kind == "transverse") {
        detail::require_keys(k, where, {"name", "kind", "sl", "sign", "lk"}, {"name", "sl", "sign", "lk"});
        const std::string sign = detail::get_string(k["sign"], where + "/sign");
        if (sign != "positive" && sign != "negative")
          throw DiagramFileError(where + "/sign", "sign must be 'positive' or 'negative'");
        knot.data = TransverseKnotData{detail::get_int(k["sl"], where + "/sl"),
                                       sign == "positive" ? Sign::positive : Sign::negative};
      } else {
        throw DiagramFileError(where + "/kind", "kind must be 'legendrian' or 'transverse'");
      }
      knot.name = detail::get_string(k["name"], where + "/name");
      knot.lk = detail::get_int_array(k["lk"], where + "/lk");
      d.knots.push_back(std::move(knot));
    }
  }
  return d;
}

inline Json diagram_to_json(const SurgeryDiagram& d) {
  Json root = Json::object();
  root["components"] = Json::array();
  for (const auto& c : d.components)
    root["components"].push_back(Json{{"name", c.name}, {"tb", c.tb}, {"rot", c.rot}, {"coeff", c.coeff.str()}});
  root["linking"] = Json::array();
  for (const auto& row : d.linking) root["linking"].push_back(row);
  root["knots"] = Json::array();
  for (const auto& k : d.knots) {
    Json j{{"name", k.name}};
    if (k.is_legendrian()) {
      j["kind"] = "legendrian";
      j["tb"] = k.legendrian().tb;
      j["rot"] = k.legendrian().rot;
    } else {
      j["kind"] = "transverse";
      j["sl"] = k.transverse().sl;
      j["sign"] = k.transverse().sign == Sign::positive ? "positive" : "negative";
    }
    j["lk"] = k.lk;
    root["knots"].push_back(std::move(j));
  }
  return root;
}

/// Two-space indented JSON, with integer rows kept on one line.
inline std::string dump_json(const Json& j, int indent = 0) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  const std::string inner(static_cast<std::size_t>(indent + 2), ' ');
  if (j.is_array()) {
    if (j.empty()) return "[]";
    bool flat = true;
    for (const auto& e : j) flat = flat && !e.is_structured();
    if (flat) return j.dump();
    std::string s = "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) s += inner + dump_json(j[i], indent + 2) + (i + 1 < j.size() ? ",\n" : "\n");
    return s + pad + "]";
  }
  if (j.is_object()) {
    if (j.empty()) return "{}";
    std::string s = "{\n";
    std::size_t i = 0;
    for (const auto& [key, value] : j.items())
      s += inner + Json(key).dump() + ": " + dump_json(value, indent + 2) + (++i < j.size() ? ",\n" : "\n");
    return s + pad + "}";
  }
  return j.dump();
}

inline std::string render_diagram(const SurgeryDiagram& d) { return dump_json(diagram_to_json(d)) + "\n"; }

inline Json json_integer(const Integer& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return Json(static_cast<std::int64_t>(x));
  return Json(x.str());
}

inline Json json_vector(const IntVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(json_integer(x));
  return a;
}

inline Json json_vector(const RatVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

inline constexpr const char* kNotRationallyNullhomologous = "not rationally nullhomologous";
inline constexpr const char* kUndefined = "undefined";

inline Json invariants_to_json(const InvariantReport& r) {
  Json j{{"knot", r.knot}, {"kind", r.legendrian ? "legendrian" : "transverse"}};
  if (!r.solution) {
    j["order"] = kNotRationallyNullhomologous;
    return j;
  }
  j["order"] = json_integer(r.solution->order);
  j["nullhomologous"] = r.solution->order == 1;
  j["a"] = json_vector(r.solution->particular);
  const SurgeredValue* dependent = nullptr;
  std::string shift_key;
  if (r.legendrian) {
    j["tb"] = to_string(*r.tb);
    j["rot"] = to_string(r.rot->value);
    dependent = &*r.rot;
    shift_key = "rot_shift";
  } else {
    j["sl"] = to_string(r.sl->value);
    dependent = &*r.sl;
    shift_key = "sl_shift";
  }
  if (dependent->unique()) {
    j["seifert_dependence"] = "unique";
  } else {
    Json deps = Json::array();
    for (const auto& s : dependent->dependence)
      deps.push_back(Json{{"kernel_generator", json_vector(s.kernel_generator)}, {shift_key, to_string(s.shift)}});
    j["seifert_dependence"] = deps;
  }
  return j;
}

inline Json d3_to_json(const SurgeryDiagram& diagram, const D3Report& r) {
  Json q = Json::array();
  const IntMatrix m = build_q(diagram).q;
  for (std::size_t i = 0; i < m.rows(); ++i) q.push_back(json_vector(m.row(i)));
  Json euler{{"coefficients", json_vector(r.euler.coefficients)}, {"torsion", r.euler.torsion}};
  euler["b"] = r.euler.b ? json_vector(*r.euler.b) : Json(nullptr);
  return Json{{"generalized_linking_matrix", q},
              {"homology",
               Json{{"group", r.homology.str()},
                    {"invariant_factors", json_vector(r.homology.invariant_factors)},
                    {"free_rank", r.homology.free_rank}}},
              {"signature", r.signature},
              {"euler_class", euler},
              {"d3", r.d3 ? to_string(*r.d3) : kUndefined},
              {"d3_via_expansion", r.d3_via_expansion ? to_string(*r.d3_via_expansion) : kUndefined}};
}

}  // namespace surgeon
