#include "tropj/jsonio.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace tropj {

namespace {

using json = nlohmann::ordered_json;

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const std::exception& e) {
    throw parse_error(std::string("bad json: ") + e.what());
  }
}

std::string height_key(size_t k) { return "u" + kCubicNames[k].substr(1); }

ExtRational parse_height(const json& v, size_t k) {
  if (!v.is_string()) throw parse_error("height entries must be strings like \"p/q\" or \"inf\"");
  std::string s = v.get<std::string>();
  if (s == "inf") {
    if (is_corner(kCubicPoints[k]))
      throw parse_error("corner height " + height_key(k) + " must be finite");
    return std::nullopt;
  }
  return Rational::parse(s);
}

Rational parse_rational_field(const json& obj, const char* field) {
  if (!obj.contains(field) || !obj[field].is_string())
    throw parse_error(std::string("series term needs a string \"") + field + "\" entry");
  return Rational::parse(obj[field].get<std::string>());
}

PuiseuxSeries parse_series(const json& v, const std::string& name) {
  const json* terms = nullptr;
  std::optional<Rational> trunc;
  if (v.is_array()) {
    terms = &v;
  } else if (v.is_object()) {
    if (!v.contains("terms") || !v["terms"].is_array())
      throw parse_error(name + ": series object needs a \"terms\" list");
    for (auto& [key, val] : v.items())
      if (key != "terms" && key != "trunc")
        throw parse_error(name + ": unknown series entry \"" + key + "\"");
    terms = &v["terms"];
    if (v.contains("trunc")) {
      if (!v["trunc"].is_string()) throw parse_error(name + ": \"trunc\" must be a string");
      trunc = Rational::parse(v["trunc"].get<std::string>());
    }
  } else {
    throw parse_error(name + ": series must be a term list or {\"terms\", \"trunc\"}");
  }
  std::vector<PuiseuxTerm> parsed;
  for (const json& t : *terms) {
    if (!t.is_object()) throw parse_error(name + ": series terms must be objects");
    for (auto& [key, val] : t.items())
      if (key != "exp" && key != "coef")
        throw parse_error(name + ": unknown term entry \"" + key + "\"");
    parsed.push_back({parse_rational_field(t, "exp"), parse_rational_field(t, "coef")});
  }
  return PuiseuxSeries(std::move(parsed), trunc);
}

json series_to_json(const PuiseuxSeries& s) {
  json terms = json::array();
  for (const PuiseuxTerm& t : s.terms())
    terms.push_back(json{{"exp", t.exp.str()}, {"coef", t.coef.str()}});
  if (s.is_exact()) return terms;
  return json{{"terms", std::move(terms)}, {"trunc", s.trunc()->str()}};
}

json point_to_json(LatticePoint p) { return json::array({p.x, p.y}); }

json points_to_json(const std::vector<LatticePoint>& pts) {
  json a = json::array();
  for (LatticePoint p : pts) a.push_back(point_to_json(p));
  return a;
}

}  // namespace

HeightVector parse_heights_json(const std::string& text) {
  json j = parse_text(text);
  HeightVector u;
  if (j.is_array()) {
    if (j.size() != 10) throw parse_error("height array must have exactly 10 entries");
    for (size_t k = 0; k < 10; ++k) u[k] = parse_height(j[k], k);
    return u;
  }
  if (!j.is_object()) throw parse_error("heights must be an object or a 10-element array");
  for (auto& [key, val] : j.items()) {
    bool known = false;
    for (size_t k = 0; k < 10 && !known; ++k) known = key == height_key(k);
    if (!known) throw parse_error("unknown height key \"" + key + "\"");
  }
  for (size_t k = 0; k < 10; ++k) {
    std::string key = height_key(k);
    if (!j.contains(key)) throw parse_error("missing height key \"" + key + "\"");
    u[k] = parse_height(j[key], k);
  }
  return u;
}

std::string heights_to_json(const HeightVector& u) {
  json j = json::object();
  for (size_t k = 0; k < 10; ++k) j[height_key(k)] = ext_str(u[k]);
  return j.dump() + "\n";
}

PuiseuxCubic parse_cubic_json(const std::string& text) {
  json j = parse_text(text);
  if (!j.is_object()) throw parse_error("cubic must be an object keyed by coefficient names");
  PuiseuxCubic f;
  for (auto& [key, val] : j.items()) {
    size_t k = 0;
    while (k < 10 && kCubicNames[k] != key) ++k;
    if (k == 10) throw parse_error("unknown coefficient key \"" + key + "\"");
    f[k] = parse_series(val, key);
  }
  bool any = false;
  for (const PuiseuxSeries& s : f) any = any || !s.is_exactly_zero();
  if (!any) throw parse_error("cubic has no nonzero coefficient");
  return f;
}

std::string cubic_to_json(const PuiseuxCubic& f) {
  json j = json::object();
  for (size_t k = 0; k < 10; ++k)
    if (!f[k].is_exactly_zero()) j[kCubicNames[k]] = series_to_json(f[k]);
  return j.dump() + "\n";
}

std::string subdivision_to_json(const MarkedSubdivision& s) {
  json cells = json::array();
  for (const MarkedCell& c : s.cells)
    cells.push_back(json{{"vertices", points_to_json(c.vertices)},
                         {"marked", points_to_json(c.marked)}});
  return json{{"cells", std::move(cells)}}.dump() + "\n";
}

std::string curve_to_json(const TropicalCurve& c) {
  json verts = json::array();
  for (const CurveVertex& v : c.vertices)
    verts.push_back(json{{"x", v.pos[0].str()}, {"y", v.pos[1].str()}});
  json edges = json::array();
  for (const CurveEdge& e : c.edges)
    edges.push_back(json{{"a", e.a},
                         {"b", e.b},
                         {"dir", point_to_json(e.dir)},
                         {"facet", json::array({point_to_json(e.fa), point_to_json(e.fb)})}});
  json rays = json::array();
  for (const CurveRay& r : c.rays)
    rays.push_back(json{{"vertex", r.vertex},
                        {"dir", point_to_json(r.dir)},
                        {"weight", r.weight},
                        {"facet", json::array({point_to_json(r.fa), point_to_json(r.fb)})}});
  return json{{"vertices", std::move(verts)},
              {"edges", std::move(edges)},
              {"rays", std::move(rays)}}
             .dump() +
         "\n";
}

}  // namespace tropj
