#include "json_util.hpp"

#include <cmath>

namespace braidsong::detail {

json point_to_json(const Point3& p) { return json::array({p.x, p.y, p.z}); }

double finite_number(const json& j, const std::string& where) {
  if (!j.is_number()) {
    fail(ErrorCode::SchemaError, where + " must be a number");
  }
  const double v = j.get<double>();
  if (!std::isfinite(v)) {
    fail(ErrorCode::SchemaError, where + " is not finite");
  }
  return v;
}

Point3 point_from_json(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 3) {
    fail(ErrorCode::SchemaError, where + " must be a 3-element array");
  }
  return {finite_number(j[0], where), finite_number(j[1], where),
          finite_number(j[2], where)};
}

const json& member(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) {
    fail(ErrorCode::SchemaError, where + " is missing field '" + key + "'");
  }
  return j.at(key);
}

json skeleton_to_json(const Skeleton& s) {
  json out;
  out["vertices"] = s.vertices;
  json arrows = json::array();
  for (const Arrow& a : s.arrows) {
    arrows.push_back({{"id", a.id}, {"from", a.from}, {"to", a.to}});
  }
  out["arrows"] = std::move(arrows);
  return out;
}

Skeleton skeleton_from_json(const json& j) {
  Skeleton s;
  const json& vertices = member(j, "vertices", "skeleton");
  if (!vertices.is_array()) {
    fail(ErrorCode::SchemaError, "skeleton.vertices must be an array");
  }
  for (const json& v : vertices) {
    if (!v.is_string()) {
      fail(ErrorCode::SchemaError, "vertex ids must be strings");
    }
    s.vertices.push_back(v.get<std::string>());
  }
  const json& arrows = member(j, "arrows", "skeleton");
  if (!arrows.is_array()) {
    fail(ErrorCode::SchemaError, "skeleton.arrows must be an array");
  }
  for (const json& a : arrows) {
    Arrow arrow;
    for (const char* key : {"id", "from", "to"}) {
      if (!member(a, key, "arrow").is_string()) {
        fail(ErrorCode::SchemaError,
             std::string("arrow field '") + key + "' must be a string");
      }
    }
    arrow.id = a.at("id").get<std::string>();
    arrow.from = a.at("from").get<std::string>();
    arrow.to = a.at("to").get<std::string>();
    s.arrows.push_back(std::move(arrow));
  }
  return s;
}

void write_body(json& holder, const Gesture& g) {
  json vm = json::object();
  for (const auto& [id, p] : g.vertex_map) vm[id] = point_to_json(p);
  holder["vertex_map"] = std::move(vm);
  json am = json::object();
  for (const auto& [id, curve] : g.arrow_map) {
    json pts = json::array();
    for (const Point3& p : curve.samples()) pts.push_back(point_to_json(p));
    am[id] = std::move(pts);
  }
  holder["arrow_map"] = std::move(am);
}

void read_body(const json& holder, Gesture& g) {
  const json& vm = member(holder, "vertex_map", "document");
  if (!vm.is_object()) {
    fail(ErrorCode::SchemaError, "vertex_map must be an object");
  }
  for (const auto& [id, value] : vm.items()) {
    g.vertex_map.emplace(id, point_from_json(value, "vertex '" + id + "'"));
  }
  const json& am = member(holder, "arrow_map", "document");
  if (!am.is_object()) {
    fail(ErrorCode::SchemaError, "arrow_map must be an object");
  }
  for (const auto& [id, value] : am.items()) {
    if (!value.is_array() || value.size() < 2) {
      fail(ErrorCode::SchemaError,
           "curve of arrow '" + id + "' needs at least 2 samples");
    }
    std::vector<Point3> pts;
    pts.reserve(value.size());
    for (const json& p : value) {
      pts.push_back(point_from_json(p, "curve of arrow '" + id + "'"));
    }
    g.arrow_map.emplace(id, SampledCurve(std::move(pts)));
  }
}

json parse_document(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorCode::ParseError, e.what());
  }
}

}  // namespace braidsong::detail
