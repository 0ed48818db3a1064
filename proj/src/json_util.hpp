#pragma once

// Internal helpers shared by the document persistence code. Not part of the
// public headers.

#include <string>

#include "braidsong/errors.hpp"
#include "braidsong/skeleton.hpp"
#include "json.hpp"

namespace braidsong::detail {

using nlohmann::json;

json point_to_json(const Point3& p);
double finite_number(const json& j, const std::string& where);
Point3 point_from_json(const json& j, const std::string& where);

// Field access that reports the missing field by name.
const json& member(const json& j, const char* key, const std::string& where);

json skeleton_to_json(const Skeleton& s);
Skeleton skeleton_from_json(const json& j);

// The body of a gesture: the `vertex_map` and `arrow_map` members of
// `holder`. write_body sets them, read_body fills an existing Gesture whose
// skeleton is already in place.
void write_body(json& holder, const Gesture& g);
void read_body(const json& holder, Gesture& g);

json parse_document(const std::string& text);

}  // namespace braidsong::detail
