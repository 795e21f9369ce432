#pragma once

#include <string>

#include <json.hpp>

#include "inscribed/geometry.hpp"

namespace insc::io {

nlohmann::json to_json(const VertexPolytope& p);
VertexPolytope polytope_from_json(const nlohmann::json& j);

nlohmann::json to_json(const OrientedComplex& c);

VertexPolytope read_polytope(const std::string& path);
void write_json(const std::string& path, const nlohmann::json& j);

}  // namespace insc::io
