#include "inscribed/io.hpp"

#include <fstream>
#include <stdexcept>

namespace insc::io {

using nlohmann::json;

json to_json(const VertexPolytope& p) {
  json verts = json::array();
  for (const Vec& v : p.vertices) {
    json row = json::array();
    for (int i = 0; i < v.size(); ++i) row.push_back(v(i));
    verts.push_back(std::move(row));
  }
  return json{{"dim", p.dim}, {"vertices", std::move(verts)}};
}

VertexPolytope polytope_from_json(const json& j) {
  if (!j.contains("dim") || !j.contains("vertices"))
    throw std::invalid_argument("polytope JSON needs 'dim' and 'vertices'");
  VertexPolytope p;
  p.dim = j.at("dim").get<int>();
  for (const auto& row : j.at("vertices")) {
    if (static_cast<int>(row.size()) != p.dim)
      throw std::invalid_argument("vertex length does not match 'dim'");
    Vec v(p.dim);
    for (int i = 0; i < p.dim; ++i) v(i) = row.at(i).get<double>();
    p.vertices.push_back(std::move(v));
  }
  return p;
}

json to_json(const OrientedComplex& c) {
  json facets = json::array();
  for (const auto& f : c.facets) facets.push_back(f);
  return json{{"facets", std::move(facets)}};
}

VertexPolytope read_polytope(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  json j;
  in >> j;
  return polytope_from_json(j);
}

void write_json(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << j.dump(2) << "\n";
}

}  // namespace insc::io
