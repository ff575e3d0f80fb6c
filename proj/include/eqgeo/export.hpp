#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "automorphisms.hpp"
#include "codes.hpp"
#include "geometry.hpp"
#include "johnson.hpp"
#include "qary.hpp"
#include "sets.hpp"

// JSON and DOT emitters. Point supports are serialized as 1-based coordinate
// lists; lines reference points by 0-based index into the points array.

namespace eqgeo {

inline nlohmann::json geometry_json(const Geometry& g) {
  nlohmann::json pts = nlohmann::json::array();
  for (int p = 0; p < g.num_points(); ++p) pts.push_back(mask_elems(g.support(p)));
  nlohmann::json lines = nlohmann::json::array();
  for (const auto& ln : g.lines()) lines.push_back({ln[0], ln[1], ln[2]});
  return {{"n", g.n()}, {"m", g.m()}, {"points", pts}, {"lines", lines}};
}

inline std::string geometry_dot(const Geometry& g) {
  std::string out = "graph collinearity {\n";
  for (int p = 0; p < g.num_points(); ++p)
    out += "  v" + std::to_string(p) + " [label=\"" + set_to_string(g.support(p)) + "\"];\n";
  for (int a = 0; a < g.num_points(); ++a)
    g.neighbors(a).for_each([&](int b) {
      if (b > a) out += "  v" + std::to_string(a) + " -- v" + std::to_string(b) + ";\n";
    });
  out += "}\n";
  return out;
}

inline nlohmann::json code_profile_json(const Code& c) {
  EquidistantProfile p = bonis_decompose(c);
  return {{"k", p.k}, {"s", p.s}, {"r", p.r}, {"t", p.t}, {"n", c.length()}};
}

inline nlohmann::json aut_decomposition_json(const AutDecomposition& d) {
  nlohmann::json j = {{"perm", d.perm}};
  j["exceptional"] = d.exceptional ? nlohmann::json(special_map_name(*d.exceptional))
                                   : nlohmann::json(nullptr);
  return j;
}

// group report; when a geometry is supplied the generators are classified
inline nlohmann::json aut_group_json(const AutGroup& gr, const Geometry* geom = nullptr) {
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : gr.generators) gens.push_back({{"point_images", g}});
  nlohmann::json j = {
      {"order", gr.order}, {"num_generators", gr.generators.size()}, {"generators", gens}};
  if (geom) {
    Classifier cls(*geom);
    nlohmann::json classification = nlohmann::json::array();
    for (const auto& g : gr.generators) classification.push_back(aut_decomposition_json(cls.classify(g)));
    j["classification"] = classification;
  }
  return j;
}

inline nlohmann::json johnson_json(const JohnsonGraph& jg) {
  return {{"n", jg.n()},
          {"t", jg.t()},
          {"i", jg.i()},
          {"num_vertices", jg.num_vertices()},
          {"degree", jg.degree()},
          {"connected", jg.connected()}};
}

inline std::string johnson_dot(const JohnsonGraph& jg) {
  std::string out = "graph johnson {\n";
  for (int v = 0; v < jg.num_vertices(); ++v)
    out += "  v" + std::to_string(v) + " [label=\"" + set_to_string(jg.vertices()[v]) + "\"];\n";
  for (int a = 0; a < jg.num_vertices(); ++a)
    jg.adjacency()[a].for_each([&](int b) {
      if (b > a) out += "  v" + std::to_string(a) + " -- v" + std::to_string(b) + ";\n";
    });
  out += "}\n";
  return out;
}

inline nlohmann::json qary_json(const QGeometry& g) {
  QConnectivity c = qary_connectivity_and_diameter(g);
  return {{"q", g.q()},          {"k", g.k()},
          {"n", g.n()},          {"t", g.t()},
          {"num_points", g.num_points()}, {"connected", c.connected},
          {"diameter", c.diameter}};
}

}  // namespace eqgeo
