#pragma once

// GraphDocument: the serializable form of a computed graph, with JSON
// round-tripping, DOT output (parabolic = filled circle, elliptic =
// unfilled, weight-2 edges doubled) and a short text rendering.

#include <string>
#include <vector>

#include <json.hpp>

#include "xigraph/modgraph.hpp"
#include "xigraph/xicore.hpp"

namespace xigraph {

struct GraphDocument {
  uint32_t level = 0;
  std::string family;            // family tag or "custom"
  nlohmann::json custom_spec;    // echo of a custom group file, if any
  nlohmann::json conjugation;    // "std" | "inv" | [[a,b],[c,d]]
  struct DocVertex {
    int id;
    std::string kind;  // "parabolic" | "elliptic"
    std::string label;
  };
  struct DocEdge {
    int id;
    int u, v;
    int weight;
  };
  std::vector<DocVertex> vertices;
  std::vector<DocEdge> edges;
  std::vector<std::vector<int>> components;  // vertex ids in cyclic order
  std::vector<std::string> edge_types;       // per edge: T1a/T1b/T2, may be empty

  bool operator==(const GraphDocument& o) const {
    if (level != o.level || family != o.family || custom_spec != o.custom_spec ||
        conjugation != o.conjugation || edge_types != o.edge_types ||
        components != o.components || vertices.size() != o.vertices.size() ||
        edges.size() != o.edges.size())
      return false;
    for (size_t i = 0; i < vertices.size(); ++i) {
      const auto& a = vertices[i];
      const auto& b = o.vertices[i];
      if (a.id != b.id || a.kind != b.kind || a.label != b.label) return false;
    }
    for (size_t i = 0; i < edges.size(); ++i) {
      const auto& a = edges[i];
      const auto& b = o.edges[i];
      if (a.id != b.id || a.u != b.u || a.v != b.v || a.weight != b.weight) return false;
    }
    return true;
  }
};

inline GraphDocument make_document(const ModularGraph& g, uint32_t level,
                                   const std::string& family, nlohmann::json conjugation,
                                   nlohmann::json custom_spec = nullptr) {
  GraphDocument doc;
  doc.level = level;
  doc.family = family;
  doc.conjugation = std::move(conjugation);
  doc.custom_spec = std::move(custom_spec);
  for (size_t v = 0; v < g.vertices.size(); ++v)
    doc.vertices.push_back({int(v),
                            g.vertices[v].kind == VertexKind::parabolic ? "parabolic" : "elliptic",
                            g.vertices[v].label});
  for (int e = 0; e < g.edge_count(); ++e)
    doc.edges.push_back({e, g.source(2 * e), g.source(2 * e + 1), g.weight_of_edge(e)});
  for (const Cycle& c : detail::decompose_cycles(g)) {
    std::vector<int> comp;
    for (int d : c.darts) comp.push_back(g.source(d));
    doc.components.push_back(std::move(comp));
  }
  try {
    for (EdgeType t : classify_edges(g)) doc.edge_types.push_back(edge_type_name(t));
  } catch (const std::invalid_argument&) {
    doc.edge_types.clear();  // not a real-congruence shape; leave untyped
  }
  return doc;
}

inline nlohmann::json to_json(const GraphDocument& doc) {
  nlohmann::json j;
  j["level"] = doc.level;
  j["family"] = doc.family;
  if (!doc.custom_spec.is_null()) j["custom"] = doc.custom_spec;
  j["conjugation"] = doc.conjugation;
  j["vertices"] = nlohmann::json::array();
  for (const auto& v : doc.vertices)
    j["vertices"].push_back({{"id", v.id}, {"kind", v.kind}, {"label", v.label}});
  j["edges"] = nlohmann::json::array();
  for (const auto& e : doc.edges)
    j["edges"].push_back(
        {{"id", e.id}, {"endpoints", {e.u, e.v}}, {"weight", e.weight}});
  j["components"] = doc.components;
  if (!doc.edge_types.empty()) {
    nlohmann::json et = nlohmann::json::object();
    for (size_t e = 0; e < doc.edge_types.size(); ++e) et[std::to_string(e)] = doc.edge_types[e];
    j["edge_types"] = et;
  }
  return j;
}

inline GraphDocument from_json(const nlohmann::json& j) {
  GraphDocument doc;
  doc.level = j.at("level").get<uint32_t>();
  doc.family = j.at("family").get<std::string>();
  doc.custom_spec = j.contains("custom") ? j.at("custom") : nlohmann::json(nullptr);
  doc.conjugation = j.at("conjugation");
  for (const auto& v : j.at("vertices"))
    doc.vertices.push_back({v.at("id").get<int>(), v.at("kind").get<std::string>(),
                            v.at("label").get<std::string>()});
  for (const auto& e : j.at("edges"))
    doc.edges.push_back({e.at("id").get<int>(), e.at("endpoints")[0].get<int>(),
                         e.at("endpoints")[1].get<int>(), e.at("weight").get<int>()});
  doc.components = j.at("components").get<std::vector<std::vector<int>>>();
  if (j.contains("edge_types")) {
    doc.edge_types.resize(doc.edges.size());
    for (const auto& [k, v] : j.at("edge_types").items())
      doc.edge_types[std::stoul(k)] = v.get<std::string>();
  }
  return doc;
}

// DOT: parabolic vertices as filled circles, elliptic as unfilled circles,
// weight-2 edges drawn as double lines.
inline std::string to_dot(const GraphDocument& doc, const std::string& name = "xi") {
  std::string out = "graph " + name + " {\n";
  out += "  node [shape=circle, fontsize=10];\n";
  for (const auto& v : doc.vertices) {
    out += "  v" + std::to_string(v.id) + " [label=\"" + v.label + "\"";
    if (v.kind == "parabolic") out += ", style=filled, fillcolor=black, fontcolor=white";
    out += "];\n";
  }
  for (const auto& e : doc.edges) {
    out += "  v" + std::to_string(e.u) + " -- v" + std::to_string(e.v);
    if (e.weight == 2) out += " [color=\"black:invis:black\"]";
    out += ";\n";
  }
  out += "}\n";
  return out;
}

inline std::string to_text(const GraphDocument& doc) {
  std::string out = std::to_string(doc.components.size()) + " component" +
                    (doc.components.size() == 1 ? "" : "s") + "\n";
  // Re-derive the edge sequence from the stored cyclic vertex order by
  // matching consecutive vertices to unused edges.
  std::vector<char> used(doc.edges.size(), 0);
  for (size_t ci = 0; ci < doc.components.size(); ++ci) {
    const auto& comp = doc.components[ci];
    std::string kinds, weights;
    for (size_t i = 0; i < comp.size(); ++i) {
      int u = comp[i], v = comp[(i + 1) % comp.size()];
      kinds += doc.vertices[u].kind == "parabolic" ? "P" : "E";
      if (i + 1 < comp.size()) kinds += "-";
      for (size_t e = 0; e < doc.edges.size(); ++e) {
        if (used[e]) continue;
        if ((doc.edges[e].u == u && doc.edges[e].v == v) ||
            (doc.edges[e].u == v && doc.edges[e].v == u)) {
          used[e] = 1;
          if (!weights.empty()) weights += ",";
          weights += std::to_string(doc.edges[e].weight);
          break;
        }
      }
    }
    out += "component " + std::to_string(ci + 1) + ": cycle " + kinds + ", weights " + weights +
           "\n";
  }
  return out;
}

}  // namespace xigraph
