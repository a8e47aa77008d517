#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "gpbc/petersen.hpp"

namespace gpbc {

enum class GraphFormat { Dot, Json, EdgeListCsv };

// Every undirected edge once as (low, high) by canonical vertex order,
// sorted lexicographically on that pair.
inline std::vector<std::pair<VertexIndex, VertexIndex>> canonical_edges(const GpGraph& g) {
  std::vector<std::pair<VertexIndex, VertexIndex>> edges;
  edges.reserve(g.edge_count());
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    for (VertexIndex w : g.neighbors(v)) {
      if (v < w) edges.emplace_back(v, w);
    }
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

inline std::string export_dot(const GpGraph& g) {
  std::string out = "graph gp {\n";
  for (const auto& [a, b] : canonical_edges(g)) {
    out += "  " + g.label(a) + " -- " + g.label(b) + ";\n";
  }
  out += "}\n";
  return out;
}

inline std::string export_csv(const GpGraph& g) {
  std::string out = "source,target\n";
  for (const auto& [a, b] : canonical_edges(g)) out += g.label(a) + "," + g.label(b) + "\n";
  return out;
}

inline nlohmann::ordered_json graph_to_json(const GpGraph& g) {
  nlohmann::ordered_json doc;
  doc["n"] = g.n();
  doc["k"] = g.k();
  auto vertices = nlohmann::ordered_json::array();
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) vertices.push_back(g.label(v));
  doc["vertices"] = std::move(vertices);
  auto edges = nlohmann::ordered_json::array();
  for (const auto& [a, b] : canonical_edges(g)) edges.push_back({g.label(a), g.label(b)});
  doc["edges"] = std::move(edges);
  return doc;
}

inline std::string export_json(const GpGraph& g) { return graph_to_json(g).dump() + "\n"; }

inline std::string export_graph(const GpGraph& g, GraphFormat format) {
  switch (format) {
    case GraphFormat::Dot:
      return export_dot(g);
    case GraphFormat::Json:
      return export_json(g);
    case GraphFormat::EdgeListCsv:
      return export_csv(g);
  }
  return {};
}

}  // namespace gpbc
