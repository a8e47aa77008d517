#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gpbc/errors.hpp"

namespace gpbc {

using VertexIndex = std::size_t;

// Anything the shortest-path and centrality algorithms can walk: vertices are
// 0..vertex_count()-1 and neighbors() lists each undirected edge from both ends.
template <class G>
concept UndirectedGraph = requires(const G& g, VertexIndex v) {
  { g.vertex_count() } -> std::convertible_to<std::size_t>;
  { g.neighbors(v) } -> std::convertible_to<std::span<const VertexIndex>>;
};

// Simple undirected graph from an edge list. Used for fixture families and
// induced subgraphs; Petersen graphs have their own type.
class AdjacencyGraph {
 public:
  AdjacencyGraph() = default;

  explicit AdjacencyGraph(std::size_t vertex_count) : adj_(vertex_count) {}

  AdjacencyGraph(std::size_t vertex_count,
                 const std::vector<std::pair<VertexIndex, VertexIndex>>& edges)
      : adj_(vertex_count) {
    for (const auto& [a, b] : edges) add_edge(a, b);
  }

  void add_edge(VertexIndex a, VertexIndex b) {
    if (a >= adj_.size() || b >= adj_.size()) {
      throw InvalidParameters("edge endpoint out of range");
    }
    if (a == b) throw InvalidParameters("self-loop at vertex " + std::to_string(a));
    auto& la = adj_[a];
    auto pos = std::lower_bound(la.begin(), la.end(), b);
    if (pos != la.end() && *pos == b) {
      throw InvalidParameters("parallel edge " + std::to_string(a) + "-" + std::to_string(b));
    }
    la.insert(pos, b);
    auto& lb = adj_[b];
    lb.insert(std::lower_bound(lb.begin(), lb.end(), a), a);
    ++edge_count_;
  }

  std::size_t vertex_count() const { return adj_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  std::span<const VertexIndex> neighbors(VertexIndex v) const { return adj_.at(v); }

 private:
  std::vector<std::vector<VertexIndex>> adj_;
  std::size_t edge_count_ = 0;
};

// Subgraph of `g` induced on `members` (any order, duplicates rejected).
// Vertex i of the result is members_sorted[i]; the mapping is returned too.
template <UndirectedGraph G>
std::pair<AdjacencyGraph, std::vector<VertexIndex>> induced_subgraph(
    const G& g, std::vector<VertexIndex> members) {
  std::sort(members.begin(), members.end());
  if (std::adjacent_find(members.begin(), members.end()) != members.end()) {
    throw InvalidParameters("duplicate vertex in subgraph member list");
  }
  constexpr auto kAbsent = static_cast<VertexIndex>(-1);
  std::vector<VertexIndex> local(g.vertex_count(), kAbsent);
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (members[i] >= g.vertex_count()) throw MembershipError("subgraph vertex out of range");
    local[members[i]] = i;
  }
  AdjacencyGraph sub(members.size());
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (VertexIndex w : g.neighbors(members[i])) {
      if (local[w] != kAbsent && local[w] > i) sub.add_edge(i, local[w]);
    }
  }
  return {std::move(sub), std::move(members)};
}

template <UndirectedGraph G>
std::size_t edge_count(const G& g) {
  std::size_t twice = 0;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) twice += g.neighbors(v).size();
  return twice / 2;
}

}  // namespace gpbc
