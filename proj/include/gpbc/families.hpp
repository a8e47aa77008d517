#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "gpbc/graph.hpp"

// Classic graph families used as fixtures for the centrality routines.
namespace gpbc::families {

// x_1..x_n as vertices 0..n-1.
inline AdjacencyGraph path(std::size_t n) {
  AdjacencyGraph g(n);
  for (std::size_t i = 1; i < n; ++i) g.add_edge(i - 1, i);
  return g;
}

inline AdjacencyGraph cycle(std::size_t n) {
  if (n < 3) throw InvalidParameters("cycle needs n >= 3");
  AdjacencyGraph g = path(n);
  g.add_edge(n - 1, 0);
  return g;
}

// n vertices in total; vertex 0 is the hub.
inline AdjacencyGraph star(std::size_t n) {
  if (n < 2) throw InvalidParameters("star needs n >= 2");
  AdjacencyGraph g(n);
  for (std::size_t i = 1; i < n; ++i) g.add_edge(0, i);
  return g;
}

// n vertices in total: hub 0 and the rim cycle 1..n-1.
inline AdjacencyGraph wheel(std::size_t n) {
  if (n < 4) throw InvalidParameters("wheel needs n >= 4");
  AdjacencyGraph g = star(n);
  for (std::size_t i = 1; i + 1 < n; ++i) g.add_edge(i, i + 1);
  g.add_edge(n - 1, 1);
  return g;
}

inline AdjacencyGraph complete(std::size_t n) {
  AdjacencyGraph g(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) g.add_edge(a, b);
  }
  return g;
}

inline AdjacencyGraph grid(std::size_t rows, std::size_t cols) {
  AdjacencyGraph g(rows * cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      const std::size_t v = r * cols + c;
      if (c + 1 < cols) g.add_edge(v, v + 1);
      if (r + 1 < rows) g.add_edge(v, v + cols);
    }
  }
  return g;
}

// G(n, p) with a fixed seed. Edges are drawn in a fixed pair order, so the
// result is a pure function of (n, p_percent, seed).
inline AdjacencyGraph seeded_random(std::size_t n, unsigned p_percent, std::uint32_t seed) {
  std::mt19937 rng(seed);
  AdjacencyGraph g(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (rng() % 100 < p_percent) g.add_edge(a, b);
    }
  }
  return g;
}

struct NamedGraph {
  std::string name;
  AdjacencyGraph graph;
};

// Twenty small deterministic graphs of varied shape, including disconnected
// ones, for cross-checking centrality implementations.
inline std::vector<NamedGraph> small_fixtures() {
  std::vector<NamedGraph> out;
  out.push_back({"path7", path(7)});
  out.push_back({"path2", path(2)});
  out.push_back({"cycle6", cycle(6)});
  out.push_back({"cycle9", cycle(9)});
  out.push_back({"star6", star(6)});
  out.push_back({"wheel7", wheel(7)});
  out.push_back({"wheel10", wheel(10)});
  out.push_back({"complete5", complete(5)});
  out.push_back({"grid3x4", grid(3, 4)});
  out.push_back({"grid4x4", grid(4, 4)});
  {
    AdjacencyGraph barbell(8);
    for (std::size_t a = 0; a < 4; ++a) {
      for (std::size_t b = a + 1; b < 4; ++b) {
        barbell.add_edge(a, b);
        barbell.add_edge(a + 4, b + 4);
      }
    }
    barbell.add_edge(3, 4);
    out.push_back({"barbell4", std::move(barbell)});
  }
  {
    AdjacencyGraph tree(10, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}, {2, 6}, {3, 7}, {6, 8}, {8, 9}});
    out.push_back({"tree10", std::move(tree)});
  }
  {
    AdjacencyGraph two_parts(7, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 6}});
    out.push_back({"disconnected7", std::move(two_parts)});
  }
  {
    // Complete bipartite K_{3,4}.
    AdjacencyGraph kb(7);
    for (std::size_t a = 0; a < 3; ++a) {
      for (std::size_t b = 3; b < 7; ++b) kb.add_edge(a, b);
    }
    out.push_back({"k3_4", std::move(kb)});
  }
  {
    // 3-cube.
    AdjacencyGraph cube(8);
    for (std::size_t v = 0; v < 8; ++v) {
      for (std::size_t bit = 1; bit < 8; bit <<= 1) {
        if ((v & bit) == 0) cube.add_edge(v, v | bit);
      }
    }
    out.push_back({"cube3", std::move(cube)});
  }
  out.push_back({"random9_30", seeded_random(9, 30, 1)});
  out.push_back({"random10_40", seeded_random(10, 40, 2)});
  out.push_back({"random11_25", seeded_random(11, 25, 3)});
  out.push_back({"random12_35", seeded_random(12, 35, 4)});
  out.push_back({"random8_60", seeded_random(8, 60, 5)});
  return out;
}

}  // namespace gpbc::families
