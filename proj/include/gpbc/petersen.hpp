#pragma once

#include <algorithm>
#include <array>
#include <charconv>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gpbc/errors.hpp"
#include "gpbc/graph.hpp"

namespace gpbc {

enum class Ring : std::uint8_t { Outer = 0, Inner = 1 };

// u_i (Outer) or v_i (Inner). Comparison gives the canonical order: all outer
// vertices by index, then all inner vertices by index.
struct VertexId {
  Ring ring = Ring::Outer;
  std::size_t index = 0;

  // Reduces `index` modulo n, so u_{-1} == u_{n-1}.
  static VertexId make(Ring ring, long long index, std::size_t n) {
    if (n == 0) throw InvalidParameters("vertex id needs n > 0");
    const auto m = static_cast<long long>(n);
    return VertexId{ring, static_cast<std::size_t>(((index % m) + m) % m)};
  }
  static VertexId outer(long long i, std::size_t n) { return make(Ring::Outer, i, n); }
  static VertexId inner(long long i, std::size_t n) { return make(Ring::Inner, i, n); }

  friend auto operator<=>(const VertexId&, const VertexId&) = default;
};

inline std::string to_label(const VertexId& v) {
  return (v.ring == Ring::Outer ? "u" : "v") + std::to_string(v.index);
}

// Parses "u<i>" / "v<i>"; negative indices are allowed and reduced mod n.
inline VertexId parse_label(std::string_view label, std::size_t n) {
  if (label.size() < 2 || (label[0] != 'u' && label[0] != 'v')) {
    throw ParseError("bad vertex label '" + std::string(label) + "' (expected u<i> or v<i>)");
  }
  long long index = 0;
  const char* first = label.data() + 1;
  const char* last = label.data() + label.size();
  auto [ptr, ec] = std::from_chars(first, last, index);
  if (ec != std::errc{} || ptr != last) {
    throw ParseError("bad vertex label '" + std::string(label) + "'");
  }
  return VertexId::make(label[0] == 'u' ? Ring::Outer : Ring::Inner, index, n);
}

// Throws InvalidParameters unless n >= 3 and 1 <= k < n/2.
inline void check_gp_parameters(std::size_t n, std::size_t k) {
  if (n < 3) throw InvalidParameters("require n >= 3 (got n=" + std::to_string(n) + ")");
  if (k == 0) throw InvalidParameters("require k >= 1");
  if (2 * k >= n) {
    throw InvalidParameters("require 2k < n (got n=" + std::to_string(n) +
                            ", k=" + std::to_string(k) + ")");
  }
}

struct CycleDecomposition {
  std::vector<std::vector<VertexId>> cycles;
};

/*
 * GP(n,k): outer cycle u_0..u_{n-1}, spokes u_i v_i, inner edges v_i v_{i+k}.
 *
 * Vertex index of u_i is i and of v_i is n+i, which matches the VertexId
 * canonical order. Each adjacency list holds exactly three neighbors sorted by
 * vertex index. Immutable once built.
 */
class GpGraph {
 public:
  GpGraph(std::size_t n, std::size_t k) : n_(n), k_(k) {
    check_gp_parameters(n, k);
    adj_.resize(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      adj_[i] = {(i + n - 1) % n, (i + 1) % n, n + i};
      adj_[n + i] = {i, n + (i + n - k) % n, n + (i + k) % n};
    }
    for (auto& list : adj_) std::sort(list.begin(), list.end());
  }

  std::size_t n() const { return n_; }
  std::size_t k() const { return k_; }
  std::size_t vertex_count() const { return 2 * n_; }
  std::size_t edge_count() const { return 3 * n_; }
  std::span<const VertexIndex> neighbors(VertexIndex v) const { return adj_.at(v); }

  VertexIndex index_of(const VertexId& v) const {
    if (v.index >= n_) throw InvalidParameters("vertex index out of range");
    return v.ring == Ring::Outer ? v.index : n_ + v.index;
  }
  VertexId vertex_at(VertexIndex idx) const {
    if (idx >= 2 * n_) throw InvalidParameters("vertex index out of range");
    return idx < n_ ? VertexId{Ring::Outer, idx} : VertexId{Ring::Inner, idx - n_};
  }
  std::string label(VertexIndex idx) const { return to_label(vertex_at(idx)); }

  std::vector<VertexIndex> outer_ring() const { return ring_indices(0); }
  std::vector<VertexIndex> inner_ring() const { return ring_indices(n_); }

  // Image of `v` under u_i -> u_{i+shift}, v_i -> v_{i+shift}.
  VertexIndex rotate(VertexIndex v, std::size_t shift) const {
    return v < n_ ? (v + shift) % n_ : n_ + (v - n_ + shift) % n_;
  }

 private:
  std::vector<VertexIndex> ring_indices(std::size_t offset) const {
    std::vector<VertexIndex> out(n_);
    std::iota(out.begin(), out.end(), offset);
    return out;
  }

  std::size_t n_;
  std::size_t k_;
  std::vector<std::array<VertexIndex, 3>> adj_;
};

inline GpGraph build_gp(std::size_t n, std::size_t k) { return GpGraph(n, k); }

// Walks inner edges v_s, v_{s+k}, ... from the smallest unvisited start.
// Yields gcd(n,k) cycles of length n/gcd(n,k).
inline CycleDecomposition inner_cycle_decomposition(const GpGraph& g) {
  const std::size_t n = g.n();
  CycleDecomposition out;
  std::vector<bool> seen(n, false);
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<VertexId> cycle;
    std::size_t i = start;
    do {
      seen[i] = true;
      cycle.push_back(VertexId{Ring::Inner, i});
      i = (i + g.k()) % n;
    } while (i != start);
    out.cycles.push_back(std::move(cycle));
  }
  return out;
}

// k^2 = +-1 (mod n), or the exceptional dodecahedron GP(10,2).
inline bool is_vertex_transitive(std::size_t n, std::size_t k) {
  check_gp_parameters(n, k);
  const std::size_t sq = (k * k) % n;
  return sq == 1 % n || sq == n - 1 || (n == 10 && k == 2);
}

}  // namespace gpbc
