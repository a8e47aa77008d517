#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "gpbc/errors.hpp"
#include "gpbc/graph.hpp"
#include "gpbc/rational.hpp"

namespace gpbc {

inline constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();

namespace detail {

// Geodesic counts are either BigInt or an unsigned integer whose overflow is
// reported instead of wrapping.
template <class Count>
void add_count(Count& acc, const Count& x) {
  if constexpr (std::unsigned_integral<Count>) {
    if (__builtin_add_overflow(acc, x, &acc)) {
      throw OverflowError("geodesic count exceeds " + std::to_string(sizeof(Count) * 8) +
                          "-bit width; use BigInt counts");
    }
  } else {
    acc += x;
  }
}

template <class Count>
Count mul_count(const Count& a, const Count& b) {
  if constexpr (std::unsigned_integral<Count>) {
    Count out{};
    if (__builtin_mul_overflow(a, b, &out)) {
      throw OverflowError("geodesic count product exceeds " +
                          std::to_string(sizeof(Count) * 8) + "-bit width");
    }
    return out;
  } else {
    return a * b;
  }
}

template <class Count>
BigInt to_big(const Count& c) {
  if constexpr (std::unsigned_integral<Count>) {
    return BigInt(static_cast<std::uint64_t>(c));
  } else {
    return BigInt(c);
  }
}

}  // namespace detail

// Single-source BFS result: distances, geodesic counts and the predecessor DAG.
template <class Count = BigInt>
struct ShortestPathData {
  VertexIndex source = 0;
  std::vector<std::size_t> dist;              // kUnreachable when no path
  std::vector<Count> sigma;                   // 0 when unreachable
  std::vector<std::vector<VertexIndex>> preds;
  std::vector<VertexIndex> order;             // reached vertices, nondecreasing dist

  bool reachable(VertexIndex v) const { return dist[v] != kUnreachable; }

  // sigma(t) = sum of sigma over preds(t), each pred one level closer.
  bool predecessor_sums_hold() const {
    if (dist[source] != 0 || sigma[source] != Count(1) || !preds[source].empty()) return false;
    for (VertexIndex t : order) {
      if (t == source) continue;
      Count total{};
      for (VertexIndex p : preds[t]) {
        if (dist[p] + 1 != dist[t]) return false;
        detail::add_count(total, sigma[p]);
      }
      if (total != sigma[t]) return false;
    }
    return true;
  }
};

template <class Count = BigInt, UndirectedGraph G>
ShortestPathData<Count> bfs_dag(const G& g, VertexIndex s) {
  const std::size_t nv = g.vertex_count();
  if (s >= nv) throw InvalidParameters("source vertex out of range");
  ShortestPathData<Count> out;
  out.source = s;
  out.dist.assign(nv, kUnreachable);
  out.sigma.assign(nv, Count{});
  out.preds.assign(nv, {});
  out.order.reserve(nv);
  out.dist[s] = 0;
  out.sigma[s] = Count(1);
  out.order.push_back(s);
  for (std::size_t head = 0; head < out.order.size(); ++head) {
    const VertexIndex v = out.order[head];
    for (VertexIndex w : g.neighbors(v)) {
      if (out.dist[w] == kUnreachable) {
        out.dist[w] = out.dist[v] + 1;
        out.order.push_back(w);
      }
      if (out.dist[w] == out.dist[v] + 1) {
        detail::add_count(out.sigma[w], out.sigma[v]);
        out.preds[w].push_back(v);
      }
    }
  }
  return out;
}

template <UndirectedGraph G>
std::size_t distance(const G& g, VertexIndex s, VertexIndex t) {
  if (t >= g.vertex_count()) throw InvalidParameters("target vertex out of range");
  const auto d = bfs_dag<std::uint64_t>(g, s).dist[t];
  if (d == kUnreachable) throw DisconnectedError("no path between the given vertices");
  return d;
}

// Number of s-t geodesics; sigma(s,s) = 1 (the empty path).
template <class Count = BigInt, UndirectedGraph G>
Count sigma(const G& g, VertexIndex s, VertexIndex t) {
  if (t >= g.vertex_count()) throw InvalidParameters("target vertex out of range");
  return bfs_dag<Count>(g, s).sigma[t];
}

// Number of s-t geodesics with x as an internal vertex.
template <class Count = BigInt, UndirectedGraph G>
Count sigma_through(const G& g, VertexIndex s, VertexIndex t, VertexIndex x) {
  if (x == s || x == t) throw EndpointError("sigma_through: x must not be an endpoint");
  if (t >= g.vertex_count() || x >= g.vertex_count()) {
    throw InvalidParameters("vertex out of range");
  }
  const auto from_s = bfs_dag<Count>(g, s);
  const auto from_x = bfs_dag<Count>(g, x);
  if (!from_s.reachable(t) || !from_s.reachable(x) || !from_x.reachable(t)) return Count{};
  if (from_s.dist[x] + from_x.dist[t] != from_s.dist[t]) return Count{};
  return detail::mul_count(from_s.sigma[x], from_x.sigma[t]);
}

template <UndirectedGraph G>
std::size_t diameter(const G& g) {
  std::size_t best = 0;
  for (VertexIndex s = 0; s < g.vertex_count(); ++s) {
    const auto sp = bfs_dag<std::uint64_t>(g, s);
    if (sp.order.size() != g.vertex_count()) throw DisconnectedError("diameter of a disconnected graph");
    best = std::max(best, sp.dist[sp.order.back()]);
  }
  return best;
}

/*
 * All s-t geodesics as vertex sequences (s first, t last), sorted
 * lexicographically. Throws LimitExceeded when more than `limit` exist, before
 * building any of them. s == t yields the single one-vertex path.
 */
template <UndirectedGraph G>
std::vector<std::vector<VertexIndex>> enumerate_geodesics(const G& g, VertexIndex s,
                                                          VertexIndex t, std::size_t limit) {
  if (limit == 0) throw InvalidParameters("limit must be positive");
  if (t >= g.vertex_count()) throw InvalidParameters("target vertex out of range");
  const auto sp = bfs_dag<BigInt>(g, s);
  if (!sp.reachable(t)) return {};
  if (sp.sigma[t] > limit) {
    throw LimitExceeded(sp.sigma[t].str() + " geodesics exceed limit " + std::to_string(limit));
  }
  std::vector<std::vector<VertexIndex>> paths;
  std::vector<VertexIndex> stack{t};
  // Depth-first walk back along predecessor lists; each leaf at s is a path.
  auto walk = [&](auto&& self, VertexIndex v) -> void {
    if (v == s) {
      paths.emplace_back(stack.rbegin(), stack.rend());
      return;
    }
    for (VertexIndex p : sp.preds[v]) {
      stack.push_back(p);
      self(self, p);
      stack.pop_back();
    }
  };
  walk(walk, t);
  std::sort(paths.begin(), paths.end());
  return paths;
}

/*
 * Distance and geodesic-count tables for every ordered vertex pair, from one
 * BFS per source. The pair-dependency routines here are the direct
 * sigma_st(x)/sigma_st definition and never go through Brandes accumulation.
 */
template <class Count = BigInt>
class AllPairsGeodesics {
 public:
  template <UndirectedGraph G>
  explicit AllPairsGeodesics(const G& g) : nv_(g.vertex_count()) {
    dist_.resize(nv_ * nv_);
    sigma_.resize(nv_ * nv_);
    for (VertexIndex s = 0; s < nv_; ++s) {
      auto sp = bfs_dag<Count>(g, s);
      std::copy(sp.dist.begin(), sp.dist.end(), dist_.begin() + s * nv_);
      std::move(sp.sigma.begin(), sp.sigma.end(), sigma_.begin() + s * nv_);
    }
  }

  std::size_t vertex_count() const { return nv_; }
  std::size_t dist(VertexIndex s, VertexIndex t) const { return dist_[s * nv_ + t]; }
  const Count& sigma(VertexIndex s, VertexIndex t) const { return sigma_[s * nv_ + t]; }

  bool on_geodesic(VertexIndex s, VertexIndex t, VertexIndex x) const {
    const auto dst = dist(s, t);
    const auto dsx = dist(s, x);
    const auto dxt = dist(x, t);
    return dst != kUnreachable && dsx != kUnreachable && dxt != kUnreachable &&
           dsx + dxt == dst;
  }

  Count sigma_through(VertexIndex s, VertexIndex t, VertexIndex x) const {
    if (x == s || x == t) throw EndpointError("sigma_through: x must not be an endpoint");
    if (!on_geodesic(s, t, x)) return Count{};
    return detail::mul_count(sigma(s, x), sigma(x, t));
  }

  // delta(s,t,x) = sigma_st(x) / sigma_st; 0 for unreachable pairs and when
  // x is an endpoint.
  Rational pair_dependency(VertexIndex s, VertexIndex t, VertexIndex x) const {
    if (x == s || x == t || s == t || !on_geodesic(s, t, x)) return Rational{};
    return Rational(detail::to_big(sigma(s, x)) * detail::to_big(sigma(x, t)),
                    detail::to_big(sigma(s, t)));
  }

 private:
  std::size_t nv_;
  std::vector<std::size_t> dist_;
  std::vector<Count> sigma_;
};

}  // namespace gpbc
