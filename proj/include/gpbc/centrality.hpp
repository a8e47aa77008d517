#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "gpbc/errors.hpp"
#include "gpbc/geodesics.hpp"
#include "gpbc/graph.hpp"
#include "gpbc/json_io.hpp"
#include "gpbc/petersen.hpp"
#include "gpbc/rational.hpp"

namespace gpbc {

/*
 * Dependency of source s on every vertex: dep[v] = sum over targets t of
 * sigma_st(v)/sigma_st. Brandes' recurrence over the BFS DAG, in exact
 * rationals:
 *
 *     dep[p] += sigma[p]/sigma[w] * (1 + dep[w])   for p in preds(w)
 *
 * processing w in order of decreasing distance.
 */
template <UndirectedGraph G>
std::vector<Rational> source_dependencies(const G& g, VertexIndex s) {
  const auto sp = bfs_dag<BigInt>(g, s);
  std::vector<Rational> dep(g.vertex_count());
  for (auto it = sp.order.rbegin(); it != sp.order.rend(); ++it) {
    const VertexIndex w = *it;
    const Rational carry = dep[w] + Rational(1);
    for (VertexIndex p : sp.preds[w]) {
      dep[p] += Rational(sp.sigma[p], sp.sigma[w]) * carry;
    }
  }
  dep[s] = Rational{};
  return dep;
}

// Unnormalized betweenness over unordered pairs: half the sum of all
// single-source dependencies.
template <UndirectedGraph G>
std::vector<Rational> brandes_betweenness(const G& g) {
  std::vector<Rational> total(g.vertex_count());
  for (VertexIndex s = 0; s < g.vertex_count(); ++s) {
    auto dep = source_dependencies(g, s);
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) total[v] += dep[v];
  }
  const Rational half(1, 2);
  for (auto& value : total) value *= half;
  return total;
}

// Reference triple loop: sum of sigma_st(x)/sigma_st over unordered {s,t}.
template <class Count>
std::vector<Rational> naive_betweenness(const AllPairsGeodesics<Count>& ap) {
  const std::size_t nv = ap.vertex_count();
  std::vector<Rational> out(nv);
  for (VertexIndex x = 0; x < nv; ++x) {
    for (VertexIndex s = 0; s < nv; ++s) {
      if (s == x) continue;
      for (VertexIndex t = s + 1; t < nv; ++t) {
        if (t == x || !ap.on_geodesic(s, t, x)) continue;
        out[x] += Rational(detail::to_big(ap.sigma_through(s, t, x)), detail::to_big(ap.sigma(s, t)));
      }
    }
  }
  return out;
}

template <UndirectedGraph G>
std::vector<Rational> naive_betweenness(const G& g) {
  return naive_betweenness(AllPairsGeodesics<BigInt>(g));
}

namespace detail {

inline std::vector<VertexIndex> as_set(std::span<const VertexIndex> members, std::size_t nv) {
  std::vector<VertexIndex> out(members.begin(), members.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (!out.empty() && out.back() >= nv) throw MembershipError("vertex set member out of range");
  return out;
}

inline void require_disjoint(const std::vector<VertexIndex>& a, const std::vector<VertexIndex>& b) {
  std::vector<VertexIndex> common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
  if (!common.empty()) {
    throw OverlapError("vertex sets overlap (e.g. vertex " + std::to_string(common.front()) + ")");
  }
}

}  // namespace detail

// B(x,S): pair dependencies on x over unordered pairs inside S \ {x}.
// Geodesics are those of the whole graph.
template <class Count>
Rational induced_by_set(const AllPairsGeodesics<Count>& ap, VertexIndex x,
                        std::span<const VertexIndex> set) {
  const auto members = detail::as_set(set, ap.vertex_count());
  Rational total;
  for (std::size_t a = 0; a < members.size(); ++a) {
    if (members[a] == x) continue;
    for (std::size_t b = a + 1; b < members.size(); ++b) {
      if (members[b] == x) continue;
      total += ap.pair_dependency(members[a], members[b], x);
    }
  }
  return total;
}

// B(x,x0): dependency of the single source x0 on x, targets V \ {x, x0}.
template <class Count>
Rational induced_by_vertex(const AllPairsGeodesics<Count>& ap, VertexIndex x, VertexIndex x0) {
  if (x == x0) throw SameVertexError("induced_by_vertex: x and x0 must differ");
  Rational total;
  for (VertexIndex t = 0; t < ap.vertex_count(); ++t) {
    if (t == x || t == x0) continue;
    total += ap.pair_dependency(x0, t, x);
  }
  return total;
}

// B(x,S|T): pairs with one end in S and the other in T; x itself is skipped.
template <class Count>
Rational induced_between_sets(const AllPairsGeodesics<Count>& ap, VertexIndex x,
                              std::span<const VertexIndex> s_set,
                              std::span<const VertexIndex> t_set) {
  const auto s_members = detail::as_set(s_set, ap.vertex_count());
  const auto t_members = detail::as_set(t_set, ap.vertex_count());
  detail::require_disjoint(s_members, t_members);
  Rational total;
  for (VertexIndex s : s_members) {
    if (s == x) continue;
    for (VertexIndex t : t_members) {
      if (t == x) continue;
      total += ap.pair_dependency(s, t, x);
    }
  }
  return total;
}

// B(x,S,T) = B(x,S) + B(x,T) for disjoint S, T.
template <class Count>
Rational induced_sum(const AllPairsGeodesics<Count>& ap, VertexIndex x,
                     std::span<const VertexIndex> s_set, std::span<const VertexIndex> t_set) {
  detail::require_disjoint(detail::as_set(s_set, ap.vertex_count()),
                           detail::as_set(t_set, ap.vertex_count()));
  return induced_by_set(ap, x, s_set) + induced_by_set(ap, x, t_set);
}

// Graph-taking conveniences; each builds the all-pairs tables once.
template <UndirectedGraph G>
Rational induced_by_set(const G& g, VertexIndex x, std::span<const VertexIndex> set) {
  return induced_by_set(AllPairsGeodesics<BigInt>(g), x, set);
}
template <UndirectedGraph G>
Rational induced_by_vertex(const G& g, VertexIndex x, VertexIndex x0) {
  return induced_by_vertex(AllPairsGeodesics<BigInt>(g), x, x0);
}
template <UndirectedGraph G>
Rational induced_between_sets(const G& g, VertexIndex x, std::span<const VertexIndex> s_set,
                              std::span<const VertexIndex> t_set) {
  return induced_between_sets(AllPairsGeodesics<BigInt>(g), x, s_set, t_set);
}
template <UndirectedGraph G>
Rational induced_sum(const G& g, VertexIndex x, std::span<const VertexIndex> s_set,
                     std::span<const VertexIndex> t_set) {
  return induced_sum(AllPairsGeodesics<BigInt>(g), x, s_set, t_set);
}

// B_H(x) with geodesics confined to the subgraph induced on H. Pairs that are
// disconnected inside H contribute nothing.
template <UndirectedGraph G>
Rational subgraph_betweenness(const G& g, std::span<const VertexIndex> h_set, VertexIndex x) {
  auto members = detail::as_set(h_set, g.vertex_count());
  const auto pos = std::lower_bound(members.begin(), members.end(), x);
  if (pos == members.end() || *pos != x) throw MembershipError("subgraph_betweenness: x not in H");
  const auto local_x = static_cast<VertexIndex>(pos - members.begin());
  auto [sub, mapping] = induced_subgraph(g, std::move(members));
  return brandes_betweenness(sub)[local_x];
}

// Betweenness of every vertex of a GP(n,k), indexed canonically.
struct CentralityMap {
  std::vector<Rational> values;
  std::size_t graph_n = 0;
  std::size_t graph_k = 0;

  const Rational& at(const VertexId& v) const {
    if (v.index >= graph_n) throw InvalidParameters("vertex index out of range");
    return values.at(v.ring == Ring::Outer ? v.index : graph_n + v.index);
  }
  Rational total() const {
    Rational sum;
    for (const auto& v : values) sum += v;
    return sum;
  }
};

inline CentralityMap betweenness(const GpGraph& g) {
  return CentralityMap{brandes_betweenness(g), g.n(), g.k()};
}

using LabelFn = std::function<std::string(VertexIndex)>;

// vertex,num,den,decimal with a header row; rows follow `values` order.
inline std::string centrality_csv(std::span<const Rational> values, const LabelFn& label) {
  std::string out = "vertex,num,den,decimal\n";
  for (VertexIndex v = 0; v < values.size(); ++v) {
    const auto& r = values[v];
    out += label(v) + "," + r.num().str() + "," + r.den().str() + "," + r.decimal() + "\n";
  }
  return out;
}

inline nlohmann::ordered_json centrality_json(std::span<const Rational> values, const LabelFn& label) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::object();
  for (VertexIndex v = 0; v < values.size(); ++v) doc[label(v)] = rational_to_json(values[v]);
  return doc;
}

inline std::string to_csv(const CentralityMap& m) {
  const auto n = m.graph_n;
  return centrality_csv(m.values, [n](VertexIndex v) {
    return to_label(v < n ? VertexId{Ring::Outer, v} : VertexId{Ring::Inner, v - n});
  });
}

inline std::string to_json(const CentralityMap& m) {
  const auto n = m.graph_n;
  return centrality_json(m.values,
                         [n](VertexIndex v) {
                           return to_label(v < n ? VertexId{Ring::Outer, v}
                                                 : VertexId{Ring::Inner, v - n});
                         })
             .dump() +
         "\n";
}

}  // namespace gpbc
