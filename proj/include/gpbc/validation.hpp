#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <json.hpp>

#include "gpbc/centrality.hpp"
#include "gpbc/closed_forms.hpp"
#include "gpbc/errors.hpp"
#include "gpbc/families.hpp"
#include "gpbc/geodesics.hpp"
#include "gpbc/json_io.hpp"
#include "gpbc/petersen.hpp"
#include "gpbc/rational.hpp"

namespace gpbc::validation {

enum class Quantity {
  Sigma,
  Distance,
  Diameter,
  BetweennessOuter,
  BetweennessInner,
  LemmaComponent,
  ClassicInduced,
  // Identities that hold for every graph; a mismatch here is a bug.
  HalfSum,
  SumIdentity,
  OrbitEquality,
  Transitivity,
  Partition,
  BrandesNaive,
};

inline std::string to_string(Quantity q) {
  switch (q) {
    case Quantity::Sigma: return "Sigma";
    case Quantity::Distance: return "Distance";
    case Quantity::Diameter: return "Diameter";
    case Quantity::BetweennessOuter: return "BetweennessOuter";
    case Quantity::BetweennessInner: return "BetweennessInner";
    case Quantity::LemmaComponent: return "LemmaComponent";
    case Quantity::ClassicInduced: return "ClassicInduced";
    case Quantity::HalfSum: return "HalfSum";
    case Quantity::SumIdentity: return "SumIdentity";
    case Quantity::OrbitEquality: return "OrbitEquality";
    case Quantity::Transitivity: return "Transitivity";
    case Quantity::Partition: return "Partition";
    case Quantity::BrandesNaive: return "BrandesNaive";
  }
  return "?";
}

// Formula: a closed form disagrees with exhaustive computation.
// Identity: a mathematically forced equality failed, i.e. an implementation bug.
enum class Category { Formula, Identity };

struct Discrepancy {
  Quantity quantity = Quantity::Sigma;
  Category category = Category::Formula;
  std::size_t n = 0;
  std::string argument;
  Rational formula_value;  // for identities: the left-hand side
  Rational oracle_value;   // for identities: the right-hand side
  std::string anchor;
};

struct CheckedRange {
  std::string suite;
  std::size_t n_min = 0;
  std::size_t n_max = 0;
};

struct DiscrepancyReport {
  std::vector<CheckedRange> ranges;
  std::vector<Discrepancy> discrepancies;
  std::vector<std::string> notes;
  std::size_t checks_run = 0;
  std::chrono::milliseconds elapsed{0};

  bool has_identity_failures() const {
    return std::any_of(discrepancies.begin(), discrepancies.end(),
                       [](const Discrepancy& d) { return d.category == Category::Identity; });
  }
  bool has_formula_mismatches() const {
    return std::any_of(discrepancies.begin(), discrepancies.end(),
                       [](const Discrepancy& d) { return d.category == Category::Formula; });
  }
  // 0 clean, 1 identity failure, 2 formula discrepancies only.
  int exit_status() const {
    if (has_identity_failures()) return 1;
    if (has_formula_mismatches()) return 2;
    return 0;
  }

  // Appends `other` and restores canonical order: by n, then quantity, with
  // each suite's own enumeration order kept within a tie.
  void merge(DiscrepancyReport other) {
    ranges.insert(ranges.end(), other.ranges.begin(), other.ranges.end());
    discrepancies.insert(discrepancies.end(), std::make_move_iterator(other.discrepancies.begin()),
                         std::make_move_iterator(other.discrepancies.end()));
    notes.insert(notes.end(), other.notes.begin(), other.notes.end());
    checks_run += other.checks_run;
    elapsed += other.elapsed;
    std::stable_sort(discrepancies.begin(), discrepancies.end(),
                     [](const Discrepancy& a, const Discrepancy& b) {
                       return std::pair(a.n, a.quantity) < std::pair(b.n, b.quantity);
                     });
  }
};

inline nlohmann::ordered_json to_json(const DiscrepancyReport& report, bool include_timing = true) {
  using nlohmann::ordered_json;
  ordered_json doc;
  auto ranges = ordered_json::array();
  for (const auto& r : report.ranges) {
    ranges.push_back(ordered_json{{"suite", r.suite}, {"n_min", r.n_min}, {"n_max", r.n_max}});
  }
  doc["ranges"] = std::move(ranges);
  doc["checks_run"] = report.checks_run;
  auto items = ordered_json::array();
  for (const auto& d : report.discrepancies) {
    ordered_json item;
    item["quantity"] = to_string(d.quantity);
    item["n"] = d.n;
    item["argument"] = d.argument;
    item["formula"] = rational_to_json(d.formula_value);
    item["oracle"] = rational_to_json(d.oracle_value);
    item["paper_anchor"] = d.anchor;
    item["category"] = d.category == Category::Formula ? "formula" : "identity";
    items.push_back(std::move(item));
  }
  doc["discrepancies"] = std::move(items);
  doc["notes"] = report.notes;
  if (include_timing) doc["elapsed_ms"] = report.elapsed.count();
  return doc;
}

namespace detail {

// Runs fn(n) for every n in [n_min, n_max] on a small worker pool and returns
// the results indexed by n - n_min, so merge order never depends on timing.
template <class Fn>
auto map_over_n(std::size_t n_min, std::size_t n_max, Fn fn) {
  using Result = decltype(fn(n_min));
  const std::size_t count = n_max - n_min + 1;
  std::vector<Result> results(count);
  std::atomic<std::size_t> next{0};
  const std::size_t workers =
      std::min<std::size_t>(count, std::max(1u, std::thread::hardware_concurrency()));
  auto work = [&] {
    for (std::size_t i = next++; i < count; i = next++) results[i] = fn(n_min + i);
  };
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return results;
}

inline void require_range(std::size_t n_min, std::size_t n_max, std::size_t lo, std::size_t hi,
                          const std::string& suite) {
  if (n_min < lo || n_min > n_max || n_max > hi) {
    throw DomainError(suite + " validation needs " + std::to_string(lo) + " <= n_min <= n_max <= " +
                      std::to_string(hi) + " (got " + std::to_string(n_min) + ".." +
                      std::to_string(n_max) + ")");
  }
}

struct PerN {
  std::vector<Discrepancy> discrepancies;
  std::size_t checks = 0;
};

inline DiscrepancyReport assemble(std::string suite, std::size_t n_min, std::size_t n_max,
                                  std::vector<PerN> parts,
                                  std::chrono::steady_clock::time_point start) {
  DiscrepancyReport report;
  report.ranges.push_back({std::move(suite), n_min, n_max});
  for (auto& part : parts) {
    report.checks_run += part.checks;
    for (auto& d : part.discrepancies) report.discrepancies.push_back(std::move(d));
  }
  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  return report;
}

constexpr closed_forms::PairClass kPairOrder[] = {closed_forms::PairClass::OuterOuter,
                                                  closed_forms::PairClass::InnerInner,
                                                  closed_forms::PairClass::OuterInner};

// Groups every unordered pair of distinct vertices of `g` by (kind, r) and
// collects the distinct values `value(s, t)` seen in each class.
template <class ValueFn>
std::map<std::pair<closed_forms::PairClass, std::size_t>, std::set<std::uint64_t>> observe_classes(
    const GpGraph& g, ValueFn value) {
  std::map<std::pair<closed_forms::PairClass, std::size_t>, std::set<std::uint64_t>> seen;
  for (VertexIndex s = 0; s < g.vertex_count(); ++s) {
    for (VertexIndex t = s + 1; t < g.vertex_count(); ++t) {
      const auto kind = closed_forms::classify_pair(g.n(), g.vertex_at(s), g.vertex_at(t));
      seen[{kind.kind, kind.r}].insert(value(s, t));
    }
  }
  return seen;
}

}  // namespace detail

/*
 * Geodesic counts: for every GP(n,2) in range, every unordered vertex pair is
 * grouped by (kind, r) and each class is one check against cf_sigma. A class
 * fails if any pair in it disagrees; each distinct wrong value is recorded.
 */
inline DiscrepancyReport validate_sigma(std::size_t n_min, std::size_t n_max) {
  detail::require_range(n_min, n_max, 5, 200, "sigma");
  const auto start = std::chrono::steady_clock::now();
  auto parts = detail::map_over_n(n_min, n_max, [](std::size_t n) {
    detail::PerN part;
    const GpGraph g(n, 2);
    const AllPairsGeodesics<std::uint64_t> ap(g);
    const auto seen = detail::observe_classes(g, [&](VertexIndex s, VertexIndex t) { return ap.sigma(s, t); });
    for (auto kind : detail::kPairOrder) {
      for (std::size_t r = 0; r <= n / 2; ++r) {
        auto it = seen.find({kind, r});
        if (it == seen.end()) continue;  // r = 0 within one ring
        const closed_forms::PairKind pair{kind, r};
        const auto cf = closed_forms::cf_sigma(n, pair);
        if (!cf.applicable()) continue;
        ++part.checks;
        for (std::uint64_t observed : it->second) {
          if (Rational(observed) != *cf.value) {
            part.discrepancies.push_back({Quantity::Sigma, Category::Formula, n, pair.str(), *cf.value,
                                          Rational(observed), cf.anchor});
          }
        }
      }
    }
    return part;
  });
  return detail::assemble("sigma", n_min, n_max, std::move(parts), start);
}

/*
 * Distances by (kind, r) class over all pairs, plus the diameter for n >= 8.
 * Also notes which of two competing odd-r inner lengths the oracle supports:
 * (r+5)/2 or (r+1)/2+3.
 */
inline DiscrepancyReport validate_distance_diameter(std::size_t n_min, std::size_t n_max) {
  detail::require_range(n_min, n_max, 5, 200, "distance");
  const auto start = std::chrono::steady_clock::now();
  struct Part {
    detail::PerN base;
    std::size_t odd_classes = 0;
    std::size_t agrees_r5 = 0;
    std::size_t agrees_r7 = 0;
  };
  auto parts = detail::map_over_n(n_min, n_max, [](std::size_t n) {
    Part part;
    const GpGraph g(n, 2);
    const AllPairsGeodesics<std::uint64_t> ap(g);
    const auto seen = detail::observe_classes(g, [&](VertexIndex s, VertexIndex t) { return ap.dist(s, t); });
    for (auto kind : detail::kPairOrder) {
      for (std::size_t r = 0; r <= n / 2; ++r) {
        auto it = seen.find({kind, r});
        if (it == seen.end()) continue;
        const closed_forms::PairKind pair{kind, r};
        const auto cf = closed_forms::cf_distance(n, pair);
        ++part.base.checks;
        for (std::uint64_t observed : it->second) {
          if (Rational(observed) != *cf.value) {
            part.base.discrepancies.push_back({Quantity::Distance, Category::Formula, n, pair.str(),
                                               *cf.value, Rational(observed), cf.anchor});
          }
        }
        if (kind == closed_forms::PairClass::InnerInner && r % 2 == 1 && r + 2 < n / 2) {
          ++part.odd_classes;
          const std::uint64_t oracle = *it->second.begin();
          if (it->second.size() == 1 && oracle == (r + 5) / 2) ++part.agrees_r5;
          if (it->second.size() == 1 && oracle == (r + 1) / 2 + 3) ++part.agrees_r7;
        }
      }
    }
    if (n >= 8) {
      const auto cf = closed_forms::cf_diameter(n);
      std::uint64_t diam = 0;
      for (VertexIndex s = 0; s < g.vertex_count(); ++s) {
        for (VertexIndex t = s + 1; t < g.vertex_count(); ++t) diam = std::max<std::uint64_t>(diam, ap.dist(s, t));
      }
      ++part.base.checks;
      if (Rational(diam) != *cf.value) {
        part.base.discrepancies.push_back({Quantity::Diameter, Category::Formula, n, "diameter",
                                           *cf.value, Rational(diam), cf.anchor});
      }
    }
    return part;
  });
  std::vector<detail::PerN> base;
  std::size_t classes = 0, r5 = 0, r7 = 0;
  for (auto& p : parts) {
    classes += p.odd_classes;
    r5 += p.agrees_r5;
    r7 += p.agrees_r7;
    base.push_back(std::move(p.base));
  }
  auto report = detail::assemble("distance", n_min, n_max, std::move(base), start);
  if (classes > 0) {
    report.notes.push_back("InnerInner odd r<k-2 distance: oracle equals (r+5)/2 in " + std::to_string(r5) +
                           " of " + std::to_string(classes) + " classes and (r+1)/2+3 in " +
                           std::to_string(r7) + " of " + std::to_string(classes));
  }
  return report;
}

/*
 * Outer and inner betweenness totals against their closed forms, and each of
 * the six induced components (B(x,U), B(x,V), B(x,U|V) for x = u0, v0)
 * against its own formula. Totals come from Brandes accumulation, components
 * from the pair-dependency table; their sum must agree (Partition identity).
 */
inline DiscrepancyReport validate_betweenness(std::size_t n_min, std::size_t n_max) {
  detail::require_range(n_min, n_max, 12, 100, "betweenness");
  const auto start = std::chrono::steady_clock::now();
  auto parts = detail::map_over_n(n_min, n_max, [](std::size_t n) {
    detail::PerN part;
    const GpGraph g(n, 2);
    const auto brandes = brandes_betweenness(g);
    const AllPairsGeodesics<std::uint64_t> ap(g);
    const auto outer = g.outer_ring();
    const auto inner = g.inner_ring();
    for (const bool is_outer : {true, false}) {
      const VertexIndex x = is_outer ? 0 : n;
      const auto cf = is_outer ? closed_forms::cf_betweenness_outer(n) : closed_forms::cf_betweenness_inner(n);
      const auto quantity = is_outer ? Quantity::BetweennessOuter : Quantity::BetweennessInner;
      const std::string name = is_outer ? "B(u0)" : "B(v0)";
      ++part.checks;
      if (*cf.value != brandes[x]) {
        part.discrepancies.push_back({quantity, Category::Formula, n, name, *cf.value, brandes[x], cf.anchor});
      }
      const Rational components[] = {induced_by_set(ap, x, outer), induced_by_set(ap, x, inner),
                                     induced_between_sets(ap, x, outer, inner)};
      for (std::size_t c = 0; c < 3; ++c) {
        const auto& expected = cf.breakdown.at(c);
        ++part.checks;
        if (expected.value != components[c]) {
          part.discrepancies.push_back({Quantity::LemmaComponent, Category::Formula, n, expected.name,
                                        expected.value, components[c], expected.anchor});
        }
      }
      const Rational sum = components[0] + components[1] + components[2];
      ++part.checks;
      if (sum != brandes[x]) {
        part.discrepancies.push_back({Quantity::Partition, Category::Identity, n,
                                      name + " = B(x,U)+B(x,V)+B(x,U|V)", sum, brandes[x],
                                      "pair partition of V\\{x}"});
      }
    }
    return part;
  });
  return detail::assemble("betweenness", n_min, n_max, std::move(parts), start);
}

/*
 * Identities forced for every GP(n,2):
 *   half-sum      B(x) = 1/2 * sum over x0 != x of B(x,x0), every vertex
 *   sum identity  sum of B(x) = sum over pairs of (d(s,t) - 1)
 *   orbits        all outer values equal, all inner values equal
 *   transitivity  outer value = inner value when GP(n,2) is vertex-transitive
 *   partition     B(x,U) + B(x,V) + B(x,U|V) = B(x) for x = u0, v0
 *   brandes/naive Brandes accumulation equals the sigma_through triple loop
 */
inline DiscrepancyReport run_identity_suite(std::size_t n_min, std::size_t n_max) {
  detail::require_range(n_min, n_max, 5, 60, "identities");
  const auto start = std::chrono::steady_clock::now();
  auto parts = detail::map_over_n(n_min, n_max, [](std::size_t n) {
    detail::PerN part;
    const GpGraph g(n, 2);
    const auto brandes = brandes_betweenness(g);
    const AllPairsGeodesics<std::uint64_t> ap(g);
    const std::size_t nv = g.vertex_count();
    auto fail = [&](Quantity q, std::string arg, Rational lhs, Rational rhs, std::string anchor) {
      part.discrepancies.push_back({q, Category::Identity, n, std::move(arg), std::move(lhs), std::move(rhs),
                                    std::move(anchor)});
    };

    for (VertexIndex x = 0; x < nv; ++x) {
      Rational induced_total;
      for (VertexIndex x0 = 0; x0 < nv; ++x0) {
        if (x0 != x) induced_total += induced_by_vertex(ap, x, x0);
      }
      const Rational half = induced_total * Rational(1, 2);
      ++part.checks;
      if (half != brandes[x]) fail(Quantity::HalfSum, "x=" + g.label(x), half, brandes[x], "B(x)=1/2 sum B(x,x0)");
    }

    Rational total;
    for (const auto& b : brandes) total += b;
    BigInt distance_excess = 0;
    for (VertexIndex s = 0; s < nv; ++s) {
      for (VertexIndex t = s + 1; t < nv; ++t) distance_excess += ap.dist(s, t) - 1;
    }
    ++part.checks;
    if (total != Rational(distance_excess)) {
      fail(Quantity::SumIdentity, "sum B(x)", total, Rational(distance_excess), "sum B(x) = sum (d(s,t)-1)");
    }

    for (VertexIndex i = 1; i < n; ++i) {
      for (const VertexIndex base : {VertexIndex{0}, VertexIndex{n}}) {
        ++part.checks;
        if (brandes[base + i] != brandes[base]) {
          fail(Quantity::OrbitEquality, g.label(base + i) + " vs " + g.label(base), brandes[base + i],
               brandes[base], "rotation automorphism");
        }
      }
    }

    if (is_vertex_transitive(n, 2)) {
      ++part.checks;
      if (brandes[n] != brandes[0]) {
        fail(Quantity::Transitivity, "v0 vs u0", brandes[n], brandes[0], "vertex-transitive GP(n,2)");
      }
    }

    const auto outer = g.outer_ring();
    const auto inner = g.inner_ring();
    for (const VertexIndex x : {VertexIndex{0}, VertexIndex{n}}) {
      const Rational sum = induced_sum(ap, x, outer, inner) + induced_between_sets(ap, x, outer, inner);
      ++part.checks;
      if (sum != brandes[x]) fail(Quantity::Partition, "x=" + g.label(x), sum, brandes[x], "pair partition of V\\{x}");
    }

    const auto naive = naive_betweenness(ap);
    for (VertexIndex x = 0; x < nv; ++x) {
      ++part.checks;
      if (naive[x] != brandes[x]) fail(Quantity::BrandesNaive, "x=" + g.label(x), brandes[x], naive[x], "Brandes = naive");
    }
    return part;
  });
  return detail::assemble("identities", n_min, n_max, std::move(parts), start);
}

/*
 * Single-vertex induced betweenness B(x_i, x_j) on paths, cycles, stars,
 * wheels and complete graphs of every size up to `max_vertices`, against
 * cf_classic_induced. Every ordered pair (i, j) is one check.
 */
inline DiscrepancyReport validate_classic(std::size_t min_vertices, std::size_t max_vertices) {
  if (min_vertices < 2 || min_vertices > max_vertices || max_vertices > 60) {
    throw DomainError("classic validation needs 2 <= min <= max <= 60");
  }
  using closed_forms::Family;
  const auto start = std::chrono::steady_clock::now();
  struct Case {
    Family family;
    std::size_t floor;
  };
  const Case cases[] = {{Family::Path, 2}, {Family::Cycle, 3}, {Family::Star, 3}, {Family::Wheel, 6},
                        {Family::Complete, 2}};
  auto parts = detail::map_over_n(min_vertices, max_vertices, [&](std::size_t n) {
    detail::PerN part;
    for (const auto& c : cases) {
      if (n < c.floor) continue;
      AdjacencyGraph g;
      switch (c.family) {
        case Family::Path: g = families::path(n); break;
        case Family::Cycle: g = families::cycle(n); break;
        case Family::Star: g = families::star(n); break;
        case Family::Wheel: g = families::wheel(n); break;
        case Family::Complete: g = families::complete(n); break;
      }
      const AllPairsGeodesics<std::uint64_t> ap(g);
      const std::size_t base = c.family == Family::Path ? 1 : 0;  // paths are 1-based
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (i == j) continue;
          const auto cf = closed_forms::cf_classic_induced(c.family, n, i + base, j + base);
          const Rational oracle = induced_by_vertex(ap, i, j);
          ++part.checks;
          if (cf.applicable() && *cf.value != oracle) {
            part.discrepancies.push_back({Quantity::ClassicInduced, Category::Formula, n,
                                          to_string(c.family) + " i=" + std::to_string(i + base) +
                                              " j=" + std::to_string(j + base),
                                          *cf.value, oracle, cf.anchor});
          }
        }
      }
    }
    return part;
  });
  return detail::assemble("classic", min_vertices, max_vertices, std::move(parts), start);
}

}  // namespace gpbc::validation
