// gpbc: generalized Petersen graphs, geodesics and exact betweenness.
//
//   gpbc graph --n 5 --k 2 --format dot
//   gpbc query --n 13 --k 2 sigma u0 u4
//   gpbc centrality --n 12 --k 2 --format csv
//   gpbc validate all --min 12 --max 40
//
// Exit codes: 0 ok, 1 identity failure, 2 formula discrepancies found,
// 64 bad arguments, 65 closed form inapplicable under --formula-only.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gpbc/gpbc.hpp"

namespace {

constexpr int kExitUsage = 64;
constexpr int kExitInapplicable = 65;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Relative --output paths resolve against $GPBC_OUTPUT_DIR when it is set.
void emit(const std::string& text, const std::string& output) {
  if (output.empty() || output == "-") {
    std::cout << text;
    return;
  }
  std::filesystem::path path(output);
  if (const char* dir = std::getenv("GPBC_OUTPUT_DIR"); dir != nullptr && *dir != '\0' && path.is_relative()) {
    path = std::filesystem::path(dir) / path;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot open output file " + path.string());
  out << text;
}

gpbc::GpGraph make_graph(std::size_t n, std::size_t k) {
  try {
    return gpbc::build_gp(n, k);
  } catch (const gpbc::InvalidParameters& e) {
    throw UsageError(e.what());
  }
}

gpbc::VertexIndex parse_vertex(const gpbc::GpGraph& g, const std::string& label) {
  try {
    return g.index_of(gpbc::parse_label(label, g.n()));
  } catch (const gpbc::ParseError& e) {
    throw UsageError(e.what());
  }
}

std::string format_closed(const gpbc::closed_forms::ClosedFormValue& cf) {
  return cf.applicable() ? cf.value->str() : "n/a";
}

// ---- graph ----------------------------------------------------------------

struct GraphArgs {
  std::size_t n = 0;
  std::size_t k = 0;
  std::string format = "dot";
  std::string output;
};

int run_graph(const GraphArgs& a) {
  const auto g = make_graph(a.n, a.k);
  gpbc::GraphFormat format = gpbc::GraphFormat::Dot;
  if (a.format == "json") format = gpbc::GraphFormat::Json;
  if (a.format == "csv") format = gpbc::GraphFormat::EdgeListCsv;
  emit(gpbc::export_graph(g, format), a.output);
  return 0;
}

// ---- query ----------------------------------------------------------------

struct QueryArgs {
  std::size_t n = 0;
  std::size_t k = 0;
  std::string kind;
  std::string from;
  std::string to;
  bool no_formula = false;
  bool formula_only = false;
  std::size_t limit = 10000;
};

int run_query(const QueryArgs& a) {
  namespace cf = gpbc::closed_forms;
  const auto g = make_graph(a.n, a.k);
  const auto s = parse_vertex(g, a.from);
  const auto t = parse_vertex(g, a.to);
  const auto pair = cf::classify_pair(g.n(), g.vertex_at(s), g.vertex_at(t));

  std::optional<cf::ClosedFormValue> formula;
  std::string inapplicable_reason;
  if (a.k == 2 && !a.no_formula) {
    formula = a.kind == "dist" ? cf::cf_distance(g.n(), pair) : cf::cf_sigma(g.n(), pair);
    if (!formula->applicable()) inapplicable_reason = formula->reason;
  } else if (a.k != 2) {
    inapplicable_reason = "closed forms cover k=2 only";
  } else {
    inapplicable_reason = "formula disabled";
  }

  if (a.formula_only) {
    if (!formula || !formula->applicable()) {
      std::cerr << "formula inapplicable: " << inapplicable_reason << "\n";
      return kExitInapplicable;
    }
    std::cout << "formula=" << formula->value->str() << "\n";
    return 0;
  }

  gpbc::Rational oracle;
  std::ostringstream out;
  if (a.kind == "dist") {
    oracle = gpbc::Rational(gpbc::distance(g, s, t));
  } else if (a.kind == "sigma") {
    oracle = gpbc::Rational(gpbc::sigma(g, s, t));
  } else {
    try {
      for (const auto& path : gpbc::enumerate_geodesics(g, s, t, a.limit)) {
        for (std::size_t i = 0; i < path.size(); ++i) out << (i ? " " : "") << g.label(path[i]);
        out << "\n";
      }
    } catch (const gpbc::LimitExceeded& e) {
      throw UsageError(e.what());
    }
    oracle = gpbc::Rational(gpbc::sigma(g, s, t));
  }
  out << "oracle=" << oracle.str();
  if (formula) {
    out << " formula=" << format_closed(*formula);
    if (formula->applicable()) out << " agree=" << (*formula->value == oracle ? "true" : "false");
  }
  out << "\n";
  std::cout << out.str();
  return 0;
}

// ---- centrality -----------------------------------------------------------

struct CentralityArgs {
  std::size_t n = 0;
  std::size_t k = 0;
  std::string format = "table";
  std::string induced;
  std::string vertex;
  std::string output;
};

std::string render_values(const gpbc::GpGraph& g, const std::vector<gpbc::VertexIndex>& rows,
                          const std::vector<gpbc::Rational>& values, const std::string& format) {
  auto label = [&](gpbc::VertexIndex i) { return g.label(rows[i]); };
  if (format == "csv") return gpbc::centrality_csv(values, label);
  if (format == "json") return gpbc::centrality_json(values, label).dump() + "\n";
  if (rows.size() == 1) return values.front().str() + "\n";
  std::ostringstream out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out << label(i) << "\t" << values[i].str() << "\t" << values[i].decimal() << "\n";
  }
  return out.str();
}

int run_centrality(const CentralityArgs& a) {
  const auto g = make_graph(a.n, a.k);
  std::vector<gpbc::VertexIndex> rows;
  if (!a.vertex.empty()) {
    rows.push_back(parse_vertex(g, a.vertex));
  } else {
    for (gpbc::VertexIndex v = 0; v < g.vertex_count(); ++v) rows.push_back(v);
  }
  const auto outer = g.outer_ring();
  const auto inner = g.inner_ring();
  std::vector<gpbc::Rational> values;

  if (a.induced.empty()) {
    const auto all = gpbc::brandes_betweenness(g);
    for (auto v : rows) values.push_back(all[v]);
  } else if (a.induced.rfind("subgraph:", 0) == 0) {
    const std::string which = a.induced.substr(9);
    if (which != "outer" && which != "inner") throw UsageError("--induced subgraph:outer|inner");
    const auto& h = which == "outer" ? outer : inner;
    std::vector<gpbc::VertexIndex> kept;
    for (auto v : rows) {
      if (std::find(h.begin(), h.end(), v) == h.end()) {
        if (!a.vertex.empty()) throw UsageError("vertex " + a.vertex + " is not in the " + which + " ring");
        continue;
      }
      kept.push_back(v);
      values.push_back(gpbc::subgraph_betweenness(g, h, v));
    }
    rows = kept;
  } else {
    const gpbc::AllPairsGeodesics<gpbc::BigInt> ap(g);
    if (a.induced == "set:outer" || a.induced == "set:inner") {
      const auto& set = a.induced == "set:outer" ? outer : inner;
      for (auto v : rows) values.push_back(gpbc::induced_by_set(ap, v, set));
    } else if (a.induced == "cross") {
      for (auto v : rows) values.push_back(gpbc::induced_between_sets(ap, v, outer, inner));
    } else if (a.induced.rfind("vertex:", 0) == 0) {
      const auto x0 = parse_vertex(g, a.induced.substr(7));
      std::vector<gpbc::VertexIndex> kept;
      for (auto v : rows) {
        if (v == x0) {
          if (!a.vertex.empty()) throw UsageError("--vertex must differ from the inducing vertex");
          continue;
        }
        kept.push_back(v);
        values.push_back(gpbc::induced_by_vertex(ap, v, x0));
      }
      rows = kept;
    } else {
      throw UsageError("unknown --induced spec '" + a.induced +
                       "' (set:outer, set:inner, vertex:<label>, cross, subgraph:outer|inner)");
    }
  }
  emit(render_values(g, rows, values, a.format), a.output);
  return 0;
}

// ---- validate -------------------------------------------------------------

struct ValidateArgs {
  std::string suite;
  std::size_t n_min = 12;
  std::size_t n_max = 40;
  std::string format = "json";
  std::string output;
  bool no_timing = false;
};

std::string render_report(const gpbc::validation::DiscrepancyReport& report, const ValidateArgs& a) {
  if (a.format == "json") return gpbc::validation::to_json(report, !a.no_timing).dump() + "\n";
  std::ostringstream out;
  for (const auto& r : report.ranges) out << "range " << r.suite << " " << r.n_min << ".." << r.n_max << "\n";
  out << "checks_run=" << report.checks_run << " discrepancies=" << report.discrepancies.size() << "\n";
  for (const auto& d : report.discrepancies) {
    out << (d.category == gpbc::validation::Category::Identity ? "IDENTITY " : "FORMULA  ")
        << gpbc::validation::to_string(d.quantity) << " n=" << d.n << " " << d.argument
        << " formula=" << d.formula_value << " oracle=" << d.oracle_value << " [" << d.anchor << "]\n";
  }
  for (const auto& note : report.notes) out << "note: " << note << "\n";
  if (!a.no_timing) out << "elapsed_ms=" << report.elapsed.count() << "\n";
  return out.str();
}

int run_validate(const ValidateArgs& a) {
  namespace v = gpbc::validation;
  v::DiscrepancyReport report;
  try {
    if (a.suite == "sigma") {
      report = v::validate_sigma(a.n_min, a.n_max);
    } else if (a.suite == "distance") {
      report = v::validate_distance_diameter(a.n_min, a.n_max);
    } else if (a.suite == "betweenness") {
      report = v::validate_betweenness(a.n_min, a.n_max);
    } else if (a.suite == "identities") {
      report = v::run_identity_suite(a.n_min, a.n_max);
    } else if (a.suite == "classic") {
      report = v::validate_classic(a.n_min, a.n_max);
    } else {
      // all: each suite on the part of [min, max] inside its own limits.
      report = v::validate_sigma(a.n_min, a.n_max);
      report.merge(v::validate_distance_diameter(a.n_min, a.n_max));
      const std::size_t b_lo = std::max<std::size_t>(a.n_min, 12);
      const std::size_t b_hi = std::min<std::size_t>(a.n_max, 100);
      if (b_lo <= b_hi) report.merge(v::validate_betweenness(b_lo, b_hi));
      const std::size_t i_hi = std::min<std::size_t>(a.n_max, 60);
      if (a.n_min <= i_hi) report.merge(v::run_identity_suite(a.n_min, i_hi));
    }
  } catch (const gpbc::DomainError& e) {
    throw UsageError(e.what());
  }
  emit(render_report(report, a), a.output);
  return report.exit_status();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized Petersen graphs: geodesics and exact betweenness centrality"};
  app.require_subcommand(1);

  GraphArgs graph_args;
  auto* graph = app.add_subcommand("graph", "Export GP(n,k) as DOT, JSON or CSV");
  graph->add_option("--n", graph_args.n, "Number of outer vertices")->required();
  graph->add_option("--k", graph_args.k, "Inner edge step")->required();
  graph->add_option("--format", graph_args.format)->check(CLI::IsMember({"dot", "json", "csv"}));
  graph->add_option("--output,-o", graph_args.output, "Output file (default stdout)");

  QueryArgs query_args;
  auto* query = app.add_subcommand("query", "Distance, geodesic count or geodesic list between two vertices");
  query->add_option("--n", query_args.n)->required();
  query->add_option("--k", query_args.k)->required();
  query->add_option("kind", query_args.kind)->required()->check(CLI::IsMember({"dist", "sigma", "paths"}));
  query->add_option("from", query_args.from)->required();
  query->add_option("to", query_args.to)->required();
  query->add_flag("--no-formula", query_args.no_formula, "Skip the closed-form comparison");
  query->add_flag("--formula-only", query_args.formula_only, "Print only the closed form; exit 65 if inapplicable");
  query->add_option("--limit", query_args.limit, "Maximum geodesics to list")->check(CLI::PositiveNumber);

  CentralityArgs cent_args;
  auto* cent = app.add_subcommand("centrality", "Exact betweenness or induced betweenness");
  cent->add_option("--n", cent_args.n)->required();
  cent->add_option("--k", cent_args.k)->required();
  cent->add_option("--format", cent_args.format)->check(CLI::IsMember({"table", "csv", "json"}));
  cent->add_option("--induced", cent_args.induced,
                   "set:outer | set:inner | vertex:<label> | cross | subgraph:outer|inner");
  cent->add_option("--vertex", cent_args.vertex, "Report only this vertex");
  cent->add_option("--output,-o", cent_args.output);

  ValidateArgs val_args;
  auto* val = app.add_subcommand("validate", "Check closed forms and identities against the oracle");
  val->add_option("suite", val_args.suite)
      ->required()
      ->check(CLI::IsMember({"sigma", "distance", "betweenness", "identities", "classic", "all"}));
  val->add_option("--min", val_args.n_min);
  val->add_option("--max", val_args.n_max);
  val->add_option("--format", val_args.format)->check(CLI::IsMember({"json", "table"}));
  val->add_option("--output,-o", val_args.output);
  val->add_flag("--no-timing", val_args.no_timing, "Omit elapsed time (byte-stable output)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (graph->parsed()) return run_graph(graph_args);
    if (query->parsed()) return run_query(query_args);
    if (cent->parsed()) return run_centrality(cent_args);
    if (val->parsed()) return run_validate(val_args);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const gpbc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
