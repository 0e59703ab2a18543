#include "hstretch/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <numbers>
#include <ostream>
#include <sstream>

#include "hstretch/errors.hpp"
#include "hstretch/fitting.hpp"
#include "hstretch/format.hpp"
#include "hstretch/graph.hpp"
#include "hstretch/hierarchy.hpp"
#include "hstretch/routing.hpp"

namespace hstretch::cli {

std::vector<analytic::CurveSeries> curve_series(const std::vector<std::uint64_t>& ns, double alpha,
                                                const analytic::SweepRange& range) {
  if (ns.empty()) throw DomainError("curve needs at least one N");
  std::vector<analytic::CurveSeries> out;
  for (auto n : ns) out.push_back(analytic::sweep_curve({n, alpha, 1.0}, range));
  return out;
}

void write_curve_csv(std::ostream& os, const std::vector<analytic::CurveSeries>& series) {
  os << "N,alpha,s_p,m,s_t\n";
  for (const auto& s : series)
    for (const auto& p : s.points)
      os << s.n_nodes << ',' << format_number(s.alpha) << ',' << format_number(p.s_p) << ',' << format_number(p.m)
         << ',' << format_number(p.s_t) << '\n';
}

namespace {

std::string fixed2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace

void write_curve_svg(std::ostream& os, const std::vector<analytic::CurveSeries>& series) {
  constexpr double kWidth = 800, kHeight = 600;
  constexpr double kLeft = 70, kRight = 130, kTop = 30, kBottom = 60;
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  static const char* const kColors[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                                        "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

  double x_min = 1.0, x_max = 2.0;
  bool first = true;
  for (const auto& s : series) {
    if (s.points.empty()) continue;
    x_min = first ? s.points.front().s_p : std::min(x_min, s.points.front().s_p);
    x_max = first ? s.points.back().s_p : std::max(x_max, s.points.back().s_p);
    first = false;
  }
  if (x_max <= x_min) x_max = x_min + 1.0;
  auto px = [&](double x) { return kLeft + (x - x_min) / (x_max - x_min) * plot_w; };
  auto py = [&](double y) { return kTop + (1.0 - y) * plot_h; };

  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"600\" viewBox=\"0 0 800 600\">\n"
     << "<rect x=\"0\" y=\"0\" width=\"800\" height=\"600\" fill=\"white\"/>\n"
     << "<g stroke=\"black\" stroke-width=\"1\">\n"
     << "<line x1=\"" << fixed2(kLeft) << "\" y1=\"" << fixed2(py(0)) << "\" x2=\"" << fixed2(kLeft + plot_w)
     << "\" y2=\"" << fixed2(py(0)) << "\"/>\n"
     << "<line x1=\"" << fixed2(kLeft) << "\" y1=\"" << fixed2(py(0)) << "\" x2=\"" << fixed2(kLeft) << "\" y2=\""
     << fixed2(py(1)) << "\"/>\n"
     << "</g>\n";

  os << "<g font-family=\"sans-serif\" font-size=\"12\" fill=\"black\">\n";
  for (int i = 0; i <= 4; ++i) {
    const double x = x_min + (x_max - x_min) * i / 4.0;
    os << "<text x=\"" << fixed2(px(x)) << "\" y=\"" << fixed2(py(0) + 18) << "\" text-anchor=\"middle\">"
       << format_number(x) << "</text>\n";
  }
  for (int i = 0; i <= 5; ++i) {
    const double y = i / 5.0;
    os << "<text x=\"" << fixed2(kLeft - 8) << "\" y=\"" << fixed2(py(y) + 4) << "\" text-anchor=\"end\">"
       << format_number(y) << "</text>\n";
  }
  os << "<text x=\"" << fixed2(kLeft + plot_w / 2) << "\" y=\"" << fixed2(kHeight - 15)
     << "\" text-anchor=\"middle\">s_p</text>\n"
     << "<text x=\"20\" y=\"" << fixed2(kTop + plot_h / 2) << "\" text-anchor=\"middle\" transform=\"rotate(-90 20 "
     << fixed2(kTop + plot_h / 2) << ")\">s_t</text>\n"
     << "</g>\n";

  // legend ordered by N
  std::vector<std::size_t> order(series.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return series[a].n_nodes < series[b].n_nodes; });

  for (std::size_t rank = 0; rank < order.size(); ++rank) {
    const auto& s = series[order[rank]];
    const char* color = kColors[rank % std::size(kColors)];
    os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < s.points.size(); ++i) {
      const double y = std::clamp(s.points[i].s_t, 0.0, 1.0);
      os << (i ? " " : "") << fixed2(px(s.points[i].s_p)) << ',' << fixed2(py(y));
    }
    os << "\"/>\n";
    const double ly = kTop + 20 + 20 * static_cast<double>(rank);
    os << "<line x1=\"" << fixed2(kWidth - kRight + 15) << "\" y1=\"" << fixed2(ly) << "\" x2=\""
       << fixed2(kWidth - kRight + 40) << "\" y2=\"" << fixed2(ly) << "\" stroke=\"" << color
       << "\" stroke-width=\"2\"/>\n"
       << "<text x=\"" << fixed2(kWidth - kRight + 46) << "\" y=\"" << fixed2(ly + 4)
       << "\" font-family=\"sans-serif\" font-size=\"12\">N=" << s.n_nodes << "</text>\n";
  }
  os << "</svg>\n";
}

namespace {

CheckResult check(std::string name, bool ok, std::string detail = {}) { return {std::move(name), ok, std::move(detail)}; }

void add_simulator_oracle(std::vector<CheckResult>& out, const std::string& name, const Graph& g, const Hierarchy& h,
                          std::size_t expected_length, double expected_s_t) {
  try {
    const auto tables = build_tables(g, h);
    bool lengths_ok = std::all_of(tables.begin(), tables.end(),
                                  [&](const RoutingTable& t) { return t.length() == expected_length; });
    const auto shortest = all_pairs_shortest_lengths(g);
    bool delivered = true;
    for (NodeId s = 0; s < g.n_nodes(); ++s)
      for (NodeId d = 0; d < g.n_nodes(); ++d)
        if (s != d) delivered &= route(tables, g, h, s, d).size() - 1 >= shortest(s, d);
    const auto report = measure(g, h);
    out.push_back(check(name + " table length " + std::to_string(expected_length), lengths_ok));
    out.push_back(check(name + " delivery and lower bound", delivered));
    out.push_back(check(name + " s_t = " + format_number(expected_s_t), report.s_t == expected_s_t,
                        "measured " + format_number(report.s_t)));
  } catch (const std::exception& e) {
    out.push_back(check(name + " simulator oracle", false, e.what()));
  }
}

}  // namespace

std::vector<CheckResult> run_builtin_checks(double alpha) {
  if (!(alpha > 0.0)) throw DomainError("alpha must be positive, got " + format_number(alpha));
  std::vector<CheckResult> out;

  {
    bool ok = true;
    std::string detail;
    for (std::uint64_t n : {2ull, 10ull, 1000ull, 1000000ull}) {
      const analytic::AnalyticParams p{n, alpha, 1.0};
      ok &= analytic::path_stretch_from_height(1.0, alpha) == 1.0;
      ok &= analytic::table_stretch_kk(n, 1.0) == 1.0;
      ok &= analytic::table_stretch_from_path_stretch(1.0, p) == 1.0;
      ok &= analytic::path_stretch_from_table_stretch_ipea(1.0, alpha) == 1.0;
    }
    out.push_back(check("boundary conditions at h = 1, m = 1, s_p = 1, s_t = 1", ok));
  }
  {
    double worst = 0.0;
    for (double h = 1.0; h <= 100.0; h += 0.25)
      worst = std::max(worst, std::abs(analytic::height_from_path_stretch(
                                           analytic::path_stretch_from_height(h, alpha), alpha) - h));
    out.push_back(check("inverse pair height <-> path stretch", worst <= 1e-12, "max error " + format_number(worst)));
  }
  {
    double worst = 0.0;
    for (std::uint64_t n : {2ull, 3ull, 10ull, 100ull, 12345ull, 1000000ull}) {
      const double exact = analytic::optimal_table_length_variable(n);
      worst = std::max(worst, std::abs(analytic::min_fixed_table_length_numeric(n) - exact) / exact);
    }
    out.push_back(check("optimality link min_m m N^(1/m) = e ln N", worst <= 1e-9,
                        "max relative error " + format_number(worst)));
  }
  {
    const double s_t = analytic::table_stretch_from_path_stretch(2.2, {10, analytic::kDefaultAlpha, 1.0});
    out.push_back(check("reported point s_t(2.2) = 0.6264 at N = 10, alpha = 0.987", std::abs(s_t - 0.6264) <= 5e-4,
                        "computed " + format_number(s_t)));
  }
  {
    double worst = 0.0;
    for (std::uint64_t n : kDefaultCurveNs) {
      const analytic::AnalyticParams p{n, alpha, 1.0};
      const auto num = analytic::find_min_table_stretch(p);
      const auto closed = analytic::min_table_stretch_closed_form(p);
      worst = std::max({worst, std::abs(num.m - closed.m), std::abs(num.s_t - closed.s_t),
                        std::abs(num.s_p - closed.s_p)});
    }
    out.push_back(check("curve minimum matches m* = ln N", worst <= 1e-6, "max deviation " + format_number(worst)));
  }

  {
    const Graph ring = make_ring(8);
    add_simulator_oracle(out, "ring-8 / 2 clusters", ring, build_balanced(ring, 2, 2), 5, 0.625);
    const Graph grid = make_grid(4, 4);
    add_simulator_oracle(out, "grid-4x4 / 2x2 blocks", grid, build_grid_blocks(grid, 4, 4, 2, 2), 7, 0.4375);
    const auto flat = measure(ring, make_flat(8));
    out.push_back(check("flat hierarchy gives s_p = s_t = 1", flat.s_p == 1.0 && flat.s_t == 1.0));
  }
  return out;
}

namespace {

void write_to(const std::string& path, std::ostream& fallback, const std::function<void(std::ostream&)>& body) {
  if (path.empty() || path == "-") {
    body(fallback);
    return;
  }
  std::ofstream os(path, std::ios::binary);
  if (!os) throw IoError("cannot open '" + path + "' for writing");
  body(os);
  if (!os) throw IoError("write failed for '" + path + "'");
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, ',')) {
    while (!cell.empty() && (cell.back() == '\r' || cell.back() == ' ')) cell.pop_back();
    out.push_back(cell);
  }
  return out;
}

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::ptrdiff_t column(std::initializer_list<const char*> names) const {
    for (const char* name : names) {
      auto it = std::find(header.begin(), header.end(), name);
      if (it != header.end()) return it - header.begin();
    }
    return -1;
  }
};

CsvTable read_csv(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw IoError("cannot open '" + path + "'");
  CsvTable t;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty() || line == "\r") continue;
    auto cells = split_csv(line);
    if (t.header.empty()) {
      t.header = std::move(cells);
    } else if (cells == t.header) {
      continue;  // repeated header from appended runs
    } else {
      if (cells.size() != t.header.size()) throw ParseError("expected " + std::to_string(t.header.size()) + " columns", lineno);
      t.rows.push_back(std::move(cells));
    }
  }
  if (t.header.empty()) throw ParseError("empty CSV '" + path + "'");
  return t;
}

double to_double(const std::string& s) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw ParseError("not a number: '" + s + "'");
  return v;
}

void print_fit(std::ostream& os, const fitting::FitResult& r) {
  os << "fit:\n"
     << "  model: " << fitting::to_string(r.model) << '\n'
     << "  alpha_hat: " << format_number(r.alpha_hat) << '\n'
     << "  residual_sse: " << format_number(r.residual_sse) << '\n'
     << "  r_squared: " << format_number(r.r_squared) << '\n'
     << "  n_points: " << r.n_points << '\n';
  for (const auto& w : r.warnings) os << "  warning: " << w << '\n';
}

BlockShape parse_block(const std::string& text) {
  const auto x = text.find('x');
  if (x == std::string::npos) throw DomainError("block shape must look like RxC, got '" + text + "'");
  try {
    return {std::stoul(text.substr(0, x)), std::stoul(text.substr(x + 1))};
  } catch (const std::exception&) {
    throw DomainError("block shape must look like RxC, got '" + text + "'");
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stretch trade-offs of hierarchical routing: analytic curves and a routing simulator"};
  app.require_subcommand(1);

  // curve
  std::vector<std::uint64_t> curve_ns = kDefaultCurveNs;
  double alpha = analytic::kDefaultAlpha;
  analytic::SweepRange range;
  std::string curve_csv, curve_svg;
  auto* curve = app.add_subcommand("curve", "Tabulate s_t against s_p for several network sizes");
  curve->add_option("-N,--nodes", curve_ns, "Network sizes")->delimiter(',')->check(CLI::PositiveNumber);
  curve->add_option("--alpha", alpha, "Structure constant")->capture_default_str();
  curve->add_option("--sp-min", range.s_p_min, "Sweep start")->capture_default_str();
  curve->add_option("--sp-max", range.s_p_max, "Sweep end")->capture_default_str();
  curve->add_option("--step", range.step, "Sweep step")->capture_default_str();
  curve->add_option("-o,--out", curve_csv, "CSV output (stdout if omitted)");
  curve->add_option("--svg", curve_svg, "Optional SVG chart");

  // gen
  std::string topology;
  std::vector<std::size_t> dims;
  double edge_p = 0.1;
  std::uint64_t seed = 1;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "Generate a graph: ring N | grid R C | torus R C | random N");
  gen->add_option("topology", topology, "ring, grid, torus or random")->required();
  gen->add_option("dims", dims, "Size parameters")->required();
  gen->add_option("-p,--edge-prob", edge_p, "Edge probability for random graphs")->capture_default_str();
  gen->add_option("--seed", seed, "Random seed")->capture_default_str();
  gen->add_option("-o,--out", gen_out, "Graph file (stdout if omitted)");

  // cluster
  std::string cluster_graph, cluster_method = "balanced", cluster_out;
  int levels = 2, branching = 2;
  std::size_t grid_rows = 0, grid_cols = 0;
  std::vector<std::string> blocks;
  auto* cluster = app.add_subcommand("cluster", "Build a hierarchy for a graph");
  cluster->add_option("-g,--graph", cluster_graph, "Graph file")->required();
  cluster->add_option("-m,--method", cluster_method, "balanced or grid-blocks")->capture_default_str();
  cluster->add_option("-l,--levels", levels, "Hierarchy levels (balanced)")->capture_default_str();
  cluster->add_option("-b,--branching", branching, "Parts per split (balanced)")->capture_default_str();
  cluster->add_option("--rows", grid_rows, "Grid rows (grid-blocks)");
  cluster->add_option("--cols", grid_cols, "Grid columns (grid-blocks)");
  cluster->add_option("--blocks", blocks, "Block shapes RxC, coarsest first (grid-blocks)")->delimiter(',');
  cluster->add_option("-o,--out", cluster_out, "Hierarchy file (stdout if omitted)");

  // simulate
  std::string sim_graph, sim_hier, sim_csv, sim_report;
  auto* simulate = app.add_subcommand("simulate", "Route all pairs and measure s_p and s_t");
  simulate->add_option("-g,--graph", sim_graph, "Graph file")->required();
  simulate->add_option("-H,--hierarchy", sim_hier, "Hierarchy file (flat if omitted)");
  simulate->add_option("--csv", sim_csv, "Append one CSV record to this file");
  simulate->add_option("--report", sim_report, "Structured report file (stdout if omitted)");

  // fit
  std::string fit_input, fit_model = "linear", fit_out;
  std::uint64_t fit_n = 0;
  auto* fit = app.add_subcommand("fit", "Estimate alpha from measured stretch data");
  fit->add_option("-i,--input", fit_input, "CSV with levels,s_p (linear) or s_p,s_t (eq3, ipea)")->required();
  fit->add_option("-m,--model", fit_model, "linear, eq3 or ipea")->capture_default_str();
  fit->add_option("-N,--nodes", fit_n, "Network size for eq3 (else the n/N column)");
  fit->add_option("-o,--out", fit_out, "Also write the result here");

  // validate
  double validate_alpha = analytic::kDefaultAlpha;
  std::string val_graph, val_hier;
  auto* validate_cmd = app.add_subcommand("validate", "Run the built-in invariant checks");
  validate_cmd->add_option("--alpha", validate_alpha, "Structure constant to check")->capture_default_str();
  validate_cmd->add_option("-g,--graph", val_graph, "Graph for hierarchy validation");
  validate_cmd->add_option("-H,--hierarchy", val_hier, "Hierarchy file to validate against --graph");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*curve) {
      const auto series = curve_series(curve_ns, alpha, range);
      write_to(curve_csv, out, [&](std::ostream& os) { write_curve_csv(os, series); });
      if (!curve_svg.empty()) write_to(curve_svg, out, [&](std::ostream& os) { write_curve_svg(os, series); });
      return kOk;
    }

    if (*gen) {
      TopologyParams p;
      p.topology = parse_topology(topology);
      p.seed = seed;
      p.edge_probability = edge_p;
      const bool lattice = p.topology == Topology::kGrid || p.topology == Topology::kTorus;
      if (dims.size() != (lattice ? 2u : 1u))
        throw DomainError(topology + " expects " + (lattice ? "2 size parameters (rows cols)" : "1 size parameter (n)"));
      if (lattice) p.rows = dims[0], p.cols = dims[1];
      else p.n = dims[0];
      const auto g = generate(p);
      if (p.topology == Topology::kRandom)
        err << "random graph: seed " << g.seed_used << " after " << g.attempts << " attempt(s)\n";
      write_to(gen_out, out, [&](std::ostream& os) {
        if (p.topology == Topology::kRandom) os << "# random n=" << p.n << " p=" << format_number(edge_p) << " seed=" << g.seed_used << '\n';
        write_graph(os, g.graph);
      });
      return kOk;
    }

    if (*cluster) {
      const Graph g = load_graph(cluster_graph);
      Hierarchy h;
      if (cluster_method == "balanced") {
        h = build_balanced(g, levels, branching);
      } else if (cluster_method == "grid-blocks") {
        if (grid_rows == 0 || grid_cols == 0) throw DomainError("grid-blocks needs --rows and --cols");
        std::vector<BlockShape> shapes;
        for (const auto& b : blocks) shapes.push_back(parse_block(b));
        h = build_grid_blocks(g, grid_rows, grid_cols, shapes);
      } else {
        throw DomainError("unknown clustering method '" + cluster_method + "'");
      }
      require_valid(h, g);
      write_to(cluster_out, out, [&](std::ostream& os) { write_hierarchy(os, h); });
      const auto st = stats(h);
      err << "hierarchy " << h.method << ": h=" << st.height << " c=" << format_number(st.mean_leaf_size) << " p=";
      for (std::size_t i = 0; i < st.clusters_per_level.size(); ++i) err << (i ? "," : "") << st.clusters_per_level[i];
      err << '\n';
      return kOk;
    }

    if (*simulate) {
      const Graph g = load_graph(sim_graph);
      const Hierarchy h = sim_hier.empty() ? make_flat(g.n_nodes()) : load_hierarchy(sim_hier);
      const auto report = measure(g, h);
      write_to(sim_report, out, [&](std::ostream& os) { write_report(os, report); });
      if (!sim_csv.empty()) {
        const bool fresh = !std::filesystem::exists(sim_csv) || std::filesystem::file_size(sim_csv) == 0;
        std::ofstream os(sim_csv, std::ios::binary | std::ios::app);
        if (!os) throw IoError("cannot open '" + sim_csv + "' for appending");
        if (fresh) os << csv_header() << '\n';
        os << csv_record(report) << '\n';
        if (!os) throw IoError("write failed for '" + sim_csv + "'");
      }
      if (!sim_report.empty()) out << csv_record(report) << '\n';
      return kOk;
    }

    if (*fit) {
      const auto model = fitting::parse_model(fit_model);
      const CsvTable t = read_csv(fit_input);
      const auto sp_col = t.column({"s_p"});
      if (sp_col < 0) throw ParseError("missing column s_p");
      fitting::FitResult result;
      if (model == fitting::Model::kLinearTheorem1) {
        const auto h_col = t.column({"levels", "h", "m"});
        if (h_col < 0) throw ParseError("missing column levels (or h)");
        std::vector<fitting::HeightStretch> pts;
        for (const auto& row : t.rows) pts.push_back({to_double(row[h_col]), to_double(row[sp_col])});
        result = fitting::fit_alpha_linear(pts);
      } else {
        const auto st_col = t.column({"s_t"});
        if (st_col < 0) throw ParseError("missing column s_t");
        std::vector<analytic::StretchPair> pts;
        for (const auto& row : t.rows) pts.push_back({to_double(row[sp_col]), to_double(row[st_col])});
        if (model == fitting::Model::kEq3) {
          std::uint64_t n = fit_n;
          if (n == 0) {
            const auto n_col = t.column({"n", "N"});
            if (n_col < 0) throw ParseError("eq3 needs --nodes or an n column");
            for (const auto& row : t.rows) {
              const auto v = static_cast<std::uint64_t>(to_double(row[n_col]));
              if (n != 0 && v != n) throw DomainError("rows mix several network sizes; pass --nodes or filter the CSV");
              n = v;
            }
          }
          result = fitting::fit_alpha_eq3(pts, n);
        } else {
          result = fitting::fit_alpha_ipea(pts);
        }
      }
      print_fit(out, result);
      if (!fit_out.empty()) write_to(fit_out, out, [&](std::ostream& os) { print_fit(os, result); });
      return kOk;
    }

    if (*validate_cmd) {
      bool all_ok = true;
      for (const auto& c : run_builtin_checks(validate_alpha)) {
        out << (c.passed ? "PASS " : "FAIL ") << c.name;
        if (!c.detail.empty()) out << " (" << c.detail << ')';
        out << '\n';
        all_ok &= c.passed;
      }
      if (!val_hier.empty() || !val_graph.empty()) {
        if (val_hier.empty() || val_graph.empty()) throw DomainError("--graph and --hierarchy go together");
        const Graph g = load_graph(val_graph);
        const auto violations = validate(load_hierarchy(val_hier), g);
        for (const auto& v : violations) out << "FAIL hierarchy " << to_string(v.rule) << ": " << v.message << '\n';
        if (violations.empty()) out << "PASS hierarchy " << val_hier << '\n';
        all_ok &= violations.empty();
      }
      return all_ok ? kOk : kDomain;
    }
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIo;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kDomain;
  }
  return kUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"hstretch"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace hstretch::cli
