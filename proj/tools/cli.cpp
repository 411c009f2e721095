#include "cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <memory>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "tverberg/tverberg.hpp"

namespace tverberg::cli {

namespace {

using nlohmann::ordered_json;

struct Common {
  std::uint64_t seed = 1;
  double tol = kDefaultTol;
  unsigned jobs = 1;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--seed", c.seed, "Random seed")->capture_default_str();
  cmd->add_option("--tol", c.tol, "Angular and metric tolerance")->capture_default_str();
  cmd->add_option("--jobs", c.jobs, "Worker threads")->capture_default_str()->check(CLI::PositiveNumber);
}

std::string fmt(double v) { return format_double(v); }

SolverConfig config_for(const Common& c) {
  SolverConfig cfg;
  cfg.tol = c.tol;
  cfg.jobs = c.jobs;
  return cfg;
}

ordered_json point_json(const Point& p) {
  ordered_json a = ordered_json::array();
  for (double c : p.coords()) a.push_back(c);
  return a;
}

ordered_json edge_json(const Edge& e) { return ordered_json::array({e.u, e.v}); }

Point parse_point_arg(const std::string& text, std::size_t dim) {
  std::vector<double> coords;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(tok, &used);
    } catch (const std::exception&) {
      fail(ErrorKind::Usage, "bad coordinate '" + tok + "'");
    }
    if (used != tok.size()) fail(ErrorKind::Usage, "bad coordinate '" + tok + "'");
    coords.push_back(v);
  }
  if (coords.size() != dim) fail(ErrorKind::Usage, "expected " + std::to_string(dim) + " comma-separated coordinates");
  return Point(std::move(coords));
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) fail(ErrorKind::Usage, "cannot write " + path);
  f << text;
}

void print_certificate(std::ostream& out, const PointSet& s, const GeoGraph& g, const WitnessCertificate& cert) {
  out << "TVERBERG\n";
  out << "witness " << to_string(cert.witness) << "\n";
  for (const EdgeMargin& m : cert.per_edge_margin) {
    const Point& x = s[m.edge.u];
    const Point& y = s[m.edge.v];
    const double angle = (cert.witness == x || cert.witness == y) ? kPi : angle_at(cert.witness, x, y);
    out << "edge " << m.edge.u << "-" << m.edge.v << " depth " << fmt(m.depth) << " angle " << fmt(angle) << "\n";
  }
  out << "min_margin " << fmt(cert.min_margin()) << "\n";
  (void)g;
}

// --- subcommands -------------------------------------------------------------

struct SolveArgs {
  Common common;
  std::string file;
  std::size_t max_iters = 10000;
  std::size_t restarts = 32;
  std::string render;
  std::string method = "auto";
};

int cmd_solve(const SolveArgs& a, std::ostream& out) {
  const PointSet s = read_points_file(a.file);
  SolverConfig cfg;
  cfg.tol = a.common.tol;
  cfg.jobs = a.common.jobs;
  cfg.max_iters = a.max_iters;
  cfg.restarts = a.restarts;
  SolveResult r;
  if (a.method == "convex") {
    r = convex_position_cycle(s, cfg.tol);
  } else if (a.method == "four-point") {
    r = four_point_cycle(s, cfg.tol);
  } else {
    r = solve(s, a.common.seed, cfg);
  }
  out << result_document(s, r).dump(2) << "\n";
  if (!a.render.empty()) write_text(a.render, render_svg(s, r.graph, r.witness));
  return kExitOk;
}

struct VerifyArgs {
  Common common;
  std::string file;
  std::string edges;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  const PointSet s = read_points_file(a.file);
  const GeoGraph g = parse_edge_list(s.size(), a.edges);
  const TverbergDecision d = decide_tverberg(s, g, a.common.tol);
  if (!d.certificate) {
    out << "NOT TVERBERG\n";
    out << "deepest " << to_string(d.deepest.point) << " excess " << fmt(d.deepest.excess)
        << (d.numerical ? " (numerical)" : "") << "\n";
    return kExitNegative;
  }
  print_certificate(out, s, g, *d.certificate);
  return kExitOk;
}

struct EnumerateArgs {
  Common common;
  std::string file;
  bool paths = false;
};

int cmd_enumerate(const EnumerateArgs& a, std::ostream& out) {
  const PointSet s = read_points_file(a.file);
  const EnumerationReport rep =
      enumerate_hamiltonian(s, a.paths ? EnumerationMode::Paths : EnumerationMode::Cycles, a.common.tol, a.common.jobs);
  out << "mode " << (a.paths ? "paths" : "cycles") << "\n";
  out << "total " << rep.total << "\n";
  out << "tverberg " << rep.tverberg.size() << "\n";
  for (const CertifiedGraph& c : rep.tverberg) {
    out << format_edge_list(c.graph) << " witness " << to_string(c.certificate.witness) << " min_margin "
        << fmt(c.certificate.min_margin()) << "\n";
  }
  if (rep.counterexample) {
    out << "COUNTEREXAMPLE\n";
    return kExitNegative;
  }
  return kExitOk;
}

struct PartitionArgs {
  Common common;
  std::string file;
  std::size_t r = 0;
};

int cmd_partition(const PartitionArgs& a, std::ostream& out) {
  const PointSet s = read_points_file(a.file);
  const std::size_t r = a.r > 0 ? a.r : max_tverberg_r(s.size(), s.dim());
  const Theorem3Result t = theorem3_graph(s, r, a.common.tol, a.common.jobs);
  ordered_json doc;
  doc["tool"] = "tverberg";
  doc["version"] = kVersion;
  doc["r"] = r;
  doc["parts"] = t.partition.parts;
  doc["common_point"] = point_json(t.partition.common_point);
  doc["coefficients"] = t.partition.barycentric_witnesses;
  ordered_json edges = ordered_json::array();
  for (const Edge& e : t.graph.canonical_edges()) edges.push_back(edge_json(e));
  doc["edges"] = edges;
  doc["witness"] = point_json(t.certificate.witness);
  doc["min_margin"] = t.certificate.min_margin();
  doc["min_degree"] = t.graph.min_degree();
  doc["degree_bound"] = static_cast<double>(s.size()) / static_cast<double>(s.dim() + 1);
  doc["min_degree_check"] = min_degree_check(t.graph, s, s.dim());
  out << doc.dump(2) << "\n";
  return kExitOk;
}

struct LensArgs {
  Common common;
  std::string file;
  double alpha = kHalfPi;
  std::string edges;
  bool all_cycles = false;
};

int cmd_lens(const LensArgs& a, std::ostream& out) {
  const PointSet s = read_points_file(a.file);
  std::vector<GeoGraph> graphs;
  if (a.all_cycles) {
    if (s.size() > kEnumerationCap) fail(ErrorKind::Usage, "--all-cycles is capped at 9 points");
    graphs = all_hamiltonian_cycles(s.size());
  } else if (!a.edges.empty()) {
    graphs.push_back(parse_edge_list(s.size(), a.edges));
  } else {
    fail(ErrorKind::Usage, "lens-check needs --edges or --all-cycles");
  }
  bool all_present = true;
  for (const GeoGraph& g : graphs) {
    const LensDecision d = lens_family_search(s, g, a.alpha, a.common.tol);
    if (d.witness) {
      out << format_edge_list(g) << " PRESENT witness " << to_string(d.witness->witness) << " min_angle "
          << fmt(d.witness->min_angle()) << "\n";
    } else {
      all_present = false;
      out << format_edge_list(g) << " ABSENT objective " << fmt(d.objective) << " best " << to_string(d.best_point)
          << "\n";
    }
  }
  return all_present ? kExitOk : kExitNegative;
}

struct GenArgs {
  Common common;
  std::string kind;
  std::size_t m = 0;
  std::size_t dim = 2;
  std::vector<double> bbox;
  double grid_step = 0.1;
  std::string out;
};

int cmd_gen(const GenArgs& a, std::ostream& out) {
  const std::optional<GenKind> kind = parse_gen_kind(a.kind);
  if (!kind) fail(ErrorKind::Usage, "unknown generator '" + a.kind + "' (uniform, convex, grid_perturbed)");
  GenOptions o;
  o.dim = a.dim;
  o.grid_step = a.grid_step;
  if (!a.bbox.empty()) {
    if (a.bbox.size() != 4) fail(ErrorKind::Usage, "--bbox takes min_x,min_y,max_x,max_y");
    o.bbox = {a.bbox[0], a.bbox[1], a.bbox[2], a.bbox[3]};
  }
  const std::string text = format_points(generate(*kind, a.m, a.common.seed, o));
  if (a.out.empty()) {
    out << text;
  } else {
    write_text(a.out, text);
  }
  return kExitOk;
}

struct RenderArgs {
  Common common;
  std::string file;
  std::string edges;
  std::string witness;
  std::string center;
  bool no_disks = false;
  bool labels = false;
  std::string out;
};

int cmd_render(const RenderArgs& a, std::ostream& out) {
  const PointSet s = read_points_file(a.file);
  if (s.dim() != 2) fail(ErrorKind::Usage, "render needs planar points");
  GeoGraph g;
  std::optional<Point> witness;
  if (a.edges.empty()) {
    const SolveResult r = solve(s, a.common.seed, config_for(a.common));
    g = r.graph;
    witness = r.witness;
  } else {
    g = parse_edge_list(s.size(), a.edges);
  }
  if (!a.witness.empty()) witness = parse_point_arg(a.witness, 2);
  SvgOptions o;
  o.draw_disks = !a.no_disks;
  o.draw_labels = a.labels;
  if (!a.center.empty()) o.projection_center = parse_point_arg(a.center, 2);
  const std::string svg = render_svg(s, g, witness, o);
  if (a.out.empty()) {
    out << svg;
  } else {
    write_text(a.out, svg);
  }
  return kExitOk;
}

struct CheckGpArgs {
  Common common;
  std::string file;
};

int cmd_check_gp(const CheckGpArgs& a, std::ostream& out) {
  const PointSet s = read_points_file(a.file);
  const GeneralPositionReport rep = check_general_position(s, a.common.tol);
  if (rep.empty()) {
    out << "GENERAL POSITION\n";
    return kExitOk;
  }
  out << "NOT IN GENERAL POSITION (" << rep.violation_count() << " violations)\n";
  for (const auto& c : rep.collinear_triples) {
    out << "collinear " << c.points[0] << " " << c.points[1] << " " << c.points[2] << "\n";
  }
  for (const auto& b : rep.boundary_incidences) {
    out << "on-circle " << b.point << " of " << b.pair[0] << "-" << b.pair[1] << "\n";
  }
  for (const auto& t : rep.triple_boundary_meets) {
    out << "triple-meet";
    for (const auto& p : t.pairs) out << " " << p[0] << "-" << p[1];
    out << "\n";
  }
  for (const auto& t : rep.tangent_pairs) {
    out << "tangent " << t.pairs[0][0] << "-" << t.pairs[0][1] << " " << t.pairs[1][0] << "-" << t.pairs[1][1] << "\n";
  }
  return kExitNegative;
}

struct BenchArgs {
  Common common;
  std::vector<std::size_t> sizes{5, 7, 9, 4, 6, 8};
  std::size_t count = 20;
  std::string kind = "uniform";
};

int cmd_bench(const BenchArgs& a, std::ostream& out) {
  const std::optional<GenKind> kind = parse_gen_kind(a.kind);
  if (!kind) fail(ErrorKind::Usage, "unknown generator '" + a.kind + "'");
  if (a.count == 0) fail(ErrorKind::Usage, "--count must be positive");
  char line[160];
  std::snprintf(line, sizeof line, "%6s %-10s %6s %8s %10s %10s %10s\n", "size", "kind", "count", "success", "mean_ms",
                "max_ms", "mean_iter");
  out << line;
  bool all_ok = true;
  for (std::size_t m : a.sizes) {
    double total_ms = 0.0;
    double max_ms = 0.0;
    std::size_t ok = 0;
    std::size_t iters = 0;
    for (std::size_t k = 0; k < a.count; ++k) {
      const PointSet s = generate(*kind, m, a.common.seed * 1000003ULL + m * 101 + k);
      const auto t0 = std::chrono::steady_clock::now();
      try {
        const SolveResult r = solve(s, a.common.seed + k, config_for(a.common));
        if (r.min_depth() >= -a.common.tol) ++ok;
        iters += r.stats.iterations;
      } catch (const Error&) {
      }
      const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
      total_ms += ms;
      max_ms = std::max(max_ms, ms);
    }
    all_ok = all_ok && ok == a.count;
    std::snprintf(line, sizeof line, "%6zu %-10s %6zu %8zu %10.3f %10.3f %10.2f\n", m, m % 2 ? "cycle" : "path",
                  a.count, ok, total_ms / static_cast<double>(a.count), max_ms,
                  static_cast<double>(iters) / static_cast<double>(a.count));
    out << line;
  }
  return all_ok ? kExitOk : kExitNegative;
}

}  // namespace

std::string fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

ordered_json result_document(const PointSet& s, const SolveResult& r) {
  ordered_json doc;
  doc["tool"] = "tverberg";
  doc["version"] = kVersion;
  doc["input"] = {{"points", s.size()}, {"dim", s.dim()}, {"digest", "fnv1a64:" + fnv1a64(format_points(s))}};
  doc["mode"] = std::string(to_string(r.mode));
  ordered_json edges = ordered_json::array();
  for (const Edge& e : r.graph.canonical_edges()) edges.push_back(edge_json(e));
  doc["edges"] = edges;
  doc["witness"] = point_json(r.witness);
  ordered_json margins = ordered_json::array();
  for (const CertificateEntry& c : r.certificate) {
    margins.push_back({{"edge", edge_json(c.edge)}, {"depth", c.depth}, {"angle", c.angle}});
  }
  doc["margins"] = margins;
  doc["stats"] = {{"iterations", r.stats.iterations}, {"restarts", r.stats.restarts}};
  return doc;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tverberg graphs: Hamiltonian cycles and paths whose diametral balls share a point", "tverberg"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  SolveArgs solve_a;
  CLI::App* solve_cmd = app.add_subcommand("solve", "Find a Tverberg cycle (odd) or path (even) with its witness");
  solve_cmd->add_option("file", solve_a.file, "Point file")->required();
  solve_cmd->add_option("--max-iters", solve_a.max_iters, "Ascent steps per trial")->capture_default_str();
  solve_cmd->add_option("--restarts", solve_a.restarts, "Restarts after the first trial")->capture_default_str();
  solve_cmd->add_option("--render", solve_a.render, "Also write an SVG figure");
  solve_cmd->add_option("--method", solve_a.method, "auto, convex or four-point")
      ->check(CLI::IsMember({"auto", "convex", "four-point"}))
      ->capture_default_str();
  add_common(solve_cmd, solve_a.common);

  VerifyArgs verify_a;
  CLI::App* verify_cmd = app.add_subcommand("verify", "Decide whether an edge list is a Tverberg graph");
  verify_cmd->add_option("file", verify_a.file, "Point file")->required();
  verify_cmd->add_option("--edges", verify_a.edges, "Edges as i-j,k-l,...")->required();
  add_common(verify_cmd, verify_a.common);

  EnumerateArgs enum_a;
  CLI::App* enum_cmd = app.add_subcommand("enumerate", "Check every Hamiltonian cycle (or path) of up to 9 points");
  enum_cmd->add_option("file", enum_a.file, "Point file")->required();
  enum_cmd->add_flag("--paths", enum_a.paths, "Enumerate paths instead of cycles");
  add_common(enum_cmd, enum_a.common);

  PartitionArgs part_a;
  CLI::App* part_cmd = app.add_subcommand("partition", "Tverberg partition and the dense Tverberg graph built from it");
  part_cmd->add_option("file", part_a.file, "Point file")->required();
  part_cmd->add_option("--r", part_a.r, "Number of parts (default: the largest admissible)");
  add_common(part_cmd, part_a.common);

  LensArgs lens_a;
  CLI::App* lens_cmd = app.add_subcommand("lens-check", "Search for a common point of the alpha-lenses of a graph");
  lens_cmd->add_option("file", lens_a.file, "Point file")->required();
  lens_cmd->add_option("--alpha", lens_a.alpha, "Lens angle in radians")->capture_default_str();
  lens_cmd->add_option("--edges", lens_a.edges, "Edges as i-j,k-l,...");
  lens_cmd->add_flag("--all-cycles", lens_a.all_cycles, "Check every Hamiltonian cycle");
  add_common(lens_cmd, lens_a.common);

  GenArgs gen_a;
  CLI::App* gen_cmd = app.add_subcommand("gen", "Generate a point set");
  gen_cmd->add_option("kind", gen_a.kind, "uniform, convex or grid_perturbed")->required();
  gen_cmd->add_option("m", gen_a.m, "Number of points")->required();
  gen_cmd->add_option("--dim", gen_a.dim, "Dimension (uniform only)")->capture_default_str();
  gen_cmd->add_option("--bbox", gen_a.bbox, "min_x,min_y,max_x,max_y")->delimiter(',')->expected(4);
  gen_cmd->add_option("--grid-step", gen_a.grid_step, "Lattice spacing for grid_perturbed")->capture_default_str();
  gen_cmd->add_option("--out", gen_a.out, "Output file (default stdout)");
  add_common(gen_cmd, gen_a.common);

  RenderArgs render_a;
  CLI::App* render_cmd = app.add_subcommand("render", "Draw points, edges, disks and witness as SVG");
  render_cmd->add_option("file", render_a.file, "Point file")->required();
  render_cmd->add_option("--edges", render_a.edges, "Edges (default: solve first)");
  render_cmd->add_option("--witness", render_a.witness, "Witness as x,y");
  render_cmd->add_option("--center", render_a.center, "Draw the unit circle and projections around x,y");
  render_cmd->add_flag("--no-disks", render_a.no_disks, "Omit diametral disks");
  render_cmd->add_flag("--labels", render_a.labels, "Label points with their indices");
  render_cmd->add_option("--out", render_a.out, "Output file (default stdout)");
  add_common(render_cmd, render_a.common);

  CheckGpArgs gp_a;
  CLI::App* gp_cmd = app.add_subcommand("check-gp", "List general-position violations");
  gp_cmd->add_option("file", gp_a.file, "Point file")->required();
  add_common(gp_cmd, gp_a.common);

  BenchArgs bench_a;
  CLI::App* bench_cmd = app.add_subcommand("bench", "Time solve over generated batches");
  bench_cmd->add_option("--sizes", bench_a.sizes, "Set sizes")->delimiter(',');
  bench_cmd->add_option("--count", bench_a.count, "Sets per size")->capture_default_str();
  bench_cmd->add_option("--kind", bench_a.kind, "Generator")->capture_default_str();
  add_common(bench_cmd, bench_a.common);

  std::vector<const char*> argv{"tverberg"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (solve_cmd->parsed()) return cmd_solve(solve_a, out);
    if (verify_cmd->parsed()) return cmd_verify(verify_a, out);
    if (enum_cmd->parsed()) return cmd_enumerate(enum_a, out);
    if (part_cmd->parsed()) return cmd_partition(part_a, out);
    if (lens_cmd->parsed()) return cmd_lens(lens_a, out);
    if (gen_cmd->parsed()) return cmd_gen(gen_a, out);
    if (render_cmd->parsed()) return cmd_render(render_a, out);
    if (gp_cmd->parsed()) return cmd_check_gp(gp_a, out);
    if (bench_cmd->parsed()) return cmd_bench(bench_a, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return (e.kind() == ErrorKind::Usage || e.kind() == ErrorKind::Parse) ? kExitUsage : kExitNegative;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace tverberg::cli
