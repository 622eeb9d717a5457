// cheeger2d command-line tool: per-shape reports, corpus verification,
// family sweeps, asymmetry queries, shape optimization, and SVG rendering.
//
// Exit codes: 0 success, 1 inequality violation, 2 malformed input or flags.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cheeger2d/asymmetry.hpp"
#include "cheeger2d/cheeger.hpp"
#include "cheeger2d/errors.hpp"
#include "cheeger2d/families.hpp"
#include "cheeger2d/search.hpp"
#include "cheeger2d/serialize.hpp"
#include "cheeger2d/verify.hpp"

namespace {

using namespace cheeger2d;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DegenerateInput("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw DegenerateInput("cannot open output file: " + out_path);
  out << text;
}

// Human-readable name of the guarantee behind a report margin.
std::string margin_title(const std::string& name) {
  if (name == "main") return "reverse width-Cheeger bound w*h <= 3+sqrt(pi*sqrt(3))";
  if (name == "lower") return "lower bound w*h > 2";
  if (name == "ftouhi") return "bound h <= 1/r + sqrt(pi/area)";
  if (name == "pal_width") return "Pal bound w <= 3r";
  if (name == "pal_area") return "Pal bound w^2 <= sqrt(3)*area";
  if (name == "width_lemma_grid") return "inner-set width bound w(K_-t) >= w - 3t";
  if (name == "area_comparison_grid")
    return "inner-set area bound |K_-t| >= (w-3t)^2/sqrt(3)";
  return name;
}

struct CommonShapeOpts {
  std::string shape_path;
  std::string out_path;
};

int run_report(const CommonShapeOpts& io, bool with_asym,
               const std::optional<double>& eta, double c2) {
  ConvexPolygon poly = parse_shape_json(read_file(io.shape_path));
  std::optional<StabilityParams> params;
  if (eta) params = stability_constant(*eta, c2);
  ShapeReport rep = build_report(poly, with_asym, params);
  write_output(io.out_path, report_to_json(rep) + "\n");
  int rc = 0;
  for (const auto& [name, margin] : rep.margins) {
    if (margin < -1e-9) {
      std::cerr << "VIOLATION of " << margin_title(name) << ": margin "
                << fmt_double(margin) << ", vertices " << shape_to_json(poly)
                << "\n";
      rc = 1;
    }
  }
  return rc;
}

int run_verify(std::uint64_t count, std::uint64_t seed,
               const std::optional<double>& eta, double c2, unsigned threads,
               const std::string& out_path) {
  std::optional<StabilityParams> params;
  if (eta) params = stability_constant(*eta, c2);
  CorpusReport rep = verify_corpus(count, seed, params, threads);
  write_output(out_path, corpus_to_csv(rep));
  std::cerr << corpus_summary(rep);
  return rep.violations.empty() ? 0 : 1;
}

int run_sweep(const std::string& kind, const std::vector<double>& eps_list,
              const std::vector<double>& lengths, const std::string& out_path) {
  std::vector<SweepRecord> records = kind == "reps" ? sweep_sharpness(eps_list)
                                                    : sweep_rectangles(lengths);
  write_output(out_path, sweep_to_csv(records));
  return 0;
}

int run_asymmetry(const CommonShapeOpts& io) {
  ConvexPolygon poly = parse_shape_json(read_file(io.shape_path));
  AsymmetryResult result = asymmetry(poly);
  write_output(io.out_path,
               asymmetry_to_json(result, poly.minimal_width().width) + "\n");
  return 0;
}

int run_optimize(const SearchConfig& cfg, const std::string& trajectory_path,
                 const std::string& out_path) {
  SearchResult result = maximize_wh(cfg);
  write_output(out_path, search_result_to_json(result) + "\n");
  if (!trajectory_path.empty())
    write_output(trajectory_path, trajectory_to_csv(result));
  return 0;
}

int run_cheeger_set(const CommonShapeOpts& io) {
  ConvexPolygon poly = parse_shape_json(read_file(io.shape_path));
  CheegerResult result = cheeger(poly);
  write_output(io.out_path, svg_cheeger_set(poly, result));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "cheeger2d: Cheeger constants, minimal widths, inner parallel sets, and "
      "width-Cheeger inequality checks for convex polygons"};
  app.require_subcommand(1);

  // report
  CommonShapeOpts report_io;
  bool report_asym = false;
  std::optional<double> report_eta;
  double report_c2 = default_c2();
  CLI::App* report = app.add_subcommand(
      "report", "Scalars, deficit, and inequality margins for one shape");
  report->add_option("--shape", report_io.shape_path, "Shape JSON file")
      ->required();
  report->add_flag("--asymmetry", report_asym,
                   "Also compute the equilateral asymmetry");
  report->add_option("--eta", report_eta,
                     "Stability window: check the local stability margin when "
                     "deficit <= eta");
  report->add_option("--c2", report_c2,
                     "Stability normalization constant (with --eta)")
      ->capture_default_str();
  report->add_option("--out", report_io.out_path, "Write JSON here instead of stdout");

  // verify
  std::uint64_t verify_count = 1000, verify_seed = 0;
  std::optional<double> verify_eta;
  double verify_c2 = default_c2();
  unsigned verify_threads = 0;
  std::string verify_out;
  CLI::App* verify = app.add_subcommand(
      "verify", "Check every inequality over a random corpus; exit 1 on any "
                "violation");
  verify->add_option("--count", verify_count, "Number of random shapes")
      ->capture_default_str();
  verify->add_option("--seed", verify_seed, "Corpus seed")->required();
  verify->add_option("--eta", verify_eta,
                     "Also run the stability leg (asymmetry per shape)");
  verify->add_option("--c2", verify_c2,
                     "Stability normalization constant (with --eta)")
      ->capture_default_str();
  verify->add_option("--threads", verify_threads,
                     "Worker threads (0 = hardware)")
      ->capture_default_str();
  verify->add_option("--out", verify_out, "Write CSV here instead of stdout");

  // sweep
  std::string sweep_kind;
  std::vector<double> sweep_eps = {0.125,      0.0625,      0.03125,
                                   0.015625,   0.0078125,   0.00390625,
                                   0.001953125, 0.0009765625};
  std::vector<double> sweep_lengths = {2, 4, 8, 16, 32, 64, 128, 256, 512};
  std::string sweep_out;
  CLI::App* sweep = app.add_subcommand(
      "sweep", "Closed-form family sweeps (clipped triangles or rectangles)");
  sweep->add_option("kind", sweep_kind, "Family: reps | rectangles")
      ->required()
      ->check(CLI::IsMember({"reps", "rectangles"}));
  sweep->add_option("--eps-list", sweep_eps,
                    "Clip depths for the reps family (each in (0, 1/2])");
  sweep->add_option("--lengths", sweep_lengths,
                    "Aspect ratios for the rectangle family (each >= 1)");
  sweep->add_option("--out", sweep_out, "Write CSV here instead of stdout");

  // asymmetry
  CommonShapeOpts asym_io;
  CLI::App* asym = app.add_subcommand(
      "asymmetry", "Distance to the nearest equal-width equilateral triangle");
  asym->add_option("--shape", asym_io.shape_path, "Shape JSON file")->required();
  asym->add_option("--out", asym_io.out_path, "Write JSON here instead of stdout");

  // optimize
  SearchConfig cfg;
  std::uint64_t opt_seed = 0;
  std::string opt_trajectory, opt_out;
  CLI::App* optimize = app.add_subcommand(
      "optimize", "Hill-climb vertex coordinates to maximize w*h");
  optimize->add_option("--n", cfg.n_vertices, "Vertex budget (>= 3)")
      ->capture_default_str();
  optimize->add_option("--seed", opt_seed, "Search seed")->required();
  optimize->add_option("--iters", cfg.iters, "Iterations per restart")
      ->capture_default_str();
  optimize->add_option("--restarts", cfg.restarts, "Independent restarts")
      ->capture_default_str();
  optimize->add_option("--step", cfg.step_initial,
                       "Initial step size relative to the diameter")
      ->capture_default_str();
  optimize->add_option("--decay", cfg.step_decay,
                       "Step decay factor on rejection, in (0, 1)")
      ->capture_default_str();
  optimize->add_option("--threads", cfg.threads,
                       "Worker threads (0 = hardware)")
      ->capture_default_str();
  optimize->add_option("--trajectory", opt_trajectory,
                       "Also write accepted improvements as CSV here");
  optimize->add_option("--out", opt_out, "Write JSON here instead of stdout");

  // cheeger-set
  CommonShapeOpts svg_io;
  CLI::App* cheeger_set = app.add_subcommand(
      "cheeger-set", "Render the polygon and its Cheeger set as SVG");
  cheeger_set->add_option("--shape", svg_io.shape_path, "Shape JSON file")
      ->required();
  cheeger_set->add_option("--out", svg_io.out_path, "Output SVG file")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (report->parsed())
      return run_report(report_io, report_asym, report_eta, report_c2);
    if (verify->parsed())
      return run_verify(verify_count, verify_seed, verify_eta, verify_c2,
                        verify_threads, verify_out);
    if (sweep->parsed())
      return run_sweep(sweep_kind, sweep_eps, sweep_lengths, sweep_out);
    if (asym->parsed()) return run_asymmetry(asym_io);
    if (optimize->parsed()) {
      cfg.seed = opt_seed;
      return run_optimize(cfg, opt_trajectory, opt_out);
    }
    if (cheeger_set->parsed()) return run_cheeger_set(svg_io);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
