#include <iostream>

#include "CLI11.hpp"

#include "l1lines/io.hpp"
#include "l1lines/report.hpp"

using namespace l1lines;

namespace {

// Stable exit contract: 0 ok, 1 usage, 2 input/parse error, 3 line-count
// bound violation, 4 lemma/counting anomaly, 5 oracle mismatch.
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitBound = 3;
constexpr int kExitAnomaly = 4;
constexpr int kExitMismatch = 5;

MetricKind parse_metric(const std::string& s) {
  if (s == "l1") return MetricKind::L1;
  if (s == "linf") return MetricKind::Linf;
  throw std::invalid_argument("unknown metric '" + s + "' (expected l1 or linf)");
}

int parse_int(const std::string& s, const char* what) {
  try {
    std::size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("");
    return v;
  } catch (...) {
    throw std::invalid_argument(std::string("malformed ") + what + " '" + s + "'");
  }
}

void parse_grid(const std::string& s, int& w, int& h) {
  auto x = s.find('x');
  if (x == std::string::npos)
    throw std::invalid_argument("malformed grid '" + s + "' (expected WxH)");
  w = parse_int(s.substr(0, x), "grid width");
  h = parse_int(s.substr(x + 1), "grid height");
}

void parse_range(const std::string& s, int& lo, int& hi) {
  auto dash = s.find('-');
  if (dash == std::string::npos) {
    lo = hi = parse_int(s, "point count");
    return;
  }
  lo = parse_int(s.substr(0, dash), "point count");
  hi = parse_int(s.substr(dash + 1), "point count");
}

PointSet load_points(const std::string& path) {
  return PointSet(read_points_file(path));
}

int run_lines(const std::string& path, const std::string& metric, bool full) {
  PointSet X = load_points(path);
  LineCatalog cat = enumerate_lines(X, parse_metric(metric));
  std::cout << render(lines_report(X, cat, full));
  return 0;
}

int run_arrows(const std::string& path) {
  PointSet X = load_points(path);
  ArrowGraph g = build_graph(X);
  LineCatalog cat = enumerate_lines(X, MetricKind::L1);
  std::vector<CoincidingPair> cps = coinciding_pairs(X, g, cat);
  ArrowGraph pruned = pruned_graph(g, cps);
  std::cout << render(arrows_report(X, g, cps, pruned));
  return 0;
}

int run_verify(const std::string& path) {
  PointSet X = load_points(path);
  VerificationReport rep = verify_theorem(X);
  std::cout << render(verify_report(X, rep));
  if (!rep.universal && !rep.bound_holds) return kExitBound;
  if (!rep.anomalies.empty()) return kExitAnomaly;
  return 0;
}

int run_rotate(const std::string& path) {
  PointSet X = load_points(path);
  std::cout << canonical_point_text(rotate_45(X));
  return 0;
}

int run_oracle_check(const std::string& path, const std::string& metric) {
  PointSet X = load_points(path);
  MetricKind m = parse_metric(metric);
  LineCatalog direct = enumerate_lines(X, m);
  LineCatalog via_matrix = lines_from_matrix(matrix_from_points(X, m));
  std::optional<std::string> diff = catalog_difference(direct, via_matrix);
  std::cout << render(oracle_check_report(X, m, diff));
  return diff ? kExitMismatch : 0;
}

int run_matrix_lines(const std::string& path, bool full) {
  DistanceMatrix D = read_matrix_file(path);
  LineCatalog cat = lines_from_matrix(D);
  std::cout << render(matrix_lines_report(D, cat, full));
  return 0;
}

int run_search(const SweepConfig& cfg) {
  SweepResult res = run_sweep(cfg);
  std::cout << render(sweep_report(cfg, res));
  if (res.bound_violations > 0) return kExitBound;
  if (res.anomaly_instances > 0) return kExitAnomaly;
  if (res.oracle_failures > 0) return kExitMismatch;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Metric lines, arrow graphs and line-count audits for finite "
               "planar point sets under the taxicab metric"};
  app.require_subcommand(1);

  std::string file, metric = "l1";
  bool full = false;

  CLI::App* lines = app.add_subcommand("lines", "Enumerate distinct metric lines");
  lines->add_option("file", file, "point-set file")->required();
  lines->add_option("--metric", metric, "l1 or linf (default l1)");
  lines->add_flag("--full", full, "list every line's members and generators");

  CLI::App* arrows = app.add_subcommand(
      "arrows", "Blue/red arrows, coinciding pairs, degrees");
  arrows->add_option("file", file, "point-set file")->required();

  CLI::App* verify = app.add_subcommand(
      "verify", "Full line-count audit with lemma-level checks");
  verify->add_option("file", file, "point-set file")->required();

  CLI::App* rotate = app.add_subcommand(
      "rotate", "Apply (x,y) -> (x+y, x-y) and print the image");
  rotate->add_option("file", file, "point-set file")->required();

  CLI::App* oracle = app.add_subcommand(
      "oracle-check", "Compare coordinate and distance-matrix line catalogs");
  oracle->add_option("file", file, "point-set file")->required();
  oracle->add_option("--metric", metric, "l1 or linf (default l1)");

  CLI::App* matrix = app.add_subcommand(
      "matrix-lines", "Enumerate lines of an explicit distance matrix");
  matrix->add_option("file", file, "matrix file: n, then n*n rationals")->required();
  matrix->add_flag("--full", full, "list every line's members and generators");

  CLI::App* search = app.add_subcommand(
      "search", "Sweep generated instances through the audit");
  std::string mode = "exhaustive", grid = "3x3", nrange = "3-4";
  SweepConfig cfg;
  search->add_option("--mode", mode, "exhaustive or random");
  search->add_option("--grid", grid, "exhaustive grid as WxH (default 3x3)");
  search->add_option("--n", nrange, "point count or inclusive range A-B");
  search->add_option("--count", cfg.sample_count, "random instances (default 100)");
  search->add_option("--coord-max", cfg.coord_bound,
                     "random coordinate bound (default 100)");
  search->add_option("--seed", cfg.seed, "random seed (default 1)");
  search->add_option("--workers", cfg.workers, "worker threads (default 1)");
  search->add_flag("--distinct-coords", cfg.distinct_coords,
                   "random sets with pairwise distinct x and distinct y");
  search->add_flag("--check-oracle", cfg.check_oracle,
                   "cross-check each instance against the matrix oracle");
  search->add_flag("--check-linf", cfg.check_linf,
                   "run the rotation reduction on each instance");
  search->add_option("--witness-dir", cfg.witness_dir,
                     "write failing instances to this directory");
  search->set_config("--config", "", "key=value file with the flags above");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*lines) return run_lines(file, metric, full);
    if (*arrows) return run_arrows(file);
    if (*verify) return run_verify(file);
    if (*rotate) return run_rotate(file);
    if (*oracle) return run_oracle_check(file, metric);
    if (*matrix) return run_matrix_lines(file, full);
    if (*search) {
      if (mode == "exhaustive") {
        cfg.mode = SweepMode::ExhaustiveGrid;
      } else if (mode == "random") {
        cfg.mode = SweepMode::Random;
      } else {
        throw std::invalid_argument("unknown mode '" + mode +
                                    "' (expected exhaustive or random)");
      }
      parse_grid(grid, cfg.grid_width, cfg.grid_height);
      parse_range(nrange, cfg.n_min, cfg.n_max);
      return run_search(cfg);
    }
  } catch (const oracle_mismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMismatch;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
  return kExitUsage;
}
