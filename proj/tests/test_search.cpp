#include <algorithm>
#include <filesystem>
#include <map>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "l1lines/io.hpp"
#include "l1lines/report.hpp"
#include "l1lines/search.hpp"
#include "util.hpp"

using namespace l1lines;

namespace {

SweepConfig grid_cfg(int w, int h, int lo, int hi) {
  SweepConfig cfg;
  cfg.mode = SweepMode::ExhaustiveGrid;
  cfg.grid_width = w;
  cfg.grid_height = h;
  cfg.n_min = lo;
  cfg.n_max = hi;
  return cfg;
}

std::string canon(const std::vector<Point>& pts) {
  return canonical_point_text(pts);
}

}  // namespace

TEST_CASE("binomials are exact below the cap and clamp above it") {
  CHECK(binom_capped(9, 3, 1000) == 84);
  CHECK(binom_capped(9, 4, 1000) == 126);
  CHECK(binom_capped(5, 0, 1000) == 1);
  CHECK(binom_capped(5, 5, 1000) == 1);
  CHECK(binom_capped(4, 5, 1000) == 0);
  CHECK(binom_capped(100, 15, 2'000'000) == 2'000'001);  // clamped to cap+1
  CHECK(binom_capped(52, 5, 3'000'000) == 2'598'960);
}

TEST_CASE("the exhaustive grid source enumerates every subset exactly once") {
  GridExhaustiveSource src(grid_cfg(3, 3, 3, 4));
  REQUIRE(src.count() == 210);  // C(9,3) + C(9,4)
  std::set<std::string> seen;
  for (long i = 0; i < src.count(); ++i) {
    std::vector<Point> pts = src.instance(i);
    CHECK((pts.size() == 3 || pts.size() == 4));
    if (i < 84) CHECK(pts.size() == 3);  // ordered by n first
    for (const Point& p : pts) {
      CHECK(p.x >= 0);
      CHECK(p.x < 3);
      CHECK(p.y >= 0);
      CHECK(p.y < 3);
      CHECK(p.x.get_den() == 1);
      CHECK(p.y.get_den() == 1);
    }
    CHECK(seen.insert(canon(pts)).second);  // no repeats across ranks
  }
  // Replays are pure functions of the index.
  CHECK(canon(src.instance(0)) == canon(GridExhaustiveSource(grid_cfg(3, 3, 3, 4)).instance(0)));
  CHECK(canon(src.instance(209)) == canon(GridExhaustiveSource(grid_cfg(3, 3, 3, 4)).instance(209)));
}

TEST_CASE("oversized exhaustive sweeps are rejected up front") {
  CHECK_THROWS_WITH_AS(GridExhaustiveSource(grid_cfg(10, 10, 15, 15)),
                       "sweep too large", std::invalid_argument);
  CHECK_THROWS_AS(GridExhaustiveSource(grid_cfg(3, 3, 1, 2)),
                  std::invalid_argument);  // n_min below 2
}

TEST_CASE("the random source is a pure function of seed and index") {
  SweepConfig cfg;
  cfg.mode = SweepMode::Random;
  cfg.sample_count = 50;
  cfg.coord_bound = 30;
  cfg.n_min = 3;
  cfg.n_max = 8;
  cfg.seed = 42;
  RandomSource a(cfg), b(cfg);
  for (long i = 0; i < cfg.sample_count; ++i) {
    std::vector<Point> pts = a.instance(i);
    CHECK(canon(pts) == canon(b.instance(i)));
    CHECK(pts.size() >= 3);
    CHECK(pts.size() <= 8);
    std::set<std::string> distinct;
    for (const Point& p : pts) {
      CHECK(p.x >= 0);
      CHECK(p.x <= cfg.coord_bound);
      CHECK(p.y >= 0);
      CHECK(p.y <= cfg.coord_bound);
      CHECK(distinct.insert(rat_str(p.x) + " " + rat_str(p.y)).second);
    }
  }
  SweepConfig other = cfg;
  other.seed = 43;
  CHECK(canon(RandomSource(other).instance(0)) != canon(a.instance(0)));
}

TEST_CASE("distinct-coordinate mode never repeats an x or a y") {
  SweepConfig cfg;
  cfg.mode = SweepMode::Random;
  cfg.sample_count = 40;
  cfg.coord_bound = 40;
  cfg.n_min = 4;
  cfg.n_max = 12;
  cfg.seed = 7;
  cfg.distinct_coords = true;
  RandomSource src(cfg);
  for (long i = 0; i < cfg.sample_count; ++i) {
    std::vector<Point> pts = src.instance(i);
    std::set<std::string> xs, ys;
    for (const Point& p : pts) {
      CHECK(xs.insert(rat_str(p.x)).second);
      CHECK(ys.insert(rat_str(p.y)).second);
    }
  }
  SweepConfig bad = cfg;
  bad.coord_bound = 5;  // only 6 coordinate values for up to 12 points
  CHECK_THROWS_WITH_AS((void)RandomSource(bad), "cannot avoid duplicates",
                       std::invalid_argument);
}

TEST_CASE("bounded_rand draws uniformly within the bound") {
  std::mt19937_64 rng(123);
  std::map<std::uint64_t, long> freq;
  for (int i = 0; i < 6000; ++i) ++freq[bounded_rand(rng, 6)];
  CHECK(freq.size() == 6);
  for (auto [v, c] : freq) {
    CHECK(v < 6);
    CHECK(c > 800);  // crude uniformity: expected 1000 each
    CHECK(c < 1200);
  }
  CHECK(bounded_rand(rng, 1) == 0);
}

TEST_CASE("the 3x3 baseline family is clean under every cross-check") {
  SweepConfig cfg = grid_cfg(3, 3, 3, 4);
  cfg.check_oracle = true;
  cfg.check_linf = true;
  SweepResult res = run_sweep(cfg);
  CHECK(res.instances == 210);
  CHECK(res.bound_violations == 0);
  CHECK(res.anomaly_instances == 0);
  CHECK(res.oracle_failures == 0);
  CHECK(res.hits.empty());
  CHECK(res.clean());
  CHECK(res.universal_count > 0);
  long histo_total = 0;
  for (const HistogramRow& row : res.histogram) {
    histo_total += row.count;
    CHECK((row.n == 3 || row.n == 4));
  }
  CHECK(histo_total == res.instances);
  // The worst line-count ratio still clears the bound, and its witness
  // replays to exactly that ratio.
  REQUIRE(res.min_ratio.has_value());
  CHECK(*res.min_ratio >= Rat(1, 2));
  PointSet worst{res.min_ratio_points};
  LineCount lc = count_distinct_lines(worst, MetricKind::L1);
  CHECK_FALSE(lc.has_universal);
  CHECK(Rat(lc.count) ==
        *res.min_ratio * Rat(long(res.min_ratio_points.size())));
}

TEST_CASE("sweep results are identical across worker counts") {
  SweepConfig cfg = grid_cfg(4, 4, 3, 4);
  cfg.check_linf = true;
  cfg.workers = 1;
  SweepResult one = run_sweep(cfg);
  cfg.workers = 4;
  SweepResult four = run_sweep(cfg);
  CHECK(render(sweep_report(cfg, one)) == render(sweep_report(cfg, four)));

  SweepConfig rcfg;
  rcfg.mode = SweepMode::Random;
  rcfg.sample_count = 60;
  rcfg.coord_bound = 12;
  rcfg.n_min = 3;
  rcfg.n_max = 7;
  rcfg.seed = 99;
  rcfg.workers = 1;
  SweepResult r1 = run_sweep(rcfg);
  rcfg.workers = 3;
  SweepResult r3 = run_sweep(rcfg);
  CHECK(render(sweep_report(rcfg, r1)) == render(sweep_report(rcfg, r3)));
}

TEST_CASE("the 4x4 family reproduces the pinned audit signature") {
  SweepConfig cfg = grid_cfg(4, 4, 3, 5);
  cfg.workers = 4;
  SweepResult res = run_sweep(cfg);
  CHECK(res.instances == 6748);  // C(16,3) + C(16,4) + C(16,5)
  CHECK(res.bound_violations == 0);
  CHECK(res.oracle_failures == 0);
  CHECK(res.anomaly_instances == 9);
  REQUIRE(res.anomaly_checks.size() == 2);
  CHECK(res.anomaly_checks[0] == std::pair<std::string, long>{"counting-A", 9});
  CHECK(res.anomaly_checks[1] == std::pair<std::string, long>{"no-lemma", 9});
  // 12 = the 9 anomalous instances (both degree readings fail there) plus
  // three lawful instances (ranks 2950, 4078, 5354) where only the
  // outdegree reading of the A-sum falls short while the indegree reading
  // and the final bound hold.
  CHECK(res.outdeg_reading_failures == 12);
  CHECK(res.pruned_below_n == 128);
  // Every hit is an anomaly hit at the pinned ranks, each replayable.
  std::vector<long> ranks;
  for (const SweepHit& h : res.hits) {
    CHECK(h.kind == "anomaly");
    ranks.push_back(h.index);
    VerificationReport rep = verify_theorem(PointSet(h.points));
    CHECK_FALSE(rep.anomalies.empty());
    CHECK(rep.bound_holds);
  }
  CHECK(ranks == std::vector<long>{912, 940, 945, 1310, 1522, 1743, 1779, 1785,
                                   4407});
}

TEST_CASE("witness files are written and replay to the failing instance") {
  std::string dir = "sweep_witness_tmp";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directory(dir);
  SweepConfig cfg = grid_cfg(4, 4, 4, 4);
  cfg.witness_dir = dir;
  SweepResult res = run_sweep(cfg);
  REQUIRE(res.hits.size() > 0);
  for (const SweepHit& h : res.hits) {
    std::string path = dir + "/witness_" + std::to_string(h.index) + ".txt";
    std::vector<Point> replay = read_points_file(path);
    CHECK(replay == h.points);
  }
  std::filesystem::remove_all(dir);
}
