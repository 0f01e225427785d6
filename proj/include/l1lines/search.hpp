#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "l1lines/verifier.hpp"

namespace l1lines {

enum class SweepMode { ExhaustiveGrid, Random };

struct SweepConfig {
  SweepMode mode = SweepMode::ExhaustiveGrid;
  int grid_width = 3, grid_height = 3;  // exhaustive: the integer grid swept
  int n_min = 3, n_max = 3;             // inclusive point-count range
  long sample_count = 100;              // random: number of instances
  long coord_bound = 100;               // random: coordinates in [0, coord_bound]
  std::uint64_t seed = 1;
  int workers = 1;
  bool distinct_coords = false;  // random: all x's distinct and all y's distinct
  bool check_oracle = false;     // cross-check against the distance-matrix path
  bool check_linf = false;       // run the rotation reduction per instance
  std::string witness_dir;       // when nonempty, write failing inputs here
};

// One failing instance, replayable from the embedded points.
struct SweepHit {
  long index = -1;
  std::string kind;  // "bound" | "anomaly" | "oracle" | "rotation" | "linf-bound" | "exception"
  std::string detail;
  std::vector<Point> points;
};

struct HistogramRow {
  int n;
  long lines;
  long count;
};

struct SweepResult {
  long instances = 0;
  long universal_count = 0;
  long bound_violations = 0;  // L1 bound and (when checked) its rotated twin
  long anomaly_instances = 0;
  long oracle_failures = 0;
  // Anomaly tallies keyed by check name, sorted by name.
  std::vector<std::pair<std::string, long>> anomaly_checks;
  // Recorded observations, not failures: how often the outdegree reading of
  // the A-sum fails, and how often the pruned graph has fewer than n arrows.
  long outdeg_reading_failures = 0;
  long pruned_below_n = 0;
  // Minimum of lines/n over non-universal instances; ties keep the first index.
  std::optional<Rat> min_ratio;
  long min_ratio_index = -1;
  std::vector<Point> min_ratio_points;
  std::vector<HistogramRow> histogram;  // sorted by (n, lines)
  std::vector<SweepHit> hits;           // sorted by instance index
  bool clean() const {
    return bound_violations == 0 && anomaly_instances == 0 &&
           oracle_failures == 0 && hits.empty();
  }
};

// Deterministic instance streams. Both are pure functions of (config, index),
// so workers can pull indices concurrently and replays are exact.
class InstanceSource {
 public:
  virtual ~InstanceSource() = default;
  virtual long count() const = 0;
  virtual std::vector<Point> instance(long i) const = 0;
};

// Every n-subset of the grid [0,w) x [0,h), n_min <= n <= n_max, ordered by
// n and then by lexicographic combination rank.
class GridExhaustiveSource : public InstanceSource {
 public:
  // Throws std::invalid_argument("sweep too large") past the instance cap.
  explicit GridExhaustiveSource(const SweepConfig& cfg);
  long count() const override { return total_; }
  std::vector<Point> instance(long i) const override;

 private:
  int w_, h_, n_min_, n_max_;
  long total_ = 0;
  std::vector<long> per_n_;  // C(w*h, n) for each n in range
};

class RandomSource : public InstanceSource {
 public:
  explicit RandomSource(const SweepConfig& cfg);
  long count() const override { return cfg_.sample_count; }
  std::vector<Point> instance(long i) const override;

 private:
  SweepConfig cfg_;
};

// Uniform value in [0, bound) using masked rejection; avoids the
// implementation-defined std::uniform_int_distribution.
std::uint64_t bounded_rand(std::mt19937_64& rng, std::uint64_t bound);

long binom_capped(long n, long k, long cap);  // min(C(n,k), cap+1), exact below

SweepResult run_sweep(const SweepConfig& cfg);

}  // namespace l1lines
