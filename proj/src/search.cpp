#include "l1lines/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>

#include "l1lines/io.hpp"
#include "l1lines/lines.hpp"
#include "l1lines/metric_oracle.hpp"

namespace l1lines {

namespace {

constexpr long kInstanceCap = 2'000'000;

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t i) {
  // splitmix64 step keyed by the instance index.
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (i + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace

std::uint64_t bounded_rand(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound <= 1) return 0;
  int bits = 64 - std::countl_zero(bound - 1);
  std::uint64_t mask = bits >= 64 ? ~0ull : ((1ull << bits) - 1);
  for (;;) {
    std::uint64_t v = rng() & mask;
    if (v < bound) return v;
  }
}

long binom_capped(long n, long k, long cap) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 r = 1;
  for (long i = 1; i <= k; ++i) {
    r = r * (unsigned __int128)(n - k + i) / (unsigned __int128)i;
    if (r > (unsigned __int128)cap) return cap + 1;
  }
  return long(r);
}

GridExhaustiveSource::GridExhaustiveSource(const SweepConfig& cfg)
    : w_(cfg.grid_width), h_(cfg.grid_height), n_min_(cfg.n_min),
      n_max_(cfg.n_max) {
  if (w_ < 1 || h_ < 1) throw std::invalid_argument("grid dimensions must be positive");
  if (n_min_ < 2 || n_max_ < n_min_)
    throw std::invalid_argument("invalid point-count range");
  const long cells = long(w_) * long(h_);
  if (n_max_ > cells) throw std::invalid_argument("more points than grid cells");
  for (int n = n_min_; n <= n_max_; ++n) {
    long c = binom_capped(cells, n, kInstanceCap);
    per_n_.push_back(c);
    if (c > kInstanceCap || total_ > kInstanceCap - c)
      throw std::invalid_argument("sweep too large");
    total_ += c;
  }
}

std::vector<Point> GridExhaustiveSource::instance(long i) const {
  int n = n_min_;
  for (long c : per_n_) {
    if (i < c) break;
    i -= c;
    ++n;
  }
  const long cells = long(w_) * long(h_);
  std::vector<Point> pts;
  pts.reserve(n);
  // Lexicographic combination unranking over cell indices; cells enumerate
  // the grid in (x, y) order.
  long next = 0;
  for (int j = 0; j < n; ++j) {
    for (long v = next;; ++v) {
      long block = binom_capped(cells - 1 - v, n - 1 - j, kInstanceCap);
      if (i < block) {
        pts.push_back(Point{Rat(v / h_), Rat(v % h_)});
        next = v + 1;
        break;
      }
      i -= block;
    }
  }
  return pts;
}

RandomSource::RandomSource(const SweepConfig& cfg) : cfg_(cfg) {
  if (cfg_.n_min < 2 || cfg_.n_max < cfg_.n_min)
    throw std::invalid_argument("invalid point-count range");
  if (cfg_.sample_count < 0 || cfg_.sample_count > kInstanceCap)
    throw std::invalid_argument("sweep too large");
  if (cfg_.coord_bound < 0) throw std::invalid_argument("negative coordinate bound");
  const long side = cfg_.coord_bound + 1;
  if (cfg_.distinct_coords) {
    if (cfg_.n_max > side) throw std::invalid_argument("cannot avoid duplicates");
  } else if (side <= 100'000 && long(cfg_.n_max) > side * side) {
    throw std::invalid_argument("cannot avoid duplicates");
  }
}

std::vector<Point> RandomSource::instance(long i) const {
  std::mt19937_64 rng(mix_seed(cfg_.seed, std::uint64_t(i)));
  const std::uint64_t side = std::uint64_t(cfg_.coord_bound) + 1;
  const int n =
      cfg_.n_min + int(bounded_rand(rng, std::uint64_t(cfg_.n_max - cfg_.n_min) + 1));
  std::vector<Point> pts;
  pts.reserve(n);
  if (cfg_.distinct_coords) {
    auto draw_distinct = [&](int count) {
      std::set<std::uint64_t> used;
      std::vector<long> vals;
      while (int(vals.size()) < count) {
        std::uint64_t v = bounded_rand(rng, side);
        if (used.insert(v).second) vals.push_back(long(v));
      }
      return vals;
    };
    std::vector<long> xs = draw_distinct(n);
    std::vector<long> ys = draw_distinct(n);
    for (int j = n - 1; j > 0; --j) {
      std::swap(ys[j], ys[bounded_rand(rng, std::uint64_t(j) + 1)]);
    }
    for (int j = 0; j < n; ++j) pts.push_back(Point{Rat(xs[j]), Rat(ys[j])});
  } else {
    std::set<std::pair<long, long>> used;
    while (int(pts.size()) < n) {
      long x = long(bounded_rand(rng, side));
      long y = long(bounded_rand(rng, side));
      if (used.emplace(x, y).second) pts.push_back(Point{Rat(x), Rat(y)});
    }
  }
  return pts;
}

namespace {

// Per-instance digest kept small so large sweeps stay in memory; witness
// points are regenerated from the source when needed.
struct Slot {
  int n = 0;
  long lines = 0;
  std::uint8_t universal = 0;
  std::uint8_t bound_violation = 0;
  std::uint8_t anomaly = 0;
  std::uint8_t oracle_failed = 0;
  std::uint8_t outdeg_reading_failed = 0;
  std::uint8_t pruned_below_n = 0;
};

struct PendingHit {
  long index;
  std::string kind, detail;
};

std::unique_ptr<InstanceSource> make_source(const SweepConfig& cfg) {
  if (cfg.mode == SweepMode::ExhaustiveGrid)
    return std::make_unique<GridExhaustiveSource>(cfg);
  return std::make_unique<RandomSource>(cfg);
}

}  // namespace

SweepResult run_sweep(const SweepConfig& cfg) {
  std::unique_ptr<InstanceSource> source = make_source(cfg);
  const long total = source->count();
  std::vector<Slot> slots(static_cast<std::size_t>(total));
  std::vector<PendingHit> pending;
  std::map<std::string, long> check_tally;
  std::mutex pending_mu;
  std::atomic<long> cursor{0};

  auto work = [&]() {
    for (;;) {
      const long i = cursor.fetch_add(1);
      if (i >= total) return;
      Slot& slot = slots[std::size_t(i)];
      std::vector<PendingHit> local;
      std::vector<std::string> local_checks;
      try {
        PointSet X(source->instance(i));
        slot.n = X.size();
        VerificationReport rep = verify_theorem(X);
        slot.lines = rep.distinct_line_count;
        slot.universal = rep.universal ? 1 : 0;
        if (!rep.universal) {
          slot.outdeg_reading_failed = rep.audit.A_outdeg_ok ? 0 : 1;
          slot.pruned_below_n = rep.pruned_at_least_n ? 0 : 1;
        }
        if (!rep.universal && !rep.bound_holds) {
          slot.bound_violation = 1;
          local.push_back({i, "bound",
                           "distinct line count below ceil(n/2)"});
        }
        if (!rep.anomalies.empty()) {
          slot.anomaly = 1;
          std::string joined;
          for (const Anomaly& an : rep.anomalies) {
            if (!joined.empty()) joined += "; ";
            joined += an.check + ": " + an.detail;
            local_checks.push_back(an.check);
          }
          local.push_back({i, "anomaly", joined});
        }
        if (cfg.check_oracle) {
          LineCatalog direct = enumerate_lines(X, MetricKind::L1);
          LineCatalog via_matrix =
              lines_from_matrix(matrix_from_points(X, MetricKind::L1));
          if (auto diff = catalog_difference(direct, via_matrix)) {
            slot.oracle_failed = 1;
            local.push_back({i, "oracle", *diff});
          }
        }
        if (cfg.check_linf) {
          try {
            LineCount lc = linf_line_count(X);
            if (!lc.has_universal && lc.count < (X.size() + 1) / 2) {
              slot.bound_violation = 1;
              local.push_back({i, "linf-bound",
                               "rotated line count below ceil(n/2)"});
            }
          } catch (const oracle_mismatch& e) {
            slot.oracle_failed = 1;
            local.push_back({i, "rotation", e.what()});
          }
        }
      } catch (const std::exception& e) {
        slot.anomaly = 1;
        local.push_back({i, "exception", e.what()});
      }
      if (!local.empty() || !local_checks.empty()) {
        std::lock_guard<std::mutex> lock(pending_mu);
        for (PendingHit& h : local) pending.push_back(std::move(h));
        for (std::string& c : local_checks) ++check_tally[std::move(c)];
      }
    }
  };

  const int workers = std::max(1, cfg.workers);
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(std::size_t(workers));
    for (int t = 0; t < workers; ++t) pool.emplace_back(work);
    for (std::thread& t : pool) t.join();
  }

  SweepResult out;
  out.instances = total;
  std::map<std::pair<int, long>, long> histo;
  for (long i = 0; i < total; ++i) {
    const Slot& s = slots[std::size_t(i)];
    out.universal_count += s.universal;
    out.bound_violations += s.bound_violation;
    out.anomaly_instances += s.anomaly;
    out.oracle_failures += s.oracle_failed;
    out.outdeg_reading_failures += s.outdeg_reading_failed;
    out.pruned_below_n += s.pruned_below_n;
    ++histo[{s.n, s.lines}];
    if (!s.universal && s.n > 0) {
      Rat ratio(s.lines, s.n);
      ratio.canonicalize();
      if (!out.min_ratio || ratio < *out.min_ratio) {
        out.min_ratio = ratio;
        out.min_ratio_index = i;
      }
    }
  }
  if (out.min_ratio_index >= 0)
    out.min_ratio_points = source->instance(out.min_ratio_index);
  for (auto& [check, count] : check_tally)
    out.anomaly_checks.emplace_back(check, count);
  for (auto& [key, count] : histo)
    out.histogram.push_back(HistogramRow{key.first, key.second, count});

  std::sort(pending.begin(), pending.end(),
            [](const PendingHit& a, const PendingHit& b) {
              if (a.index != b.index) return a.index < b.index;
              return a.kind < b.kind;
            });
  for (PendingHit& h : pending) {
    SweepHit hit;
    hit.index = h.index;
    hit.kind = std::move(h.kind);
    hit.detail = std::move(h.detail);
    hit.points = source->instance(h.index);
    if (!cfg.witness_dir.empty()) {
      std::string path =
          cfg.witness_dir + "/witness_" + std::to_string(h.index) + ".txt";
      std::ofstream f(path);
      if (!f) throw std::runtime_error("cannot write witness file " + path);
      f << canonical_point_text(hit.points);
    }
    out.hits.push_back(std::move(hit));
  }
  return out;
}

}  // namespace l1lines
