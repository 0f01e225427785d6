#pragma once

#include <array>
#include <utility>
#include <vector>

#include "l1lines/geometry.hpp"

namespace l1lines {

// The line of a generating pair: every point z such that one of u, v, z lies
// metrically between the other two, plus u and v themselves.
struct Line {
  std::vector<int> members;  // sorted indices into the generating PointSet
  std::pair<int, int> generator;  // u < v
  MetricKind metric;
};

// All distinct lines of a point set, keyed by member set. Entries are sorted
// by member set; each keeps every generating pair (sorted).
struct LineCatalog {
  struct Entry {
    std::vector<int> members;
    std::vector<std::pair<int, int>> generators;
  };
  std::vector<Entry> entries;
  MetricKind metric = MetricKind::L1;
  int n = 0;
  // Generating-pair totals by PairClass (indexed by static_cast<int>).
  std::array<long, 4> generator_totals{0, 0, 0, 0};

  bool has_universal() const;
  const Entry* find(const std::vector<int>& members) const;
};

struct LineCount {
  long count = 0;
  bool has_universal = false;
};

Line line_of(const PointSet& X, int u, int v, MetricKind m);
// Throws std::invalid_argument("too few points") when |X| < 2.
LineCatalog enumerate_lines(const PointSet& X, MetricKind m);
bool is_universal(const Line& l, const PointSet& X);
LineCount count_distinct_lines(const PointSet& X, MetricKind m);

}  // namespace l1lines
