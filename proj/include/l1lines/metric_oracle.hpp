#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "l1lines/lines.hpp"

namespace l1lines {

// Raised when two supposedly equivalent computations disagree.
struct oracle_mismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Symmetric distance table; the generic entry point for line enumeration on
// any finite metric, planar or not.
struct DistanceMatrix {
  int n = 0;
  std::vector<Rat> d;  // row-major n*n

  const Rat& at(int i, int j) const { return d[static_cast<std::size_t>(i) * n + j]; }
  Rat& at(int i, int j) { return d[static_cast<std::size_t>(i) * n + j]; }
};

DistanceMatrix matrix_from_points(const PointSet& X, MetricKind m);

// Validates the metric axioms (throws std::invalid_argument("not a metric")),
// then enumerates lines purely from the table. Deliberately independent of
// the coordinate-based path so the two can cross-check each other.
LineCatalog lines_from_matrix(const DistanceMatrix& D);

// (x, y) -> (x+y, x-y). Doubles every Chebyshev distance into a taxicab one.
PointSet rotate_45(const PointSet& X);

// Chebyshev line count, computed from the distance table and again through
// the rotation; throws oracle_mismatch("rotation reduction violated") if the
// two catalogs differ.
LineCount linf_line_count(const PointSet& X);

// First difference between two catalogs (member sets and generator lists),
// or nullopt when identical.
std::optional<std::string> catalog_difference(const LineCatalog& a,
                                              const LineCatalog& b);

}  // namespace l1lines
