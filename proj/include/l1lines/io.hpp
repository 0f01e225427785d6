#pragma once

#include <cstdint>
#include <string>

#include "l1lines/metric_oracle.hpp"

namespace l1lines {

// Point files: one "<x> <y>" pair per line, integers or reduced "p/q"
// fractions, '#' comments and blank lines ignored. Errors cite line numbers;
// duplicates cite both occurrences.
std::vector<Point> parse_points_text(const std::string& text);
std::vector<Point> read_points_file(const std::string& path);

// Canonical serialization: reduced fractions, single spaces, one trailing
// newline. parse(canonical(pts)) == pts.
std::string canonical_point_text(const std::vector<Point>& pts);
std::string canonical_point_text(const PointSet& X);

// Matrix files: first token n, then n*n rationals row by row.
DistanceMatrix parse_matrix_text(const std::string& text);
DistanceMatrix read_matrix_file(const std::string& path);
std::string canonical_matrix_text(const DistanceMatrix& D);

std::string read_text_file(const std::string& path);

// FNV-1a, used to stamp reports with an input fingerprint.
std::uint64_t fnv1a64(const std::string& s);
std::string hash_hex(std::uint64_t h);

}  // namespace l1lines
