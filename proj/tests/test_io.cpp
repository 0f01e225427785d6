#include <cstdlib>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "l1lines/io.hpp"
#include "util.hpp"

using namespace l1lines;

namespace {

std::string data_path(const char* name) {
  const char* dir = std::getenv("L1LINES_DATA");
  REQUIRE(dir != nullptr);
  return std::string(dir) + "/" + name;
}

}  // namespace

TEST_CASE("point files: comments, blank lines, rationals, negatives") {
  std::string text =
      "# header comment\n"
      "\n"
      "0 0\n"
      "1/2 -3/4   # inline comment\n"
      "  -7 8\t\n";
  std::vector<Point> pts = parse_points_text(text);
  REQUIRE(pts.size() == 3);
  CHECK(pts[0] == Point{Rat(0), Rat(0)});
  CHECK(pts[1] == Point{Rat(1, 2), Rat(-3, 4)});
  CHECK(pts[2] == Point{Rat(-7), Rat(8)});
}

TEST_CASE("canonical text round-trips and stays reduced") {
  std::vector<Point> pts{Point{Rat(1, 2), Rat(-2)}, Point{Rat(0), Rat(5)}};
  std::string text = canonical_point_text(pts);
  CHECK(text == "1/2 -2\n0 5\n");
  CHECK(parse_points_text(text) == pts);
  CHECK(canonical_point_text(PointSet(pts)) == text);
  // Values that arrive unreduced ("-6/4") parse to reduced form and print
  // back reduced.
  CHECK(canonical_point_text(parse_points_text("2/4 -6/3\n")) == "1/2 -2\n");
}

TEST_CASE("parse errors cite line numbers") {
  CHECK_THROWS_WITH_AS(parse_points_text("0 0\n1/0 2\n"),
                       doctest::Contains("line 2"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_points_text("0 0\n3\n"),
                       doctest::Contains("expected two coordinates"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_points_text("1 2 3\n"),
                       doctest::Contains("trailing tokens"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_points_text("a b\n"), doctest::Contains("line 1"),
                       std::invalid_argument);
}

TEST_CASE("duplicate points cite both occurrences") {
  try {
    parse_points_text("1 1\n2 2\n# note\n1 1\n");
    FAIL("expected a duplicate-point error");
  } catch (const std::invalid_argument& e) {
    std::string msg = e.what();
    CHECK(msg.find("line 4") != std::string::npos);
    CHECK(msg.find("first seen on line 1") != std::string::npos);
  }
}

TEST_CASE("reading the golden files") {
  std::vector<Point> pts = read_points_file(data_path("rect_plus_two.txt"));
  CHECK(pts.size() == 6);
  CHECK(pts[5] == Point{Rat(3), Rat(1)});
  CHECK_THROWS_WITH_AS(read_points_file(data_path("bad_rational.txt")),
                       doctest::Contains("line 2"), std::invalid_argument);
  CHECK_THROWS_AS(read_points_file(data_path("duplicate.txt")),
                  std::invalid_argument);
  CHECK_THROWS_AS(read_points_file(data_path("no_such_file.txt")),
                  std::invalid_argument);
  std::vector<Point> rats = read_points_file(data_path("rationals.txt"));
  REQUIRE(rats.size() == 3);
  CHECK(rats[2] == Point{Rat(-3, 2), Rat(7)});
}

TEST_CASE("matrix files parse, canonicalize and validate") {
  DistanceMatrix D = read_matrix_file(data_path("matrix_triangle.txt"));
  CHECK(D.n == 3);
  CHECK(D.at(0, 1) == Rat(1));
  CHECK(D.at(2, 2) == Rat(0));
  std::string canon = canonical_matrix_text(D);
  DistanceMatrix again = parse_matrix_text(canon);
  CHECK(again.n == D.n);
  CHECK(again.d == D.d);
  // The bad matrix parses fine; the metric check lives in lines_from_matrix.
  DistanceMatrix bad = read_matrix_file(data_path("matrix_bad.txt"));
  CHECK_THROWS_WITH_AS(lines_from_matrix(bad), "not a metric",
                       std::invalid_argument);
}

TEST_CASE("matrix parse errors") {
  CHECK_THROWS_WITH_AS(parse_matrix_text(""), "empty matrix file",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_matrix_text("x"),
                       doctest::Contains("malformed matrix size"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_matrix_text("0"),
                       doctest::Contains("must be positive"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_matrix_text("2\n0 1\n1"),
                       doctest::Contains("ends after"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_matrix_text("2\n0 1\n1 0\n9"),
                       doctest::Contains("trailing tokens"),
                       std::invalid_argument);
  CHECK_THROWS_AS(parse_matrix_text("2\n0 1/0\n1 0\n"), std::invalid_argument);
}

TEST_CASE("fingerprints are stable") {
  CHECK(fnv1a64("") == 0xcbf29ce484222325ull);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cull);  // standard FNV-1a vector
  CHECK(hash_hex(0xcbf29ce484222325ull) == "cbf29ce484222325");
  CHECK(fnv1a64("0 0\n1 1\n") == fnv1a64("0 0\n1 1\n"));
  CHECK(fnv1a64("0 0\n1 1\n") != fnv1a64("0 0\n1 2\n"));
}
