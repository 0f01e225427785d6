#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "l1lines/lines.hpp"
#include "l1lines/search.hpp"
#include "util.hpp"

using namespace l1lines;

namespace {

// Library line catalog vs the brute-force oracle, whole-catalog equality.
void check_against_oracle(const PointSet& X) {
  auto P = to_oracle(X);
  for (auto [m, od] : {std::pair{MetricKind::L1, &testoracle::l1},
                       std::pair{MetricKind::Linf, &testoracle::linf}}) {
    LineCatalog cat = enumerate_lines(X, m);
    CHECK(member_sets(cat) == testoracle::all_lines(P, od));
    LineCount lc = count_distinct_lines(X, m);
    CHECK(lc.count == static_cast<long>(cat.entries.size()));
    CHECK(lc.has_universal == cat.has_universal());
  }
}

}  // namespace

TEST_CASE("single-pair lines match the oracle on fixtures") {
  PointSet X = mkset({{0, 0}, {2, 2}, {0, 2}, {2, 0}, {1, 1}, {3, 1}});
  auto P = to_oracle(X);
  for (int u = 0; u < X.size(); ++u)
    for (int v = u + 1; v < X.size(); ++v) {
      Line l = line_of(X, u, v, MetricKind::L1);
      CHECK(l.members == testoracle::line(P, u, v, &testoracle::l1));
      CHECK(l.generator == std::pair{u, v});
      Line li = line_of(X, u, v, MetricKind::Linf);
      CHECK(li.members == testoracle::line(P, u, v, &testoracle::linf));
    }
}

TEST_CASE("catalogs equal the oracle on the frozen fixtures") {
  check_against_oracle(mkset({{0, 0}, {2, 2}, {0, 2}, {2, 0}, {1, 1}, {3, 1}}));
  check_against_oracle(mkset({{0, 0}, {1, 1}, {2, 2}, {0, 3}}));
  check_against_oracle(mkset({{0, 1}, {0, 3}, {1, 0}, {2, 3}, {3, 2}}));
  check_against_oracle(mkset({{0, 0}, {0, 2}, {1, 3}, {2, 0}, {3, 1}}));
  check_against_oracle(mkset({{0, 1}, {0, 3}, {1, 4}, {2, 1}, {3, 0}, {3, 2}}));
  check_against_oracle(mkset({{0, 0}, {2, 0}, {1, 4}, {2, 2}, {3, 3}, {-1, 1}}));
  check_against_oracle(mkset({{0, 0}, {1, 2}, {2, 1}, {3, 0}}));
}

TEST_CASE("catalogs equal the oracle on every 3x3 grid instance") {
  SweepConfig cfg;
  cfg.grid_width = cfg.grid_height = 3;
  cfg.n_min = 3;
  cfg.n_max = 4;
  GridExhaustiveSource src(cfg);
  REQUIRE(src.count() == 210);  // C(9,3) + C(9,4)
  for (long i = 0; i < src.count(); ++i)
    check_against_oracle(PointSet(src.instance(i)));
}

TEST_CASE("catalogs equal the oracle on seeded random sets") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 3 + int(rng() % 6);
    std::set<std::pair<long, long>> seen;
    while (static_cast<int>(seen.size()) < n)
      seen.insert({long(rng() % 15) - 7, long(rng() % 15) - 7});
    check_against_oracle(
        mkset(std::vector<std::pair<long, long>>(seen.begin(), seen.end())));
  }
}

TEST_CASE("rectangle-plus-two: frozen catalog shape") {
  PointSet X = mkset({{0, 0}, {2, 2}, {0, 2}, {2, 0}, {1, 1}, {3, 1}});
  LineCatalog cat = enumerate_lines(X, MetricKind::L1);
  CHECK(cat.entries.size() == 12);
  CHECK_FALSE(cat.has_universal());
  CHECK(cat.n == 6);
  // Generating-pair totals by class sum to C(6,2) = 15.
  CHECK(cat.generator_totals[int(PairClass::Increasing)] == 5);
  CHECK(cat.generator_totals[int(PairClass::Decreasing)] == 5);
  CHECK(cat.generator_totals[int(PairClass::Horizontal)] == 3);
  CHECK(cat.generator_totals[int(PairClass::Vertical)] == 2);
  // The rectangle's diagonals generate the same 5-member line.
  const LineCatalog::Entry* e = cat.find({0, 1, 2, 3, 4});
  REQUIRE(e != nullptr);
  CHECK(e->generators == std::vector<std::pair<int, int>>{{0, 1}, {2, 3}});
  CHECK(cat.find({0, 1, 2}) == nullptr);
}

TEST_CASE("generator totals always sum to C(n,2)") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + int(rng() % 7);
    std::set<std::pair<long, long>> seen;
    while (static_cast<int>(seen.size()) < n)
      seen.insert({long(rng() % 9), long(rng() % 9)});
    PointSet X =
        mkset(std::vector<std::pair<long, long>>(seen.begin(), seen.end()));
    LineCatalog cat = enumerate_lines(X, MetricKind::L1);
    long total = 0;
    for (long t : cat.generator_totals) total += t;
    CHECK(total == long(n) * (n - 1) / 2);
    long via_entries = 0;
    for (const auto& e : cat.entries) {
      via_entries += static_cast<long>(e.generators.size());
      CHECK(std::is_sorted(e.members.begin(), e.members.end()));
      CHECK(std::is_sorted(e.generators.begin(), e.generators.end()));
    }
    CHECK(via_entries == total);
    // Entries are sorted and unique by member set.
    for (std::size_t i = 1; i < cat.entries.size(); ++i)
      CHECK(cat.entries[i - 1].members < cat.entries[i].members);
  }
}

TEST_CASE("collinear and two-point sets have a universal line") {
  PointSet X = mkset({{0, 0}, {1, 1}, {2, 2}});
  LineCount lc = count_distinct_lines(X, MetricKind::L1);
  CHECK(lc.has_universal);
  CHECK(lc.count == 1);

  PointSet two = mkset({{0, 0}, {5, -3}});
  LineCount lc2 = count_distinct_lines(two, MetricKind::L1);
  CHECK(lc2.count == 1);
  CHECK(lc2.has_universal);
}

TEST_CASE("the eight-point double rectangle is universal") {
  PointSet X =
      mkset({{0, 1}, {3, 2}, {0, 2}, {3, 1}, {1, 0}, {2, 3}, {1, 3}, {2, 0}});
  LineCount lc = count_distinct_lines(X, MetricKind::L1);
  CHECK(lc.has_universal);
  CHECK(lc.count == 7);
}

TEST_CASE("universality is detected via is_universal") {
  PointSet X = mkset({{0, 0}, {1, 1}, {2, 2}, {0, 3}});
  Line l01 = line_of(X, 0, 1, MetricKind::L1);
  CHECK_FALSE(is_universal(l01, X));
  PointSet col = mkset({{0, 0}, {1, 1}, {3, 3}});
  CHECK(is_universal(line_of(col, 0, 1, MetricKind::L1), col));
}

TEST_CASE("too few points is an error") {
  PointSet one = mkset({{0, 0}});
  CHECK_THROWS_WITH_AS(enumerate_lines(one, MetricKind::L1), "too few points",
                       std::invalid_argument);
  CHECK_THROWS_AS(count_distinct_lines(one, MetricKind::L1),
                  std::invalid_argument);
}

TEST_CASE("Chebyshev lines differ from taxicab lines where expected") {
  // (3,3) is Chebyshev-between (0,0) and (4,2) but outside the taxicab box.
  PointSet X = mkset({{0, 0}, {4, 2}, {3, 3}, {2, 1}});
  Line l1line = line_of(X, 0, 1, MetricKind::L1);
  Line linfline = line_of(X, 0, 1, MetricKind::Linf);
  CHECK(l1line.members == std::vector<int>{0, 1, 3});
  CHECK(linfline.members == std::vector<int>{0, 1, 2, 3});
}
