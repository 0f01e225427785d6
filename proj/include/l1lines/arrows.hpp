#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "l1lines/lines.hpp"

namespace l1lines {

enum class ArrowColor { Blue, Red };

// Blue: tail <_I head, least increasing pair of its line class.
// Red:  tail <_D head, least decreasing pair of its line class.
struct Arrow {
  int tail = -1, head = -1;
  ArrowColor color = ArrowColor::Blue;
  bool operator==(const Arrow& o) const {
    return tail == o.tail && head == o.head && color == o.color;
  }
};

struct ArrowGraph {
  int n = 0;
  std::vector<Arrow> arrows;  // blue arrows first, then red; class order each
  std::vector<int> outdeg, indeg;

  bool contains(const Arrow& a) const;
  bool isolated(int v) const { return outdeg[v] + indeg[v] == 0; }
  long edge_count() const { return static_cast<long>(arrows.size()); }
};

// A blue and a red arrow whose classes induce the same line. Lemma-wise these
// must be the two diagonals of one axis-parallel rectangle.
struct CoincidingPair {
  Arrow blue, red;
  std::vector<int> members;  // the shared line
  bool rectangle_ok = false;
};

// One equivalence class: all pairs of the given kind inducing one line.
// Pairs are stored (lo, hi) in the class's coordinate order.
struct LineClass {
  std::vector<int> members;
  std::vector<std::pair<int, int>> pairs;
};

// Classes sorted by line member set. `cls` must be Increasing or Decreasing.
std::vector<LineClass> line_classes(const PointSet& X, PairClass cls);

// Order on same-class pairs: smaller head first; equal heads, larger tail
// first. Throws std::invalid_argument("incomparable") across classes.
std::strong_ordering pair_cmp_star(const PointSet& X, std::pair<int, int> p1,
                                   std::pair<int, int> p2, PairClass cls);
bool pair_leq_star(const PointSet& X, std::pair<int, int> p1,
                   std::pair<int, int> p2, PairClass cls);

std::vector<Arrow> blue_arrows(const PointSet& X);
std::vector<Arrow> red_arrows(const PointSet& X);
ArrowGraph build_graph(const PointSet& X);

// All (blue, red) arrow pairs with identical induced lines, sorted by line.
std::vector<CoincidingPair> coinciding_pairs(const PointSet& X,
                                             const ArrowGraph& g,
                                             const LineCatalog& catalog);

// Deletes the blue arrow of every coinciding pair.
ArrowGraph pruned_graph(const ArrowGraph& g,
                        const std::vector<CoincidingPair>& coinciding);

// Rectangle corner chains: with pairs renumbered by blue tail, the blue tails
// ascend in <_D, blue heads descend, red tails ascend in <_I, red heads
// descend. False is a falsification signal, not an error.
bool nesting_check(const PointSet& X,
                   const std::vector<CoincidingPair>& coinciding);

}  // namespace l1lines
