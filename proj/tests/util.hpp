#pragma once

// Shared helpers for the test binaries: fixture construction and bridging
// between the library's exact-rational points and the integer test oracle.

#include <stdexcept>
#include <utility>
#include <vector>

#include "l1lines/geometry.hpp"
#include "oracle.hpp"

inline l1lines::PointSet mkset(const std::vector<std::pair<long, long>>& v) {
  std::vector<l1lines::Point> pts;
  pts.reserve(v.size());
  for (auto [x, y] : v)
    pts.push_back(l1lines::Point{l1lines::Rat(x), l1lines::Rat(y)});
  return l1lines::PointSet(pts);
}

inline std::vector<testoracle::Pt> to_oracle(const l1lines::PointSet& X) {
  std::vector<testoracle::Pt> out;
  out.reserve(static_cast<std::size_t>(X.size()));
  for (const l1lines::Point& p : X.points()) {
    if (p.x.get_den() != 1 || p.y.get_den() != 1)
      throw std::invalid_argument("oracle bridge needs integer coordinates");
    out.push_back(
        testoracle::Pt{p.x.get_num().get_si(), p.y.get_num().get_si()});
  }
  return out;
}

// Library catalog reduced to the oracle's shape for whole-catalog equality.
template <typename Catalog>
std::set<std::vector<int>> member_sets(const Catalog& cat) {
  std::set<std::vector<int>> out;
  for (const auto& e : cat.entries) out.insert(e.members);
  return out;
}
