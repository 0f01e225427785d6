#include "l1lines/arrows.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace l1lines {

namespace {

bool class_leq(const Point& p, const Point& q, PairClass cls) {
  return cls == PairClass::Increasing ? leq_I(p, q) : leq_D(p, q);
}

bool class_less(const Point& p, const Point& q, PairClass cls) {
  return cls == PairClass::Increasing ? less_I(p, q) : less_D(p, q);
}

std::pair<int, int> orient(const PointSet& X, int i, int j, PairClass cls) {
  return class_leq(X[i], X[j], cls) ? std::pair{i, j} : std::pair{j, i};
}

}  // namespace

bool ArrowGraph::contains(const Arrow& a) const {
  return std::find(arrows.begin(), arrows.end(), a) != arrows.end();
}

std::vector<LineClass> line_classes(const PointSet& X, PairClass cls) {
  if (cls != PairClass::Increasing && cls != PairClass::Decreasing)
    throw std::invalid_argument("line classes exist only for increasing/decreasing pairs");
  std::map<std::vector<int>, std::vector<std::pair<int, int>>> grouped;
  for (int u = 0; u < X.size(); ++u) {
    for (int v = u + 1; v < X.size(); ++v) {
      if (classify_pair(X[u], X[v]) != cls) continue;
      Line l = line_of(X, u, v, MetricKind::L1);
      grouped[std::move(l.members)].push_back(orient(X, u, v, cls));
    }
  }
  std::vector<LineClass> out;
  out.reserve(grouped.size());
  for (auto& [members, pairs] : grouped) {
    std::sort(pairs.begin(), pairs.end());
    out.push_back({members, std::move(pairs)});
  }
  return out;
}

std::strong_ordering pair_cmp_star(const PointSet& X, std::pair<int, int> p1,
                                   std::pair<int, int> p2, PairClass cls) {
  p1 = orient(X, p1.first, p1.second, cls);
  p2 = orient(X, p2.first, p2.second, cls);
  const Point& h1 = X[p1.second];
  const Point& h2 = X[p2.second];
  if (h1 != h2) {
    if (class_less(h1, h2, cls)) return std::strong_ordering::less;
    if (class_less(h2, h1, cls)) return std::strong_ordering::greater;
    throw std::invalid_argument("incomparable");
  }
  const Point& t1 = X[p1.first];
  const Point& t2 = X[p2.first];
  if (t1 == t2) return std::strong_ordering::equal;
  // Equal heads: the pair with the larger tail comes first.
  if (class_less(t2, t1, cls)) return std::strong_ordering::less;
  if (class_less(t1, t2, cls)) return std::strong_ordering::greater;
  throw std::invalid_argument("incomparable");
}

bool pair_leq_star(const PointSet& X, std::pair<int, int> p1,
                   std::pair<int, int> p2, PairClass cls) {
  return pair_cmp_star(X, p1, p2, cls) <= 0;
}

namespace {

std::vector<Arrow> class_arrows(const PointSet& X, PairClass cls) {
  ArrowColor color =
      cls == PairClass::Increasing ? ArrowColor::Blue : ArrowColor::Red;
  std::vector<Arrow> out;
  for (const LineClass& lc : line_classes(X, cls)) {
    std::pair<int, int> least = lc.pairs.front();
    for (const auto& p : lc.pairs)
      if (pair_cmp_star(X, p, least, cls) < 0) least = p;
    // Increasing/decreasing pairs are strictly ordered in their class order,
    // so the least pair always yields an arrow; keep the guard anyway.
    if (!class_less(X[least.first], X[least.second], cls)) continue;
    out.push_back({least.first, least.second, color});
  }
  return out;
}

}  // namespace

std::vector<Arrow> blue_arrows(const PointSet& X) {
  return class_arrows(X, PairClass::Increasing);
}

std::vector<Arrow> red_arrows(const PointSet& X) {
  return class_arrows(X, PairClass::Decreasing);
}

ArrowGraph build_graph(const PointSet& X) {
  ArrowGraph g;
  g.n = X.size();
  g.arrows = blue_arrows(X);
  std::vector<Arrow> red = red_arrows(X);
  g.arrows.insert(g.arrows.end(), red.begin(), red.end());
  g.outdeg.assign(g.n, 0);
  g.indeg.assign(g.n, 0);
  for (const Arrow& a : g.arrows) {
    g.outdeg[a.tail]++;
    g.indeg[a.head]++;
  }
  return g;
}

std::vector<CoincidingPair> coinciding_pairs(const PointSet& X,
                                             const ArrowGraph& g,
                                             const LineCatalog& catalog) {
  (void)catalog;  // arrows carry their generating pair; lines recomputed here
  std::map<std::vector<int>, Arrow> blue_by_line, red_by_line;
  for (const Arrow& a : g.arrows) {
    Line l = line_of(X, a.tail, a.head, MetricKind::L1);
    auto& slot = a.color == ArrowColor::Blue ? blue_by_line : red_by_line;
    slot.emplace(std::move(l.members), a);
  }
  std::vector<CoincidingPair> out;
  for (const auto& [members, blue] : blue_by_line) {
    auto it = red_by_line.find(members);
    if (it == red_by_line.end()) continue;
    CoincidingPair cp;
    cp.blue = blue;
    cp.red = it->second;
    cp.members = members;
    const Point& p = X[blue.tail];
    const Point& q = X[blue.head];
    const Point& c = X[cp.red.tail];
    const Point& d = X[cp.red.head];
    // Diagonals of one rectangle: blue joins lower-left to upper-right,
    // red joins upper-left to lower-right.
    cp.rectangle_ok =
        c.x == p.x && c.y == q.y && d.x == q.x && d.y == p.y;
    out.push_back(std::move(cp));
  }
  return out;
}

ArrowGraph pruned_graph(const ArrowGraph& g,
                        const std::vector<CoincidingPair>& coinciding) {
  ArrowGraph out;
  out.n = g.n;
  for (const Arrow& a : g.arrows) {
    bool drop = false;
    for (const CoincidingPair& cp : coinciding)
      if (a == cp.blue) drop = true;
    if (!drop) out.arrows.push_back(a);
  }
  out.outdeg.assign(out.n, 0);
  out.indeg.assign(out.n, 0);
  for (const Arrow& a : out.arrows) {
    out.outdeg[a.tail]++;
    out.indeg[a.head]++;
  }
  return out;
}

bool nesting_check(const PointSet& X,
                   const std::vector<CoincidingPair>& coinciding) {
  if (coinciding.size() < 2) return true;
  std::vector<CoincidingPair> sorted = coinciding;
  for (const CoincidingPair& cp : sorted)
    if (!cp.rectangle_ok) return false;
  // Realize the would-be <_D chain on blue tails: x ascending, y descending.
  std::sort(sorted.begin(), sorted.end(),
            [&](const CoincidingPair& l, const CoincidingPair& r) {
              const Point& a = X[l.blue.tail];
              const Point& b = X[r.blue.tail];
              if (a.x != b.x) return a.x < b.x;
              return a.y > b.y;
            });
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    const CoincidingPair& prev = sorted[i - 1];
    const CoincidingPair& cur = sorted[i];
    if (!less_D(X[prev.blue.tail], X[cur.blue.tail])) return false;
    if (!less_D(X[cur.blue.head], X[prev.blue.head])) return false;
    if (!less_I(X[prev.red.tail], X[cur.red.tail])) return false;
    if (!less_I(X[cur.red.head], X[prev.red.head])) return false;
  }
  return true;
}

}  // namespace l1lines
