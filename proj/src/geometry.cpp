#include "l1lines/geometry.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace l1lines {

Rat parse_rational(const std::string& token) {
  // Reject forms mpq set_str would tolerate but the file format does not
  // (leading '+', whitespace) and anything it rejects outright ("1.5", "").
  if (token.empty()) throw std::invalid_argument("empty rational token");
  std::size_t i = token[0] == '-' ? 1 : 0;
  bool seen_digit = false, seen_slash = false;
  for (; i < token.size(); ++i) {
    char c = token[i];
    if (c == '/' && seen_digit && !seen_slash) {
      seen_slash = true;
      seen_digit = false;
      if (i + 1 < token.size() && token[i + 1] == '-') ++i;  // "1/-2" is fine
      continue;
    }
    if (c < '0' || c > '9')
      throw std::invalid_argument("malformed rational '" + token + "'");
    seen_digit = true;
  }
  if (!seen_digit) throw std::invalid_argument("malformed rational '" + token + "'");
  Rat r;
  if (r.set_str(token, 10) != 0)
    throw std::invalid_argument("malformed rational '" + token + "'");
  if (r.get_den() == 0)
    throw std::invalid_argument("zero denominator in '" + token + "'");
  r.canonicalize();
  return r;
}

std::string rat_str(const Rat& r) { return r.get_str(); }

bool lex_less(const Point& p, const Point& q) {
  if (p.x != q.x) return p.x < q.x;
  return p.y < q.y;
}

PointSet::PointSet(std::vector<Point> pts) : pts_(std::move(pts)) {
  std::vector<int> order(pts_.size());
  for (std::size_t i = 0; i < pts_.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (pts_[a] == pts_[b]) return a < b;
    return lex_less(pts_[a], pts_[b]);
  });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (pts_[order[i - 1]] == pts_[order[i]]) {
      throw std::invalid_argument(
          "duplicate point at indices " + std::to_string(order[i - 1]) +
          " and " + std::to_string(order[i]));
    }
  }
}

Rat l1_distance(const Point& p, const Point& q) {
  return rat_abs(p.x - q.x) + rat_abs(p.y - q.y);
}

Rat linf_distance(const Point& p, const Point& q) {
  Rat dx = rat_abs(p.x - q.x), dy = rat_abs(p.y - q.y);
  return dx > dy ? dx : dy;
}

Rat distance(MetricKind m, const Point& p, const Point& q) {
  return m == MetricKind::L1 ? l1_distance(p, q) : linf_distance(p, q);
}

bool is_between(const Point& x, const Point& z, const Point& y, MetricKind m) {
  if (z == x || z == y || x == y) return false;
  return distance(m, x, y) == distance(m, x, z) + distance(m, z, y);
}

PairClass classify_pair(const Point& p, const Point& q) {
  if (p == q) throw std::invalid_argument("degenerate pair");
  if (p.y == q.y) return PairClass::Horizontal;
  if (p.x == q.x) return PairClass::Vertical;
  Rat prod = (q.x - p.x) * (q.y - p.y);
  return prod > 0 ? PairClass::Increasing : PairClass::Decreasing;
}

bool leq_I(const Point& c, const Point& d) { return c.x <= d.x && c.y <= d.y; }
bool leq_D(const Point& c, const Point& d) { return c.x <= d.x && c.y >= d.y; }
bool less_I(const Point& c, const Point& d) { return leq_I(c, d) && c != d; }
bool less_D(const Point& c, const Point& d) { return leq_D(c, d) && c != d; }

bool Interval::contains(const Rat& v) const {
  switch (lo.kind) {
    case IntervalBound::Open:
      if (!(v > lo.value)) return false;
      break;
    case IntervalBound::Closed:
      if (!(v >= lo.value)) return false;
      break;
    case IntervalBound::Unbounded:
      break;
  }
  switch (hi.kind) {
    case IntervalBound::Open:
      if (!(v < hi.value)) return false;
      break;
    case IntervalBound::Closed:
      if (!(v <= hi.value)) return false;
      break;
    case IntervalBound::Unbounded:
      break;
  }
  return true;
}

Interval Interval::all() { return {IntervalBound::unbounded(), IntervalBound::unbounded()}; }

Interval Interval::point(Rat v) {
  return {IntervalBound::closed(v), IntervalBound::closed(v)};
}

Interval Interval::open_between(const Rat& a, const Rat& b) {
  const Rat& lo = a < b ? a : b;
  const Rat& hi = a < b ? b : a;
  return {IntervalBound::open(lo), IntervalBound::open(hi)};
}

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

Region Region::rectangle(const Point& c1, const Point& c2) {
  require(c1.x != c2.x && c1.y != c2.y, "rectangle corners must differ in both coordinates");
  return {Kind::Rectangle, Interval::open_between(c1.x, c2.x),
          Interval::open_between(c1.y, c2.y)};
}

Region Region::strip(const Point& p, const Point& q) {
  if (p.y == q.y) {
    require(p.x != q.x, "strip corners coincide");
    return {Kind::Strip, Interval::open_between(p.x, q.x), Interval::all()};
  }
  require(p.x == q.x, "strip corners must form a horizontal or vertical pair");
  return {Kind::Strip, Interval::all(), Interval::open_between(p.y, q.y)};
}

Region Region::upper_half_strip(const Point& p, const Point& q) {
  require(p.y == q.y && p.x != q.x, "upper half-strip needs a horizontal pair");
  return {Kind::HalfStrip, Interval::open_between(p.x, q.x),
          {IntervalBound::open(p.y), IntervalBound::unbounded()}};
}

Region Region::lower_half_strip(const Point& p, const Point& q) {
  require(p.y == q.y && p.x != q.x, "lower half-strip needs a horizontal pair");
  return {Kind::HalfStrip, Interval::open_between(p.x, q.x),
          {IntervalBound::unbounded(), IntervalBound::open(p.y)}};
}

Region Region::left_half_strip(const Point& p, const Point& q) {
  require(p.x == q.x && p.y != q.y, "left half-strip needs a vertical pair");
  return {Kind::HalfStrip, {IntervalBound::unbounded(), IntervalBound::open(p.x)},
          Interval::open_between(p.y, q.y)};
}

Region Region::right_half_strip(const Point& p, const Point& q) {
  require(p.x == q.x && p.y != q.y, "right half-strip needs a vertical pair");
  return {Kind::HalfStrip, {IntervalBound::open(p.x), IntervalBound::unbounded()},
          Interval::open_between(p.y, q.y)};
}

Region Region::quadrant(const Point& a, int k) {
  require(k >= 1 && k <= 4, "quadrant index must be 1..4");
  Interval px{IntervalBound::open(a.x), IntervalBound::unbounded()};
  Interval nx{IntervalBound::unbounded(), IntervalBound::open(a.x)};
  Interval py{IntervalBound::open(a.y), IntervalBound::unbounded()};
  Interval ny{IntervalBound::unbounded(), IntervalBound::open(a.y)};
  switch (k) {
    case 1: return {Kind::Quadrant, px, py};
    case 2: return {Kind::Quadrant, nx, py};
    case 3: return {Kind::Quadrant, nx, ny};
    default: return {Kind::Quadrant, px, ny};
  }
}

namespace {

Region::Kind segment_kind(const IntervalBound& lo, const IntervalBound& hi) {
  if (lo.kind == IntervalBound::Unbounded || hi.kind == IntervalBound::Unbounded)
    return Region::Kind::HalfLine;
  if (lo.kind == IntervalBound::Open && hi.kind == IntervalBound::Open)
    return Region::Kind::SegmentOpen;
  return Region::Kind::SegmentHalfOpen;
}

}  // namespace

Region Region::segment_x(Rat y, IntervalBound xlo, IntervalBound xhi) {
  Kind k = segment_kind(xlo, xhi);
  return {k, {std::move(xlo), std::move(xhi)}, Interval::point(std::move(y))};
}

Region Region::segment_y(Rat x, IntervalBound ylo, IntervalBound yhi) {
  Kind k = segment_kind(ylo, yhi);
  return {k, Interval::point(std::move(x)), {std::move(ylo), std::move(yhi)}};
}

bool Region::contains(const Point& p) const {
  return ix.contains(p.x) && iy.contains(p.y);
}

bool region_contains(const Region& r, const Point& p) { return r.contains(p); }

bool region_empty(const Region& r, const PointSet& X,
                  const std::vector<int>& exclude) {
  for (int i = 0; i < X.size(); ++i) {
    if (std::find(exclude.begin(), exclude.end(), i) != exclude.end()) continue;
    if (r.contains(X[i])) return false;
  }
  return true;
}

}  // namespace l1lines
