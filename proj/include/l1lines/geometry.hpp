#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "l1lines/rational.hpp"

namespace l1lines {

enum class MetricKind { L1, Linf };

// How a pair of distinct points sits in the plane. Exactly one applies.
enum class PairClass { Increasing, Decreasing, Horizontal, Vertical };

struct Point {
  Rat x, y;
  bool operator==(const Point& o) const { return x == o.x && y == o.y; }
  bool operator!=(const Point& o) const { return !(*this == o); }
};

// (x, then y) — used only for deterministic tie-breaking, never for geometry.
bool lex_less(const Point& p, const Point& q);

// Finite point set with stable indices. Construction refuses duplicates.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::vector<Point> pts);

  int size() const { return static_cast<int>(pts_.size()); }
  const Point& operator[](int i) const { return pts_[i]; }
  const std::vector<Point>& points() const { return pts_; }

 private:
  std::vector<Point> pts_;
};

Rat l1_distance(const Point& p, const Point& q);
Rat linf_distance(const Point& p, const Point& q);
Rat distance(MetricKind m, const Point& p, const Point& q);

// z strictly between x and y: the three points are pairwise distinct and
// d(x,y) = d(x,z) + d(z,y).
bool is_between(const Point& x, const Point& z, const Point& y, MetricKind m);

// Throws std::invalid_argument("degenerate pair") when p == q.
PairClass classify_pair(const Point& p, const Point& q);

// Product partial orders: c <=_I d iff x(c)<=x(d) and y(c)<=y(d);
// c <=_D d iff x(c)<=x(d) and y(c)>=y(d).
bool leq_I(const Point& c, const Point& d);
bool leq_D(const Point& c, const Point& d);
bool less_I(const Point& c, const Point& d);
bool less_D(const Point& c, const Point& d);

// One interval endpoint; an interval per axis gives every region shape the
// analysis needs (boxes, strips, quadrants, axis-parallel segments, rays).
struct IntervalBound {
  enum Kind : std::uint8_t { Unbounded, Open, Closed };
  Kind kind = Unbounded;
  Rat value;

  static IntervalBound unbounded() { return {}; }
  static IntervalBound open(Rat v) { return {Open, std::move(v)}; }
  static IntervalBound closed(Rat v) { return {Closed, std::move(v)}; }
};

struct Interval {
  IntervalBound lo, hi;
  bool contains(const Rat& v) const;
  static Interval all();
  static Interval point(Rat v);
  // Open interval between min(a,b) and max(a,b).
  static Interval open_between(const Rat& a, const Rat& b);
};

struct Region {
  enum class Kind {
    Rectangle,
    Strip,
    HalfStrip,
    Quadrant,
    SegmentOpen,
    SegmentHalfOpen,
    HalfLine,
  };

  Kind kind;
  Interval ix, iy;

  // Open axis-parallel box; corners must differ in both coordinates.
  static Region rectangle(const Point& c1, const Point& c2);
  // For a horizontal pair: open vertical strip between the x's. For a
  // vertical pair: open horizontal strip between the y's.
  static Region strip(const Point& p, const Point& q);
  // Horizontal pair corners: the strip above / below the pair's height.
  static Region upper_half_strip(const Point& p, const Point& q);
  static Region lower_half_strip(const Point& p, const Point& q);
  // Vertical pair corners: the strip left / right of the pair's x.
  static Region left_half_strip(const Point& p, const Point& q);
  static Region right_half_strip(const Point& p, const Point& q);
  // Open quadrant k (1..4) of a, anticlockwise from (+,+).
  static Region quadrant(const Point& a, int k);
  // Horizontal segment at height y spanning [xlo, xhi] with given openness.
  static Region segment_x(Rat y, IntervalBound xlo, IntervalBound xhi);
  // Vertical segment at abscissa x.
  static Region segment_y(Rat x, IntervalBound ylo, IntervalBound yhi);

  bool contains(const Point& p) const;
};

bool region_contains(const Region& r, const Point& p);
// True when no point of X (minus the excluded indices) lies in r.
bool region_empty(const Region& r, const PointSet& X,
                  const std::vector<int>& exclude = {});

}  // namespace l1lines
