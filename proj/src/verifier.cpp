#include "l1lines/verifier.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "l1lines/lines.hpp"

namespace l1lines {

const char* lemma_name(LemmaKind k) {
  switch (k) {
    case LemmaKind::TwoD: return "two-d";
    case LemmaKind::TwoArrows1: return "two-arrows-single-d";
    case LemmaKind::TwoEmptyQ: return "two-empty-quadrants";
    case LemmaKind::MirrorTwoD: return "mirror-two-d";
    case LemmaKind::MirrorTwoArrows1: return "mirror-two-arrows-single-d";
    case LemmaKind::MirrorTwoEmptyQ: return "mirror-two-empty-quadrants";
  }
  return "?";
}

char placement_name(Placement p) {
  switch (p) {
    case Placement::A: return 'a';
    case Placement::B: return 'b';
    case Placement::C: return 'c';
    case Placement::D: return 'd';
  }
  return '?';
}

namespace {

bool is_special(const PointSet& X, int a) {
  // Quadrants 1, 2 and 4 empty; only the third quadrant may hold points.
  for (int q : {1, 2, 4}) {
    if (!region_empty(Region::quadrant(X[a], q), X)) return false;
  }
  return true;
}

Anomaly make_anomaly(std::string check, std::string detail,
                     std::vector<int> vertices = {}) {
  return Anomaly{std::move(check), std::move(detail), std::move(vertices)};
}

}  // namespace

NormalizeResult reflection_normalize(const PointSet& X) {
  NormalizeResult out{X, false, {}};
  const int n = X.size();
  std::vector<int> specials;
  for (int a = 0; a < n; ++a) {
    if (is_special(X, a)) specials.push_back(a);
  }
  if (specials.empty()) return out;
  if (specials.size() > 1) {
    out.anomalies.push_back(make_anomaly(
        "normalize", "several special vertices; universal-line structure",
        specials));
  }
  const int a = specials.front();
  // Points straight above or right of the corner vertex pair with it into a
  // line holding all of X; flag instead of reflecting back and forth.
  std::vector<int> boundary;
  for (int v = 0; v < n; ++v) {
    if (v == a) continue;
    bool upper = X[v].x == X[a].x && X[v].y > X[a].y;
    bool right = X[v].y == X[a].y && X[v].x > X[a].x;
    if (upper || right) boundary.push_back(v);
  }
  if (!boundary.empty()) {
    out.anomalies.push_back(make_anomaly(
        "normalize", "points on the axes of a special vertex; universal-line structure",
        boundary));
  }
  std::vector<Point> reflected;
  reflected.reserve(n);
  for (int v = 0; v < n; ++v) reflected.push_back(Point{-X[v].x, -X[v].y});
  out.X = PointSet(reflected);
  out.applied = true;
  for (int v = 0; v < n; ++v) {
    if (is_special(out.X, v)) {
      out.anomalies.push_back(make_anomaly(
          "normalize", "special vertex survived reflection", {v}));
    }
  }
  return out;
}

std::vector<int> quadrant_census(const PointSet& X, int a) {
  std::vector<int> empty;
  for (int q = 1; q <= 4; ++q) {
    if (region_empty(Region::quadrant(X[a], q), X)) empty.push_back(q);
  }
  return empty;
}

D1D2 find_d1_d2(const PointSet& X, int a) {
  D1D2 out;
  const Point& pa = X[a];
  const int n = X.size();
  auto better = [&](int cand, std::optional<int> best) {
    if (!best) return true;
    Rat dc = l1_distance(X[cand], pa);
    Rat db = l1_distance(X[*best], pa);
    if (dc != db) return dc < db;
    return lex_less(X[cand], X[*best]);
  };
  for (int v = 0; v < n; ++v) {
    const Point& p = X[v];
    if (!(p.x > pa.x && p.y < pa.y)) continue;  // open fourth quadrant only
    // d1: nothing strictly between its row and a's row on the right side,
    // and nothing on its row strictly between a's column and it.
    bool d1_ok =
        region_empty(Region::right_half_strip(Point{pa.x, p.y}, pa), X) &&
        region_empty(Region::segment_x(p.y, IntervalBound::open(pa.x),
                                       IntervalBound::open(p.x)),
                     X);
    if (d1_ok && better(v, out.d1)) out.d1 = v;
    bool d2_ok =
        region_empty(Region::lower_half_strip(pa, Point{p.x, pa.y}), X) &&
        region_empty(Region::segment_y(p.x, IntervalBound::open(p.y),
                                       IntervalBound::open(pa.y)),
                     X);
    if (d2_ok && better(v, out.d2)) out.d2 = v;
  }
  return out;
}

std::optional<Placement> classify_placement(const PointSet& X, int a, int d1,
                                            const Arrow& arrow,
                                            int* n_matched) {
  const Point& pa = X[a];
  const Point& pd = X[d1];
  const Point& t = X[arrow.tail];
  const Point& w = X[arrow.head];
  auto on_seg_x = [&](const Point& p, const IntervalBound& lo,
                      const IntervalBound& hi, const Rat& y) {
    return region_contains(Region::segment_x(y, lo, hi), p);
  };
  auto on_seg_y = [&](const Point& p, const IntervalBound& lo,
                      const IntervalBound& hi, const Rat& x) {
    return region_contains(Region::segment_y(x, lo, hi), p);
  };
  bool opt_a = on_seg_x(t, IntervalBound::open(pa.x), IntervalBound::open(pd.x),
                        pa.y) &&
               w == pd;
  bool opt_b = on_seg_y(t, IntervalBound::open(pd.y), IntervalBound::open(pa.y),
                        pa.x) &&
               w == pd;
  bool opt_c = on_seg_y(t, IntervalBound::open(pa.y), IntervalBound::unbounded(),
                        pa.x) &&
               on_seg_x(w, IntervalBound::open(pa.x),
                        IntervalBound::closed(pd.x), pa.y);
  bool opt_d = on_seg_x(t, IntervalBound::unbounded(), IntervalBound::open(pa.x),
                        pa.y) &&
               on_seg_y(w, IntervalBound::closed(pd.y),
                        IntervalBound::open(pa.y), pa.x);
  int count = int(opt_a) + int(opt_b) + int(opt_c) + int(opt_d);
  if (n_matched) *n_matched = count;
  if (count != 1) return std::nullopt;
  if (opt_a) return Placement::A;
  if (opt_b) return Placement::B;
  if (opt_c) return Placement::C;
  return Placement::D;
}

namespace {

// Arrow lookups keyed by the line an arrow generates.
struct FrameIndex {
  std::map<std::vector<int>, Arrow> blue_by_line, red_by_line;
};

FrameIndex index_arrows(const PointSet& X, const ArrowGraph& g) {
  FrameIndex idx;
  for (const Arrow& ar : g.arrows) {
    Line ln = line_of(X, ar.tail, ar.head, MetricKind::L1);
    auto& dst =
        ar.color == ArrowColor::Blue ? idx.blue_by_line : idx.red_by_line;
    dst.emplace(ln.members, ar);
  }
  return idx;
}

std::optional<int> closest_on_ray(const PointSet& X, int a, char dir) {
  // Nearest point of X on the open axis-parallel ray from a; dir is one of
  // 'R' (right), 'L', 'U' (up), 'D'.
  const Point& pa = X[a];
  std::optional<int> best;
  for (int v = 0; v < X.size(); ++v) {
    if (v == a) continue;
    const Point& p = X[v];
    bool on;
    switch (dir) {
      case 'R': on = p.y == pa.y && p.x > pa.x; break;
      case 'L': on = p.y == pa.y && p.x < pa.x; break;
      case 'U': on = p.x == pa.x && p.y > pa.y; break;
      default: on = p.x == pa.x && p.y < pa.y; break;
    }
    if (!on) continue;
    if (!best || l1_distance(p, pa) < l1_distance(X[*best], pa)) best = v;
  }
  return best;
}

// Second arrow of the given color into head, with a tail distinct from tail0
// forming the required pair class with it. Deterministic: smallest tail index.
std::optional<Arrow> second_arrow_into(const PointSet& X, const ArrowGraph& g,
                                       int head, int tail0, ArrowColor color,
                                       PairClass cls) {
  std::optional<Arrow> best;
  for (const Arrow& ar : g.arrows) {
    if (ar.color != color || ar.head != head || ar.tail == tail0) continue;
    if (classify_pair(X[ar.tail], X[tail0]) != cls) continue;
    if (!best || ar.tail < best->tail) best = ar;
  }
  return best;
}

// Core analysis in a frame where a's second quadrant is empty. Fills the
// frame-dependent fields of rep; indices are shared between frames.
void analyze_frame(const PointSet& Y, const ArrowGraph& g,
                   const FrameIndex& idx, int a, IsolatedReport& rep) {
  const Point& pa = Y[a];
  auto fail = [&](std::string check, std::string detail,
                  std::vector<int> verts = {}) {
    rep.anomalies.push_back(
        make_anomaly(std::move(check), std::move(detail), std::move(verts)));
  };
  const bool q4_empty = region_empty(Region::quadrant(pa, 4), Y);
  const bool q1_empty = region_empty(Region::quadrant(pa, 1), Y);

  if (!q4_empty) {
    D1D2 d = find_d1_d2(Y, a);
    rep.d1 = d.d1;
    rep.d2 = d.d2;
    if (!d.d1 || !d.d2) {
      fail("witness", "fourth quadrant populated but no valid d1/d2", {a});
      return;
    }
    auto red_of = [&](int dv) -> std::optional<Arrow> {
      Line ln = line_of(Y, a, dv, MetricKind::L1);
      auto it = idx.red_by_line.find(ln.members);
      if (it == idx.red_by_line.end()) return std::nullopt;
      return it->second;
    };
    std::optional<Arrow> ar1 = red_of(*d.d1);
    std::optional<Arrow> ar2 = red_of(*d.d2);
    if (!ar1 || !ar2) {
      fail("witness", "line through a and d has no red arrow", {a});
      return;
    }
    if (ar1->tail == a || ar1->head == a || ar2->tail == a || ar2->head == a) {
      fail("witness", "red arrow of an isolated vertex touches it", {a});
      return;
    }
    rep.placement1 = classify_placement(Y, a, *d.d1, *ar1);
    if (!rep.placement1) {
      fail("placement", "arrow of line through d1 fits no placement option",
           {a, *d.d1});
      return;
    }
    // d2's analysis is the transpose; classify against the literal options.
    rep.placement2 = classify_placement(Y, a, *d.d2, *ar2);
    if (!rep.placement2) {
      fail("placement", "arrow of line through d2 fits no placement option",
           {a, *d.d2});
      return;
    }
    if (*d.d1 != *d.d2) {
      auto combo = std::make_pair(*rep.placement1, *rep.placement2);
      bool allowed = combo == std::make_pair(Placement::A, Placement::B) ||
                     combo == std::make_pair(Placement::A, Placement::D) ||
                     combo == std::make_pair(Placement::C, Placement::B);
      if (!allowed) {
        fail("locations", std::string("placement combination (") +
                              placement_name(*rep.placement1) + "," +
                              placement_name(*rep.placement2) + ") not allowed",
             {a});
        return;
      }
      bool segs_empty =
          region_empty(Region::segment_x(pa.y, IntervalBound::open(pa.x),
                                         IntervalBound::closed(Y[*d.d2].x)),
                       Y) &&
          region_empty(Region::segment_y(pa.x, IntervalBound::closed(Y[*d.d1].y),
                                         IntervalBound::open(pa.y)),
                       Y);
      if (!segs_empty) {
        fail("locations", "boundary segments next to a are not empty", {a});
        return;
      }
      std::optional<int> r = closest_on_ray(Y, a, 'D');
      std::optional<int> s = closest_on_ray(Y, a, 'R');
      if (!r || !s) {
        fail("witness", "no point directly below or right of a", {a});
        return;
      }
      Arrow first{*r, *s, ArrowColor::Blue};
      if (!g.contains(first)) {
        fail("witness", "expected blue arrow below-to-right of a missing",
             {*r, *s});
        return;
      }
      std::optional<Arrow> second = second_arrow_into(
          Y, g, *s, *r, ArrowColor::Blue, PairClass::Decreasing);
      if (!second) {
        fail("witness", "no second blue arrow into s with decreasing tails",
             {*s});
        return;
      }
      rep.lemma = LemmaKind::TwoD;
      rep.s = *s;
      rep.witness = {first, *second};
      rep.color = ArrowColor::Blue;
    } else {
      // Single d: the red arrow's tail r and head s hug a.
      if (*rep.placement1 != Placement::C && *rep.placement1 != Placement::D) {
        fail("sclosest", "single-d placement must be option c or d", {a});
        return;
      }
      int r = ar1->tail, s = ar1->head;
      const Point& pr = Y[r];
      const Point& ps = Y[s];
      bool gaps_empty;
      if (*rep.placement1 == Placement::C) {
        gaps_empty =
            region_empty(Region::segment_y(pa.x, IntervalBound::open(pa.y),
                                           IntervalBound::open(pr.y)),
                         Y) &&
            region_empty(Region::segment_x(pa.y, IntervalBound::open(pa.x),
                                           IntervalBound::open(ps.x)),
                         Y);
      } else {
        gaps_empty =
            region_empty(Region::segment_x(pa.y, IntervalBound::open(pr.x),
                                           IntervalBound::open(pa.x)),
                         Y) &&
            region_empty(Region::segment_y(pa.x, IntervalBound::open(ps.y),
                                           IntervalBound::open(pa.y)),
                         Y);
      }
      if (!gaps_empty) {
        fail("sclosest", "open segments between a and the arrow are not empty",
             {a, r, s});
        return;
      }
      std::optional<Arrow> second = second_arrow_into(
          Y, g, s, r, ArrowColor::Red, PairClass::Increasing);
      if (!second) {
        fail("witness", "no second red arrow into s with increasing tails",
             {s});
        return;
      }
      rep.lemma = LemmaKind::TwoArrows1;
      rep.s = s;
      rep.witness = {*ar1, *second};
      rep.color = ArrowColor::Red;
    }
    return;
  }

  if (!q1_empty) {
    // Second and fourth quadrants empty, first populated.
    std::optional<int> r = closest_on_ray(Y, a, 'U');
    std::optional<int> s = closest_on_ray(Y, a, 'R');
    if (!r || !s) {
      fail("witness", "no point directly above or right of a", {a});
      return;
    }
    Arrow first{*r, *s, ArrowColor::Red};
    if (!g.contains(first)) {
      fail("witness", "expected red arrow above-to-right of a missing",
           {*r, *s});
      return;
    }
    std::optional<Arrow> second = second_arrow_into(
        Y, g, *s, *r, ArrowColor::Red, PairClass::Increasing);
    if (!second) {
      fail("witness", "no second red arrow into s with increasing tails", {*s});
      return;
    }
    rep.lemma = LemmaKind::TwoEmptyQ;
    rep.s = *s;
    rep.witness = {first, *second};
    rep.color = ArrowColor::Red;
    return;
  }

  // Quadrants 1, 2 and 4 all empty in the analysis frame. Direct frame:
  // the corner configuration that normalization removes. Mirror frame: the
  // reflected corner, which normalization cannot touch and no case covers.
  if (rep.mirrored) {
    fail("no-lemma",
         "isolated vertex with quadrants 1, 3, 4 empty and 2 populated: no "
         "case of the isolated-vertex analysis applies",
         {a});
  } else {
    fail("no-lemma",
         "isolated vertex with quadrants 1, 2, 4 empty survived normalization",
         {a});
  }
}

LemmaKind mirror_kind(LemmaKind k) {
  switch (k) {
    case LemmaKind::TwoD: return LemmaKind::MirrorTwoD;
    case LemmaKind::TwoArrows1: return LemmaKind::MirrorTwoArrows1;
    case LemmaKind::TwoEmptyQ: return LemmaKind::MirrorTwoEmptyQ;
    default: return k;
  }
}

ArrowColor flip(ArrowColor c) {
  return c == ArrowColor::Blue ? ArrowColor::Red : ArrowColor::Blue;
}

}  // namespace

IsolatedReport isolated_witness(const PointSet& X, const ArrowGraph& g,
                                int a) {
  if (a < 0 || a >= X.size()) throw std::invalid_argument("vertex out of range");
  if (!g.isolated(a)) throw std::invalid_argument("vertex is not isolated");
  IsolatedReport rep;
  rep.a = a;
  rep.empty_quadrants = quadrant_census(X, a);
  auto empty_q = [&](int q) {
    return std::find(rep.empty_quadrants.begin(), rep.empty_quadrants.end(),
                     q) != rep.empty_quadrants.end();
  };
  if (!empty_q(2) && !empty_q(3)) {
    rep.anomalies.push_back(make_anomaly(
        "quadrant-lemma",
        "isolated vertex with both second and third quadrants populated",
        {a}));
    rep.ok = false;
    return rep;
  }
  if (empty_q(2)) {
    FrameIndex idx = index_arrows(X, g);
    analyze_frame(X, g, idx, a, rep);
  } else {
    // Reflect across the horizontal line through a; the reflection swaps
    // quadrants 2<->3 and 1<->4 and exchanges blue and red arrows.
    rep.mirrored = true;
    std::vector<Point> pts;
    pts.reserve(X.size());
    const Rat two_ya = X[a].y + X[a].y;
    for (int v = 0; v < X.size(); ++v) {
      pts.push_back(Point{X[v].x, two_ya - X[v].y});
    }
    PointSet Y(pts);
    ArrowGraph gy = build_graph(Y);
    FrameIndex idx = index_arrows(Y, gy);
    analyze_frame(Y, gy, idx, a, rep);
    if (rep.lemma) {
      rep.lemma = mirror_kind(*rep.lemma);
      // Map the witnesses back: same endpoints, opposite color.
      for (Arrow& ar : rep.witness) ar.color = flip(ar.color);
      rep.color = flip(*rep.color);
      for (const Arrow& ar : rep.witness) {
        if (!g.contains(ar)) {
          rep.anomalies.push_back(make_anomaly(
              "mirror-correspondence",
              "mirrored witness arrow missing from the original graph",
              {ar.tail, ar.head}));
        }
      }
    }
  }
  rep.ok = rep.anomalies.empty() && rep.lemma.has_value();
  return rep;
}

IsolatedReport isolated_witness(const PointSet& X, int a) {
  ArrowGraph g = build_graph(X);
  return isolated_witness(X, g, a);
}

FMap build_f(const PointSet&, const std::vector<IsolatedReport>& reports) {
  FMap f;
  std::map<std::pair<int, int>, int> seen;  // (s, color) -> a
  for (const IsolatedReport& rep : reports) {
    if (!rep.ok || !rep.s || !rep.color) continue;
    f.entries.push_back(FMap::Entry{rep.a, *rep.s, *rep.color});
    auto key = std::make_pair(*rep.s, int(*rep.color));
    auto [it, inserted] = seen.emplace(key, rep.a);
    if (!inserted) {
      f.injective = false;
      f.collisions.emplace_back(it->second, rep.a);
    }
  }
  std::sort(f.entries.begin(), f.entries.end(),
            [](const FMap::Entry& l, const FMap::Entry& r) { return l.a < r.a; });
  return f;
}

DegreeAudit degree_audit(const PointSet& X, const ArrowGraph& g, const FMap& f,
                         const std::vector<CoincidingPair>& coinciding) {
  DegreeAudit d;
  const int n = X.size();
  std::set<int> A, B, tails;
  for (int v = 0; v < n; ++v) {
    if (g.isolated(v)) {
      A.insert(v);
      ++d.c;
    }
  }
  for (const FMap::Entry& e : f.entries) A.insert(e.s);
  for (const CoincidingPair& cp : coinciding) {
    B.insert(cp.blue.tail);
    B.insert(cp.blue.head);
    tails.insert(cp.blue.tail);
    tails.insert(cp.red.tail);
  }
  d.k = long(coinciding.size());
  d.A.assign(A.begin(), A.end());
  d.B.assign(B.begin(), B.end());
  d.coinciding_tails.assign(tails.begin(), tails.end());
  std::set_intersection(A.begin(), A.end(), B.begin(), B.end(),
                        std::back_inserter(d.AB_overlap));
  for (int v = 0; v < n; ++v) {
    if (!A.count(v) && !B.count(v)) d.C.push_back(v);
  }
  for (int v : d.A) {
    d.A_outdeg_sum += g.outdeg[v];
    d.A_indeg_sum += g.indeg[v];
  }
  d.edge_count = g.edge_count();
  ArrowGraph pruned = pruned_graph(g, coinciding);
  d.pruned_edge_count = pruned.edge_count();

  d.A_indeg_ok = d.A_indeg_sum >= 2 * d.c;
  d.A_outdeg_ok = d.A_outdeg_sum >= 2 * d.c;
  if (!d.A_indeg_ok) {
    d.anomalies.push_back(make_anomaly(
        "counting-A",
        "isolated vertices and companions gather fewer than 2c arrow heads",
        d.A));
  }
  d.tails_ok = true;
  for (int v : d.coinciding_tails) {
    if (g.outdeg[v] < 2) {
      d.tails_ok = false;
      d.anomalies.push_back(make_anomaly(
          "counting-tails", "coinciding-pair tail with outdegree below 2",
          {v}));
    }
  }
  d.C_ok = true;
  for (int v : d.C) {
    if (g.outdeg[v] + g.indeg[v] == 0) {
      d.C_ok = false;
      d.anomalies.push_back(make_anomaly(
          "counting-C", "vertex outside A and B touches no arrow", {v}));
    }
  }
  d.handshake_ok = 2 * d.edge_count >= n + 2 * d.k;
  if (!d.handshake_ok) {
    d.anomalies.push_back(
        make_anomaly("counting-handshake", "2|E| >= n + 2k fails", {}));
  }
  if (d.pruned_edge_count != d.edge_count - d.k) {
    d.anomalies.push_back(make_anomaly(
        "counting-prune",
        "pruning removed a different number of arrows than k", {}));
  }
  d.pruned_ok = d.pruned_edge_count >= (n + 1) / 2;
  if (!d.pruned_ok) {
    d.anomalies.push_back(make_anomaly(
        "counting-pruned", "pruned graph has fewer than ceil(n/2) arrows",
        {}));
  }
  // Surviving arrows must induce pairwise distinct lines.
  std::set<std::vector<int>> lines_seen;
  d.survivors_distinct = true;
  for (const Arrow& ar : pruned.arrows) {
    Line ln = line_of(X, ar.tail, ar.head, MetricKind::L1);
    if (!lines_seen.insert(ln.members).second) {
      d.survivors_distinct = false;
      d.anomalies.push_back(make_anomaly(
          "counting-survivors", "two surviving arrows generate the same line",
          {ar.tail, ar.head}));
    }
  }
  return d;
}

VerificationReport verify_theorem(const PointSet& X) {
  if (X.size() < 2) throw std::invalid_argument("too few points");
  VerificationReport rep;
  rep.n = X.size();
  rep.ceil_half_n = (rep.n + 1) / 2;
  LineCatalog catalog = enumerate_lines(X, MetricKind::L1);
  rep.distinct_line_count = long(catalog.entries.size());
  rep.universal = catalog.has_universal();
  rep.normalized_X = X;
  if (rep.universal) {
    // A universal line settles the conjecture for this set outright; the
    // structural analysis is only defined without one.
    rep.bound_holds = true;
    return rep;
  }

  NormalizeResult nr = reflection_normalize(X);
  rep.normalized = nr.applied;
  for (Anomaly& an : nr.anomalies) rep.anomalies.push_back(std::move(an));
  rep.normalized_X = nr.X;
  if (nr.applied) {
    LineCatalog after = enumerate_lines(nr.X, MetricKind::L1);
    if (long(after.entries.size()) != rep.distinct_line_count) {
      rep.anomalies.push_back(make_anomaly(
          "normalize", "reflection changed the number of distinct lines", {}));
    }
    catalog = std::move(after);
  }
  const PointSet& Y = rep.normalized_X;

  rep.graph = build_graph(Y);
  for (int v = 0; v < rep.n; ++v) {
    if (!rep.graph.isolated(v)) continue;
    IsolatedReport ir = isolated_witness(Y, rep.graph, v);
    for (const Anomaly& an : ir.anomalies) rep.anomalies.push_back(an);
    rep.isolated.push_back(std::move(ir));
  }
  rep.fmap = build_f(Y, rep.isolated);
  if (!rep.fmap.injective) {
    for (auto [a1, a2] : rep.fmap.collisions) {
      rep.anomalies.push_back(make_anomaly(
          "f-injectivity",
          "two isolated vertices share a companion vertex and color",
          {a1, a2}));
    }
  }

  rep.coinciding = coinciding_pairs(Y, rep.graph, catalog);
  for (const CoincidingPair& cp : rep.coinciding) {
    if (!cp.rectangle_ok) {
      rep.anomalies.push_back(make_anomaly(
          "rectangle", "coinciding blue/red pair is not a rectangle diagonal",
          {cp.blue.tail, cp.blue.head, cp.red.tail, cp.red.head}));
    }
  }
  rep.nesting_ok = nesting_check(Y, rep.coinciding);
  if (!rep.nesting_ok) {
    rep.anomalies.push_back(make_anomaly(
        "nesting", "coinciding rectangles fail to nest", {}));
  }

  rep.audit = degree_audit(Y, rep.graph, rep.fmap, rep.coinciding);
  for (const Anomaly& an : rep.audit.anomalies) rep.anomalies.push_back(an);
  rep.pruned_at_least_n = rep.audit.pruned_edge_count >= rep.n;
  rep.bound_holds = rep.distinct_line_count >= rep.ceil_half_n;
  return rep;
}

}  // namespace l1lines
