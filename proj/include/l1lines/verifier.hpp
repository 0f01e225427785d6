#pragma once

#include <optional>
#include <string>

#include "l1lines/arrows.hpp"

namespace l1lines {

// Which isolated-vertex lemma produced the witness. Mirror variants run the
// same analysis on the set reflected across the horizontal axis through a.
enum class LemmaKind {
  TwoD,
  TwoArrows1,
  TwoEmptyQ,
  MirrorTwoD,
  MirrorTwoArrows1,
  MirrorTwoEmptyQ,
};

// Placement options for the red arrow (t, w) of the line through a and d:
//   A: t on the open horizontal segment between a and d's x, w = d
//   B: t on the open vertical segment between a and d's y, w = d
//   C: t on the open ray above a, w on the half-open segment right of a
//   D: t on the open ray left of a, w on the half-open segment below a
enum class Placement { A, B, C, D };

const char* lemma_name(LemmaKind k);
char placement_name(Placement p);

// A lemma conclusion that failed on a concrete input. Anomalies are data,
// not exceptions: a run collects every one it finds.
struct Anomaly {
  std::string check;   // stable identifier, e.g. "quadrant-lemma"
  std::string detail;
  std::vector<int> vertices;
};

struct NormalizeResult {
  PointSet X;
  bool applied = false;
  std::vector<Anomaly> anomalies;
};

// Everything learned about one isolated vertex: the quadrant frame, the
// witnesses d1/d2 when the fourth quadrant is populated, arrow placements,
// and the two same-colored arrows into the companion vertex s.
struct IsolatedReport {
  int a = -1;
  std::vector<int> empty_quadrants;  // original frame, ids in {1,2,3,4}
  bool mirrored = false;
  std::optional<int> d1, d2;                       // indices (frame-invariant)
  std::optional<Placement> placement1, placement2; // analysis-frame labels
  std::optional<LemmaKind> lemma;
  std::optional<int> s;
  std::optional<ArrowColor> color;  // color of the witness arrows in G(X)
  std::vector<Arrow> witness;       // two arrows of G(X) ending at s
  bool ok = false;
  std::vector<Anomaly> anomalies;
};

// a -> (s_a, color); must be injective into vertex/color pairs.
struct FMap {
  struct Entry {
    int a, s;
    ArrowColor color;
  };
  std::vector<Entry> entries;  // sorted by a
  bool injective = true;
  std::vector<std::pair<int, int>> collisions;  // (a, a') mapping alike
};

// The degree-counting ledger: A = isolated vertices plus their companions,
// B = endpoints of coinciding blue arrows, C = the rest.
struct DegreeAudit {
  long c = 0, k = 0;
  std::vector<int> A, B, C;
  std::vector<int> coinciding_tails;  // blue and red tails of coinciding pairs
  std::vector<int> AB_overlap;
  long A_outdeg_sum = 0, A_indeg_sum = 0;
  long edge_count = 0, pruned_edge_count = 0;
  bool A_indeg_ok = false;       // sum of indegrees over A >= 2c
  bool A_outdeg_ok = false;      // literal outdegree variant, recorded only
  bool tails_ok = false;         // outdeg >= 2 at every coinciding tail
  bool C_ok = false;             // every vertex outside A and B touches an arrow
  bool handshake_ok = false;     // 2|E| >= n + 2k
  bool pruned_ok = false;        // |E'| >= ceil(n/2)
  bool survivors_distinct = false;
  std::vector<Anomaly> anomalies;
};

struct VerificationReport {
  int n = 0;
  bool universal = false;
  long distinct_line_count = 0;
  long ceil_half_n = 0;
  bool bound_holds = false;       // distinct lines >= ceil(n/2), or universal
  bool normalized = false;
  PointSet normalized_X;          // the set the graph analysis ran on
  ArrowGraph graph;
  std::vector<IsolatedReport> isolated;
  FMap fmap;
  std::vector<CoincidingPair> coinciding;
  bool nesting_ok = true;
  DegreeAudit audit;
  bool pruned_at_least_n = false;  // pruned edge count >= n observed
  std::vector<Anomaly> anomalies;   // union of everything collected above
};

// If some point has open quadrants 1, 2 and 4 all empty, negate every
// coordinate. Inputs with a universal line can defeat this; those surface
// as "universal-line structure" anomalies rather than exceptions.
NormalizeResult reflection_normalize(const PointSet& X);

// Ids of the open quadrants of a containing no point of X.
std::vector<int> quadrant_census(const PointSet& X, int a);

struct D1D2 {
  std::optional<int> d1, d2;
};
// Witnesses in a's open fourth quadrant: d1 with the right half-strip above
// it and the segment left of it empty, d2 the transposed condition. Ties
// break by L1 distance to a, then lexicographically.
D1D2 find_d1_d2(const PointSet& X, int a);

// Which placement option the arrow matches; nullopt when none or several do
// (n_matched reports how many).
std::optional<Placement> classify_placement(const PointSet& X, int a, int d1,
                                            const Arrow& arrow,
                                            int* n_matched = nullptr);

// Full isolated-vertex analysis. Throws std::invalid_argument if a is not
// isolated in build_graph(X).
IsolatedReport isolated_witness(const PointSet& X, int a);
IsolatedReport isolated_witness(const PointSet& X, const ArrowGraph& g, int a);

FMap build_f(const PointSet& X, const std::vector<IsolatedReport>& reports);

DegreeAudit degree_audit(const PointSet& X, const ArrowGraph& g, const FMap& f,
                         const std::vector<CoincidingPair>& coinciding);

// The whole pipeline: universality check, normalization, arrow graph,
// isolated-vertex lemmas, coinciding pairs, degree audit, line-count bound.
VerificationReport verify_theorem(const PointSet& X);

}  // namespace l1lines
