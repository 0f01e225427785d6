#include "l1lines/metric_oracle.hpp"

#include <algorithm>
#include <map>

namespace l1lines {

DistanceMatrix matrix_from_points(const PointSet& X, MetricKind m) {
  DistanceMatrix D;
  D.n = X.size();
  D.d.assign(static_cast<std::size_t>(D.n) * D.n, Rat(0));
  for (int i = 0; i < D.n; ++i) {
    for (int j = i + 1; j < D.n; ++j) {
      Rat dist = distance(m, X[i], X[j]);
      if (dist == 0) throw std::invalid_argument("not a metric");
      D.at(i, j) = dist;
      D.at(j, i) = std::move(dist);
    }
  }
  return D;
}

namespace {

void validate_metric(const DistanceMatrix& D) {
  for (int i = 0; i < D.n; ++i) {
    if (D.at(i, i) != 0) throw std::invalid_argument("not a metric");
    for (int j = 0; j < D.n; ++j) {
      if (i != j && !(D.at(i, j) > 0)) throw std::invalid_argument("not a metric");
      if (D.at(i, j) != D.at(j, i)) throw std::invalid_argument("not a metric");
      for (int k = 0; k < D.n; ++k)
        if (D.at(i, j) + D.at(j, k) < D.at(i, k))
          throw std::invalid_argument("not a metric");
    }
  }
}

}  // namespace

LineCatalog lines_from_matrix(const DistanceMatrix& D) {
  if (D.n < 2) throw std::invalid_argument("too few points");
  validate_metric(D);
  std::map<std::vector<int>, std::vector<std::pair<int, int>>> grouped;
  for (int u = 0; u < D.n; ++u) {
    for (int v = u + 1; v < D.n; ++v) {
      std::vector<int> members;
      for (int z = 0; z < D.n; ++z) {
        bool in = z == u || z == v ||
                  D.at(u, v) == D.at(u, z) + D.at(z, v) ||   // z between u,v
                  D.at(z, v) == D.at(z, u) + D.at(u, v) ||   // u between z,v
                  D.at(u, z) == D.at(u, v) + D.at(v, z);     // v between u,z
        if (in) members.push_back(z);
      }
      grouped[std::move(members)].emplace_back(u, v);
    }
  }
  LineCatalog cat;
  cat.metric = MetricKind::L1;  // tag is moot for a bare table; keep default
  cat.n = D.n;
  for (auto& [members, gens] : grouped) {
    std::sort(gens.begin(), gens.end());
    cat.entries.push_back({members, std::move(gens)});
  }
  return cat;
}

PointSet rotate_45(const PointSet& X) {
  std::vector<Point> out;
  out.reserve(X.size());
  for (const Point& p : X.points()) out.push_back({p.x + p.y, p.x - p.y});
  return PointSet(std::move(out));
}

LineCount linf_line_count(const PointSet& X) {
  LineCatalog via_matrix = lines_from_matrix(matrix_from_points(X, MetricKind::Linf));
  LineCatalog via_rotation = enumerate_lines(rotate_45(X), MetricKind::L1);
  // Indices survive the rotation unchanged, so the catalogs must agree as
  // member-set families (and even generator-by-generator).
  if (auto diff = catalog_difference(via_matrix, via_rotation))
    throw oracle_mismatch("rotation reduction violated: " + *diff);
  return {static_cast<long>(via_matrix.entries.size()), via_matrix.has_universal()};
}

namespace {

std::string index_set_str(const std::vector<int>& xs) {
  std::string s = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(xs[i]);
  }
  return s + "}";
}

}  // namespace

std::optional<std::string> catalog_difference(const LineCatalog& a,
                                              const LineCatalog& b) {
  const std::size_t common = std::min(a.entries.size(), b.entries.size());
  for (std::size_t i = 0; i < common; ++i) {
    if (a.entries[i].members != b.entries[i].members) {
      return "line " + std::to_string(i) + ": members " +
             index_set_str(a.entries[i].members) + " vs " +
             index_set_str(b.entries[i].members);
    }
    if (a.entries[i].generators != b.entries[i].generators)
      return "line " + std::to_string(i) + ": generator lists differ";
  }
  if (a.entries.size() != b.entries.size()) {
    return "catalog sizes differ: " + std::to_string(a.entries.size()) +
           " vs " + std::to_string(b.entries.size());
  }
  return std::nullopt;
}

}  // namespace l1lines
