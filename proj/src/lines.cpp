#include "l1lines/lines.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace l1lines {

bool LineCatalog::has_universal() const {
  for (const auto& e : entries)
    if (static_cast<int>(e.members.size()) == n) return true;
  return false;
}

const LineCatalog::Entry* LineCatalog::find(const std::vector<int>& members) const {
  auto it = std::lower_bound(
      entries.begin(), entries.end(), members,
      [](const Entry& e, const std::vector<int>& m) { return e.members < m; });
  if (it == entries.end() || it->members != members) return nullptr;
  return &*it;
}

Line line_of(const PointSet& X, int u, int v, MetricKind m) {
  if (u == v || X[u] == X[v]) throw std::invalid_argument("degenerate pair");
  Line line;
  line.metric = m;
  line.generator = {std::min(u, v), std::max(u, v)};
  const Point& pu = X[u];
  const Point& pv = X[v];
  for (int z = 0; z < X.size(); ++z) {
    if (z == u || z == v) {
      line.members.push_back(z);
      continue;
    }
    const Point& pz = X[z];
    if (is_between(pu, pz, pv, m) || is_between(pz, pu, pv, m) ||
        is_between(pu, pv, pz, m))
      line.members.push_back(z);
  }
  return line;
}

LineCatalog enumerate_lines(const PointSet& X, MetricKind m) {
  if (X.size() < 2) throw std::invalid_argument("too few points");
  std::map<std::vector<int>, std::vector<std::pair<int, int>>> grouped;
  LineCatalog cat;
  cat.metric = m;
  cat.n = X.size();
  for (int u = 0; u < X.size(); ++u) {
    for (int v = u + 1; v < X.size(); ++v) {
      Line l = line_of(X, u, v, m);
      grouped[std::move(l.members)].emplace_back(u, v);
      cat.generator_totals[static_cast<int>(classify_pair(X[u], X[v]))]++;
    }
  }
  cat.entries.reserve(grouped.size());
  for (auto& [members, gens] : grouped) {
    std::sort(gens.begin(), gens.end());
    cat.entries.push_back({members, std::move(gens)});
  }
  return cat;
}

bool is_universal(const Line& l, const PointSet& X) {
  return static_cast<int>(l.members.size()) == X.size();
}

LineCount count_distinct_lines(const PointSet& X, MetricKind m) {
  LineCatalog cat = enumerate_lines(X, m);
  return {static_cast<long>(cat.entries.size()), cat.has_universal()};
}

}  // namespace l1lines
