#include "l1lines/report.hpp"

#include "l1lines/io.hpp"

namespace l1lines {

const char* kReportVersion = "l1lines-report/1";

namespace {

const char* metric_name(MetricKind m) {
  return m == MetricKind::L1 ? "l1" : "linf";
}

const char* color_name(ArrowColor c) {
  return c == ArrowColor::Blue ? "blue" : "red";
}

Json arrow_json(const Arrow& a) { return Json::array({a.tail, a.head}); }

Json arrows_json(const std::vector<Arrow>& arrows, ArrowColor color) {
  Json out = Json::array();
  for (const Arrow& a : arrows) {
    if (a.color == color) out.push_back(arrow_json(a));
  }
  return out;
}

Json coinciding_json(const std::vector<CoincidingPair>& cps) {
  Json out = Json::array();
  for (const CoincidingPair& cp : cps) {
    out.push_back(Json{{"blue", arrow_json(cp.blue)},
                       {"red", arrow_json(cp.red)},
                       {"line", cp.members},
                       {"rectangle", cp.rectangle_ok}});
  }
  return out;
}

Json anomalies_json(const std::vector<Anomaly>& as) {
  Json out = Json::array();
  for (const Anomaly& a : as) {
    out.push_back(
        Json{{"check", a.check}, {"detail", a.detail}, {"vertices", a.vertices}});
  }
  return out;
}

Json catalog_json(const LineCatalog& cat, bool full) {
  Json out;
  out["line_count"] = cat.entries.size();
  out["universal"] = cat.has_universal();
  out["generator_totals"] = Json{{"increasing", cat.generator_totals[0]},
                                 {"decreasing", cat.generator_totals[1]},
                                 {"horizontal", cat.generator_totals[2]},
                                 {"vertical", cat.generator_totals[3]}};
  if (full) {
    Json lines = Json::array();
    for (const LineCatalog::Entry& e : cat.entries) {
      Json gens = Json::array();
      for (auto [u, v] : e.generators) gens.push_back(Json::array({u, v}));
      lines.push_back(Json{{"members", e.members}, {"generators", gens}});
    }
    out["lines"] = lines;
  }
  return out;
}

}  // namespace

Json points_json(const std::vector<Point>& pts) {
  Json out = Json::array();
  for (const Point& p : pts) out.push_back(rat_str(p.x) + " " + rat_str(p.y));
  return out;
}

Json input_echo(const PointSet& X) {
  std::string canon = canonical_point_text(X);
  return Json{{"points", points_json(X.points())},
              {"hash", "fnv1a64:" + hash_hex(fnv1a64(canon))}};
}

Json lines_report(const PointSet& X, const LineCatalog& cat, bool full) {
  Json out;
  out["version"] = kReportVersion;
  out["command"] = "lines";
  out["input"] = input_echo(X);
  out["metric"] = metric_name(cat.metric);
  out.update(catalog_json(cat, full));
  return out;
}

Json matrix_lines_report(const DistanceMatrix& D, const LineCatalog& cat,
                         bool full) {
  Json out;
  out["version"] = kReportVersion;
  out["command"] = "matrix-lines";
  std::string canon = canonical_matrix_text(D);
  out["input"] =
      Json{{"n", D.n}, {"hash", "fnv1a64:" + hash_hex(fnv1a64(canon))}};
  out.update(catalog_json(cat, full));
  return out;
}

Json arrows_report(const PointSet& X, const ArrowGraph& g,
                   const std::vector<CoincidingPair>& coinciding,
                   const ArrowGraph& pruned) {
  Json out;
  out["version"] = kReportVersion;
  out["command"] = "arrows";
  out["input"] = input_echo(X);
  out["blue_arrows"] = arrows_json(g.arrows, ArrowColor::Blue);
  out["red_arrows"] = arrows_json(g.arrows, ArrowColor::Red);
  out["edge_count"] = g.edge_count();
  out["outdeg"] = g.outdeg;
  out["indeg"] = g.indeg;
  Json iso = Json::array();
  for (int v = 0; v < g.n; ++v) {
    if (g.isolated(v)) iso.push_back(v);
  }
  out["isolated"] = iso;
  out["coinciding_pairs"] = coinciding_json(coinciding);
  out["k"] = coinciding.size();
  out["pruned_edge_count"] = pruned.edge_count();
  return out;
}

Json verify_report(const PointSet& X, const VerificationReport& rep) {
  Json out;
  out["version"] = kReportVersion;
  out["command"] = "verify";
  out["input"] = input_echo(X);
  out["n"] = rep.n;
  out["universal"] = rep.universal;
  out["line_count"] = rep.distinct_line_count;
  out["ceil_half_n"] = rep.ceil_half_n;
  out["bound_holds"] = rep.bound_holds;
  if (rep.universal) {
    out["anomalies"] = anomalies_json(rep.anomalies);
    return out;
  }
  out["normalized"] = rep.normalized;
  if (rep.normalized) out["normalized_points"] = points_json(rep.normalized_X.points());
  Json iso = Json::array();
  for (const IsolatedReport& ir : rep.isolated) {
    Json j;
    j["a"] = ir.a;
    j["empty_quadrants"] = ir.empty_quadrants;
    j["mirrored"] = ir.mirrored;
    if (ir.d1) j["d1"] = *ir.d1;
    if (ir.d2) j["d2"] = *ir.d2;
    if (ir.placement1) j["placement1"] = std::string(1, placement_name(*ir.placement1));
    if (ir.placement2) j["placement2"] = std::string(1, placement_name(*ir.placement2));
    if (ir.lemma) j["lemma"] = lemma_name(*ir.lemma);
    if (ir.s) j["s"] = *ir.s;
    if (ir.color) j["color"] = color_name(*ir.color);
    Json w = Json::array();
    for (const Arrow& a : ir.witness) w.push_back(arrow_json(a));
    j["witness_arrows"] = w;
    j["ok"] = ir.ok;
    iso.push_back(j);
  }
  out["isolated"] = iso;
  Json fmap = Json::array();
  for (const FMap::Entry& e : rep.fmap.entries) {
    fmap.push_back(Json{{"a", e.a}, {"s", e.s}, {"color", color_name(e.color)}});
  }
  out["f_map"] = fmap;
  out["f_injective"] = rep.fmap.injective;
  out["coinciding_pairs"] = coinciding_json(rep.coinciding);
  out["nesting_ok"] = rep.nesting_ok;
  const DegreeAudit& a = rep.audit;
  out["audit"] = Json{{"c", a.c},
                      {"k", a.k},
                      {"A", a.A},
                      {"B", a.B},
                      {"C", a.C},
                      {"AB_overlap", a.AB_overlap},
                      {"A_outdeg_sum", a.A_outdeg_sum},
                      {"A_indeg_sum", a.A_indeg_sum},
                      {"A_indeg_ok", a.A_indeg_ok},
                      {"A_outdeg_ok", a.A_outdeg_ok},
                      {"tails_ok", a.tails_ok},
                      {"C_ok", a.C_ok},
                      {"edge_count", a.edge_count},
                      {"handshake_ok", a.handshake_ok},
                      {"pruned_edge_count", a.pruned_edge_count},
                      {"pruned_ok", a.pruned_ok},
                      {"survivors_distinct", a.survivors_distinct}};
  out["pruned_at_least_n"] = rep.pruned_at_least_n;
  out["anomalies"] = anomalies_json(rep.anomalies);
  return out;
}

Json oracle_check_report(const PointSet& X, MetricKind m,
                         const std::optional<std::string>& difference) {
  Json out;
  out["version"] = kReportVersion;
  out["command"] = "oracle-check";
  out["input"] = input_echo(X);
  out["metric"] = metric_name(m);
  out["match"] = !difference.has_value();
  if (difference) out["difference"] = *difference;
  return out;
}

Json sweep_report(const SweepConfig& cfg, const SweepResult& res) {
  Json out;
  out["version"] = kReportVersion;
  out["command"] = "search";
  Json conf;
  // Workers and witness paths don't influence results, so they stay out of
  // the echoed config: reports must be byte-identical across worker counts.
  conf["mode"] = cfg.mode == SweepMode::ExhaustiveGrid ? "exhaustive" : "random";
  if (cfg.mode == SweepMode::ExhaustiveGrid) {
    conf["grid"] =
        std::to_string(cfg.grid_width) + "x" + std::to_string(cfg.grid_height);
  } else {
    conf["count"] = cfg.sample_count;
    conf["coord_max"] = cfg.coord_bound;
    conf["seed"] = cfg.seed;
    conf["distinct_coords"] = cfg.distinct_coords;
  }
  conf["n"] = std::to_string(cfg.n_min) + "-" + std::to_string(cfg.n_max);
  conf["check_oracle"] = cfg.check_oracle;
  conf["check_linf"] = cfg.check_linf;
  out["config"] = conf;
  out["input"] =
      Json{{"hash", "fnv1a64:" + hash_hex(fnv1a64(conf.dump()))}};
  out["instances"] = res.instances;
  out["universal_count"] = res.universal_count;
  out["bound_violations"] = res.bound_violations;
  out["anomaly_instances"] = res.anomaly_instances;
  out["oracle_failures"] = res.oracle_failures;
  Json checks = Json::object();
  for (const auto& [check, count] : res.anomaly_checks) checks[check] = count;
  out["anomaly_checks"] = checks;
  out["outdeg_reading_failures"] = res.outdeg_reading_failures;
  out["pruned_below_n"] = res.pruned_below_n;
  if (res.min_ratio) {
    out["min_ratio"] = rat_str(*res.min_ratio);
    out["min_ratio_index"] = res.min_ratio_index;
    out["min_ratio_points"] = points_json(res.min_ratio_points);
  } else {
    out["min_ratio"] = nullptr;
  }
  Json histo = Json::array();
  for (const HistogramRow& row : res.histogram) {
    histo.push_back(
        Json{{"n", row.n}, {"lines", row.lines}, {"count", row.count}});
  }
  out["histogram"] = histo;
  Json hits = Json::array();
  for (const SweepHit& h : res.hits) {
    hits.push_back(Json{{"index", h.index},
                        {"kind", h.kind},
                        {"detail", h.detail},
                        {"points", points_json(h.points)}});
  }
  out["hits"] = hits;
  return out;
}

std::string render(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace l1lines
