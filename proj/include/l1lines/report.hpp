#pragma once

#include "json.hpp"

#include "l1lines/metric_oracle.hpp"
#include "l1lines/search.hpp"

namespace l1lines {

// All commands emit ordered JSON with a version tag and an input fingerprint;
// field order is fixed so identical runs produce identical bytes.
using Json = nlohmann::ordered_json;

extern const char* kReportVersion;

Json points_json(const std::vector<Point>& pts);
Json input_echo(const PointSet& X);

Json lines_report(const PointSet& X, const LineCatalog& cat, bool full);
Json matrix_lines_report(const DistanceMatrix& D, const LineCatalog& cat,
                         bool full);
Json arrows_report(const PointSet& X, const ArrowGraph& g,
                   const std::vector<CoincidingPair>& coinciding,
                   const ArrowGraph& pruned);
Json verify_report(const PointSet& X, const VerificationReport& rep);
Json oracle_check_report(const PointSet& X, MetricKind m,
                         const std::optional<std::string>& difference);
Json sweep_report(const SweepConfig& cfg, const SweepResult& res);

std::string render(const Json& j);  // pretty text, trailing newline

}  // namespace l1lines
