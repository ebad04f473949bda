#pragma once

#include <string>

#include "json.hpp"
#include "roughstat/analysis.hpp"
#include "roughstat/density.hpp"
#include "roughstat/pm_core.hpp"

namespace roughstat {

using ordered_json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "0.1.0";

// Real values are serialized as JSON numbers rounded to 12 significant
// digits; densities stay exact "count/N" strings.
ordered_json json_real(double v);

ordered_json to_json(const DensityEstimate& est);
ordered_json to_json(const DensityVerdict& v);
ordered_json to_json(const EpsEvidence& e);
ordered_json to_json(const TailEvidence& t);
ordered_json to_json(const ConvergenceVerdict& v);
ordered_json to_json(const Grid& g);
ordered_json to_json(const LimitSetEstimate& est, bool include_points = true);
ordered_json to_json(const BoundedResult& r);
ordered_json to_json(const CauchyResult& r);
ordered_json to_json(const ClusterPointReport& r);
ordered_json to_json(const AxiomReport& r);
ordered_json to_json(const PartialMetricSpace& s);

// CSV for grid scans: candidate, verdict, worst_eps, worst_density_num,
// worst_density_den. "Worst" is the scheduled eps with the largest exceedance
// density (first in schedule order on ties).
std::string limit_set_csv(const LimitSetEstimate& est);
std::string rough_limit_set_csv(const LimitSetEstimate& est);
std::string cluster_csv(const std::vector<ClusterPointReport>& reports);

}  // namespace roughstat
