#include "roughstat/report.hpp"

#include <sstream>

#include "roughstat/util.hpp"

namespace roughstat {

ordered_json json_real(double v) { return ordered_json(round_real(v)); }

ordered_json to_json(const DensityEstimate& est) {
  return ordered_json{{"count", est.count_n},
                      {"n", est.n},
                      {"density", est.value_str()},
                      {"count_half", est.count_half},
                      {"density_half", est.value_half_str()}};
}

ordered_json to_json(const DensityVerdict& v) {
  ordered_json j = to_json(v.evidence);
  j["tau"] = v.tau.str();
  j["verdict"] = to_string(v.verdict);
  return j;
}

ordered_json to_json(const EpsEvidence& e) {
  ordered_json j{{"eps", json_real(e.eps)}};
  j.update(to_json(e.density));
  return j;
}

ordered_json to_json(const TailEvidence& t) {
  return ordered_json{{"window", {t.window_begin, t.window_end}},
                      {"window_sup", json_real(t.window_sup)},
                      {"first_half_sup", json_real(t.first_half_sup)},
                      {"second_half_sup", json_real(t.second_half_sup)},
                      {"half_prefix_window", {t.half_prefix_begin, t.half_prefix_end}},
                      {"half_prefix_sup", json_real(t.half_prefix_sup)}};
}

ordered_json to_json(const ConvergenceVerdict& v) {
  ordered_json j{{"mode", to_string(v.mode)}, {"verdict", to_string(v.verdict)}};
  if (!v.per_eps.empty()) {
    ordered_json arr = ordered_json::array();
    for (const auto& e : v.per_eps) arr.push_back(to_json(e));
    j["per_eps"] = arr;
  }
  if (v.tail) j["tail"] = to_json(*v.tail);
  return j;
}

ordered_json to_json(const Grid& g) {
  return ordered_json{{"lo", json_real(g.lo.to_double())},
                      {"hi", json_real(g.hi.to_double())},
                      {"step", json_real(g.step.to_double())},
                      {"points", g.size()}};
}

namespace {

// The eps whose exceedance density is largest; schedule order breaks ties.
const EpsEvidence* worst_eps(const std::vector<EpsEvidence>& per_eps) {
  const EpsEvidence* worst = nullptr;
  for (const auto& e : per_eps) {
    if (worst == nullptr ||
        e.density.evidence.value() > worst->density.evidence.value()) {
      worst = &e;
    }
  }
  return worst;
}

}  // namespace

ordered_json to_json(const LimitSetEstimate& est, bool include_points) {
  ordered_json j;
  j["r"] = json_real(est.r);
  j["grid"] = to_json(est.grid);
  ordered_json intervals = ordered_json::array();
  for (const auto& [a, b] : est.intervals()) {
    intervals.push_back(ordered_json::array({json_real(a), json_real(b)}));
  }
  j["intervals"] = intervals;
  ordered_json nonmembers = ordered_json::array();
  ordered_json inconclusive = ordered_json::array();
  for (std::size_t i = 0; i < est.membership.size(); ++i) {
    if (est.membership[i].verdict == Verdict::No) {
      nonmembers.push_back(json_real(est.grid.point(i)));
    } else if (est.membership[i].verdict == Verdict::Inconclusive) {
      inconclusive.push_back(json_real(est.grid.point(i)));
    }
  }
  j["nonmembers"] = nonmembers;
  j["inconclusive"] = inconclusive;
  if (include_points) {
    ordered_json pts = ordered_json::array();
    for (std::size_t i = 0; i < est.membership.size(); ++i) {
      ordered_json p{{"candidate", json_real(est.grid.point(i))},
                     {"verdict", to_string(est.membership[i].verdict)}};
      const auto& per_eps = est.membership[i].per_eps;
      if (!per_eps.empty()) {
        if (const EpsEvidence* w = worst_eps(per_eps)) {
          p["worst_eps"] = json_real(w->eps);
          p["worst_density"] = w->density.evidence.value_str();
        }
        ordered_json arr = ordered_json::array();
        for (const auto& e : per_eps) arr.push_back(to_json(e));
        p["per_eps"] = arr;
      }
      if (est.membership[i].tail) p["tail"] = to_json(*est.membership[i].tail);
      pts.push_back(p);
    }
    j["points"] = pts;
  }
  return j;
}

ordered_json to_json(const BoundedResult& r) {
  ordered_json j{{"mode", "stat_bounded"}, {"verdict", to_string(r.verdict.verdict)}};
  if (r.witness_m) j["witness_m"] = json_real(*r.witness_m);
  ordered_json arr = ordered_json::array();
  for (const auto& e : r.per_m) {
    ordered_json entry{{"m", json_real(e.m)}};
    entry.update(to_json(e.density));
    arr.push_back(entry);
  }
  j["per_m"] = arr;
  return j;
}

ordered_json to_json(const CauchyResult& r) {
  ordered_json j{{"mode", "stat_cauchy"}, {"verdict", to_string(r.verdict.verdict)}};
  if (r.witness) {
    j["witness"] = ordered_json{{"m", r.witness->first}, {"l", json_real(r.witness->second)}};
  }
  ordered_json arr = ordered_json::array();
  for (const auto& pair : r.pairs) {
    ordered_json entry{{"m", pair.m}, {"l", json_real(pair.l)},
                       {"verdict", to_string(pair.verdict)}};
    ordered_json eps = ordered_json::array();
    for (const auto& e : pair.per_eps) eps.push_back(to_json(e));
    entry["per_eps"] = eps;
    arr.push_back(entry);
  }
  j["pairs"] = arr;
  return j;
}

ordered_json to_json(const ClusterPointReport& r) {
  ordered_json j{{"candidate", json_real(r.candidate)},
                 {"verdict", to_string(r.verdict)}};
  ordered_json eps = ordered_json::array();
  for (const auto& e : r.per_eps) eps.push_back(to_json(e));
  j["per_eps"] = eps;
  return j;
}

ordered_json to_json(const AxiomReport& r) {
  ordered_json j{{"checked_pairs", r.checked_pairs},
                 {"checked_triples", r.checked_triples},
                 {"ok", r.ok()}};
  ordered_json arr = ordered_json::array();
  for (const auto& v : r.violations) {
    ordered_json witness = ordered_json::array();
    for (double w : v.witness) witness.push_back(json_real(w));
    arr.push_back(ordered_json{{"axiom", axiom_name(v.axiom)},
                               {"witness", witness},
                               {"lhs", json_real(v.lhs)},
                               {"rhs", json_real(v.rhs)},
                               {"note", v.note}});
  }
  j["violations"] = arr;
  return j;
}

ordered_json to_json(const PartialMetricSpace& s) {
  ordered_json j{{"kind", s.kind_name()}};
  if (s.kind() == SpaceKind::ShiftedEuclidean) j["a"] = json_real(s.shift());
  return j;
}

namespace {

std::string grid_scan_csv(const LimitSetEstimate& est, bool stat_columns) {
  std::ostringstream out;
  if (stat_columns) {
    out << "candidate,verdict,worst_eps,worst_density_num,worst_density_den\n";
  } else {
    out << "candidate,verdict,window_sup,half_prefix_sup\n";
  }
  for (std::size_t i = 0; i < est.membership.size(); ++i) {
    const ConvergenceVerdict& m = est.membership[i];
    out << format_real(est.grid.point(i)) << "," << to_string(m.verdict);
    if (stat_columns) {
      const EpsEvidence* w = worst_eps(m.per_eps);
      if (w != nullptr) {
        out << "," << format_real(w->eps) << "," << w->density.evidence.count_n << ","
            << w->density.evidence.n;
      } else {
        out << ",,,";
      }
    } else if (m.tail) {
      out << "," << format_real(m.tail->window_sup) << ","
          << format_real(m.tail->half_prefix_sup);
    } else {
      out << ",,";
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace

std::string limit_set_csv(const LimitSetEstimate& est) { return grid_scan_csv(est, true); }

std::string rough_limit_set_csv(const LimitSetEstimate& est) {
  return grid_scan_csv(est, false);
}

std::string cluster_csv(const std::vector<ClusterPointReport>& reports) {
  std::ostringstream out;
  out << "candidate,verdict,binding_eps,binding_density_num,binding_density_den\n";
  for (const auto& rep : reports) {
    // The binding eps for a cluster verdict is the one with the smallest
    // near-set density (the constraint closest to failing).
    const EpsEvidence* binding = nullptr;
    for (const auto& e : rep.per_eps) {
      if (binding == nullptr ||
          e.density.evidence.value() < binding->density.evidence.value()) {
        binding = &e;
      }
    }
    out << format_real(rep.candidate) << "," << to_string(rep.verdict);
    if (binding != nullptr) {
      out << "," << format_real(binding->eps) << "," << binding->density.evidence.count_n
          << "," << binding->density.evidence.n;
    } else {
      out << ",,,";
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace roughstat
