#include "roughstat/runner.hpp"

#include <stdexcept>

#include "roughstat/theorems.hpp"
#include "roughstat/util.hpp"

namespace roughstat {

namespace {

const Sequence& required_sequence(const ExperimentConfig& cfg) {
  if (!cfg.sequence) throw std::invalid_argument("mode requires a sequence");
  return *cfg.sequence;
}

// The built-in example instance ships with a claimed limit set of
// {0} union [1, inf) at roughness 1. When a grid scan of that exact instance
// disagrees at the point 0, the mismatch is reported with the measured
// exceedance density at eps = 1/2.
void record_example_discrepancy(const ExperimentConfig& cfg, const LimitSetEstimate& est,
                                ordered_json& discrepancies) {
  if (cfg.space.kind() != SpaceKind::MaxOnRPlus) return;
  if (!cfg.sequence || cfg.sequence->spec().name() != "example-2.1" ||
      !cfg.sequence->selectors().empty()) {
    return;
  }
  if (cfg.r != 1.0) return;
  const auto idx0 = cfg.grid.index_of(Rational(0, 1));
  if (!idx0) return;
  const Verdict at_zero = est.membership[*idx0].verdict;
  if (at_zero == Verdict::Yes) return;

  const IndexSet exceed =
      exceedance_indices(cfg.space, *cfg.sequence, 0.0, cfg.r, 0.5, cfg.n_terms);
  const std::uint64_t count = prefix_count(exceed, cfg.n_terms);
  discrepancies.push_back(ordered_json{
      {"id", "example-2.1-point-0"},
      {"claim", "the roughness-1 statistical limit set of example-2.1 contains 0"},
      {"computed_verdict", to_string(at_zero)},
      {"eps", json_real(0.5)},
      {"exceedance_density",
       std::to_string(count) + "/" + std::to_string(cfg.n_terms)},
      {"detail",
       "every even non-square index n has |p(x_n,0)-p(0,0)| = 2 >= 1+eps for each "
       "scheduled eps < 1; that index set has density 1/2"}});
}

}  // namespace

RunOutput run_experiment(const ExperimentConfig& cfg) {
  RunOutput out;
  ordered_json results;
  ordered_json discrepancies = ordered_json::array();

  switch (cfg.mode) {
    case RunMode::RoughStat: {
      const ConvergenceVerdict v = rough_stat_convergent(
          cfg.space, required_sequence(cfg), cfg.x, cfg.r, cfg.schedule, cfg.n_terms,
          cfg.tau);
      results = ordered_json{{"mode", "rough_stat"},
                             {"x", json_real(cfg.x)},
                             {"r", json_real(cfg.r)},
                             {"result", to_json(v)}};
      break;
    }
    case RunMode::Rough: {
      const ConvergenceVerdict v =
          rough_convergent(cfg.space, required_sequence(cfg), cfg.x, cfg.r, cfg.n_terms,
                           cfg.tail_fraction, cfg.schedule);
      results = ordered_json{{"mode", "rough"},
                             {"x", json_real(cfg.x)},
                             {"r", json_real(cfg.r)},
                             {"result", to_json(v)}};
      break;
    }
    case RunMode::LimitSet: {
      const LimitSetEstimate est =
          stat_limit_set(cfg.space, required_sequence(cfg), cfg.r, cfg.grid, cfg.n_terms,
                         cfg.schedule, cfg.tau);
      results = to_json(est);
      results["mode"] = "limit_set";
      record_example_discrepancy(cfg, est, discrepancies);
      out.csv_files.emplace_back("limit_set.csv", limit_set_csv(est));
      break;
    }
    case RunMode::RoughLimitSet: {
      const LimitSetEstimate est =
          rough_limit_set(cfg.space, required_sequence(cfg), cfg.r, cfg.grid, cfg.n_terms,
                          cfg.tail_fraction, cfg.schedule);
      results = to_json(est);
      results["mode"] = "rough_limit_set";
      out.csv_files.emplace_back("rough_limit_set.csv", rough_limit_set_csv(est));
      break;
    }
    case RunMode::Bounded: {
      const BoundedResult res = stat_bounded(cfg.space, required_sequence(cfg), cfg.u,
                                             cfg.m_grid, cfg.n_terms, cfg.tau);
      results = to_json(res);
      results["u"] = json_real(cfg.u);
      break;
    }
    case RunMode::Cauchy: {
      const CauchyResult res =
          stat_cauchy(cfg.space, required_sequence(cfg), cfg.m_candidates, cfg.l_grid,
                      cfg.schedule, cfg.n_terms, cfg.tau);
      results = to_json(res);
      break;
    }
    case RunMode::Clusters: {
      const std::vector<double> candidates =
          cfg.candidates ? *cfg.candidates : cfg.grid.points();
      const auto reports = stat_cluster_points(cfg.space, required_sequence(cfg),
                                               candidates, cfg.schedule, cfg.n_terms,
                                               cfg.tau);
      ordered_json arr = ordered_json::array();
      ordered_json clusters = ordered_json::array();
      for (const auto& rep : reports) {
        arr.push_back(to_json(rep));
        if (rep.verdict == Verdict::Yes) clusters.push_back(json_real(rep.candidate));
      }
      results = ordered_json{{"mode", "clusters"},
                             {"cluster_points", clusters},
                             {"points", arr}};
      out.csv_files.emplace_back("clusters.csv", cluster_csv(reports));
      break;
    }
    case RunMode::Theorem: {
      TheoremInstance ins;
      ins.label = "config";
      ins.space = cfg.space;
      ins.seq = required_sequence(cfg);
      ins.seq2 = cfg.sequence2;
      ins.x = cfg.x;
      ins.r = cfg.r;
      ins.n_terms = cfg.n_terms;
      ins.schedule = cfg.schedule;
      ins.tau = cfg.tau;
      ins.grid = cfg.grid;
      ins.tail_fraction = cfg.tail_fraction;
      ins.u = cfg.u;
      ins.c = cfg.c;
      ins.bound_c = cfg.bound_c;
      ins.bound_d = cfg.bound_d;
      ins.m_grid = cfg.m_grid;
      ins.r_grid = cfg.r_grid;
      ins.selection = cfg.selection;
      ins.seed = cfg.seed;
      CheckReport rep;
      if (cfg.theorem_id == "2.1") rep = check_rough_implies_rough_stat(ins);
      else if (cfg.theorem_id == "2.2") rep = check_diam_bound(ins);
      else if (cfg.theorem_id == "2.3") rep = check_ball_inclusion(ins);
      else if (cfg.theorem_id == "2.4") rep = check_limit_set_closed(ins);
      else if (cfg.theorem_id == "2.5") rep = check_stat_bounded_iff_nonempty(ins);
      else if (cfg.theorem_id == "2.6") rep = check_density_one_subsequence(ins);
      else if (cfg.theorem_id == "2.7") rep = check_asymptotic_pair_transfer(ins);
      else if (cfg.theorem_id == "2.8") rep = check_bounded_self_distance_transfer(ins);
      else if (cfg.theorem_id == "2.9") rep = check_cluster_ball_containment(ins);
      else if (cfg.theorem_id == "cor-2.1") {
        rep = check_limit_set_closed(ins);
        rep.theorem_id = "cor-2.1";
      } else {
        throw std::invalid_argument("unknown theorem id '" + cfg.theorem_id + "'");
      }
      results = ordered_json{{"mode", "theorem"}, {"check", to_json(rep)}};
      if (rep.outcome == Outcome::Fail) out.exit_code = kExitCheckFailed;
      break;
    }
    case RunMode::Suite: {
      const std::vector<CheckReport> reports = run_default_suite(
          cfg.n_explicit ? cfg.n_terms : 0,
          cfg.tau_explicit ? std::optional<Rational>(cfg.tau) : std::nullopt);
      ordered_json arr = ordered_json::array();
      std::size_t fail_count = 0;
      for (const CheckReport& rep : reports) {
        arr.push_back(to_json(rep));
        if (rep.outcome == Outcome::Fail) ++fail_count;
      }
      results = ordered_json{{"mode", "suite"},
                             {"checks", arr},
                             {"fail_count", fail_count}};
      if (fail_count > 0) out.exit_code = kExitCheckFailed;
      break;
    }
  }

  out.report = ordered_json{{"config", cfg.echo()},
                            {"results", results},
                            {"discrepancies", discrepancies},
                            {"version", kVersion}};
  return out;
}

}  // namespace roughstat
