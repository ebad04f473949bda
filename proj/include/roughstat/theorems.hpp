#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "roughstat/analysis.hpp"
#include "roughstat/report.hpp"

namespace roughstat {

enum class Status { Holds, Fails, Inconclusive };
enum class Outcome { Pass, Vacuous, Fail, Inconclusive };

const char* to_string(Status s);
const char* to_string(Outcome o);

Status status_of(Verdict v);
// Fail only from Holds + Fails; Vacuous whenever the hypothesis is not
// established; Inconclusive when the hypothesis holds but the conclusion
// could not be decided.
Outcome outcome_of(Status hypothesis, Status conclusion);

// One bag of parameters serving every check; each check reads what it needs.
struct TheoremInstance {
  std::string label;
  PartialMetricSpace space = PartialMetricSpace::max_rplus();
  Sequence seq{constant_sequence(0.0)};
  std::optional<Sequence> seq2;
  double x = 0.0;  // candidate limit
  double r = 1.0;
  std::uint64_t n_terms = 100000;
  EpsSchedule schedule = EpsSchedule::defaults();
  Rational tau{1, 100};
  Grid grid = Grid::make(Rational(0, 1), Rational(5, 1), Rational(1, 20));
  Rational tail_fraction{1, 2};
  double u = 0.0;            // base point for boundedness
  double c = 0.0;            // cluster candidate
  double bound_c = 1.0;      // self-distance bound (x-side)
  double bound_d = 1.0;      // self-distance bound (y-side)
  std::vector<double> m_grid{1.0, 2.0, 3.0, 5.0, 10.0};
  std::vector<double> r_grid{0.0, 1.0, 2.0};
  std::optional<IndexPredicate> selection;
  std::uint64_t seed = 0;

  std::string descriptor() const;
};

struct CheckReport {
  std::string theorem_id;
  std::string instance;
  std::string instance_hash;
  Status hypothesis_status = Status::Inconclusive;
  Status conclusion_status = Status::Inconclusive;
  Outcome outcome = Outcome::Inconclusive;
  ordered_json evidence;
  std::vector<std::string> notes;
};

ordered_json to_json(const CheckReport& rep);

CheckReport check_rough_implies_rough_stat(const TheoremInstance& ins);    // 2.1
CheckReport check_diam_bound(const TheoremInstance& ins);                  // 2.2
CheckReport check_ball_inclusion(const TheoremInstance& ins);              // 2.3
CheckReport check_limit_set_closed(const TheoremInstance& ins);            // 2.4 / cor-2.1
CheckReport check_stat_bounded_iff_nonempty(const TheoremInstance& ins);   // 2.5
CheckReport check_density_one_subsequence(const TheoremInstance& ins);     // 2.6
CheckReport check_asymptotic_pair_transfer(const TheoremInstance& ins);    // 2.7
CheckReport check_bounded_self_distance_transfer(const TheoremInstance& ins);  // 2.8
CheckReport check_cluster_ball_containment(const TheoremInstance& ins);    // 2.9

// One report per theorem id 2.1-2.9 plus cor-2.1 on the default instances,
// sorted by (theorem id, instance hash).
std::vector<CheckReport> run_default_suite(std::uint64_t n_override = 0,
                                           std::optional<Rational> tau_override = {});

// The concrete instances behind the default suite and invariant sweeps.
std::vector<TheoremInstance> builtin_instances();

// Seeded random instance on a shifted-euclidean space with bounded rules
// only. Identical seeds produce identical instances.
TheoremInstance random_shifted_instance(std::uint64_t seed);

}  // namespace roughstat
