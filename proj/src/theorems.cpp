#include "roughstat/theorems.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "roughstat/util.hpp"

namespace roughstat {

namespace {

// Conclusion tolerance for diameter and ball comparisons in theorem checks.
constexpr double kConclTol = 1e-9;

Status worst(Status a, Status b) {
  if (a == Status::Fails || b == Status::Fails) return Status::Fails;
  if (a == Status::Inconclusive || b == Status::Inconclusive) return Status::Inconclusive;
  return Status::Holds;
}

struct SelfDistanceProbe {
  bool constant = false;
  double value = 0.0;
  double min_self = 0.0;
  double max_self = 0.0;
  std::size_t probed = 0;
};

// Samples p(g,g) on the grid points that lie in the space's domain (plus a
// few canonical points when the grid is unusable) and reports whether the
// self-distance is constant.
SelfDistanceProbe probe_self_distance(const PartialMetricSpace& space, const Grid& grid) {
  std::vector<double> points;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double g = grid.point(i);
    if (space.kind() == SpaceKind::MaxOnRPlus && g < 0.0) continue;
    points.push_back(g);
  }
  if (points.size() < 2) {
    for (double g : {0.0, 1.0, 2.0}) points.push_back(g);
  }
  SelfDistanceProbe probe;
  probe.probed = points.size();
  bool first = true;
  for (double g : points) {
    const double s = space.self_distance(g);
    if (first) {
      probe.min_self = probe.max_self = s;
      first = false;
    } else {
      probe.min_self = std::min(probe.min_self, s);
      probe.max_self = std::max(probe.max_self, s);
    }
  }
  probe.constant = probe.max_self - probe.min_self <= kCompareTol;
  probe.value = probe.min_self;
  return probe;
}

ordered_json to_json(const SelfDistanceProbe& p) {
  return ordered_json{{"constant", p.constant},
                      {"value", json_real(p.value)},
                      {"min_self", json_real(p.min_self)},
                      {"max_self", json_real(p.max_self)},
                      {"probed_points", p.probed}};
}

void seal(CheckReport& rep, const TheoremInstance& ins) {
  rep.instance = ins.descriptor();
  rep.instance_hash = fnv1a_hex(rep.instance);
}

// Outcome of one implication direction, using the contrapositive when the
// direct hypothesis is not established but the conclusion definitely fails.
Outcome direction_outcome(Verdict hypothesis, Verdict conclusion) {
  if (hypothesis == Verdict::Yes) {
    if (conclusion == Verdict::Yes) return Outcome::Pass;
    if (conclusion == Verdict::No) return Outcome::Fail;
    return Outcome::Inconclusive;
  }
  if (conclusion == Verdict::No) {
    if (hypothesis == Verdict::No) return Outcome::Pass;
    return Outcome::Inconclusive;
  }
  return Outcome::Vacuous;
}

Outcome combine_directions(Outcome a, Outcome b) {
  if (a == Outcome::Fail || b == Outcome::Fail) return Outcome::Fail;
  if (a == Outcome::Inconclusive || b == Outcome::Inconclusive) return Outcome::Inconclusive;
  if (a == Outcome::Pass || b == Outcome::Pass) return Outcome::Pass;
  return Outcome::Vacuous;
}

Status conjunction_status(std::initializer_list<Verdict> verdicts) {
  Status s = Status::Holds;
  for (Verdict v : verdicts) s = worst(s, status_of(v));
  return s;
}

}  // namespace

const char* to_string(Status s) {
  switch (s) {
    case Status::Holds:
      return "Holds";
    case Status::Fails:
      return "Fails";
    case Status::Inconclusive:
      return "Inconclusive";
  }
  return "?";
}

const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::Pass:
      return "Pass";
    case Outcome::Vacuous:
      return "Vacuous";
    case Outcome::Fail:
      return "Fail";
    case Outcome::Inconclusive:
      return "Inconclusive";
  }
  return "?";
}

Status status_of(Verdict v) {
  switch (v) {
    case Verdict::Yes:
      return Status::Holds;
    case Verdict::No:
      return Status::Fails;
    case Verdict::Inconclusive:
      return Status::Inconclusive;
  }
  return Status::Inconclusive;
}

Outcome outcome_of(Status hypothesis, Status conclusion) {
  if (hypothesis != Status::Holds) return Outcome::Vacuous;
  switch (conclusion) {
    case Status::Holds:
      return Outcome::Pass;
    case Status::Fails:
      return Outcome::Fail;
    case Status::Inconclusive:
      return Outcome::Inconclusive;
  }
  return Outcome::Inconclusive;
}

std::string TheoremInstance::descriptor() const {
  std::ostringstream out;
  out << "space=" << space.describe() << "; seq=" << seq.describe();
  if (seq2) out << "; seq2=" << seq2->describe();
  out << "; x=" << format_real(x) << "; r=" << format_real(r) << "; N=" << n_terms;
  out << "; schedule=[";
  for (std::size_t i = 0; i < schedule.values.size(); ++i) {
    if (i) out << ",";
    out << format_real(schedule.values[i]);
  }
  out << "]; tau=" << tau.str();
  out << "; grid=[" << grid.lo.str() << "," << grid.hi.str() << ";step=" << grid.step.str()
      << "]";
  out << "; tail_fraction=" << tail_fraction.str();
  out << "; u=" << format_real(u) << "; c=" << format_real(c);
  out << "; bound_c=" << format_real(bound_c) << "; bound_d=" << format_real(bound_d);
  out << "; m_grid=[";
  for (std::size_t i = 0; i < m_grid.size(); ++i) {
    if (i) out << ",";
    out << format_real(m_grid[i]);
  }
  out << "]; r_grid=[";
  for (std::size_t i = 0; i < r_grid.size(); ++i) {
    if (i) out << ",";
    out << format_real(r_grid[i]);
  }
  out << "]";
  if (selection) out << "; selection=" << selection->describe();
  out << "; seed=" << seed;
  return out.str();
}

ordered_json to_json(const CheckReport& rep) {
  ordered_json j{{"theorem", rep.theorem_id},
                 {"instance", rep.instance},
                 {"instance_hash", rep.instance_hash},
                 {"hypothesis", to_string(rep.hypothesis_status)},
                 {"conclusion", to_string(rep.conclusion_status)},
                 {"outcome", to_string(rep.outcome)},
                 {"evidence", rep.evidence}};
  if (!rep.notes.empty()) j["notes"] = rep.notes;
  return j;
}

CheckReport check_rough_implies_rough_stat(const TheoremInstance& ins) {
  CheckReport rep;
  rep.theorem_id = "2.1";
  seal(rep, ins);
  const ConvergenceVerdict rough =
      rough_convergent(ins.space, ins.seq, ins.x, ins.r, ins.n_terms, ins.tail_fraction,
                       ins.schedule);
  const ConvergenceVerdict stat =
      rough_stat_convergent(ins.space, ins.seq, ins.x, ins.r, ins.schedule, ins.n_terms,
                            ins.tau);
  rep.hypothesis_status = status_of(rough.verdict);
  rep.conclusion_status = status_of(stat.verdict);
  rep.outcome = outcome_of(rep.hypothesis_status, rep.conclusion_status);
  rep.evidence = ordered_json{{"rough", to_json(rough)}, {"rough_stat", to_json(stat)}};
  return rep;
}

CheckReport check_diam_bound(const TheoremInstance& ins) {
  CheckReport rep;
  rep.theorem_id = "2.2";
  seal(rep, ins);
  const SelfDistanceProbe probe = probe_self_distance(ins.space, ins.grid);
  rep.evidence["self_distance"] = to_json(probe);
  rep.hypothesis_status = probe.constant ? Status::Holds : Status::Fails;
  if (!probe.constant) {
    rep.outcome = Outcome::Vacuous;
    rep.notes.push_back("self-distance is not constant on the sampled points");
    return rep;
  }
  const LimitSetEstimate est = stat_limit_set(ins.space, ins.seq, ins.r, ins.grid,
                                              ins.n_terms, ins.schedule, ins.tau);
  rep.evidence["limit_set"] = to_json(est, false);
  if (!est.has_member()) {
    rep.outcome = Outcome::Vacuous;
    rep.notes.push_back("estimated limit set is empty; diameter bound is vacuous");
    return rep;
  }
  std::vector<RealPoint> members;
  for (double y : est.yes_points()) members.emplace_back(y);
  const double diameter = set_diameter(ins.space, members);
  const double bound = 2.0 * ins.r + 2.0 * probe.value;
  rep.evidence["diameter"] = json_real(diameter);
  rep.evidence["bound"] = json_real(bound);
  rep.conclusion_status = diameter <= bound + kConclTol ? Status::Holds : Status::Fails;
  rep.outcome = outcome_of(rep.hypothesis_status, rep.conclusion_status);
  return rep;
}

CheckReport check_ball_inclusion(const TheoremInstance& ins) {
  CheckReport rep;
  rep.theorem_id = "2.3";
  seal(rep, ins);
  const ConvergenceVerdict stat =
      stat_convergent(ins.space, ins.seq, ins.x, ins.schedule, ins.n_terms, ins.tau);
  rep.hypothesis_status = status_of(stat.verdict);
  rep.evidence["stat_convergence"] = to_json(stat);
  if (rep.hypothesis_status != Status::Holds) {
    rep.outcome = Outcome::Vacuous;
    return rep;
  }
  const LimitSetEstimate est = stat_limit_set(ins.space, ins.seq, ins.r, ins.grid,
                                              ins.n_terms, ins.schedule, ins.tau);
  rep.evidence["limit_set"] = to_json(est, false);
  const RealPoint center(ins.x);
  const double pxx = ins.space.self_distance(ins.x);
  ordered_json qualified = ordered_json::array();
  Status concl = Status::Holds;
  std::size_t qualified_count = 0;
  for (std::size_t i = 0; i < est.grid.size(); ++i) {
    const double y = est.grid.point(i);
    if (ins.space.kind() == SpaceKind::MaxOnRPlus && y < 0.0) continue;
    const bool in_ball = closed_ball_contains(ins.space, center, ins.r, RealPoint(y));
    const bool same_self =
        std::abs(pxx - ins.space.self_distance(y)) <= kCompareTol;
    if (!in_ball || !same_self) continue;
    ++qualified_count;
    const Verdict member = est.membership[i].verdict;
    qualified.push_back(
        ordered_json{{"y", json_real(y)}, {"membership", to_string(member)}});
    if (member == Verdict::No) {
      concl = Status::Fails;
    } else if (member == Verdict::Inconclusive && concl == Status::Holds) {
      concl = Status::Inconclusive;
    }
  }
  rep.evidence["qualified_points"] = qualified;
  if (qualified_count == 0) {
    rep.notes.push_back("no grid point qualifies for the ball; inclusion is trivial");
  }
  rep.conclusion_status = concl;
  rep.outcome = outcome_of(rep.hypothesis_status, rep.conclusion_status);
  return rep;
}

CheckReport check_limit_set_closed(const TheoremInstance& ins) {
  CheckReport rep;
  rep.theorem_id = "2.4";
  seal(rep, ins);
  const LimitSetEstimate est = stat_limit_set(ins.space, ins.seq, ins.r, ins.grid,
                                              ins.n_terms, ins.schedule, ins.tau);
  rep.evidence["limit_set"] = to_json(est, false);
  if (est.has_member()) {
    rep.hypothesis_status = Status::Holds;
  } else {
    rep.hypothesis_status =
        est.inconclusive.empty() ? Status::Fails : Status::Inconclusive;
  }
  if (rep.hypothesis_status != Status::Holds) {
    rep.outcome = Outcome::Vacuous;
    rep.notes.push_back("no estimated members; closedness is vacuous at this resolution");
    return rep;
  }

  const Rational half_step = ins.grid.step / Rational(2, 1);
  auto member_at = [&](const Rational& x) {
    return rough_stat_convergent(ins.space, ins.seq, x.to_double(), ins.r, ins.schedule,
                                 ins.n_terms, ins.tau)
        .verdict;
  };

  Status concl = Status::Holds;
  ordered_json probes = ordered_json::array();
  for (const auto& [lo_idx, hi_idx] : est.yes_runs) {
    const Rational lo = ins.grid.point_exact(lo_idx);
    const Rational hi = ins.grid.point_exact(hi_idx);
    // Member-side probes at half step: a run endpoint must not expose a hole.
    if (lo_idx < hi_idx) {
      for (const Rational& p : {lo + half_step, hi - half_step}) {
        const Verdict v = member_at(p);
        probes.push_back(ordered_json{{"x", json_real(p.to_double())},
                                      {"side", "member"},
                                      {"verdict", to_string(v)}});
        if (v == Verdict::No) concl = Status::Fails;
      }
    }
    // Outside probes: a Yes just past the endpoint next to a No base point
    // means the boundary moved under refinement.
    struct Outside {
      bool present;
      Rational x;
      std::size_t neighbor;
    };
    const Outside outsides[2] = {
        {lo_idx > 0, lo - half_step, lo_idx > 0 ? lo_idx - 1 : 0},
        {hi_idx + 1 < ins.grid.size(), hi + half_step, hi_idx + 1},
    };
    for (const Outside& o : outsides) {
      if (!o.present) continue;
      const Verdict v = member_at(o.x);
      probes.push_back(ordered_json{{"x", json_real(o.x.to_double())},
                                    {"side", "outside"},
                                    {"verdict", to_string(v)}});
      if (v == Verdict::Yes && est.membership[o.neighbor].verdict == Verdict::No &&
          concl == Status::Holds) {
        concl = Status::Inconclusive;
        rep.notes.push_back("membership boundary moved under refinement near " +
                            format_real(o.x.to_double()));
      }
    }
  }
  rep.evidence["refinement_probes"] = probes;
  rep.conclusion_status = concl;
  rep.outcome = outcome_of(rep.hypothesis_status, rep.conclusion_status);
  return rep;
}

CheckReport check_stat_bounded_iff_nonempty(const TheoremInstance& ins) {
  CheckReport rep;
  rep.theorem_id = "2.5";
  seal(rep, ins);
  const SelfDistanceProbe probe = probe_self_distance(ins.space, ins.grid);
  rep.evidence["self_distance"] = to_json(probe);
  rep.hypothesis_status = probe.constant ? Status::Holds : Status::Fails;
  if (!probe.constant) {
    rep.outcome = Outcome::Vacuous;
    rep.notes.push_back("self-distance is not constant on the sampled points");
    return rep;
  }

  const BoundedResult bounded =
      stat_bounded(ins.space, ins.seq, ins.u, ins.m_grid, ins.n_terms, ins.tau);
  rep.evidence["stat_bounded"] = to_json(bounded);

  Verdict nonempty = Verdict::No;
  ordered_json sweep = ordered_json::array();
  for (double r_cand : ins.r_grid) {
    const LimitSetEstimate est = stat_limit_set(ins.space, ins.seq, r_cand, ins.grid,
                                                ins.n_terms, ins.schedule, ins.tau);
    sweep.push_back(ordered_json{{"r", json_real(r_cand)},
                                 {"members", est.yes_points().size()},
                                 {"inconclusive", est.inconclusive.size()}});
    if (est.has_member()) {
      nonempty = Verdict::Yes;
    } else if (!est.inconclusive.empty() && nonempty == Verdict::No) {
      nonempty = Verdict::Inconclusive;
    }
  }
  rep.evidence["r_sweep"] = sweep;
  rep.notes.push_back("existential r bounded to the listed search grid");

  const Verdict b = bounded.verdict.verdict;
  const Outcome forward = direction_outcome(b, nonempty);
  const Outcome backward = direction_outcome(nonempty, b);
  rep.evidence["forward"] = ordered_json{{"hypothesis", to_string(b)},
                                         {"conclusion", to_string(nonempty)},
                                         {"outcome", to_string(forward)}};
  rep.evidence["backward"] = ordered_json{{"hypothesis", to_string(nonempty)},
                                          {"conclusion", to_string(b)},
                                          {"outcome", to_string(backward)}};
  if (b == Verdict::Inconclusive || nonempty == Verdict::Inconclusive) {
    rep.conclusion_status = Status::Inconclusive;
  } else {
    rep.conclusion_status = (b == nonempty) ? Status::Holds : Status::Fails;
  }
  rep.outcome = outcome_of(rep.hypothesis_status, rep.conclusion_status);
  return rep;
}

CheckReport check_density_one_subsequence(const TheoremInstance& ins) {
  CheckReport rep;
  rep.theorem_id = "2.6";
  seal(rep, ins);
  if (!ins.selection) {
    throw std::invalid_argument("theorem 2.6 check needs a selection predicate");
  }
  const DensityEstimate sel_est = density_estimate(*ins.selection, ins.n_terms);
  const DensityVerdict sel_verdict = density_verdict(sel_est, ins.tau);
  rep.evidence["selection_density"] = to_json(sel_verdict);
  const Rational one_minus_tau = Rational(1, 1) - ins.tau;
  if (sel_verdict.verdict == DensityClass::Positive && sel_est.value() >= one_minus_tau) {
    rep.hypothesis_status = Status::Holds;
  } else if (sel_est.value() < one_minus_tau) {
    rep.hypothesis_status = Status::Fails;
  } else {
    rep.hypothesis_status = Status::Inconclusive;
  }
  if (rep.hypothesis_status != Status::Holds) {
    rep.outcome = Outcome::Vacuous;
    rep.notes.push_back("selection does not have density compatible with 1");
    return rep;
  }

  const LimitSetEstimate full = stat_limit_set(ins.space, ins.seq, ins.r, ins.grid,
                                               ins.n_terms, ins.schedule, ins.tau);
  const Sequence sub = restrict_to_indices(ins.seq, *ins.selection);
  const LimitSetEstimate subset = stat_limit_set(ins.space, sub, ins.r, ins.grid,
                                                 ins.n_terms, ins.schedule, ins.tau);
  rep.evidence["full"] = to_json(full, false);
  rep.evidence["subsequence"] = to_json(subset, false);

  Status concl = Status::Holds;
  ordered_json flips = ordered_json::array();
  for (std::size_t i : full.expand_yes()) {
    const Verdict after = subset.membership[i].verdict;
    if (after == Verdict::No) {
      concl = Status::Fails;
      flips.push_back(ordered_json{{"x", json_real(full.grid.point(i))},
                                   {"after", to_string(after)}});
    } else if (after == Verdict::Inconclusive) {
      flips.push_back(ordered_json{{"x", json_real(full.grid.point(i))},
                                   {"after", to_string(after)}});
    }
  }
  rep.evidence["changed_members"] = flips;
  rep.conclusion_status = concl;
  rep.outcome = outcome_of(rep.hypothesis_status, rep.conclusion_status);
  return rep;
}

namespace {

struct TransferParts {
  ConvergenceVerdict pair_distance;
  ConvergenceVerdict conv_x;
  ConvergenceVerdict conv_y;
};

TransferParts transfer_parts(const TheoremInstance& ins, double r_x, double r_y) {
  if (!ins.seq2) {
    throw std::invalid_argument("pair-transfer checks need a second sequence");
  }
  TransferParts parts;
  parts.pair_distance = paired_distance_vanishes(ins.space, ins.seq, *ins.seq2,
                                                 ins.n_terms, ins.tail_fraction,
                                                 ins.schedule);
  parts.conv_x = rough_stat_convergent(ins.space, ins.seq, ins.x, r_x, ins.schedule,
                                       ins.n_terms, ins.tau);
  parts.conv_y = rough_stat_convergent(ins.space, *ins.seq2, ins.x, r_y, ins.schedule,
                                       ins.n_terms, ins.tau);
  return parts;
}

void fill_direction_report(CheckReport& rep, Status hyp_fwd, Status concl_fwd,
                           Outcome fwd, Status hyp_bwd, Status concl_bwd, Outcome bwd) {
  rep.evidence["forward"] = ordered_json{{"hypothesis", to_string(hyp_fwd)},
                                         {"conclusion", to_string(concl_fwd)},
                                         {"outcome", to_string(fwd)}};
  rep.evidence["backward"] = ordered_json{{"hypothesis", to_string(hyp_bwd)},
                                          {"conclusion", to_string(concl_bwd)},
                                          {"outcome", to_string(bwd)}};
  rep.outcome = combine_directions(fwd, bwd);
  if (hyp_fwd == Status::Holds) {
    rep.hypothesis_status = hyp_fwd;
    rep.conclusion_status = concl_fwd;
  } else if (hyp_bwd == Status::Holds) {
    rep.hypothesis_status = hyp_bwd;
    rep.conclusion_status = concl_bwd;
  } else {
    rep.hypothesis_status = worst(hyp_fwd, hyp_bwd) == Status::Fails
                                ? Status::Fails
                                : Status::Inconclusive;
    rep.conclusion_status = Status::Inconclusive;
  }
}

Outcome status_direction(Status hyp, Status concl) {
  if (hyp == Status::Holds) {
    if (concl == Status::Holds) return Outcome::Pass;
    if (concl == Status::Fails) return Outcome::Fail;
    return Outcome::Inconclusive;
  }
  return Outcome::Vacuous;
}

}  // namespace

CheckReport check_asymptotic_pair_transfer(const TheoremInstance& ins) {
  CheckReport rep;
  rep.theorem_id = "2.7";
  seal(rep, ins);
  const TransferParts parts = transfer_parts(ins, ins.r, ins.r);
  const ConvergenceVerdict self_x = self_distance_vanishes(
      ins.space, ins.seq, ins.n_terms, ins.tail_fraction, ins.schedule);
  const ConvergenceVerdict self_y = self_distance_vanishes(
      ins.space, *ins.seq2, ins.n_terms, ins.tail_fraction, ins.schedule);

  rep.evidence["pair_distance_to_zero"] = to_json(parts.pair_distance);
  rep.evidence["self_distance_x"] = to_json(self_x);
  rep.evidence["self_distance_y"] = to_json(self_y);
  rep.evidence["x_convergence"] = to_json(parts.conv_x);
  rep.evidence["y_convergence"] = to_json(parts.conv_y);

  const Status hyp_fwd = conjunction_status(
      {parts.pair_distance.verdict, self_x.verdict, parts.conv_x.verdict});
  const Status concl_fwd = status_of(parts.conv_y.verdict);
  const Status hyp_bwd = conjunction_status(
      {parts.pair_distance.verdict, self_y.verdict, parts.conv_y.verdict});
  const Status concl_bwd = status_of(parts.conv_x.verdict);
  fill_direction_report(rep, hyp_fwd, concl_fwd, status_direction(hyp_fwd, concl_fwd),
                        hyp_bwd, concl_bwd, status_direction(hyp_bwd, concl_bwd));
  return rep;
}

CheckReport check_bounded_self_distance_transfer(const TheoremInstance& ins) {
  CheckReport rep;
  rep.theorem_id = "2.8";
  seal(rep, ins);
  if (!ins.seq2) {
    throw std::invalid_argument("pair-transfer checks need a second sequence");
  }
  const ConvergenceVerdict pair = paired_distance_vanishes(
      ins.space, ins.seq, *ins.seq2, ins.n_terms, ins.tail_fraction, ins.schedule);

  auto max_self = [&](const Sequence& s) {
    double mx = 0.0;
    bool first = true;
    s.for_each(ins.n_terms, [&](std::uint64_t, double v) {
      const double d = ins.space.self_distance(v);
      if (first || d > mx) {
        mx = d;
        first = false;
      }
    });
    return mx;
  };
  const double max_self_x = max_self(ins.seq);
  const double max_self_y = max_self(*ins.seq2);
  const bool bound_x_ok = max_self_x <= ins.bound_c + kCompareTol;
  const bool bound_y_ok = max_self_y <= ins.bound_d + kCompareTol;

  const ConvergenceVerdict conv_x = rough_stat_convergent(
      ins.space, ins.seq, ins.x, ins.r, ins.schedule, ins.n_terms, ins.tau);
  const ConvergenceVerdict conv_y = rough_stat_convergent(
      ins.space, *ins.seq2, ins.x, ins.r, ins.schedule, ins.n_terms, ins.tau);
  const ConvergenceVerdict concl_fwd_v =
      rough_stat_convergent(ins.space, *ins.seq2, ins.x, ins.r + ins.bound_c,
                            ins.schedule, ins.n_terms, ins.tau);
  const ConvergenceVerdict concl_bwd_v =
      rough_stat_convergent(ins.space, ins.seq, ins.x, ins.r + ins.bound_d,
                            ins.schedule, ins.n_terms, ins.tau);

  rep.evidence["pair_distance_to_zero"] = to_json(pair);
  rep.evidence["max_self_distance_x"] = json_real(max_self_x);
  rep.evidence["max_self_distance_y"] = json_real(max_self_y);
  rep.evidence["bound_c"] = json_real(ins.bound_c);
  rep.evidence["bound_d"] = json_real(ins.bound_d);
  rep.evidence["x_convergence"] = to_json(conv_x);
  rep.evidence["y_convergence_at_r_plus_c"] = to_json(concl_fwd_v);
  rep.evidence["y_convergence"] = to_json(conv_y);
  rep.evidence["x_convergence_at_r_plus_d"] = to_json(concl_bwd_v);

  const Status hyp_fwd =
      worst(conjunction_status({pair.verdict, conv_x.verdict}),
            bound_x_ok ? Status::Holds : Status::Fails);
  const Status hyp_bwd =
      worst(conjunction_status({pair.verdict, conv_y.verdict}),
            bound_y_ok ? Status::Holds : Status::Fails);
  fill_direction_report(rep, hyp_fwd, status_of(concl_fwd_v.verdict),
                        status_direction(hyp_fwd, status_of(concl_fwd_v.verdict)),
                        hyp_bwd, status_of(concl_bwd_v.verdict),
                        status_direction(hyp_bwd, status_of(concl_bwd_v.verdict)));
  rep.notes.push_back(
      "p1 gives p(x_n,x_n) <= p(x_n,y_n), so a vanishing pair distance already forces "
      "vanishing self-distances; the stated weaker conclusion is validated as-is");
  return rep;
}

CheckReport check_cluster_ball_containment(const TheoremInstance& ins) {
  CheckReport rep;
  rep.theorem_id = "2.9";
  seal(rep, ins);
  const SelfDistanceProbe probe = probe_self_distance(ins.space, ins.grid);
  rep.evidence["self_distance"] = to_json(probe);
  const auto cluster = stat_cluster_points(ins.space, ins.seq, {ins.c}, ins.schedule,
                                           ins.n_terms, ins.tau);
  rep.evidence["cluster_candidate"] = to_json(cluster.front());
  rep.hypothesis_status = worst(probe.constant ? Status::Holds : Status::Fails,
                                status_of(cluster.front().verdict));
  if (rep.hypothesis_status != Status::Holds) {
    rep.outcome = Outcome::Vacuous;
    rep.notes.push_back(probe.constant
                            ? "candidate is not a statistical cluster point"
                            : "self-distance is not constant on the sampled points");
    return rep;
  }
  const LimitSetEstimate est = stat_limit_set(ins.space, ins.seq, ins.r, ins.grid,
                                              ins.n_terms, ins.schedule, ins.tau);
  rep.evidence["limit_set"] = to_json(est, false);
  if (!est.has_member()) {
    rep.outcome = Outcome::Vacuous;
    rep.notes.push_back("estimated limit set is empty; containment is vacuous");
    return rep;
  }
  Status concl = Status::Holds;
  ordered_json outside = ordered_json::array();
  for (double y : est.yes_points()) {
    if (!closed_ball_contains(ins.space, RealPoint(ins.c), ins.r, RealPoint(y))) {
      concl = Status::Fails;
      outside.push_back(json_real(y));
    }
  }
  rep.evidence["members_outside_ball"] = outside;
  rep.conclusion_status = concl;
  rep.outcome = outcome_of(rep.hypothesis_status, rep.conclusion_status);
  return rep;
}

namespace {

TheoremInstance base_instance(std::string label) {
  TheoremInstance ins;
  ins.label = std::move(label);
  return ins;
}

Grid quarter_grid(int lo, int hi) {
  return Grid::make(Rational(lo, 1), Rational(hi, 1), Rational(1, 4));
}

}  // namespace

std::vector<TheoremInstance> builtin_instances() {
  std::vector<TheoremInstance> out;

  {
    TheoremInstance ins = base_instance("2.1-reciprocal");
    ins.space = PartialMetricSpace::shifted_euclidean(1.0);
    ins.seq = Sequence(reciprocal_sequence());
    ins.x = 0.0;
    ins.r = 0.0;
    ins.n_terms = 10000;
    ins.grid = quarter_grid(-2, 2);
    out.push_back(ins);
  }
  {
    TheoremInstance ins = base_instance("2.1-example-2.1");
    ins.space = PartialMetricSpace::max_rplus();
    ins.seq = Sequence(paper_example_sequence());
    ins.x = 2.0;
    ins.r = 1.0;
    ins.n_terms = 100000;
    out.push_back(ins);
  }
  {
    TheoremInstance ins = base_instance("2.1-constant");
    ins.space = PartialMetricSpace::shifted_euclidean(1.0);
    ins.seq = Sequence(constant_sequence(1.0));
    ins.x = 1.0;
    ins.r = 0.0;
    ins.n_terms = 10000;
    ins.grid = quarter_grid(-2, 2);
    out.push_back(ins);
  }
  {
    TheoremInstance ins = base_instance("2.2-alternating");
    ins.space = PartialMetricSpace::shifted_euclidean(1.0);
    ins.seq = Sequence(alternating_sequence(1.0));
    ins.r = 1.0;
    ins.grid = quarter_grid(-3, 3);
    out.push_back(ins);
  }
  {
    TheoremInstance ins = base_instance("2.2-reciprocal");
    ins.space = PartialMetricSpace::shifted_euclidean(1.0);
    ins.seq = Sequence(reciprocal_sequence());
    ins.r = 1.0;
    ins.grid = quarter_grid(-3, 3);
    out.push_back(ins);
  }
  {
    TheoremInstance ins = base_instance("2.3-reciprocal");
    ins.space = PartialMetricSpace::shifted_euclidean(1.0);
    ins.seq = Sequence(reciprocal_sequence());
    ins.x = 0.0;
    ins.r = 1.0;
    ins.grid = quarter_grid(-2, 2);
    out.push_back(ins);
  }
  {
    TheoremInstance ins = base_instance("2.3-example-2.1");
    ins.space = PartialMetricSpace::max_rplus();
    ins.seq = Sequence(paper_example_sequence());
    ins.x = 2.0;
    ins.r = 1.0;
    ins.grid = quarter_grid(0, 5);
    out.push_back(ins);
  }
  {
    TheoremInstance ins = base_instance("2.4-reciprocal");
    ins.space = PartialMetricSpace::shifted_euclidean(1.0);
    ins.seq = Sequence(reciprocal_sequence());
    ins.r = 1.0;
    ins.grid = quarter_grid(-2, 2);
    out.push_back(ins);
  }
  {
    TheoremInstance ins = base_instance("cor-2.1-example-2.1");
    ins.space = PartialMetricSpace::max_rplus();
    ins.seq = Sequence(paper_example_sequence());
    ins.r = 1.0;
    ins.grid = quarter_grid(0, 5);
    out.push_back(ins);
  }
  {
    TheoremInstance ins = base_instance("2.5-alternating");
    ins.space = PartialMetricSpace::shifted_euclidean(1.0);
    ins.seq = Sequence(alternating_sequence(1.0));
    ins.u = 0.0;
    ins.grid = quarter_grid(-3, 3);
    ins.r_grid = {0.0, 1.0, 2.0};
    out.push_back(ins);
  }
  {
    TheoremInstance ins = base_instance("2.5-linear");
    ins.space = PartialMetricSpace::shifted_euclidean(1.0);
    ins.seq = Sequence(linear_sequence());
    ins.u = 0.0;
    ins.grid = Grid::make(Rational(-10, 1), Rational(10, 1), Rational(1, 1));
    ins.m_grid = {10.0, 100.0};
    ins.r_grid = {0.0, 1.0, 2.0, 5.0};
    out.push_back(ins);
  }
  {
    TheoremInstance ins = base_instance("2.6-example-2.1");
    ins.space = PartialMetricSpace::max_rplus();
    ins.seq = Sequence(paper_example_sequence());
    ins.r = 1.0;
    ins.grid = quarter_grid(0, 5);
    ins.selection = IndexPredicate::negate(IndexPredicate::perfect_square());
    out.push_back(ins);
  }
  {
    TheoremInstance ins = base_instance("2.7-reciprocal-pair");
    ins.space = PartialMetricSpace::max_rplus();
    ins.seq = Sequence(reciprocal_sequence());
    ins.seq2 = Sequence(reciprocal_sequence(0.5));
    ins.x = 0.0;
    ins.r = 0.0;
    out.push_back(ins);
  }
  {
    TheoremInstance ins = base_instance("2.8-reciprocal-pair");
    ins.space = PartialMetricSpace::max_rplus();
    ins.seq = Sequence(reciprocal_sequence());
    ins.seq2 = Sequence(reciprocal_sequence(0.5));
    ins.x = 0.0;
    ins.r = 0.0;
    ins.bound_c = 1.0;
    ins.bound_d = 1.0;
    out.push_back(ins);
  }
  {
    TheoremInstance ins = base_instance("2.9-alternating");
    ins.space = PartialMetricSpace::shifted_euclidean(1.0);
    ins.seq = Sequence(alternating_sequence(1.0));
    ins.c = 1.0;
    ins.r = 1.0;
    ins.grid = quarter_grid(-3, 3);
    out.push_back(ins);
  }

  return out;
}

namespace {

const TheoremInstance& find_instance(const std::vector<TheoremInstance>& all,
                                     const std::string& label) {
  for (const auto& ins : all) {
    if (ins.label == label) return ins;
  }
  throw std::logic_error("unknown builtin instance " + label);
}

}  // namespace

std::vector<CheckReport> run_default_suite(std::uint64_t n_override,
                                           std::optional<Rational> tau_override) {
  const std::vector<TheoremInstance> all = builtin_instances();
  struct Entry {
    const char* id;
    const char* label;
    CheckReport (*check)(const TheoremInstance&);
  };
  const Entry entries[] = {
      {"2.1", "2.1-reciprocal", check_rough_implies_rough_stat},
      {"2.2", "2.2-alternating", check_diam_bound},
      {"2.3", "2.3-reciprocal", check_ball_inclusion},
      {"2.4", "2.4-reciprocal", check_limit_set_closed},
      {"2.5", "2.5-alternating", check_stat_bounded_iff_nonempty},
      {"2.6", "2.6-example-2.1", check_density_one_subsequence},
      {"2.7", "2.7-reciprocal-pair", check_asymptotic_pair_transfer},
      {"2.8", "2.8-reciprocal-pair", check_bounded_self_distance_transfer},
      {"2.9", "2.9-alternating", check_cluster_ball_containment},
      {"cor-2.1", "cor-2.1-example-2.1", check_limit_set_closed},
  };
  std::vector<CheckReport> reports;
  for (const Entry& entry : entries) {
    TheoremInstance ins = find_instance(all, entry.label);
    if (n_override > 0) ins.n_terms = n_override;
    if (tau_override) ins.tau = *tau_override;
    CheckReport rep = entry.check(ins);
    rep.theorem_id = entry.id;
    reports.push_back(std::move(rep));
  }
  std::sort(reports.begin(), reports.end(), [](const CheckReport& a, const CheckReport& b) {
    if (a.theorem_id != b.theorem_id) return a.theorem_id < b.theorem_id;
    return a.instance_hash < b.instance_hash;
  });
  return reports;
}

TheoremInstance random_shifted_instance(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto pick = [&rng](std::uint64_t k) { return rng() % k; };
  auto quarters = [&pick](int lo_quarters, std::uint64_t count) {
    return 0.25 * static_cast<double>(lo_quarters + static_cast<int>(pick(count)));
  };

  TheoremInstance ins = base_instance("random-" + std::to_string(seed));
  ins.seed = seed;
  ins.space = PartialMetricSpace::shifted_euclidean(quarters(1, 8));  // a in [0.25, 2]

  auto random_rule = [&]() -> ValueRule {
    switch (pick(3)) {
      case 0:
        return ValueRule::constant(quarters(-12, 25));  // [-3, 3]
      case 1:
        return ValueRule::alternating(quarters(1, 8));  // [0.25, 2]
      default:
        return ValueRule::reciprocal(quarters(1, 8));
    }
  };

  std::vector<SequencePiece> pieces;
  switch (pick(5)) {
    case 0:
      pieces.push_back({IndexPredicate::all(), random_rule()});
      break;
    case 1:
      pieces.push_back({IndexPredicate::perfect_square(), random_rule()});
      pieces.push_back({IndexPredicate::all(), random_rule()});
      break;
    case 2:
      pieces.push_back({IndexPredicate::even(), random_rule()});
      pieces.push_back({IndexPredicate::odd(), random_rule()});
      break;
    case 3:
      pieces.push_back({IndexPredicate::perfect_square(), random_rule()});
      pieces.push_back({IndexPredicate::even(), random_rule()});
      pieces.push_back({IndexPredicate::odd(), random_rule()});
      break;
    default:
      pieces.push_back({IndexPredicate::residue(3, pick(3)), random_rule()});
      pieces.push_back({IndexPredicate::all(), random_rule()});
      break;
  }
  ins.seq = Sequence(SequenceSpec("random-seed-" + std::to_string(seed), std::move(pieces)));

  ins.x = quarters(-12, 25);
  const double r_choices[] = {0.5, 1.0, 2.0};
  ins.r = r_choices[pick(3)];
  ins.n_terms = 10000;
  ins.grid = quarter_grid(-4, 4);
  ins.u = 0.0;
  ins.c = ins.x;
  ins.selection = IndexPredicate::negate(IndexPredicate::perfect_square());
  return ins;
}

}  // namespace roughstat
