#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "roughstat/density.hpp"
#include "roughstat/pm_core.hpp"
#include "roughstat/rational.hpp"
#include "roughstat/seq_spec.hpp"

namespace roughstat {

// Finite truncation of "for every eps > 0": a strictly decreasing positive
// list. Every Yes verdict is relative to a schedule.
struct EpsSchedule {
  std::vector<double> values;

  static EpsSchedule defaults();  // 1, 1/2, 1/10, 1/20, 1/100
  static EpsSchedule from(std::vector<double> values);

  double min_eps() const { return values.back(); }
  double max_eps() const { return values.front(); }
};

enum class Verdict { Yes, No, Inconclusive };
const char* to_string(Verdict v);

enum class ConvergenceMode { RoughStat, Stat, Rough, StatCauchy, StatBounded };
const char* to_string(ConvergenceMode m);

struct EpsEvidence {
  double eps = 0.0;
  DensityVerdict density;
};

// Evidence for the tail-sup engine: deviation suprema over the tail window
// [ceil(tail_fraction*N), N], its two halves, and over the same window
// recomputed at prefix floor(N/2) (the growth diagnostic).
struct TailEvidence {
  std::uint64_t window_begin = 0;
  std::uint64_t window_end = 0;
  double window_sup = 0.0;
  double first_half_sup = 0.0;
  double second_half_sup = 0.0;
  std::uint64_t half_prefix_begin = 0;
  std::uint64_t half_prefix_end = 0;
  double half_prefix_sup = 0.0;
};

struct ConvergenceVerdict {
  ConvergenceMode mode = ConvergenceMode::RoughStat;
  Verdict verdict = Verdict::Inconclusive;
  std::vector<EpsEvidence> per_eps;  // RoughStat / Stat / per-pair Cauchy
  std::optional<TailEvidence> tail;  // Rough
};

// {n <= N : |p(x_n,x) - p(x,x)| >= r + eps - tol}, as an explicit sorted list.
IndexSet exceedance_indices(const PartialMetricSpace& space, const Sequence& seq,
                            double x, double r, double eps, std::uint64_t n_terms);

// Rough statistical convergence of degree r: per scheduled eps, the density
// verdict of the exceedance set; Yes iff every eps is Zero, No iff some eps
// is Positive. r = 0 realizes plain statistical convergence.
ConvergenceVerdict rough_stat_convergent(const PartialMetricSpace& space,
                                         const Sequence& seq, double x, double r,
                                         const EpsSchedule& schedule,
                                         std::uint64_t n_terms, Rational tau);

ConvergenceVerdict stat_convergent(const PartialMetricSpace& space, const Sequence& seq,
                                   double x, const EpsSchedule& schedule,
                                   std::uint64_t n_terms, Rational tau);

// Classical rough convergence via tail suprema over the window
// [ceil(tail_fraction*N), N]:
//   Yes  window sup <= r + eps_min and the sup did not grow by more than
//        eps_min since the same window at prefix floor(N/2);
//   No   both window halves exceed r + eps_max;
//   else Inconclusive.
ConvergenceVerdict rough_convergent(const PartialMetricSpace& space, const Sequence& seq,
                                    double x, double r, std::uint64_t n_terms,
                                    Rational tail_fraction, const EpsSchedule& schedule);

// Tail-sup verdict for the paired-distance sequence n -> p(a_n, b_n) against
// target 0 (and for the self-distance sequence n -> p(x_n, x_n)).
ConvergenceVerdict paired_distance_vanishes(const PartialMetricSpace& space,
                                            const Sequence& a, const Sequence& b,
                                            std::uint64_t n_terms, Rational tail_fraction,
                                            const EpsSchedule& schedule);
ConvergenceVerdict self_distance_vanishes(const PartialMetricSpace& space,
                                          const Sequence& seq, std::uint64_t n_terms,
                                          Rational tail_fraction,
                                          const EpsSchedule& schedule);

// Uniform candidate grid with exact endpoints and step.
struct Grid {
  Rational lo;
  Rational hi;
  Rational step;

  static Grid make(Rational lo, Rational hi, Rational step);
  std::size_t size() const;
  Rational point_exact(std::size_t i) const;
  double point(std::size_t i) const { return point_exact(i).to_double(); }
  std::vector<double> points() const;
  std::optional<std::size_t> index_of(const Rational& value) const;
};

// Grid scan of candidate limits with Yes runs compressed to closed intervals.
struct LimitSetEstimate {
  double r = 0.0;
  Grid grid;
  std::vector<ConvergenceVerdict> membership;                  // one per grid point
  std::vector<std::pair<std::size_t, std::size_t>> yes_runs;   // inclusive index ranges
  std::vector<std::size_t> inconclusive;                       // grid indices

  std::vector<std::pair<double, double>> intervals() const;
  std::vector<std::size_t> expand_yes() const;  // grid indices covered by yes_runs
  std::vector<double> yes_points() const;
  bool has_member() const { return !yes_runs.empty(); }
};

LimitSetEstimate stat_limit_set(const PartialMetricSpace& space, const Sequence& seq,
                                double r, const Grid& grid, std::uint64_t n_terms,
                                const EpsSchedule& schedule, Rational tau);

LimitSetEstimate rough_limit_set(const PartialMetricSpace& space, const Sequence& seq,
                                 double r, const Grid& grid, std::uint64_t n_terms,
                                 Rational tail_fraction, const EpsSchedule& schedule);

// Statistical boundedness: Yes with the smallest grid bound M whose
// excess set {n : p(x_n,u) >= M} has density verdict Zero.
struct BoundEvidence {
  double m = 0.0;
  DensityVerdict density;
};

struct BoundedResult {
  ConvergenceVerdict verdict;  // mode StatBounded
  std::optional<double> witness_m;
  std::vector<BoundEvidence> per_m;
};

BoundedResult stat_bounded(const PartialMetricSpace& space, const Sequence& seq, double u,
                           const std::vector<double>& m_grid, std::uint64_t n_terms,
                           Rational tau);

// Statistical Cauchy: bounded search over (m, l) candidates; Yes with the
// first pair whose deviation set has density Zero at every scheduled eps.
struct CauchyPairEvidence {
  std::uint64_t m = 0;
  double l = 0.0;
  Verdict verdict = Verdict::Inconclusive;
  std::vector<EpsEvidence> per_eps;
};

struct CauchyResult {
  ConvergenceVerdict verdict;  // mode StatCauchy
  std::optional<std::pair<std::uint64_t, double>> witness;
  std::vector<CauchyPairEvidence> pairs;
};

CauchyResult stat_cauchy(const PartialMetricSpace& space, const Sequence& seq,
                         const std::vector<std::uint64_t>& m_candidates,
                         const std::vector<double>& l_grid, const EpsSchedule& schedule,
                         std::uint64_t n_terms, Rational tau);

// Statistical cluster points: c is a cluster point when the near set
// {n : |p(x_n,c) - p(c,c)| < eps} has density verdict Positive at every
// scheduled eps; No when some eps gives Zero.
struct ClusterPointReport {
  double candidate = 0.0;
  Verdict verdict = Verdict::Inconclusive;
  std::vector<EpsEvidence> per_eps;
};

std::vector<ClusterPointReport> stat_cluster_points(const PartialMetricSpace& space,
                                                    const Sequence& seq,
                                                    const std::vector<double>& candidates,
                                                    const EpsSchedule& schedule,
                                                    std::uint64_t n_terms, Rational tau);

}  // namespace roughstat
