#include "roughstat/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "roughstat/util.hpp"

namespace roughstat {

namespace {

void require_point(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("candidate point must be finite");
}

void require_terms(std::uint64_t n_terms) {
  if (n_terms < 2) throw std::invalid_argument("need a prefix of at least 2 terms");
}

// ceil(n * frac) with exact rational arithmetic.
std::uint64_t window_start(std::uint64_t n, const Rational& frac) {
  const __int128 num = static_cast<__int128>(frac.num()) * n;
  const __int128 den = frac.den();
  std::uint64_t start = static_cast<std::uint64_t>((num + den - 1) / den);
  return std::max<std::uint64_t>(start, 1);
}

void require_tail_fraction(const Rational& frac) {
  if (!(Rational(0, 1) < frac && frac < Rational(1, 1))) {
    throw std::invalid_argument("tail fraction must lie strictly between 0 and 1");
  }
}

struct ExceedCounts {
  std::vector<std::uint64_t> at_n;
  std::vector<std::uint64_t> at_half;
};

// One pass over the first n_terms terms; counts d >= threshold per threshold,
// with a snapshot at floor(n/2). dev maps a term value to its deviation.
template <typename DevFn>
ExceedCounts stream_exceedances(const Sequence& seq, std::uint64_t n_terms,
                                const std::vector<double>& thresholds, DevFn&& dev) {
  ExceedCounts counts{std::vector<std::uint64_t>(thresholds.size(), 0),
                      std::vector<std::uint64_t>(thresholds.size(), 0)};
  const std::uint64_t half = n_terms / 2;
  seq.for_each(n_terms, [&](std::uint64_t k, double value) {
    const double d = dev(value);
    for (std::size_t i = 0; i < thresholds.size(); ++i) {
      if (d >= thresholds[i]) ++counts.at_n[i];
    }
    if (k == half) counts.at_half = counts.at_n;
  });
  return counts;
}

Verdict aggregate_eps(const std::vector<EpsEvidence>& per_eps) {
  bool all_zero = true;
  for (const auto& e : per_eps) {
    if (e.density.verdict == DensityClass::Positive) return Verdict::No;
    if (e.density.verdict != DensityClass::Zero) all_zero = false;
  }
  return all_zero ? Verdict::Yes : Verdict::Inconclusive;
}

// Tail-sup engine over an arbitrary deviation stream.
template <typename DevFn>
ConvergenceVerdict tail_verdict(const Sequence& seq, std::uint64_t n_terms,
                                const Rational& tail_fraction, double r,
                                const EpsSchedule& schedule, DevFn&& dev) {
  require_terms(n_terms);
  require_tail_fraction(tail_fraction);
  if (r < 0.0) throw std::invalid_argument("roughness degree must be >= 0");

  TailEvidence tail;
  tail.window_begin = window_start(n_terms, tail_fraction);
  tail.window_end = n_terms;
  if (tail.window_begin > tail.window_end) {
    throw std::invalid_argument("empty tail window");
  }
  const std::uint64_t mid = tail.window_begin + (tail.window_end - tail.window_begin) / 2;

  const std::uint64_t half_n = n_terms / 2;
  tail.half_prefix_begin = window_start(half_n, tail_fraction);
  tail.half_prefix_end = half_n;
  const bool has_half_window = half_n >= 1 && tail.half_prefix_begin <= tail.half_prefix_end;

  double first_half = 0.0, second_half = 0.0, half_prefix = 0.0;
  bool saw_first = false, saw_second = false, saw_half = false;
  seq.for_each(n_terms, [&](std::uint64_t k, double value) {
    const double d = dev(value);
    if (has_half_window && k >= tail.half_prefix_begin && k <= tail.half_prefix_end) {
      if (!saw_half || d > half_prefix) half_prefix = d;
      saw_half = true;
    }
    if (k >= tail.window_begin) {
      if (k <= mid) {
        if (!saw_first || d > first_half) first_half = d;
        saw_first = true;
      } else {
        if (!saw_second || d > second_half) second_half = d;
        saw_second = true;
      }
    }
  });
  if (!saw_second) second_half = first_half;  // window of size 1
  tail.first_half_sup = first_half;
  tail.second_half_sup = second_half;
  tail.window_sup = std::max(first_half, second_half);
  tail.half_prefix_sup = saw_half ? half_prefix : tail.window_sup;

  const double eps_min = schedule.min_eps();
  const double eps_max = schedule.max_eps();

  ConvergenceVerdict result;
  result.mode = ConvergenceMode::Rough;
  result.tail = tail;
  const bool small_enough = tail.window_sup <= r + eps_min + kCompareTol;
  const bool settled = tail.window_sup <= tail.half_prefix_sup + eps_min;
  const bool both_halves_exceed = tail.first_half_sup > r + eps_max + kCompareTol &&
                                  tail.second_half_sup > r + eps_max + kCompareTol;
  if (small_enough && settled) {
    result.verdict = Verdict::Yes;
  } else if (both_halves_exceed) {
    result.verdict = Verdict::No;
  } else {
    result.verdict = Verdict::Inconclusive;
  }
  return result;
}

}  // namespace

EpsSchedule EpsSchedule::defaults() {
  return EpsSchedule::from({1.0, 0.5, 0.1, 0.05, 0.01});
}

EpsSchedule EpsSchedule::from(std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("eps schedule must be nonempty");
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!(values[i] > 0.0) || !std::isfinite(values[i])) {
      throw std::invalid_argument("eps schedule values must be positive");
    }
    if (i > 0 && !(values[i] < values[i - 1])) {
      throw std::invalid_argument("eps schedule must be strictly decreasing");
    }
  }
  EpsSchedule s;
  s.values = std::move(values);
  return s;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes:
      return "Yes";
    case Verdict::No:
      return "No";
    case Verdict::Inconclusive:
      return "Inconclusive";
  }
  return "?";
}

const char* to_string(ConvergenceMode m) {
  switch (m) {
    case ConvergenceMode::RoughStat:
      return "rough_stat";
    case ConvergenceMode::Stat:
      return "stat";
    case ConvergenceMode::Rough:
      return "rough";
    case ConvergenceMode::StatCauchy:
      return "stat_cauchy";
    case ConvergenceMode::StatBounded:
      return "stat_bounded";
  }
  return "?";
}

IndexSet exceedance_indices(const PartialMetricSpace& space, const Sequence& seq,
                            double x, double r, double eps, std::uint64_t n_terms) {
  require_point(x);
  if (n_terms < 1) throw std::invalid_argument("need at least 1 term");
  if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");
  if (r < 0.0) throw std::invalid_argument("roughness degree must be >= 0");
  const double pxx = space.self_distance(x);
  const double threshold = r + eps - kCompareTol;
  std::vector<std::uint64_t> hits;
  seq.for_each(n_terms, [&](std::uint64_t k, double value) {
    if (std::abs(space.eval(value, x) - pxx) >= threshold) hits.push_back(k);
  });
  return IndexPredicate::explicit_list(std::move(hits));
}

ConvergenceVerdict rough_stat_convergent(const PartialMetricSpace& space,
                                         const Sequence& seq, double x, double r,
                                         const EpsSchedule& schedule,
                                         std::uint64_t n_terms, Rational tau) {
  require_point(x);
  require_terms(n_terms);
  if (r < 0.0) throw std::invalid_argument("roughness degree must be >= 0");

  std::vector<double> thresholds;
  thresholds.reserve(schedule.values.size());
  for (double eps : schedule.values) thresholds.push_back(r + eps - kCompareTol);

  const double pxx = space.self_distance(x);
  const ExceedCounts counts = stream_exceedances(
      seq, n_terms, thresholds,
      [&](double value) { return std::abs(space.eval(value, x) - pxx); });

  ConvergenceVerdict result;
  result.mode = ConvergenceMode::RoughStat;
  for (std::size_t i = 0; i < schedule.values.size(); ++i) {
    const DensityEstimate est =
        density_estimate_from_counts(counts.at_n[i], n_terms, counts.at_half[i]);
    result.per_eps.push_back({schedule.values[i], density_verdict(est, tau)});
  }
  result.verdict = aggregate_eps(result.per_eps);
  return result;
}

ConvergenceVerdict stat_convergent(const PartialMetricSpace& space, const Sequence& seq,
                                   double x, const EpsSchedule& schedule,
                                   std::uint64_t n_terms, Rational tau) {
  ConvergenceVerdict v = rough_stat_convergent(space, seq, x, 0.0, schedule, n_terms, tau);
  v.mode = ConvergenceMode::Stat;
  return v;
}

ConvergenceVerdict rough_convergent(const PartialMetricSpace& space, const Sequence& seq,
                                    double x, double r, std::uint64_t n_terms,
                                    Rational tail_fraction, const EpsSchedule& schedule) {
  require_point(x);
  const double pxx = space.self_distance(x);
  return tail_verdict(seq, n_terms, tail_fraction, r, schedule,
                      [&](double value) { return std::abs(space.eval(value, x) - pxx); });
}

ConvergenceVerdict paired_distance_vanishes(const PartialMetricSpace& space,
                                            const Sequence& a, const Sequence& b,
                                            std::uint64_t n_terms, Rational tail_fraction,
                                            const EpsSchedule& schedule) {
  require_terms(n_terms);
  // Materialize the b-stream once; both sequences are then walked in lockstep
  // through the generic tail engine on the paired-distance values.
  std::vector<double> b_terms(n_terms);
  b.for_each(n_terms, [&](std::uint64_t k, double value) { b_terms[k - 1] = value; });
  std::uint64_t cursor = 0;
  // tail_verdict streams `a` in index order, so pairing by arrival is safe.
  auto dev = [&](double value) {
    const double other = b_terms[cursor++];
    return space.eval(value, other);
  };
  return tail_verdict(a, n_terms, tail_fraction, 0.0, schedule, dev);
}

ConvergenceVerdict self_distance_vanishes(const PartialMetricSpace& space,
                                          const Sequence& seq, std::uint64_t n_terms,
                                          Rational tail_fraction,
                                          const EpsSchedule& schedule) {
  return tail_verdict(seq, n_terms, tail_fraction, 0.0, schedule,
                      [&](double value) { return space.self_distance(value); });
}

Grid Grid::make(Rational lo, Rational hi, Rational step) {
  if (!(Rational(0, 1) < step)) throw std::invalid_argument("grid step must be positive");
  if (hi < lo) throw std::invalid_argument("grid upper bound below lower bound");
  Grid g;
  g.lo = lo;
  g.hi = hi;
  g.step = step;
  return g;
}

std::size_t Grid::size() const {
  const Rational span = hi - lo;
  // floor(span / step) + 1, exactly.
  const Rational ratio = span / step;
  const std::int64_t count = ratio.num() / ratio.den();
  return static_cast<std::size_t>(count) + 1;
}

Rational Grid::point_exact(std::size_t i) const {
  return lo + Rational(static_cast<std::int64_t>(i), 1) * step;
}

std::vector<double> Grid::points() const {
  std::vector<double> pts(size());
  for (std::size_t i = 0; i < pts.size(); ++i) pts[i] = point(i);
  return pts;
}

std::optional<std::size_t> Grid::index_of(const Rational& value) const {
  if (value < lo || hi < value) return std::nullopt;
  const Rational ratio = (value - lo) / step;
  if (ratio.den() != 1) return std::nullopt;
  return static_cast<std::size_t>(ratio.num());
}

namespace {

void finalize_limit_set(LimitSetEstimate& est) {
  const std::size_t n = est.membership.size();
  std::size_t run_start = 0;
  bool in_run = false;
  for (std::size_t i = 0; i < n; ++i) {
    const Verdict v = est.membership[i].verdict;
    if (v == Verdict::Inconclusive) est.inconclusive.push_back(i);
    if (v == Verdict::Yes) {
      if (!in_run) {
        run_start = i;
        in_run = true;
      }
    } else if (in_run) {
      est.yes_runs.emplace_back(run_start, i - 1);
      in_run = false;
    }
  }
  if (in_run) est.yes_runs.emplace_back(run_start, n - 1);
}

template <typename MembershipFn>
LimitSetEstimate scan_grid(double r, const Grid& grid, MembershipFn&& member_at) {
  if (grid.size() < 1) throw std::invalid_argument("grid must contain at least one point");
  LimitSetEstimate est;
  est.r = r;
  est.grid = grid;
  est.membership.resize(grid.size());
  parallel_for_index(grid.size(),
                     [&](std::size_t i) { est.membership[i] = member_at(grid.point(i)); });
  finalize_limit_set(est);
  return est;
}

}  // namespace

std::vector<std::pair<double, double>> LimitSetEstimate::intervals() const {
  std::vector<std::pair<double, double>> out;
  out.reserve(yes_runs.size());
  for (const auto& [a, b] : yes_runs) {
    out.emplace_back(grid.point(a), grid.point(b));
  }
  return out;
}

std::vector<std::size_t> LimitSetEstimate::expand_yes() const {
  std::vector<std::size_t> out;
  for (const auto& [a, b] : yes_runs) {
    for (std::size_t i = a; i <= b; ++i) out.push_back(i);
  }
  return out;
}

std::vector<double> LimitSetEstimate::yes_points() const {
  std::vector<double> out;
  for (std::size_t i : expand_yes()) out.push_back(grid.point(i));
  return out;
}

LimitSetEstimate stat_limit_set(const PartialMetricSpace& space, const Sequence& seq,
                                double r, const Grid& grid, std::uint64_t n_terms,
                                const EpsSchedule& schedule, Rational tau) {
  return scan_grid(r, grid, [&](double x) {
    return rough_stat_convergent(space, seq, x, r, schedule, n_terms, tau);
  });
}

LimitSetEstimate rough_limit_set(const PartialMetricSpace& space, const Sequence& seq,
                                 double r, const Grid& grid, std::uint64_t n_terms,
                                 Rational tail_fraction, const EpsSchedule& schedule) {
  return scan_grid(r, grid, [&](double x) {
    return rough_convergent(space, seq, x, r, n_terms, tail_fraction, schedule);
  });
}

BoundedResult stat_bounded(const PartialMetricSpace& space, const Sequence& seq, double u,
                           const std::vector<double>& m_grid, std::uint64_t n_terms,
                           Rational tau) {
  require_point(u);
  require_terms(n_terms);
  if (m_grid.empty()) throw std::invalid_argument("bound grid must be nonempty");
  for (std::size_t i = 0; i < m_grid.size(); ++i) {
    if (!(m_grid[i] > 0.0) || (i > 0 && !(m_grid[i] > m_grid[i - 1]))) {
      throw std::invalid_argument("bound grid must be positive and strictly increasing");
    }
  }

  std::vector<double> thresholds;
  thresholds.reserve(m_grid.size());
  for (double m : m_grid) thresholds.push_back(m - kCompareTol);
  const ExceedCounts counts = stream_exceedances(
      seq, n_terms, thresholds, [&](double value) { return space.eval(value, u); });

  BoundedResult result;
  result.verdict.mode = ConvergenceMode::StatBounded;
  for (std::size_t i = 0; i < m_grid.size(); ++i) {
    const DensityEstimate est =
        density_estimate_from_counts(counts.at_n[i], n_terms, counts.at_half[i]);
    result.per_m.push_back({m_grid[i], density_verdict(est, tau)});
  }
  for (const auto& entry : result.per_m) {
    if (entry.density.verdict == DensityClass::Zero) {
      result.witness_m = entry.m;
      result.verdict.verdict = Verdict::Yes;
      return result;
    }
  }
  result.verdict.verdict = result.per_m.back().density.verdict == DensityClass::Positive
                               ? Verdict::No
                               : Verdict::Inconclusive;
  return result;
}

CauchyResult stat_cauchy(const PartialMetricSpace& space, const Sequence& seq,
                         const std::vector<std::uint64_t>& m_candidates,
                         const std::vector<double>& l_grid, const EpsSchedule& schedule,
                         std::uint64_t n_terms, Rational tau) {
  require_terms(n_terms);
  if (m_candidates.empty() || l_grid.empty()) {
    throw std::invalid_argument("cauchy search needs nonempty candidate sets");
  }
  for (double l : l_grid) {
    if (l < 0.0) throw std::invalid_argument("cauchy offsets l must be >= 0");
  }

  CauchyResult result;
  result.verdict.mode = ConvergenceMode::StatCauchy;
  bool all_no = true;
  for (std::uint64_t m : m_candidates) {
    const double xm = seq.term(m);
    // One stream per anchor term covers every (l, eps) cell.
    std::vector<double> deviations(n_terms);
    seq.for_each(n_terms, [&](std::uint64_t k, double value) {
      deviations[k - 1] = space.eval(value, xm);
    });
    for (double l : l_grid) {
      CauchyPairEvidence pair;
      pair.m = m;
      pair.l = l;
      const std::uint64_t half = n_terms / 2;
      for (double eps : schedule.values) {
        const double threshold = eps - kCompareTol;
        std::uint64_t count = 0, count_half = 0;
        for (std::uint64_t k = 1; k <= n_terms; ++k) {
          if (std::abs(deviations[k - 1] - l) >= threshold) {
            ++count;
            if (k <= half) ++count_half;
          }
        }
        const DensityEstimate est = density_estimate_from_counts(count, n_terms, count_half);
        pair.per_eps.push_back({eps, density_verdict(est, tau)});
      }
      pair.verdict = aggregate_eps(pair.per_eps);
      result.pairs.push_back(pair);
      if (pair.verdict == Verdict::Yes && !result.witness) {
        result.witness = std::make_pair(m, l);
      }
      if (pair.verdict != Verdict::No) all_no = false;
    }
  }
  if (result.witness) {
    result.verdict.verdict = Verdict::Yes;
  } else {
    result.verdict.verdict = all_no ? Verdict::No : Verdict::Inconclusive;
  }
  return result;
}

std::vector<ClusterPointReport> stat_cluster_points(const PartialMetricSpace& space,
                                                    const Sequence& seq,
                                                    const std::vector<double>& candidates,
                                                    const EpsSchedule& schedule,
                                                    std::uint64_t n_terms, Rational tau) {
  require_terms(n_terms);
  if (candidates.empty()) throw std::invalid_argument("cluster scan needs candidates");

  std::vector<ClusterPointReport> reports(candidates.size());
  parallel_for_index(candidates.size(), [&](std::size_t ci) {
    const double c = candidates[ci];
    require_point(c);
    const double pcc = space.self_distance(c);
    // Near set {d < eps} is the exact complement of {d >= eps - tol} with the
    // tie convention pushing boundary indices outside.
    std::vector<double> thresholds;
    thresholds.reserve(schedule.values.size());
    for (double eps : schedule.values) thresholds.push_back(eps - kCompareTol);
    const ExceedCounts counts = stream_exceedances(
        seq, n_terms, thresholds,
        [&](double value) { return std::abs(space.eval(value, c) - pcc); });

    ClusterPointReport rep;
    rep.candidate = c;
    const std::uint64_t half = n_terms / 2;
    bool all_positive = true;
    bool any_zero = false;
    for (std::size_t i = 0; i < schedule.values.size(); ++i) {
      const DensityEstimate est = density_estimate_from_counts(
          n_terms - counts.at_n[i], n_terms, half - counts.at_half[i]);
      const DensityVerdict dv = density_verdict(est, tau);
      rep.per_eps.push_back({schedule.values[i], dv});
      if (dv.verdict != DensityClass::Positive) all_positive = false;
      if (dv.verdict == DensityClass::Zero) any_zero = true;
    }
    if (all_positive) {
      rep.verdict = Verdict::Yes;
    } else if (any_zero) {
      rep.verdict = Verdict::No;
    } else {
      rep.verdict = Verdict::Inconclusive;
    }
    reports[ci] = rep;
  });
  return reports;
}

}  // namespace roughstat
