#include "roughstat/pm_core.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace roughstat {

RealPoint::RealPoint(double v) : value(v) {
  if (!std::isfinite(v)) {
    throw std::invalid_argument("point must be finite");
  }
}

PartialMetricSpace PartialMetricSpace::max_rplus() {
  return PartialMetricSpace(SpaceKind::MaxOnRPlus, 0.0);
}

PartialMetricSpace PartialMetricSpace::shifted_euclidean(double a) {
  if (!std::isfinite(a) || a < 0.0) {
    throw std::invalid_argument("shifted_euclidean needs a finite self-distance a >= 0");
  }
  return PartialMetricSpace(SpaceKind::ShiftedEuclidean, a);
}

double PartialMetricSpace::eval(double x, double y) const {
  switch (kind_) {
    case SpaceKind::MaxOnRPlus:
      if (x < 0.0 || y < 0.0) {
        throw std::domain_error("max_rplus requires nonnegative points");
      }
      return std::max(x, y);
    case SpaceKind::ShiftedEuclidean:
      return std::abs(x - y) + a_;
  }
  throw std::logic_error("unknown space kind");
}

std::string PartialMetricSpace::kind_name() const {
  switch (kind_) {
    case SpaceKind::MaxOnRPlus:
      return "max_rplus";
    case SpaceKind::ShiftedEuclidean:
      return "shifted_euclidean";
  }
  return "?";
}

std::string PartialMetricSpace::describe() const {
  if (kind_ == SpaceKind::ShiftedEuclidean) {
    return kind_name() + "(a=" + std::to_string(a_) + ")";
  }
  return kind_name();
}

double pm_eval(const PartialMetricSpace& space, RealPoint x, RealPoint y) {
  return space.eval(x.value, y.value);
}

const char* axiom_name(Axiom a) {
  switch (a) {
    case Axiom::P1:
      return "p1";
    case Axiom::P2:
      return "p2";
    case Axiom::P3:
      return "p3";
    case Axiom::P4:
      return "p4";
  }
  return "?";
}

std::size_t AxiomReport::count(Axiom a) const {
  std::size_t n = 0;
  for (const auto& v : violations) {
    if (v.axiom == a) ++n;
  }
  return n;
}

AxiomReport axiom_check(const MetricRule& rule, std::span<const double> sample) {
  if (sample.empty()) {
    throw std::invalid_argument("axiom_check needs a nonempty sample");
  }
  AxiomReport report;
  const std::size_t n = sample.size();

  auto bad_value = [](double v) { return std::isnan(v) || v < -kCompareTol; };

  // p1: 0 <= p(x,x) <= p(x,y), over ordered pairs.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      ++report.checked_pairs;
      const double x = sample[i];
      const double y = sample[j];
      const double pxy = rule(x, y);
      if (bad_value(pxy)) {
        report.violations.push_back(
            {Axiom::P1, {x, y}, pxy, 0.0, "nonnegativity fails"});
        continue;
      }
      const double pxx = rule(x, x);
      if (std::isnan(pxx) || pxx > pxy + kCompareTol) {
        report.violations.push_back(
            {Axiom::P1, {x, y}, pxx, pxy, "self-distance exceeds distance"});
      }
    }
  }

  // p2: indistancy implies equality, over unordered pairs of distinct points.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double x = sample[i];
      const double y = sample[j];
      if (x == y) continue;
      const double pxx = rule(x, x);
      const double pyy = rule(y, y);
      const double pxy = rule(x, y);
      if (std::abs(pxx - pxy) <= kCompareTol && std::abs(pyy - pxy) <= kCompareTol) {
        report.violations.push_back(
            {Axiom::P2, {x, y}, pxy, pxx, "indistancy without equality"});
      }
    }
  }

  // p3: symmetry.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double x = sample[i];
      const double y = sample[j];
      const double pxy = rule(x, y);
      const double pyx = rule(y, x);
      if (std::isnan(pxy) || std::isnan(pyx)) continue;  // already flagged by p1
      if (std::abs(pxy - pyx) > kCompareTol) {
        report.violations.push_back({Axiom::P3, {x, y}, pxy, pyx, "asymmetric"});
      }
    }
  }

  // p4: p(x,y) <= p(x,z) + p(z,y) - p(z,z), over ordered triples.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        ++report.checked_triples;
        const double x = sample[i];
        const double y = sample[j];
        const double z = sample[k];
        const double lhs = rule(x, y);
        const double rhs = rule(x, z) + rule(z, y) - rule(z, z);
        if (std::isnan(lhs) || std::isnan(rhs)) continue;
        if (lhs > rhs + kCompareTol) {
          report.violations.push_back(
              {Axiom::P4, {x, y, z}, lhs, rhs, "triangularity fails"});
        }
      }
    }
  }

  return report;
}

AxiomReport axiom_check(const PartialMetricSpace& space, std::span<const double> sample) {
  return axiom_check([&space](double x, double y) { return space.eval(x, y); }, sample);
}

bool closed_ball_contains(const PartialMetricSpace& space, RealPoint center,
                          double radius, RealPoint y) {
  if (radius < 0.0) throw std::invalid_argument("ball radius must be >= 0");
  return space.eval(center.value, y.value) <=
         space.self_distance(center.value) + radius + kCompareTol;
}

bool open_ball_contains(const PartialMetricSpace& space, RealPoint center,
                        double radius, RealPoint y) {
  if (radius < 0.0) throw std::invalid_argument("ball radius must be >= 0");
  return space.eval(center.value, y.value) <
         space.self_distance(center.value) + radius - kCompareTol;
}

double set_diameter(const PartialMetricSpace& space, std::span<const RealPoint> points) {
  if (points.empty()) {
    throw std::invalid_argument("diameter of an empty set is undefined");
  }
  double sup = 0.0;
  bool first = true;
  for (const RealPoint& x : points) {
    for (const RealPoint& y : points) {
      const double v = space.eval(x.value, y.value);
      if (first || v > sup) {
        sup = v;
        first = false;
      }
    }
  }
  return sup;
}

}  // namespace roughstat
