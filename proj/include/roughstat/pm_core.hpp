#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace roughstat {

// Tolerance for <= / >= tests on metric values. Exact integer arithmetic is
// used wherever counts are involved; this only guards float comparisons so
// that analytically-exact ties land deterministically on the closed side.
inline constexpr double kCompareTol = 1e-12;

// A point on the real line. Must be finite.
struct RealPoint {
  double value = 0.0;
  RealPoint() = default;
  explicit RealPoint(double v);
};

enum class SpaceKind { MaxOnRPlus, ShiftedEuclidean };

// One of the two built-in partial metric spaces over real scalars:
//   max_rplus          p(x,y) = max{x,y} on R+
//   shifted_euclidean  p(x,y) = |x-y| + a on R, constant self-distance a
class PartialMetricSpace {
 public:
  PartialMetricSpace() : kind_(SpaceKind::MaxOnRPlus), a_(0.0) {}

  static PartialMetricSpace max_rplus();
  static PartialMetricSpace shifted_euclidean(double a);

  SpaceKind kind() const { return kind_; }
  // The constant self-distance a (shifted_euclidean only).
  double shift() const { return a_; }
  bool has_constant_self_distance() const {
    return kind_ == SpaceKind::ShiftedEuclidean;
  }

  // p(x,y). Throws std::domain_error for points outside the domain.
  double eval(double x, double y) const;
  double self_distance(double x) const { return eval(x, x); }

  std::string kind_name() const;
  std::string describe() const;

 private:
  PartialMetricSpace(SpaceKind k, double a) : kind_(k), a_(a) {}
  SpaceKind kind_;
  double a_;
};

double pm_eval(const PartialMetricSpace& space, RealPoint x, RealPoint y);

enum class Axiom { P1, P2, P3, P4 };

const char* axiom_name(Axiom a);

struct AxiomViolation {
  Axiom axiom;
  std::vector<double> witness;  // 2 points for p1-p3, 3 for p4
  double lhs = 0.0;
  double rhs = 0.0;
  std::string note;
};

struct AxiomReport {
  std::uint64_t checked_pairs = 0;    // ordered pairs examined for p1-p3
  std::uint64_t checked_triples = 0;  // ordered triples examined for p4
  std::vector<AxiomViolation> violations;
  bool ok() const { return violations.empty(); }
  std::size_t count(Axiom a) const;
};

using MetricRule = std::function<double(double, double)>;

// Evaluates p1 on all ordered pairs, p2/p3 on all pairs and p4 on all ordered
// triples from the sample. A rule producing NaN is reported as a p1
// (nonnegativity) violation. Sample must be nonempty.
AxiomReport axiom_check(const MetricRule& rule, std::span<const double> sample);
AxiomReport axiom_check(const PartialMetricSpace& space, std::span<const double> sample);

// Closed ball: p(center,y) <= p(center,center) + radius (ties inside).
bool closed_ball_contains(const PartialMetricSpace& space, RealPoint center,
                          double radius, RealPoint y);
// Open ball: strict inequality (ties outside).
bool open_ball_contains(const PartialMetricSpace& space, RealPoint center,
                        double radius, RealPoint y);

// sup of p over all ordered pairs from the set, self-pairs included.
// Rejects empty input.
double set_diameter(const PartialMetricSpace& space, std::span<const RealPoint> points);

}  // namespace roughstat
