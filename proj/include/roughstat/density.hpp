#pragma once

#include <cstdint>

#include "roughstat/rational.hpp"
#include "roughstat/seq_spec.hpp"

namespace roughstat {

// An index set is a predicate over N; explicit sorted lists are the
// Explicit predicate kind.
using IndexSet = IndexPredicate;

// Exact |{k in set : k <= n}|.
std::uint64_t prefix_count(const IndexSet& set, std::uint64_t n);

// Exact prefix ratios at n and floor(n/2). The half-prefix ratio is the
// stability diagnostic: a set whose density converges has a small gap.
struct DensityEstimate {
  std::uint64_t count_n = 0;
  std::uint64_t n = 0;
  std::uint64_t count_half = 0;  // members <= floor(n/2)

  Rational value() const { return Rational(static_cast<std::int64_t>(count_n),
                                           static_cast<std::int64_t>(n)); }
  Rational value_half() const;
  Rational stability_gap() const { return (value() - value_half()).abs(); }
  // Unreduced "count/n" strings for reports.
  std::string value_str() const;
  std::string value_half_str() const;
};

DensityEstimate density_estimate(const IndexSet& set, std::uint64_t n);  // n >= 2
DensityEstimate density_estimate_from_counts(std::uint64_t count_n, std::uint64_t n,
                                             std::uint64_t count_half);

enum class DensityClass { Zero, Positive, Inconclusive };

const char* to_string(DensityClass c);

// Finite decision rule for "the natural density of this set is zero":
//   Zero      value <= tau and value <= value_half + tau/10
//   Positive  value >= 5*tau and stability_gap <= tau
//   otherwise Inconclusive.
// Requires 0 < tau < 1/5. All comparisons are exact.
struct DensityVerdict {
  DensityClass verdict = DensityClass::Inconclusive;
  Rational tau;
  DensityEstimate evidence;
};

DensityVerdict density_verdict(const DensityEstimate& est, Rational tau);

}  // namespace roughstat
