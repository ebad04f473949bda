#include "roughstat/density.hpp"

#include <algorithm>
#include <stdexcept>

namespace roughstat {

std::uint64_t prefix_count(const IndexSet& set, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("prefix length must be >= 1");
  if (set.kind() == IndexPredicate::Kind::Explicit) {
    const auto& idx = set.explicit_indices();
    return static_cast<std::uint64_t>(
        std::upper_bound(idx.begin(), idx.end(), n) - idx.begin());
  }
  std::uint64_t count = 0;
  for (std::uint64_t k = 1; k <= n; ++k) {
    if (set.contains(k)) ++count;
  }
  return count;
}

Rational DensityEstimate::value_half() const {
  const std::uint64_t half = n / 2;
  if (half == 0) return Rational(0, 1);
  return Rational(static_cast<std::int64_t>(count_half), static_cast<std::int64_t>(half));
}

std::string DensityEstimate::value_str() const {
  return std::to_string(count_n) + "/" + std::to_string(n);
}

std::string DensityEstimate::value_half_str() const {
  return std::to_string(count_half) + "/" + std::to_string(n / 2);
}

DensityEstimate density_estimate(const IndexSet& set, std::uint64_t n) {
  if (n < 2) throw std::invalid_argument("density estimate needs prefix length >= 2");
  DensityEstimate est;
  est.n = n;
  est.count_half = prefix_count(set, n / 2);
  if (set.kind() == IndexPredicate::Kind::Explicit) {
    est.count_n = prefix_count(set, n);
  } else {
    // One scan: reuse the half count and continue upward.
    std::uint64_t count = est.count_half;
    for (std::uint64_t k = n / 2 + 1; k <= n; ++k) {
      if (set.contains(k)) ++count;
    }
    est.count_n = count;
  }
  return est;
}

DensityEstimate density_estimate_from_counts(std::uint64_t count_n, std::uint64_t n,
                                             std::uint64_t count_half) {
  if (n < 2) throw std::invalid_argument("density estimate needs prefix length >= 2");
  if (count_n > n || count_half > n / 2) {
    throw std::invalid_argument("count exceeds prefix length");
  }
  return DensityEstimate{count_n, n, count_half};
}

const char* to_string(DensityClass c) {
  switch (c) {
    case DensityClass::Zero:
      return "Zero";
    case DensityClass::Positive:
      return "Positive";
    case DensityClass::Inconclusive:
      return "Inconclusive";
  }
  return "?";
}

DensityVerdict density_verdict(const DensityEstimate& est, Rational tau) {
  if (!(Rational(0, 1) < tau && tau < Rational(1, 5))) {
    throw std::invalid_argument("density threshold tau must satisfy 0 < tau < 1/5");
  }
  DensityVerdict v;
  v.tau = tau;
  v.evidence = est;
  const Rational value = est.value();
  const Rational value_half = est.value_half();
  const Rational slack = tau / Rational(10, 1);
  if (value <= tau && value <= value_half + slack) {
    v.verdict = DensityClass::Zero;
  } else if (value >= Rational(5, 1) * tau && est.stability_gap() <= tau) {
    v.verdict = DensityClass::Positive;
  } else {
    v.verdict = DensityClass::Inconclusive;
  }
  return v;
}

}  // namespace roughstat
