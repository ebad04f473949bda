#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace roughstat {

// Exact integer square root (floor).
std::uint64_t isqrt(std::uint64_t n);

// A total, deterministic predicate over the positive integers.
class IndexPredicate {
 public:
  enum class Kind { PerfectSquare, Even, Odd, Residue, All, Not, And, Or, Explicit };

  static IndexPredicate perfect_square();
  static IndexPredicate even();
  static IndexPredicate odd();
  static IndexPredicate residue(std::uint64_t modulus, std::uint64_t remainder);
  static IndexPredicate all();
  static IndexPredicate negate(IndexPredicate inner);
  static IndexPredicate conjunction(std::vector<IndexPredicate> parts);
  static IndexPredicate disjunction(std::vector<IndexPredicate> parts);
  // Indices must be strictly increasing and >= 1.
  static IndexPredicate explicit_list(std::vector<std::uint64_t> indices);

  Kind kind() const { return kind_; }
  bool contains(std::uint64_t n) const;
  const std::vector<std::uint64_t>& explicit_indices() const { return indices_; }
  const std::vector<IndexPredicate>& children() const { return children_; }
  std::string describe() const;

 private:
  explicit IndexPredicate(Kind k) : kind_(k) {}
  Kind kind_;
  std::uint64_t modulus_ = 0;
  std::uint64_t remainder_ = 0;
  std::vector<IndexPredicate> children_;
  std::vector<std::uint64_t> indices_;
};

// Closed-form value of a sequence term at index n.
class ValueRule {
 public:
  enum class Kind { Const, SqrtIndex, AffineInN, ReciprocalN, AlternatingSign };

  static ValueRule constant(double c);
  static ValueRule sqrt_index();  // n = k^2 -> k; only valid under a perfect-square predicate
  static ValueRule affine(double slope, double intercept);  // n -> slope*n + intercept
  static ValueRule reciprocal(double scale = 1.0);          // n -> scale/n
  static ValueRule alternating(double amplitude);           // n -> (-1)^n * amplitude

  Kind kind() const { return kind_; }
  double param_a() const { return a_; }
  double param_b() const { return b_; }
  double eval(std::uint64_t n) const;
  std::string describe() const;

 private:
  ValueRule(Kind k, double a, double b) : kind_(k), a_(a), b_(b) {}
  Kind kind_;
  double a_ = 0.0;
  double b_ = 0.0;
};

struct SequencePiece {
  IndexPredicate when;
  ValueRule rule;
};

// Ordered piecewise definition of a sequence; the first matching piece wins.
// Construction rejects piece lists that do not visibly cover every index
// (last predicate All, or both parity classes present).
class SequenceSpec {
 public:
  SequenceSpec(std::string name, std::vector<SequencePiece> pieces);

  double eval(std::uint64_t n) const;
  const std::string& name() const { return name_; }
  const std::vector<SequencePiece>& pieces() const { return pieces_; }

 private:
  std::string name_;
  std::vector<SequencePiece> pieces_;
};

double seq_eval(const SequenceSpec& spec, std::uint64_t n);

// Built-in sequence library.
SequenceSpec paper_example_sequence();  // squares -> k, even -> 2, odd -> 0
SequenceSpec constant_sequence(double c);
SequenceSpec reciprocal_sequence(double scale = 1.0);
SequenceSpec alternating_sequence(double amplitude);
SequenceSpec linear_sequence();  // x_n = n

// A term source: a base spec plus zero or more selection layers. Each layer
// reindexes the previous stream by the members of a predicate, so the k-th
// term of a one-layer sequence is spec(n_k) with n_k the k-th member of the
// selector. Evaluation streams base indices; a selector too sparse to supply
// the requested number of terms raises a degenerate-selection error.
class Sequence {
 public:
  explicit Sequence(SequenceSpec spec) : spec_(std::move(spec)) {}
  Sequence(SequenceSpec spec, std::vector<IndexPredicate> selectors)
      : spec_(std::move(spec)), selectors_(std::move(selectors)) {}

  const SequenceSpec& spec() const { return spec_; }
  const std::vector<IndexPredicate>& selectors() const { return selectors_; }

  double term(std::uint64_t k) const;

  // Streams terms 1..count in order, invoking f(k, value).
  template <typename F>
  void for_each(std::uint64_t count, F&& f) const {
    if (count == 0) return;
    if (selectors_.empty()) {
      for (std::uint64_t n = 1; n <= count; ++n) f(n, spec_.eval(n));
      return;
    }
    const std::uint64_t cap = scan_cap(count);
    std::vector<std::uint64_t> layer_count(selectors_.size(), 0);
    std::uint64_t emitted = 0;
    for (std::uint64_t n = 1; n <= cap; ++n) {
      std::uint64_t idx = n;
      bool selected = true;
      for (std::size_t i = 0; i < selectors_.size(); ++i) {
        if (!selectors_[i].contains(idx)) {
          selected = false;
          break;
        }
        idx = ++layer_count[i];
      }
      if (!selected) continue;
      ++emitted;
      f(emitted, spec_.eval(n));
      if (emitted == count) return;
    }
    throw std::runtime_error("degenerate selection: only " + std::to_string(emitted) +
                             " of " + std::to_string(count) +
                             " requested terms reachable within scan horizon " +
                             std::to_string(cap));
  }

  std::string describe() const;

 private:
  std::uint64_t scan_cap(std::uint64_t count) const;
  SequenceSpec spec_;
  std::vector<IndexPredicate> selectors_;
};

Sequence restrict_to_indices(Sequence seq, IndexPredicate selection);

}  // namespace roughstat
