#include "roughstat/seq_spec.hpp"

#include "roughstat/util.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace roughstat {

std::uint64_t isqrt(std::uint64_t n) {
  if (n == 0) return 0;
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

IndexPredicate IndexPredicate::perfect_square() { return IndexPredicate(Kind::PerfectSquare); }
IndexPredicate IndexPredicate::even() { return IndexPredicate(Kind::Even); }
IndexPredicate IndexPredicate::odd() { return IndexPredicate(Kind::Odd); }
IndexPredicate IndexPredicate::all() { return IndexPredicate(Kind::All); }

IndexPredicate IndexPredicate::residue(std::uint64_t modulus, std::uint64_t remainder) {
  if (modulus == 0) throw std::invalid_argument("residue predicate needs modulus >= 1");
  IndexPredicate p(Kind::Residue);
  p.modulus_ = modulus;
  p.remainder_ = remainder % modulus;
  return p;
}

IndexPredicate IndexPredicate::negate(IndexPredicate inner) {
  IndexPredicate p(Kind::Not);
  p.children_.push_back(std::move(inner));
  return p;
}

IndexPredicate IndexPredicate::conjunction(std::vector<IndexPredicate> parts) {
  if (parts.empty()) throw std::invalid_argument("conjunction needs at least one part");
  IndexPredicate p(Kind::And);
  p.children_ = std::move(parts);
  return p;
}

IndexPredicate IndexPredicate::disjunction(std::vector<IndexPredicate> parts) {
  if (parts.empty()) throw std::invalid_argument("disjunction needs at least one part");
  IndexPredicate p(Kind::Or);
  p.children_ = std::move(parts);
  return p;
}

IndexPredicate IndexPredicate::explicit_list(std::vector<std::uint64_t> indices) {
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] == 0 || (i > 0 && indices[i] <= indices[i - 1])) {
      throw std::invalid_argument("explicit index list must be strictly increasing and >= 1");
    }
  }
  IndexPredicate p(Kind::Explicit);
  p.indices_ = std::move(indices);
  return p;
}

bool IndexPredicate::contains(std::uint64_t n) const {
  switch (kind_) {
    case Kind::PerfectSquare: {
      const std::uint64_t r = isqrt(n);
      return r * r == n;
    }
    case Kind::Even:
      return n % 2 == 0;
    case Kind::Odd:
      return n % 2 == 1;
    case Kind::Residue:
      return n % modulus_ == remainder_;
    case Kind::All:
      return true;
    case Kind::Not:
      return !children_[0].contains(n);
    case Kind::And:
      for (const auto& c : children_) {
        if (!c.contains(n)) return false;
      }
      return true;
    case Kind::Or:
      for (const auto& c : children_) {
        if (c.contains(n)) return true;
      }
      return false;
    case Kind::Explicit:
      return std::binary_search(indices_.begin(), indices_.end(), n);
  }
  return false;
}

std::string IndexPredicate::describe() const {
  switch (kind_) {
    case Kind::PerfectSquare:
      return "perfect_square";
    case Kind::Even:
      return "even";
    case Kind::Odd:
      return "odd";
    case Kind::Residue:
      return "residue(" + std::to_string(modulus_) + "," + std::to_string(remainder_) + ")";
    case Kind::All:
      return "all";
    case Kind::Not:
      return "not(" + children_[0].describe() + ")";
    case Kind::And: {
      std::string s = "and(";
      for (std::size_t i = 0; i < children_.size(); ++i) {
        if (i) s += ",";
        s += children_[i].describe();
      }
      return s + ")";
    }
    case Kind::Or: {
      std::string s = "or(";
      for (std::size_t i = 0; i < children_.size(); ++i) {
        if (i) s += ",";
        s += children_[i].describe();
      }
      return s + ")";
    }
    case Kind::Explicit: {
      std::string s = "explicit[";
      const std::size_t shown = std::min<std::size_t>(indices_.size(), 8);
      for (std::size_t i = 0; i < shown; ++i) {
        if (i) s += ",";
        s += std::to_string(indices_[i]);
      }
      if (indices_.size() > shown) s += ",...(" + std::to_string(indices_.size()) + ")";
      return s + "]";
    }
  }
  return "?";
}

ValueRule ValueRule::constant(double c) { return ValueRule(Kind::Const, c, 0.0); }
ValueRule ValueRule::sqrt_index() { return ValueRule(Kind::SqrtIndex, 0.0, 0.0); }
ValueRule ValueRule::affine(double slope, double intercept) {
  return ValueRule(Kind::AffineInN, slope, intercept);
}
ValueRule ValueRule::reciprocal(double scale) { return ValueRule(Kind::ReciprocalN, scale, 0.0); }
ValueRule ValueRule::alternating(double amplitude) {
  return ValueRule(Kind::AlternatingSign, amplitude, 0.0);
}

double ValueRule::eval(std::uint64_t n) const {
  switch (kind_) {
    case Kind::Const:
      return a_;
    case Kind::SqrtIndex:
      return static_cast<double>(isqrt(n));
    case Kind::AffineInN:
      return a_ * static_cast<double>(n) + b_;
    case Kind::ReciprocalN:
      return a_ / static_cast<double>(n);
    case Kind::AlternatingSign:
      return (n % 2 == 0) ? a_ : -a_;
  }
  throw std::logic_error("unknown value rule");
}

std::string ValueRule::describe() const {
  switch (kind_) {
    case Kind::Const:
      return "const(" + format_real(a_) + ")";
    case Kind::SqrtIndex:
      return "sqrt_index";
    case Kind::AffineInN:
      return "affine(" + format_real(a_) + "," + format_real(b_) + ")";
    case Kind::ReciprocalN:
      return "reciprocal(" + format_real(a_) + ")";
    case Kind::AlternatingSign:
      return "alternating(" + format_real(a_) + ")";
  }
  return "?";
}

namespace {

bool predicate_implies_square(const IndexPredicate& p) {
  if (p.kind() == IndexPredicate::Kind::PerfectSquare) return true;
  if (p.kind() == IndexPredicate::Kind::And) {
    for (const auto& child : p.children()) {
      if (predicate_implies_square(child)) return true;
    }
  }
  return false;
}

}  // namespace

SequenceSpec::SequenceSpec(std::string name, std::vector<SequencePiece> pieces)
    : name_(std::move(name)), pieces_(std::move(pieces)) {
  if (pieces_.empty()) {
    throw std::invalid_argument("sequence spec needs at least one piece");
  }
  bool has_even = false;
  bool has_odd = false;
  for (const auto& piece : pieces_) {
    has_even |= piece.when.kind() == IndexPredicate::Kind::Even;
    has_odd |= piece.when.kind() == IndexPredicate::Kind::Odd;
    if (piece.rule.kind() == ValueRule::Kind::SqrtIndex &&
        !predicate_implies_square(piece.when)) {
      throw std::invalid_argument(
          "sqrt_index rule is only meaningful under a perfect-square predicate");
    }
  }
  const bool last_all = pieces_.back().when.kind() == IndexPredicate::Kind::All;
  if (!last_all && !(has_even && has_odd)) {
    throw std::invalid_argument(
        "sequence pieces do not cover every index (end with 'all' or give both parities)");
  }
}

double SequenceSpec::eval(std::uint64_t n) const {
  if (n == 0) throw std::invalid_argument("sequence indices start at 1");
  for (const auto& piece : pieces_) {
    if (piece.when.contains(n)) return piece.rule.eval(n);
  }
  throw std::runtime_error("sequence spec incomplete: no piece matches index " +
                           std::to_string(n));
}

double seq_eval(const SequenceSpec& spec, std::uint64_t n) { return spec.eval(n); }

SequenceSpec paper_example_sequence() {
  std::vector<SequencePiece> pieces;
  pieces.push_back({IndexPredicate::perfect_square(), ValueRule::sqrt_index()});
  pieces.push_back({IndexPredicate::even(), ValueRule::constant(2.0)});
  pieces.push_back({IndexPredicate::odd(), ValueRule::constant(0.0)});
  return SequenceSpec("example-2.1", std::move(pieces));
}

SequenceSpec constant_sequence(double c) {
  std::vector<SequencePiece> pieces;
  pieces.push_back({IndexPredicate::all(), ValueRule::constant(c)});
  return SequenceSpec("constant(" + format_real(c) + ")", std::move(pieces));
}

SequenceSpec reciprocal_sequence(double scale) {
  std::vector<SequencePiece> pieces;
  pieces.push_back({IndexPredicate::all(), ValueRule::reciprocal(scale)});
  std::string name = scale == 1.0 ? "reciprocal" : "reciprocal(" + format_real(scale) + ")";
  return SequenceSpec(std::move(name), std::move(pieces));
}

SequenceSpec alternating_sequence(double amplitude) {
  std::vector<SequencePiece> pieces;
  pieces.push_back({IndexPredicate::all(), ValueRule::alternating(amplitude)});
  return SequenceSpec("alternating(" + format_real(amplitude) + ")", std::move(pieces));
}

SequenceSpec linear_sequence() {
  std::vector<SequencePiece> pieces;
  pieces.push_back({IndexPredicate::all(), ValueRule::affine(1.0, 0.0)});
  return SequenceSpec("linear", std::move(pieces));
}

double Sequence::term(std::uint64_t k) const {
  if (k == 0) throw std::invalid_argument("sequence indices start at 1");
  if (selectors_.empty()) return spec_.eval(k);
  double found = 0.0;
  for_each(k, [&](std::uint64_t i, double v) {
    if (i == k) found = v;
  });
  return found;
}

std::uint64_t Sequence::scan_cap(std::uint64_t count) const {
  const std::uint64_t scaled = count > (1ull << 56) ? UINT64_MAX : count * 128;
  return std::max<std::uint64_t>(10'000'000ull, scaled);
}

std::string Sequence::describe() const {
  std::string s = spec_.name();
  for (const auto& sel : selectors_) {
    s += " | select " + sel.describe();
  }
  return s;
}

Sequence restrict_to_indices(Sequence seq, IndexPredicate selection) {
  std::vector<IndexPredicate> selectors = seq.selectors();
  selectors.push_back(std::move(selection));
  return Sequence(seq.spec(), std::move(selectors));
}

}  // namespace roughstat
