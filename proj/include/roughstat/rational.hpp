#pragma once

#include <cstdint>
#include <string>

namespace roughstat {

// Exact rational arithmetic for densities, thresholds and grid coordinates.
// Numerators and denominators stay small here (prefix counts up to ~1e7,
// short decimal parameters), so int64 storage with 128-bit cross products
// in comparisons is plenty.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den);

  static Rational integer(std::int64_t v) { return Rational(v, 1); }
  // Accepts "p/q", a plain integer, or a decimal like "0.05" / "-1.25".
  // Throws std::invalid_argument on anything else.
  static Rational parse(const std::string& text);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_zero() const { return num_ == 0; }

  Rational abs() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b);
  friend bool operator<=(const Rational& a, const Rational& b);
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }
  // "p/q" in lowest terms; integers render without the "/1".
  std::string str() const;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace roughstat
