#include "roughstat/rational.hpp"

#include <cctype>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace roughstat {

namespace {

using Wide = __int128;

std::int64_t narrow(Wide v, const char* what) {
  if (v > Wide(INT64_MAX) || v < Wide(INT64_MIN)) {
    throw std::overflow_error(std::string("rational overflow in ") + what);
  }
  return static_cast<std::int64_t>(v);
}

Rational reduce(Wide num, Wide den, const char* what) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Wide a = num < 0 ? -num : num;
  Wide b = den;
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  if (a > 1) {
    num /= a;
    den /= a;
  }
  return Rational(narrow(num, what), narrow(den, what));
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational r = reduce(Wide(num), Wide(den), "construction");
  num_ = r.num_;
  den_ = r.den_;
}

Rational Rational::abs() const { return num_ < 0 ? Rational(-num_, den_) : *this; }

Rational operator+(const Rational& a, const Rational& b) {
  return reduce(Wide(a.num_) * b.den_ + Wide(b.num_) * a.den_, Wide(a.den_) * b.den_, "+");
}

Rational operator-(const Rational& a, const Rational& b) {
  return reduce(Wide(a.num_) * b.den_ - Wide(b.num_) * a.den_, Wide(a.den_) * b.den_, "-");
}

Rational operator*(const Rational& a, const Rational& b) {
  return reduce(Wide(a.num_) * b.num_, Wide(a.den_) * b.den_, "*");
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw std::invalid_argument("rational division by zero");
  return reduce(Wide(a.num_) * b.den_, Wide(a.den_) * b.num_, "/");
}

bool operator<(const Rational& a, const Rational& b) {
  return Wide(a.num_) * b.den_ < Wide(b.num_) * a.den_;
}

bool operator<=(const Rational& a, const Rational& b) {
  return Wide(a.num_) * b.den_ <= Wide(b.num_) * a.den_;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw std::invalid_argument("empty number");

  auto parse_int = [](const std::string& t) -> std::int64_t {
    if (t.empty()) throw std::invalid_argument("empty integer");
    std::size_t i = (t[0] == '+' || t[0] == '-') ? 1 : 0;
    if (i == t.size()) throw std::invalid_argument("malformed integer '" + t + "'");
    for (; i < t.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) {
        throw std::invalid_argument("malformed integer '" + t + "'");
      }
    }
    errno = 0;
    char* end = nullptr;
    long long v = std::strtoll(t.c_str(), &end, 10);
    if (errno != 0 || end != t.c_str() + t.size()) {
      throw std::invalid_argument("malformed integer '" + t + "'");
    }
    return v;
  };

  std::size_t slash = s.find('/');
  if (slash != std::string::npos) {
    return Rational(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
  }

  std::size_t dot = s.find('.');
  if (dot == std::string::npos) {
    return Rational(parse_int(s), 1);
  }

  bool negative = false;
  std::string digits = s;
  if (!digits.empty() && (digits[0] == '+' || digits[0] == '-')) {
    negative = digits[0] == '-';
    digits.erase(0, 1);
    --dot;
  }
  std::string int_part = digits.substr(0, dot);
  std::string frac_part = digits.substr(dot + 1);
  if (int_part.empty() && frac_part.empty()) {
    throw std::invalid_argument("malformed decimal '" + text + "'");
  }
  if (int_part.size() + frac_part.size() > 18) {
    throw std::invalid_argument("decimal '" + text + "' has too many digits");
  }
  for (const std::string& part : {int_part, frac_part}) {
    for (char c : part) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw std::invalid_argument("malformed decimal '" + text + "'");
      }
    }
  }
  std::int64_t num = 0;
  for (char c : int_part) num = num * 10 + (c - '0');
  std::int64_t den = 1;
  for (char c : frac_part) {
    num = num * 10 + (c - '0');
    den *= 10;
  }
  if (negative) num = -num;
  return Rational(num, den);
}

}  // namespace roughstat
