#pragma once

/**
 * @file quadratic.hpp
 * @brief Exact arithmetic in real quadratic fields Q(sqrt(d)).
 *
 * Every interval endpoint, length and translation value in the library is a
 * QuadraticNumber, so that all comparisons deciding interval membership are
 * exact. Floating point appears only through to_double(), which exists for
 * rendering and diagnostics and is never used to decide anything.
 *
 * Canonical form:
 * - rat and coef are reduced rationals (GMP keeps them canonical)
 * - d is squarefree; sqrt(20) is stored as 2*sqrt(5)
 * - a rational value always has coef = 0 and d = 0
 *
 * Two canonical values are equal iff all three fields are equal.
 */

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace iet {

using Rational = mpq_class;

class QuadraticNumber {
 public:
  QuadraticNumber() = default;
  QuadraticNumber(long value) : rat_(value) {}  // NOLINT: implicit by design of literals like 1 - alpha
  explicit QuadraticNumber(Rational value);
  QuadraticNumber(Rational rat, Rational coef, std::int64_t d);

  /// Parses "p/q", "p/q+r/s*sqrt(d)", "-sqrt(5)", "1/2*sqrt(5)", ...
  /// No whitespace. Throws ParseError.
  static QuadraticNumber parse(std::string_view text);

  /// 0 + 1*sqrt(d), canonicalized.
  static QuadraticNumber sqrt_of(std::int64_t d);

  const Rational& rat() const { return rat_; }
  const Rational& coef() const { return coef_; }
  /// Squarefree radicand, or 0 for a rational value.
  std::int64_t field() const { return d_; }
  bool is_rational() const { return coef_ == 0; }
  bool is_zero() const { return rat_ == 0 && coef_ == 0; }
  int sign() const;

  /// Canonical text; parse(str()) reproduces the value exactly.
  std::string str() const;

  /// Nearest double. Non-authoritative: for rendering and diagnostics only.
  double to_double() const;

  QuadraticNumber operator-() const;
  QuadraticNumber& operator+=(const QuadraticNumber& rhs);
  QuadraticNumber& operator-=(const QuadraticNumber& rhs);
  QuadraticNumber& operator*=(const QuadraticNumber& rhs);

  friend QuadraticNumber operator+(QuadraticNumber lhs, const QuadraticNumber& rhs) { return lhs += rhs; }
  friend QuadraticNumber operator-(QuadraticNumber lhs, const QuadraticNumber& rhs) { return lhs -= rhs; }
  friend QuadraticNumber operator*(QuadraticNumber lhs, const QuadraticNumber& rhs) { return lhs *= rhs; }

  /// Division by a nonzero rational; general division is not needed.
  friend QuadraticNumber operator/(const QuadraticNumber& lhs, const Rational& rhs);

  friend bool operator==(const QuadraticNumber& a, const QuadraticNumber& b) {
    return a.d_ == b.d_ && a.rat_ == b.rat_ && a.coef_ == b.coef_;
  }
  /// Exact order. Throws MixedFieldError for two irrationals over distinct d.
  friend std::strong_ordering operator<=>(const QuadraticNumber& a, const QuadraticNumber& b);

  friend std::ostream& operator<<(std::ostream& os, const QuadraticNumber& x) { return os << x.str(); }

 private:
  void canonicalize();
  static std::int64_t common_field(const QuadraticNumber& a, const QuadraticNumber& b);

  Rational rat_{0};
  Rational coef_{0};
  std::int64_t d_ = 0;
};

/// Sign-exact comparison helper used where an explicit three-way result reads
/// better than operators.
inline std::strong_ordering compare(const QuadraticNumber& a, const QuadraticNumber& b) { return a <=> b; }

/// Largest squarefree divisor decomposition: d = k^2 * s, returns {k, s}.
std::pair<std::int64_t, std::int64_t> split_square(std::int64_t d);

}  // namespace iet
