#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

namespace takiff {

/// Exact rational number with 64-bit numerator and denominator.
///
/// Always kept in lowest terms with a positive denominator, so equality is
/// structural. Every operation is computed in 128-bit intermediates and throws
/// std::overflow_error if the reduced result does not fit in 64 bits.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t n) : num_(n) {}  // NOLINT: implicit from integer
  Rational(std::int64_t n, std::int64_t d);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }
  int sign() const { return (num_ > 0) - (num_ < 0); }

  /// Numerator as an integer; throws std::domain_error when not integral.
  std::int64_t to_integer() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  /// "p/q", or "p" when the denominator is one.
  std::string str() const;

  /// Parses "p", "-p", "p/q". Throws std::invalid_argument on malformed input.
  static Rational parse(std::string_view text);

 private:
  static Rational from_wide(__int128 n, __int128 d);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace takiff
