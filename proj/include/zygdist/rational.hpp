#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace zyg {

/// Exact rational number with a 64-bit numerator and a positive 64-bit
/// denominator, always kept in lowest terms.
///
/// Intermediate products are formed in 128 bits; a result that does not fit
/// back into 64 bits throws std::overflow_error instead of wrapping.
__extension__ typedef __int128 int128;

class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t value) : num_(value), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den);

  /// k * 2^-n for any integer n (negative n multiplies).
  static Rational dyadic(std::int64_t k, int n);

  /// Parses "p", "p/q" or a finite decimal such as "-0.125".
  static Rational parse(std::string_view text);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  /// Largest integer <= value.
  std::int64_t floor() const;
  /// Smallest integer >= value.
  std::int64_t ceil() const;
  double to_double() const;
  bool is_integer() const { return den_ == 1; }
  /// True when the denominator is a power of two.
  bool is_dyadic() const { return (den_ & (den_ - 1)) == 0; }

  Rational operator-() const;
  Rational& operator+=(const Rational& other);
  Rational& operator-=(const Rational& other);
  Rational& operator*=(const Rational& other);
  Rational& operator/=(const Rational& other);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  std::string to_string() const;

 private:
  static Rational from_wide(int128 num, int128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

Rational abs(const Rational& r);
Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);
std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace zyg
