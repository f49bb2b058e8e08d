#include "zygdist/rational.hpp"

#include <charconv>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace zyg {

namespace {

using i128 = int128;

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits64(i128 v) {
  return v >= std::numeric_limits<std::int64_t>::min() &&
         v <= std::numeric_limits<std::int64_t>::max();
}

// Floor division for 128-bit values with a positive divisor.
i128 floor_div(i128 a, i128 b) {
  i128 q = a / b;
  if ((a % b != 0) && (a < 0)) --q;
  return q;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  *this = from_wide(num, den);
}

Rational Rational::from_wide(i128 num, i128 den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  i128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (!fits64(num) || !fits64(den)) throw std::overflow_error("Rational: 64-bit overflow");
  Rational r;
  r.num_ = static_cast<std::int64_t>(num);
  r.den_ = static_cast<std::int64_t>(den);
  return r;
}

Rational Rational::dyadic(std::int64_t k, int n) {
  if (n > 62 || n < -62) throw std::overflow_error("Rational::dyadic: exponent out of range");
  if (n >= 0) return from_wide(k, static_cast<i128>(1) << n);
  return from_wide(static_cast<i128>(k) * (static_cast<i128>(1) << -n), 1);
}

Rational Rational::parse(std::string_view text) {
  auto bad = [&] { return std::invalid_argument("Rational::parse: cannot parse '" + std::string(text) + "'"); };
  if (text.empty()) throw bad();
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::int64_t p = 0;
    std::int64_t q = 0;
    auto a = text.substr(0, slash);
    auto b = text.substr(slash + 1);
    if (std::from_chars(a.data(), a.data() + a.size(), p).ptr != a.data() + a.size()) throw bad();
    if (std::from_chars(b.data(), b.data() + b.size(), q).ptr != b.data() + b.size()) throw bad();
    return Rational(p, q);
  }
  bool negative = false;
  std::size_t pos = 0;
  if (text[0] == '-' || text[0] == '+') {
    negative = text[0] == '-';
    pos = 1;
  }
  i128 num = 0;
  i128 den = 1;
  bool seen_digit = false;
  bool after_point = false;
  for (; pos < text.size(); ++pos) {
    char c = text[pos];
    if (c == '.') {
      if (after_point) throw bad();
      after_point = true;
      continue;
    }
    if (c < '0' || c > '9') throw bad();
    seen_digit = true;
    num = num * 10 + (c - '0');
    if (after_point) den *= 10;
    if (!fits64(num) || !fits64(den)) throw std::overflow_error("Rational::parse: too many digits");
  }
  if (!seen_digit) throw bad();
  return from_wide(negative ? -num : num, den);
}

std::int64_t Rational::floor() const {
  return static_cast<std::int64_t>(floor_div(num_, den_));
}

std::int64_t Rational::ceil() const {
  return -static_cast<std::int64_t>(floor_div(-static_cast<i128>(num_), den_));
}

double Rational::to_double() const {
  return static_cast<double>(num_) / static_cast<double>(den_);
}

Rational Rational::operator-() const {
  return from_wide(-static_cast<i128>(num_), den_);
}

Rational& Rational::operator+=(const Rational& other) {
  if (den_ == other.den_) {
    *this = from_wide(static_cast<i128>(num_) + other.num_, den_);
  } else {
    *this = from_wide(static_cast<i128>(num_) * other.den_ + static_cast<i128>(other.num_) * den_,
                      static_cast<i128>(den_) * other.den_);
  }
  return *this;
}

Rational& Rational::operator-=(const Rational& other) { return *this += -other; }

Rational& Rational::operator*=(const Rational& other) {
  // Cross-reduce first so that products of dyadic values stay small.
  i128 g1 = gcd128(num_, other.den_);
  i128 g2 = gcd128(other.num_, den_);
  if (g1 == 0) g1 = 1;
  if (g2 == 0) g2 = 1;
  *this = from_wide((num_ / g1) * (other.num_ / g2), (den_ / g2) * (other.den_ / g1));
  return *this;
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.num_ == 0) throw std::domain_error("Rational: division by zero");
  *this = from_wide(static_cast<i128>(num_) * other.den_, static_cast<i128>(den_) * other.num_);
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  i128 lhs = static_cast<i128>(a.num_) * b.den_;
  i128 rhs = static_cast<i128>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational abs(const Rational& r) { return r < Rational(0) ? -r : r; }
Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace zyg
