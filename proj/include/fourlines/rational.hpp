#pragma once

// Exact rational numbers backed by GMP. Values are always kept in lowest
// terms with a positive denominator.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace fourlines {

using Integer = mpz_class;

class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t n) : v_(static_cast<long>(n)) {}  // NOLINT: implicit on purpose
  Rational(std::int64_t num, std::int64_t den);
  explicit Rational(const Integer& n) : v_(n) {}
  Rational(const Integer& num, const Integer& den);

  /// Parses "p/q" or "p" (optional leading minus). Throws std::invalid_argument.
  static Rational parse(std::string_view text);

  Integer numerator() const { return v_.get_num(); }
  Integer denominator() const { return v_.get_den(); }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  /// Smallest integer >= *this.
  Integer ceil() const;
  /// Largest integer <= *this.
  Integer floor() const;

  Rational reciprocal() const;
  Rational abs() const;

  /// "p/q", or "p" when the denominator is 1.
  std::string str() const;
  double to_double() const { return v_.get_d(); }

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  const mpq_class& raw() const { return v_; }

 private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}

  mpq_class v_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace fourlines
