#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace exclusionpoly {

/**
 * Arbitrary-precision rational number, always kept in lowest terms with a
 * positive denominator. All arithmetic is exact; there is no rounding
 * anywhere in this library. Backed by GMP's mpq layer.
 */
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}                // NOLINT(google-explicit-constructor)
  Rational(long n) : v_(n) {}               // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  explicit Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

  /// Exact parse of "p/q", an integer, or a decimal literal such as "0.4"
  /// (which becomes 2/5). Throws StructuralError on malformed input.
  static Rational parse(std::string_view text);

  /// Canonical string form: "p/q", or just "p" when the denominator is 1.
  std::string str() const { return v_.get_str(); }

  /// Decimal approximation with the given number of digits after the point
  /// (round-half-up on the exact value). For display only.
  std::string decimal(int digits) const;

  double approx() const { return v_.get_d(); }

  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }
  Rational abs() const { return Rational(mpq_class(::abs(v_))); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t()) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t());
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

 private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;

Rational sum(const RationalVector& v);
Rational dot(const RationalVector& a, const RationalVector& b);

/// Parse a comma-separated list of rationals ("1/2,2/5,0.1").
RationalVector parse_rational_list(std::string_view text);

std::string to_string(const RationalVector& v);

}  // namespace exclusionpoly
