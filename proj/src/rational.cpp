#include "exclusionpoly/rational.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

#include "exclusionpoly/errors.hpp"

namespace exclusionpoly {

Rational::Rational(long num, long den) : v_(num, den) {
  if (den == 0) throw StructuralError("rational with zero denominator");
  v_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) {
  if (den == 0) throw StructuralError("rational with zero denominator");
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw StructuralError("rational division by zero");
  v_ /= o.v_;
  return *this;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) throw StructuralError("empty rational literal");

  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  Rational result;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    const std::string_view num = s.substr(0, slash);
    const std::string_view den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw StructuralError("malformed rational literal: " + std::string(text));
    const mpz_class n{std::string(num)};
    const mpz_class d{std::string(den)};
    if (d == 0) throw StructuralError("rational with zero denominator: " + std::string(text));
    result = Rational(n, d);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    const std::string_view whole = s.substr(0, dot);
    const std::string_view frac = s.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || !all_digits(frac))
      throw StructuralError("malformed decimal literal: " + std::string(text));
    mpz_class n(whole.empty() ? std::string("0") : std::string(whole));
    mpz_class d(1);
    for (char c : frac) {
      n = n * 10 + (c - '0');
      d *= 10;
    }
    result = Rational(n, d);
  } else {
    if (!all_digits(s)) throw StructuralError("malformed rational literal: " + std::string(text));
    result = Rational(mpz_class(std::string(s)), mpz_class(1));
  }
  return negative ? -result : result;
}

std::string Rational::decimal(int digits) const {
  if (digits < 0) digits = 0;
  mpz_class scale(1);
  for (int i = 0; i < digits; ++i) scale *= 10;
  // round half up on |value|
  mpz_class n = num() * scale * 2;
  mpz_class q = n / den();
  mpz_class half_adjusted = q >= 0 ? mpz_class(q + 1) : mpz_class(q - 1);
  mpz_class rounded = half_adjusted / 2;
  bool neg = rounded < 0;
  mpz_class mag = ::abs(rounded);
  std::string digits_str = mag.get_str();
  if (static_cast<int>(digits_str.size()) <= digits)
    digits_str.insert(0, digits + 1 - digits_str.size(), '0');
  std::string out = neg ? "-" : "";
  out += digits_str.substr(0, digits_str.size() - digits);
  if (digits > 0) {
    out += '.';
    out += digits_str.substr(digits_str.size() - digits);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational sum(const RationalVector& v) {
  Rational s;
  for (const auto& x : v) s += x;
  return s;
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw StructuralError("dot product length mismatch");
  Rational s;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RationalVector parse_rational_list(std::string_view text) {
  RationalVector out;
  size_t start = 0;
  while (start <= text.size()) {
    size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    out.push_back(Rational::parse(text.substr(start, comma - start)));
    start = comma + 1;
    if (comma == text.size()) break;
  }
  if (out.empty()) throw StructuralError("empty rational list");
  return out;
}

std::string to_string(const RationalVector& v) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i];
  }
  os << ')';
  return os.str();
}

}  // namespace exclusionpoly
