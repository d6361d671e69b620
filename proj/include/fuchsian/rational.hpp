#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace fuchsian {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Exact rational number, always in lowest terms with a positive denominator.
///
/// Values whose numerator and denominator fit in an int64 are stored inline and
/// combined with 128-bit intermediates; anything larger is promoted to an
/// arbitrary-precision representation and demoted again once it fits.
class Rational {
 public:
  Rational() noexcept = default;
  Rational(std::int64_t n);  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t n, std::int64_t d);
  explicit Rational(const BigRational& v);
  explicit Rational(const BigInt& v);

  /// Parses "p" or "p/q" (optional sign, decimal digits only).
  static Rational parse(std::string_view text);

  bool is_zero() const noexcept { return !big_ && num_ == 0; }
  bool is_integer() const;
  int sign() const noexcept;

  BigInt numerator() const;
  BigInt denominator() const;
  BigRational to_big() const;
  /// The value as an int64 if it is an integer that fits.
  std::optional<std::int64_t> to_int64() const;
  double to_double() const;
  std::string to_string() const;

  Rational operator-() const;
  Rational reciprocal() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  static Rational from_parts(__int128 n, __int128 d);
  static Rational from_big(BigRational v);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const BigRational> big_;  // set iff the value does not fit inline
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace fuchsian
