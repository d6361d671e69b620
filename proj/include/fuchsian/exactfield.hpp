#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "fuchsian/rational.hpp"

namespace fuchsian {

/// p + q*sqrt(d) in Q(sqrt d), d square-free and >= 2.
class QuadElement {
 public:
  QuadElement(std::int64_t d, Rational p, Rational q = Rational());

  std::int64_t d() const noexcept { return d_; }
  const Rational& p() const noexcept { return p_; }
  const Rational& q() const noexcept { return q_; }

  bool is_rational() const noexcept { return q_.is_zero(); }
  /// p^2 - d q^2.
  Rational norm() const;
  double to_double() const;
  std::string to_string() const;

  QuadElement operator-() const { return {d_, -p_, -q_}; }
  friend QuadElement operator+(const QuadElement& a, const QuadElement& b);
  friend QuadElement operator-(const QuadElement& a, const QuadElement& b);
  friend QuadElement operator*(const QuadElement& a, const QuadElement& b);
  friend QuadElement operator*(const QuadElement& a, const Rational& r);
  /// Exact division; the divisor must be nonzero.
  friend QuadElement operator/(const QuadElement& a, const QuadElement& b);
  friend bool operator==(const QuadElement& a, const QuadElement& b) = default;

 private:
  std::int64_t d_;
  Rational p_;
  Rational q_;
};

std::ostream& operator<<(std::ostream& os, const QuadElement& x);

bool is_square_free(std::int64_t d);

QuadElement galois_conjugate(const QuadElement& x);

/// Smallest a + b sqrt(d) with a, b > 0 and a^2 - d b^2 = 1, from the
/// continued-fraction expansion of sqrt(d). Throws Overflow once the
/// convergents exceed max_bits.
QuadElement pell_fundamental_unit(std::int64_t d, unsigned max_bits = 4096);

/// eps^m for a norm-one eps; negative m goes through the conjugate.
QuadElement unit_power(const QuadElement& eps, std::int64_t m);

struct UnitLog {
  std::int64_t exponent;
  Rational residual;  // x * eps^-exponent
};

/// Finds k with x * eps^-k rational by stepping outward from k = 0.
/// Throws NotAUnitMultiple when |k| would exceed bound.
UnitLog unit_log(const QuadElement& x, const QuadElement& eps, std::int64_t bound = 256);

/// c1 + c2 sqrt2 + c3 sqrt3 + c6 sqrt6, the field Q(sqrt2, sqrt3).
class TowerElement {
 public:
  TowerElement() = default;
  TowerElement(Rational c1, Rational c2 = {}, Rational c3 = {}, Rational c6 = {})  // NOLINT
      : c1_(std::move(c1)), c2_(std::move(c2)), c3_(std::move(c3)), c6_(std::move(c6)) {}
  TowerElement(std::int64_t v) : c1_(v) {}  // NOLINT(google-explicit-constructor)

  /// Embeds p + q sqrt(d) for d in {2, 3, 6}; UnsupportedField otherwise.
  static TowerElement from_quad(const QuadElement& x);
  static TowerElement sqrt_of(std::int64_t d) { return from_quad(QuadElement(d, 0, 1)); }

  const Rational& c1() const noexcept { return c1_; }
  const Rational& c2() const noexcept { return c2_; }
  const Rational& c3() const noexcept { return c3_; }
  const Rational& c6() const noexcept { return c6_; }

  bool is_zero() const noexcept { return c1_.is_zero() && c2_.is_zero() && c3_.is_zero() && c6_.is_zero(); }
  bool is_rational() const noexcept { return c2_.is_zero() && c3_.is_zero() && c6_.is_zero(); }
  double to_double() const;
  std::string to_string() const;

  TowerElement operator-() const { return {-c1_, -c2_, -c3_, -c6_}; }
  friend TowerElement operator+(const TowerElement& a, const TowerElement& b);
  friend TowerElement operator-(const TowerElement& a, const TowerElement& b);
  friend TowerElement operator*(const TowerElement& a, const TowerElement& b);
  friend TowerElement operator*(const TowerElement& a, const Rational& r);
  TowerElement& operator+=(const TowerElement& o) { return *this = *this + o; }
  TowerElement& operator*=(const TowerElement& o) { return *this = *this * o; }
  friend bool operator==(const TowerElement& a, const TowerElement& b) = default;

 private:
  Rational c1_, c2_, c3_, c6_;
};

std::ostream& operator<<(std::ostream& os, const TowerElement& x);

}  // namespace fuchsian
