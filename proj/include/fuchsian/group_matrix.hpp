#pragma once

#include <array>
#include <iosfwd>

#include "fuchsian/exactfield.hpp"

namespace fuchsian {

/// Double-precision projection of a 2x2 matrix, row-major (a b; c d).
struct Mat2d {
  double a, b, c, d;
};

/// General 2x2 matrix over Q(sqrt2, sqrt3).
struct TowerMatrix {
  TowerElement a, b, c, d;

  static TowerMatrix identity() { return {1, 0, 0, 1}; }

  TowerElement det() const { return a * d - b * c; }
  TowerElement trace() const { return a + d; }
  Mat2d numeric() const { return {a.to_double(), b.to_double(), c.to_double(), d.to_double()}; }

  TowerMatrix operator-() const { return {-a, -b, -c, -d}; }
  friend TowerMatrix operator+(const TowerMatrix& x, const TowerMatrix& y) {
    return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
  }
  friend TowerMatrix operator*(const TowerMatrix& x, const TowerMatrix& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  friend bool operator==(const TowerMatrix& x, const TowerMatrix& y) = default;
};

/// Element of SL(2) over Q(sqrt2, sqrt3): exact entries, determinant exactly
/// one, with the double projection cached for the geometry code.
class GroupMatrix {
 public:
  GroupMatrix() : GroupMatrix(TowerMatrix::identity()) {}
  /// Throws NormMismatch unless det(m) == 1 exactly.
  explicit GroupMatrix(TowerMatrix m);

  static GroupMatrix identity() { return GroupMatrix(); }

  const TowerMatrix& exact() const noexcept { return m_; }
  const TowerElement& a() const noexcept { return m_.a; }
  const TowerElement& b() const noexcept { return m_.b; }
  const TowerElement& c() const noexcept { return m_.c; }
  const TowerElement& d() const noexcept { return m_.d; }
  const Mat2d& numeric() const noexcept { return num_; }

  GroupMatrix inverse() const;
  GroupMatrix negated() const;
  GroupMatrix pow(std::int64_t n) const;
  bool is_identity() const { return m_ == TowerMatrix::identity(); }
  bool is_plus_minus_identity() const { return is_identity() || negated().is_identity(); }

  friend GroupMatrix operator*(const GroupMatrix& x, const GroupMatrix& y);
  friend bool operator==(const GroupMatrix& x, const GroupMatrix& y) { return x.m_ == y.m_; }

 private:
  struct Trusted {};
  GroupMatrix(TowerMatrix m, Trusted);

  TowerMatrix m_;
  Mat2d num_{};
};

std::ostream& operator<<(std::ostream& os, const TowerMatrix& m);
std::ostream& operator<<(std::ostream& os, const GroupMatrix& m);

}  // namespace fuchsian
