#include "fuchsian/group_matrix.hpp"

#include <ostream>

#include "fuchsian/error.hpp"

namespace fuchsian {

GroupMatrix::GroupMatrix(TowerMatrix m) : m_(std::move(m)), num_(m_.numeric()) {
  if (m_.det() != TowerElement(1))
    throw Error(ErrorCode::NormMismatch, "determinant is " + m_.det().to_string() + ", expected 1");
}

GroupMatrix::GroupMatrix(TowerMatrix m, Trusted) : m_(std::move(m)), num_(m_.numeric()) {}

GroupMatrix GroupMatrix::inverse() const { return {TowerMatrix{m_.d, -m_.b, -m_.c, m_.a}, Trusted{}}; }

GroupMatrix GroupMatrix::negated() const { return {-m_, Trusted{}}; }

GroupMatrix GroupMatrix::pow(std::int64_t n) const {
  GroupMatrix base = n < 0 ? inverse() : *this;
  std::uint64_t e = n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
  GroupMatrix result;
  while (e != 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e != 0) base = base * base;
  }
  return result;
}

GroupMatrix operator*(const GroupMatrix& x, const GroupMatrix& y) {
  return {x.m_ * y.m_, GroupMatrix::Trusted{}};
}

std::ostream& operator<<(std::ostream& os, const TowerMatrix& m) {
  return os << "((" << m.a << ", " << m.b << "), (" << m.c << ", " << m.d << "))";
}

std::ostream& operator<<(std::ostream& os, const GroupMatrix& m) { return os << m.exact(); }

}  // namespace fuchsian
