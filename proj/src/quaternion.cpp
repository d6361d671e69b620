#include "fuchsian/quaternion.hpp"

#include "fuchsian/error.hpp"

namespace fuchsian {

namespace {

void require_same_algebra(const Quaternion& p, const Quaternion& q) {
  if (!(p.algebra.a == q.algebra.a && p.algebra.b == q.algebra.b))
    throw Error(ErrorCode::InvalidArgument, "quaternions from different algebras");
}

}  // namespace

Quaternion operator+(const Quaternion& p, const Quaternion& q) {
  require_same_algebra(p, q);
  return {p.algebra, p.x + q.x, p.y + q.y, p.z + q.z, p.t + q.t};
}

Quaternion operator-(const Quaternion& p, const Quaternion& q) {
  require_same_algebra(p, q);
  return {p.algebra, p.x - q.x, p.y - q.y, p.z - q.z, p.t - q.t};
}

Quaternion operator*(const Quaternion& p, const Quaternion& q) {
  require_same_algebra(p, q);
  const Rational a(p.algebra.a), b(p.algebra.b), ab = a * b;
  // IK = aJ, KI = -aJ, JK = -bI, KJ = bI, K^2 = -ab.
  return {
      p.algebra,
      p.x * q.x + a * p.y * q.y + b * p.z * q.z - ab * p.t * q.t,
      p.x * q.y + p.y * q.x - b * p.z * q.t + b * p.t * q.z,
      p.x * q.z + p.z * q.x + a * p.y * q.t - a * p.t * q.y,
      p.x * q.t + p.t * q.x + p.y * q.z - p.z * q.y,
  };
}

Rational reduced_norm(const Quaternion& q) {
  const Rational a(q.algebra.a), b(q.algebra.b);
  return q.x * q.x - a * q.y * q.y - b * q.z * q.z + a * b * q.t * q.t;
}

Rational reduced_trace(const Quaternion& q) { return Rational(2) * q.x; }

TowerMatrix embed_phi(const Quaternion& q) {
  const auto a = q.algebra.a;
  if (a != 2 && a != 3 && a != 6)
    throw Error(ErrorCode::UnsupportedField, "embed_phi needs a in {2,3,6}, got " + std::to_string(a));
  const TowerElement root = TowerElement::sqrt_of(a);
  const TowerElement x(q.x), y(q.y), z(q.z), t(q.t);
  return {x + root * y, z + root * t, (z - root * t) * Rational(q.algebra.b), x - root * y};
}

GroupMatrix embed_unit(const Quaternion& q) { return GroupMatrix(embed_phi(q)); }

std::vector<Triple> pure_quaternion_solutions(std::int64_t d, std::int64_t box) {
  if (box < 1) throw Error(ErrorCode::InvalidArgument, "box must be >= 1");
  std::vector<Triple> out;
  for (std::int64_t x = -box; x <= box; ++x)
    for (std::int64_t y = -box; y <= box; ++y)
      for (std::int64_t z = -box; z <= box; ++z)
        if (3 * x * x - y * y + 3 * z * z == d) out.push_back({x, y, z});
  return out;
}

Quaternion pure_quaternion(const Triple& xyz, AlgebraParams alg) {
  return {alg, 0, xyz[0], xyz[1], xyz[2]};
}

Quaternion psi_d(std::int64_t d, const Quaternion& omega, std::int64_t m) {
  if (d < 2) throw Error(ErrorCode::InvalidArgument, "psi_d needs d >= 2");
  if (m < 0) throw Error(ErrorCode::InvalidArgument, "psi_d needs m >= 0");
  if (!omega.is_pure() || reduced_norm(omega) != Rational(-d))
    throw Error(ErrorCode::NormMismatch, "omega must be a pure quaternion of reduced norm -" + std::to_string(d));
  const QuadElement eps = pell_fundamental_unit(d);
  // omega^2 = d, so a + b*omega behaves like a + b*sqrt(d).
  Quaternion base = Quaternion::scalar(eps.p(), omega.algebra) + Quaternion{omega.algebra, 0, eps.q() * omega.y,
                                                                               eps.q() * omega.z, eps.q() * omega.t};
  Quaternion result = Quaternion::scalar(1, omega.algebra);
  for (auto e = static_cast<std::uint64_t>(m); e != 0; e >>= 1) {
    if (e & 1) result = result * base;
    if (e > 1) base = base * base;
  }
  return result;
}

}  // namespace fuchsian
