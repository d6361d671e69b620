#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "fuchsian/exactfield.hpp"
#include "fuchsian/group_matrix.hpp"

namespace fuchsian {

/// The algebra (a, b / Q): I^2 = a, J^2 = b, K = IJ = -JI.
struct AlgebraParams {
  std::int64_t a = 3;
  std::int64_t b = -1;
  std::optional<std::int64_t> discriminant_label = 6;

  friend bool operator==(const AlgebraParams&, const AlgebraParams&) = default;
};

/// x + yI + zJ + tK.
struct Quaternion {
  AlgebraParams algebra;
  Rational x, y, z, t;

  static Quaternion scalar(Rational v, AlgebraParams alg = {}) { return {alg, std::move(v), 0, 0, 0}; }

  Quaternion conjugate() const { return {algebra, x, -y, -z, -t}; }
  bool is_pure() const { return x.is_zero(); }

  friend Quaternion operator+(const Quaternion& p, const Quaternion& q);
  friend Quaternion operator-(const Quaternion& p, const Quaternion& q);
  friend Quaternion operator*(const Quaternion& p, const Quaternion& q);
  friend bool operator==(const Quaternion&, const Quaternion&) = default;
};

/// x^2 - a y^2 - b z^2 + ab t^2, which equals det(embed_phi(q)).
Rational reduced_norm(const Quaternion& q);
/// 2x.
Rational reduced_trace(const Quaternion& q);

/// ((x + y sqrt a, z + t sqrt a), (b (z - t sqrt a), x - y sqrt a)).
/// The image lives in Q(sqrt2, sqrt3), so a must be 2, 3 or 6.
TowerMatrix embed_phi(const Quaternion& q);

/// embed_phi of a reduced-norm-one quaternion, as a group element.
GroupMatrix embed_unit(const Quaternion& q);

using Triple = std::array<std::int64_t, 3>;

/// Integer (x, y, z) in [-box, box]^3 with 3x^2 - y^2 + 3z^2 = d, i.e. the
/// pure quaternions xI + yJ + zK of (3,-1) with reduced norm -d. Lexicographic.
std::vector<Triple> pure_quaternion_solutions(std::int64_t d, std::int64_t box);

Quaternion pure_quaternion(const Triple& xyz, AlgebraParams alg = {});

/// (a_d + b_d omega)^m, with a_d + b_d sqrt(d) the fundamental norm-one unit.
/// omega must be pure of reduced norm -d (NormMismatch otherwise).
Quaternion psi_d(std::int64_t d, const Quaternion& omega, std::int64_t m);

}  // namespace fuchsian
