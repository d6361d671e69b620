#pragma once

#include <complex>
#include <cstdint>
#include <variant>
#include <vector>

#include "fuchsian/group_matrix.hpp"

namespace fuchsian {

/// Point of the upper half-plane.
struct PointH {
  double re = 0.0;
  double im = 1.0;

  std::complex<double> z() const { return {re, im}; }
  static PointH from(std::complex<double> w) { return {w.real(), w.imag()}; }
};

/// {z : |z - center| = radius}, a geodesic when center is real.
struct IsometryCircle {
  double center = 0.0;
  double radius = 1.0;
};

/// S(lambda) = {1/lambda <= |z| <= lambda}, minus the interiors of the circles.
struct StripDomain {
  double lambda = 1.0;
  std::vector<IsometryCircle> circles;
};

/// {z : d(z, center) <= d(g z, center) for every generator g}.
struct DirichletDomain {
  PointH center;
  std::vector<GroupMatrix> generators;
};

using DomainSpec = std::variant<StripDomain, DirichletDomain>;

enum class Membership { Interior, Boundary, Outside };

/// (az + b) / (cz + d) from the numeric projection of g.
PointH moebius_apply(const Mat2d& g, PointH z);
inline PointH moebius_apply(const GroupMatrix& g, PointH z) { return moebius_apply(g.numeric(), z); }

/// I(g) = {|cz + d| = 1}: center -d/c, radius 1/|c|. For a diagonal
/// homothety diag(l, 1/l) with l > 1 the circle |l z| = 1 is returned.
IsometryCircle isometry_circle(const GroupMatrix& g);

double hyperbolic_distance(PointH z, PointH w);

/// Distance from z to the geodesic carried by a circle centred on the real axis.
double distance_to_geodesic(PointH z, const IsometryCircle& circle);

Membership domain_contains(const DomainSpec& dom, PointH z, double tol = 1e-9);

/// n such that 1/lambda <= lambda^(2n) |z| <= lambda.
std::int64_t strip_exponent(PointH z, double lambda);

/// Coarse-to-fine search: `points` per axis, then `refinements` passes that
/// re-grid a window of +-2 cells around the incumbent.
struct GridResolution {
  int points = 121;
  int refinements = 6;
};

/// Interior point maximizing the minimum hyperbolic distance to the domain's
/// bounding geodesics. Strip domains only.
PointH deepest_point(const DomainSpec& dom, GridResolution grid = {});

/// min over the bounding geodesics of the hyperbolic distance from z.
double boundary_distance(const StripDomain& dom, PointH z);

}  // namespace fuchsian
