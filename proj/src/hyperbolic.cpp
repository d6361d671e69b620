#include "fuchsian/hyperbolic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fuchsian/error.hpp"

namespace fuchsian {

PointH moebius_apply(const Mat2d& g, PointH z) {
  const std::complex<double> w = z.z();
  const std::complex<double> den = g.c * w + g.d;
  const double den2 = std::norm(den);
  if (std::sqrt(den2) < 1e-300) throw Error(ErrorCode::DegeneratePoint, "|cz + d| vanishes");
  const std::complex<double> num = g.a * w + g.b;
  // For det 1, Im(g z) = Im(z) / |cz + d|^2 exactly; use it to keep the sign.
  return {(num * std::conj(den)).real() / den2, z.im / den2};
}

IsometryCircle isometry_circle(const GroupMatrix& g) {
  if (g.is_plus_minus_identity()) throw Error(ErrorCode::IdentityMatrix, "identity has no isometry circle");
  const Mat2d& m = g.numeric();
  if (!g.c().is_zero()) return {-m.d / m.c, 1.0 / std::abs(m.c)};
  if (!g.b().is_zero())
    throw Error(ErrorCode::IdentityMatrix, "parabolic translation has no isometry circle");
  const double factor = std::max(std::abs(m.a), std::abs(m.d));
  return {0.0, 1.0 / factor};
}

double hyperbolic_distance(PointH z, PointH w) {
  // 2 asinh(|z - w| / (2 sqrt(Im z Im w))), stable for nearby points.
  const double chord = std::abs(z.z() - w.z());
  return 2.0 * std::asinh(chord / (2.0 * std::sqrt(z.im * w.im)));
}

double distance_to_geodesic(PointH z, const IsometryCircle& circle) {
  const double dx = z.re - circle.center;
  const double r2 = circle.radius * circle.radius;
  return std::asinh(std::abs(dx * dx + z.im * z.im - r2) / (2.0 * circle.radius * z.im));
}

double boundary_distance(const StripDomain& dom, PointH z) {
  double best = std::min(distance_to_geodesic(z, {0.0, dom.lambda}), distance_to_geodesic(z, {0.0, 1.0 / dom.lambda}));
  for (const auto& c : dom.circles) best = std::min(best, distance_to_geodesic(z, c));
  return best;
}

namespace {

Membership contains_strip(const StripDomain& dom, PointH z, double tol) {
  const double r = std::abs(z.z());
  const double lo = 1.0 / dom.lambda;
  const double hi = dom.lambda;
  if (r < lo - tol || r > hi + tol) return Membership::Outside;
  bool boundary = r < lo + tol || r > hi - tol;
  for (const auto& c : dom.circles) {
    const double dist = std::abs(z.z() - c.center);
    if (dist < c.radius - tol) return Membership::Outside;
    if (dist < c.radius + tol) boundary = true;
  }
  return boundary ? Membership::Boundary : Membership::Interior;
}

Membership contains_dirichlet(const DirichletDomain& dom, PointH z, double tol) {
  const double d0 = hyperbolic_distance(z, dom.center);
  bool boundary = false;
  for (const auto& g : dom.generators) {
    const double dg = hyperbolic_distance(moebius_apply(g, z), dom.center);
    if (dg < d0 - tol) return Membership::Outside;
    if (dg < d0 + tol) boundary = true;
  }
  return boundary ? Membership::Boundary : Membership::Interior;
}

}  // namespace

Membership domain_contains(const DomainSpec& dom, PointH z, double tol) {
  if (!(z.im > 0.0)) return Membership::Outside;
  return std::visit(
      [&](const auto& d) {
        if constexpr (std::is_same_v<std::decay_t<decltype(d)>, StripDomain>)
          return contains_strip(d, z, tol);
        else
          return contains_dirichlet(d, z, tol);
      },
      dom);
}

std::int64_t strip_exponent(PointH z, double lambda) {
  const double r = std::abs(z.z());
  if (!(r > 0.0)) throw Error(ErrorCode::DegeneratePoint, "strip_exponent of 0");
  const double log_l = std::log(lambda);
  auto n = static_cast<std::int64_t>(-std::llround(std::log(r) / (2.0 * log_l)));
  // Guard the rounding against points sitting on the strip edges.
  for (int i = 0; i < 4; ++i) {
    const double scaled = std::log(r) + 2.0 * static_cast<double>(n) * log_l;
    if (scaled < -log_l) ++n;
    else if (scaled > log_l) --n;
    else break;
  }
  return n;
}

PointH deepest_point(const DomainSpec& dom, GridResolution grid) {
  const auto* strip = std::get_if<StripDomain>(&dom);
  if (!strip) throw Error(ErrorCode::InvalidArgument, "deepest_point needs a strip domain");
  if (grid.points < 3) throw Error(ErrorCode::InvalidArgument, "grid needs at least 3 points per axis");
  const double lam = strip->lambda;
  const double im_floor = lam * 1e-3;
  double x0 = -lam, x1 = lam, y0 = im_floor, y1 = lam;
  PointH best{};
  double best_score = -1.0;
  for (int pass = 0; pass <= grid.refinements; ++pass) {
    const double dx = (x1 - x0) / (grid.points - 1);
    const double dy = (y1 - y0) / (grid.points - 1);
    for (int i = 0; i < grid.points; ++i) {
      for (int j = 0; j < grid.points; ++j) {
        const PointH z{x0 + i * dx, y0 + j * dy};
        if (domain_contains(dom, z) != Membership::Interior) continue;
        const double s = boundary_distance(*strip, z);
        if (s > best_score) {
          best_score = s;
          best = z;
        }
      }
    }
    if (best_score < 0.0) throw Error(ErrorCode::EmptyDomain, "no interior grid point");
    x0 = best.re - 2.0 * dx;
    x1 = best.re + 2.0 * dx;
    y0 = std::max(im_floor, best.im - 2.0 * dy);
    y1 = best.im + 2.0 * dy;
  }
  return best;
}

}  // namespace fuchsian
