#pragma once

#include <cstdint>

#include "weylgerbe/linalg.hpp"

namespace weylgerbe {

/// Minimum angular separation (radians) from a cut point or an eigenvalue.
inline constexpr double kCutTol = 1e-8;

/// A point of X_T: a real n-vector summing to zero, covering
/// diag(e^{2 pi i x_1}, ..., e^{2 pi i x_n}).
class XtLift {
 public:
  explicit XtLift(RealVector x);
  const RealVector& x() const noexcept { return x_; }
  double operator[](std::size_t i) const { return x_(static_cast<Eigen::Index>(i)); }
  std::size_t dim() const noexcept { return static_cast<std::size_t>(x_.size()); }

 private:
  RealVector x_;
};

/// A point of Z = U(1) minus {1}, stored by its angle in (0, 2 pi). Points of Z
/// are ordered anticlockwise, i.e. by angle.
class ZPoint {
 public:
  explicit ZPoint(double angle);
  double angle() const noexcept { return angle_; }
  Complex value() const { return std::polar(1.0, angle_); }
  auto operator<=>(const ZPoint&) const = default;

 private:
  double angle_;
};

/// Unsigned angular distance between two unit complex numbers, in [0, pi].
double angular_separation(Complex a, Complex b);

/// A point (z, t) of Y_T: z is at least kCutTol away from every t_i.
struct YtPoint {
  YtPoint(ZPoint z, TorusPoint t);
  ZPoint z;
  TorusPoint t;
};

/// A point of X_T x_T Y_T: a lift x and a cut point z over the same torus point.
struct FiberPairXY {
  FiberPairXY(XtLift x, ZPoint z, TorusPoint t);
  XtLift x;
  ZPoint z;
  TorusPoint t;
};

TorusPoint project_xt(const XtLift& x);

/// Throws FiberMismatch unless x covers t.
void check_covers(const XtLift& x, const TorusPoint& t);

/// d_i(x, y) = x_i - y_i, an integer because x and y share a fibre.
std::int64_t d_cocycle(const XtLift& x, const XtLift& y, std::size_t i);

/// log_z(w): the logarithm cut along the ray through z, normalised by
/// log_z(1) = 0. Returns i*theta with theta in (angle(z) - 2 pi, angle(z)).
Complex branch_log(ZPoint z, Complex w);

/// epsilon_i(z1, z2, t): +1 if z1 > p_i(t) > z2, -1 if z2 > p_i(t) > z1,
/// 0 otherwise. When p_i(t) = 1 it is compared at angle 0, below every point
/// of Z, so the result is 0.
int epsilon_cocycle(ZPoint z1, ZPoint z2, const TorusPoint& t, std::size_t i);

/// h_i(x, z, t) = x_i - log_z(p_i(t)) / (2 pi i), an integer on X_T x_T Y_T.
std::int64_t h_function(const XtLift& x, ZPoint z, const TorusPoint& t, std::size_t i);

/// p(t, P_1..P_n) = sum_i p_i(t) P_i, equal to g t g^dagger for the frame witness g.
SpecialUnitary weyl_map(const TorusPoint& t, const ProjectionFrame& frame);

}  // namespace weylgerbe
