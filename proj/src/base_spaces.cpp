#include "weylgerbe/base_spaces.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace weylgerbe {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_index(std::size_t i, std::size_t n) {
  if (i >= n) throw GerbeError(ErrorKind::IndexError, "index " + std::to_string(i) + " out of range");
}

std::int64_t round_to_integer(double v, const char* what) {
  const double r = std::round(v);
  if (std::abs(v - r) > kAlgTol)
    throw GerbeError(ErrorKind::NotInteger,
                     std::string(what) + " = " + std::to_string(v) + " is not an integer");
  return static_cast<std::int64_t>(r);
}

void check_off_cut(ZPoint z, Complex w) {
  if (angular_separation(z.value(), w) <= kCutTol)
    throw GerbeError(ErrorKind::OnBranchCut, "point lies on the cut through z");
}

}  // namespace

XtLift::XtLift(RealVector x) : x_(std::move(x)) {
  check_rank(dim());
  if (!x_.allFinite() || std::abs(x_.sum()) > kAlgTol)
    throw GerbeError(ErrorKind::FiberMismatch, "X_T lift must sum to zero");
}

ZPoint::ZPoint(double angle) : angle_(angle) {
  if (!(angle > 0.0 && angle < kTwoPi))
    throw GerbeError(ErrorKind::OnBranchCut, "Z point angle must lie in (0, 2 pi)");
}

double angular_separation(Complex a, Complex b) {
  return std::abs(std::arg(a * std::conj(b)));
}

YtPoint::YtPoint(ZPoint z_, TorusPoint t_) : z(z_), t(std::move(t_)) {
  for (std::size_t i = 0; i < t.dim(); ++i) check_off_cut(z, t.p(i));
}

FiberPairXY::FiberPairXY(XtLift x_, ZPoint z_, TorusPoint t_)
    : x(std::move(x_)), z(z_), t(std::move(t_)) {
  check_covers(x, t);
  for (std::size_t i = 0; i < t.dim(); ++i) check_off_cut(z, t.p(i));
}

TorusPoint project_xt(const XtLift& x) {
  Eigen::VectorXcd diag(x.x().size());
  for (Eigen::Index k = 0; k < diag.size(); ++k) diag(k) = std::polar(1.0, kTwoPi * x.x()(k));
  return TorusPoint(std::move(diag));
}

void check_covers(const XtLift& x, const TorusPoint& t) {
  if (x.dim() != t.dim()) throw GerbeError(ErrorKind::FiberMismatch, "rank mismatch");
  const double gap = (project_xt(x).diag() - t.diag()).cwiseAbs().maxCoeff();
  if (gap > kAlgTol) throw GerbeError(ErrorKind::FiberMismatch, "lift does not cover the torus point");
}

std::int64_t d_cocycle(const XtLift& x, const XtLift& y, std::size_t i) {
  check_index(i, x.dim());
  check_covers(y, project_xt(x));
  return round_to_integer(x[i] - y[i], "d_i");
}

Complex branch_log(ZPoint z, Complex w) {
  check_off_cut(z, w);
  // theta in (angle(z) - 2 pi, angle(z)); angle(z) in (0, 2 pi) puts 0 there.
  double theta = angle_0_2pi(w);
  if (theta >= z.angle()) theta -= kTwoPi;
  return {0.0, theta};
}

int epsilon_cocycle(ZPoint z1, ZPoint z2, const TorusPoint& t, std::size_t i) {
  check_index(i, t.dim());
  const Complex p = t.p(i);
  check_off_cut(z1, p);
  check_off_cut(z2, p);
  const double a = angle_0_2pi(p);
  if (z1.angle() > a && a > z2.angle()) return 1;
  if (z2.angle() > a && a > z1.angle()) return -1;
  return 0;
}

std::int64_t h_function(const XtLift& x, ZPoint z, const TorusPoint& t, std::size_t i) {
  check_index(i, t.dim());
  check_covers(x, t);
  const Complex log = branch_log(z, t.p(i));
  return round_to_integer(x[i] - log.imag() / kTwoPi, "h_i");
}

SpecialUnitary weyl_map(const TorusPoint& t, const ProjectionFrame& frame) {
  if (t.dim() != frame.dim()) throw GerbeError(ErrorKind::IndexError, "rank mismatch");
  const std::size_t n = t.dim();
  ComplexMatrix sum = ComplexMatrix::Zero(n, n);
  for (std::size_t i = 0; i < n; ++i) sum += t.p(i) * frame.P(i);
  return SpecialUnitary(std::move(sum));
}

}  // namespace weylgerbe
