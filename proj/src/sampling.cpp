#include "weylgerbe/sampling.hpp"

#include <cmath>
#include <numbers>

namespace weylgerbe {

double Sampler::uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

Complex Sampler::unit_complex() { return std::polar(1.0, uniform(0.0, 2.0 * std::numbers::pi)); }

Complex Sampler::gaussian_complex() {
  std::normal_distribution<double> normal(0.0, 1.0);
  const double re = normal(rng_);
  const double im = normal(rng_);
  return {re, im};
}

SpecialUnitary Sampler::special_unitary(std::size_t n) {
  check_rank(n);
  ComplexMatrix z(n, n);
  for (Eigen::Index c = 0; c < z.cols(); ++c)
    for (Eigen::Index r = 0; r < z.rows(); ++r) z(r, c) = gaussian_complex();
  Eigen::HouseholderQR<ComplexMatrix> qr(z);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Phase-fix so the distribution is Haar, then move det onto the first column.
  for (Eigen::Index k = 0; k < q.cols(); ++k) {
    const Complex d = r(k, k);
    if (std::abs(d) > 0.0) q.col(k) *= d / std::abs(d);
  }
  const Complex det = q.determinant();
  q.col(0) *= std::conj(det) / std::abs(det);
  return SpecialUnitary(std::move(q));
}

XtLift Sampler::xt_lift(std::size_t n) {
  RealVector x(static_cast<Eigen::Index>(n));
  for (Eigen::Index k = 0; k + 1 < x.size(); ++k) x(k) = uniform(-1.0, 1.0);
  x(x.size() - 1) = 0.0;
  x(x.size() - 1) = -x.sum();
  return XtLift(std::move(x));
}

XtLift Sampler::shifted_lift(const XtLift& x, int max_shift) {
  std::uniform_int_distribution<int> pick(-max_shift, max_shift);
  RealVector shift = RealVector::Zero(x.x().size());
  for (Eigen::Index k = 0; k + 1 < shift.size(); ++k) shift(k) = pick(rng_);
  shift(shift.size() - 1) = -shift.sum();
  return XtLift(x.x() + shift);
}

ZPoint Sampler::z_off_spectrum(const TorusPoint& t, double margin) {
  for (;;) {
    const double a = uniform(margin, 2.0 * std::numbers::pi - margin);
    const Complex z = std::polar(1.0, a);
    bool clear = true;
    for (std::size_t i = 0; i < t.dim() && clear; ++i) clear = angular_separation(z, t.p(i)) > margin;
    if (clear) return ZPoint(a);
  }
}

ComplexMatrix Sampler::flag_tangent(std::size_t n) {
  ComplexMatrix X = ComplexMatrix::Zero(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex mu = gaussian_complex();
      X(i, j) = mu;
      X(j, i) = -std::conj(mu);
    }
  return X;
}

RealVector Sampler::torus_tangent(std::size_t n) {
  RealVector a(static_cast<Eigen::Index>(n));
  for (Eigen::Index k = 0; k < a.size(); ++k) a(k) = uniform(-1.0, 1.0);
  a.array() -= a.mean();
  return a;
}

}  // namespace weylgerbe
