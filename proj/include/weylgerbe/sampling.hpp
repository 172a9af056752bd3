#pragma once

#include <cstdint>
#include <random>

#include "weylgerbe/base_spaces.hpp"
#include "weylgerbe/forms.hpp"

namespace weylgerbe {

/// The one seeded source of randomness; every suite draws from a Sampler so a
/// failing sample can be reproduced from the seed alone.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi);
  Complex unit_complex();
  Complex gaussian_complex();

  /// Haar-distributed element of SU(n).
  SpecialUnitary special_unitary(std::size_t n);
  ProjectionFrame frame(std::size_t n) { return make_frame(special_unitary(n)); }

  /// Lift with entries roughly uniform in [-1, 1], summing to zero.
  XtLift xt_lift(std::size_t n);
  TorusPoint torus_point(std::size_t n) { return project_xt(xt_lift(n)); }

  /// Another lift over the same torus point: x plus an integer vector summing to zero.
  XtLift shifted_lift(const XtLift& x, int max_shift = 3);

  /// Cut point at least `margin` radians away from 1 and from every t_i.
  ZPoint z_off_spectrum(const TorusPoint& t, double margin = 1e-4);

  /// Random zero-diagonal skew-hermitian matrix.
  ComplexMatrix flag_tangent(std::size_t n);
  RealVector torus_tangent(std::size_t n);
  ProductTangent product_tangent(std::size_t n) {
    return ProductTangent::mixed(torus_tangent(n), flag_tangent(n));
  }

  std::mt19937_64& engine() noexcept { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace weylgerbe
