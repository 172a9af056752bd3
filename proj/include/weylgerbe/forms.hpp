#pragma once

// Exact evaluation of the differential forms built from a projection frame.
//
// Conventions (fixed across the library):
//  * a tangent to SU(n)/T at the frame with witness g is gX with X
//    skew-hermitian and zero on the diagonal, so dP_i(gX) = g [X, O_i] g^dagger;
//  * a 2-form tr(A dB dC) evaluates as tr(A dB(X) dC(Y)) - tr(A dB(Y) dC(X)),
//    a 3-form tr(dA dB dC) as the full signed sum over S_3, with no factorial
//    normalisation; 1-form by 2-form wedges use the matching three-term sum.
// With these conventions (i / 2 pi) * integral of tr(P_1 dP_1 dP_1) over the
// sphere is -1, see holonomy.hpp.

#include <functional>
#include <span>

#include "weylgerbe/linalg.hpp"

namespace weylgerbe {

/// Tangent to T x SU(n)/T or to one of its covers. Unused parts are zero.
struct ProductTangent {
  RealVector a;     // torus direction, sums to zero
  ComplexMatrix X;  // flag direction, zero-diagonal skew-hermitian
  RealVector xdot;  // X_T direction, sums to zero
  double zdot = 0.0;

  static ProductTangent flag(const ComplexMatrix& X);
  static ProductTangent torus(const RealVector& a);
  static ProductTangent mixed(const RealVector& a, const ComplexMatrix& X);

  std::size_t dim() const noexcept { return static_cast<std::size_t>(X.rows()); }
};

/// The point at which a form on T x SU(n)/T is evaluated.
struct BasePoint {
  TorusPoint t;
  ProjectionFrame frame;
};

/// A 1-, 2- or 3-form as an antisymmetric multilinear evaluator.
class FormValue {
 public:
  using Evaluator = std::function<Complex(const BasePoint&, std::span<const ProductTangent>)>;

  FormValue(int degree, Evaluator eval);

  int degree() const noexcept { return degree_; }
  Complex operator()(const BasePoint& at, std::span<const ProductTangent> tangents) const;

  static FormValue zero(int degree);

 private:
  int degree_;
  Evaluator eval_;
};

/// dP_i(gX) = g [X, O_i] g^dagger.
ComplexMatrix dP(const ProjectionFrame& frame, std::size_t i, const ComplexMatrix& X);

/// The 2-form tr(P_i dP_j dP_k) on the flag tangents (X, Y).
Complex tr_form2(const ProjectionFrame& frame, std::size_t i, std::size_t j, std::size_t k,
                 const ComplexMatrix& X, const ComplexMatrix& Y);

/// Shorthand for the curvature 2-form tr(P_i dP_i dP_i).
inline Complex tau(const ProjectionFrame& frame, std::size_t i, const ComplexMatrix& X,
                   const ComplexMatrix& Y) {
  return tr_form2(frame, i, i, i, X, Y);
}

/// The 3-form tr(dP_i dP_j dP_k) on the flag tangents (X, Y, Z).
Complex tr_form3_dPPP(const ProjectionFrame& frame, std::size_t i, std::size_t j, std::size_t k,
                      const ComplexMatrix& X, const ComplexMatrix& Y, const ComplexMatrix& Z);

/// p_i^{-1} dp_i paired with the torus and X_T parts of v: 2 pi i (a_i + xdot_i).
Complex torus_oneform_dlogp(std::size_t i, const ProductTangent& v);

/// p_i^{-1} dp_i as a FormValue.
FormValue dlogp_form(std::size_t i);

/// tr(P_i dP_j dP_k) as a FormValue on the base.
FormValue trace_form(std::size_t i, std::size_t j, std::size_t k);

/// (alpha ^ beta)(u, v, w) = alpha(u) beta(v, w) - alpha(v) beta(u, w) + alpha(w) beta(u, v).
FormValue wedge_1_2(FormValue alpha, FormValue beta);

/// nu = -1/(24 pi^2) tr(g^{-1} dg)^3 on left-translated tangents X, Y, Z in su(n).
Complex basic_threeform_nu(const SpecialUnitary& g, const ComplexMatrix& X, const ComplexMatrix& Y,
                           const ComplexMatrix& Z);

}  // namespace weylgerbe
