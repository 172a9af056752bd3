#pragma once

// Connective data (curving, curvature, three-curvature) of the Weyl bundle
// gerbe on X_T x SU(n)/T and of the pullback of the basic bundle gerbe on
// Y_T x SU(n)/T, together with the 2-form beta relating them and the
// curvature of the trivialising line bundle R = (x) J_i^{h_i}.
//
// Curvings and curvatures are evaluated on flag tangents only: their
// coefficients are locally constant along the cover directions and the trace
// forms vanish on torus directions.

#include <functional>
#include <variant>

#include "weylgerbe/base_spaces.hpp"
#include "weylgerbe/cech.hpp"
#include "weylgerbe/forms.hpp"

namespace weylgerbe {

// Weyl bundle gerbe -----------------------------------------------------------

/// f_c = -sum_i x_i tr(P_i dP_i dP_i).
Complex weyl_curving(const XtLift& x, const ProjectionFrame& frame, const ComplexMatrix& X,
                     const ComplexMatrix& Y);

/// F_c = sum_i d_i(x, y) tr(P_i dP_i dP_i); x and y must share a fibre.
Complex weyl_curvature(const XtLift& x, const XtLift& y, const ProjectionFrame& frame,
                       const ComplexMatrix& X, const ComplexMatrix& Y);

/// omega_c = -1/(2 pi i) sum_i p_i^{-1} dp_i ^ tr(P_i dP_i dP_i).
Complex weyl_three_curvature(const BasePoint& at, const ProductTangent& u, const ProductTangent& v,
                             const ProductTangent& w);

// Pullback of the basic bundle gerbe ----------------------------------------

/// i/(4 pi) sum_{i != k} (log_z p_i - log_z p_k + (p_k - p_i) p_k^{-1}) tr(P_i dP_k dP_k).
Complex basic_curving_long(const YtPoint& y, const ProjectionFrame& frame, const ComplexMatrix& X,
                           const ComplexMatrix& Y);

/// sum_k (-1/(2 pi i)) log_z(p_k) tr(P_k dP_k dP_k), the general cup product part.
Complex basic_curving_reduced(const YtPoint& y, const ProjectionFrame& frame, const ComplexMatrix& X,
                              const ComplexMatrix& Y);

/// Curvature of the pulled back connection on Y_T^[2]: sum_i epsilon_i(z, w, t) tr(P_i dP_i dP_i).
Complex basic_curvature(ZPoint z, ZPoint w, const TorusPoint& t, const ProjectionFrame& frame,
                        const ComplexMatrix& X, const ComplexMatrix& Y);

/// The long form of omega_{p*b}: a coefficient 1-form wedged with tr(P_i dP_k dP_k)
/// minus i/(4 pi) sum_{i != k} p_i p_k^{-1} tr(dP_i dP_k dP_k).
Complex basic_three_curvature_long(const BasePoint& at, const ProductTangent& u, const ProductTangent& v,
                                   const ProductTangent& w);

/// -1/(2 pi i) sum_k p_k^{-1} dp_k ^ tr(P_k dP_k dP_k); omega_{p*b} minus d(beta).
Complex basic_three_curvature_reduced(const BasePoint& at, const ProductTangent& u,
                                      const ProductTangent& v, const ProductTangent& w);

// beta and the trivialisation -------------------------------------------------

/// beta = -i/(4 pi) sum_{i != k} p_i p_k^{-1} tr(P_i dP_k dP_k).
Complex beta_form(const TorusPoint& t, const ProjectionFrame& frame, const ComplexMatrix& X,
                  const ComplexMatrix& Y);

/// beta as a FormValue on T x SU(n)/T.
FormValue beta_form_value();

/// Coefficient of tr(P_j dP_i dP_i), i < j, when beta is collected over
/// unordered pairs: -i/(4 pi) (p_j p_i^{-1} - p_i p_j^{-1}).
Complex beta_pair_coefficient(const TorusPoint& t, std::size_t i, std::size_t j);

/// d(beta), assembled analytically: the coefficient derivative
/// d(p_i p_k^{-1}) = 2 pi i (a_i - a_k) p_i p_k^{-1} wedged with tr(P_i dP_k dP_k),
/// plus p_i p_k^{-1} tr(dP_i dP_k dP_k).
Complex beta_exterior_derivative(const BasePoint& at, const ProductTangent& u, const ProductTangent& v,
                                 const ProductTangent& w);

/// F_R = sum_i h_i(x, z, t) tr(P_i dP_i dP_i).
Complex trivializing_curvature_FR(const FiberPairXY& point, const ProjectionFrame& frame,
                                  const ComplexMatrix& X, const ComplexMatrix& Y);

// Bundled connective data -----------------------------------------------------

enum class CoverKind { XT, YT, XYFiberProduct };

using CoverLift = std::variant<XtLift, ZPoint>;

struct ConnectiveData {
  CoverKind cover;
  std::function<Complex(const CoverLift&, const BasePoint&, const ComplexMatrix&, const ComplexMatrix&)>
      curving;
  std::function<Complex(const CoverLift&, const CoverLift&, const BasePoint&, const ComplexMatrix&,
                        const ComplexMatrix&)>
      curvature;
  FormValue three_curvature;
};

/// (nabla_c, f_c, omega_c) on the cover X_T.
ConnectiveData weyl_connective_data();

/// (nabla_{p*b}, f_{p*b}, omega_{p*b}) on the cover Y_T, long forms.
ConnectiveData basic_connective_data();

/// |delta(curving)(a, b) - curvature(a, b)| at one fibre pair.
double curving_defect(const ConnectiveData& data, const CoverLift& a, const CoverLift& b, const BasePoint& at,
                      const ComplexMatrix& X, const ComplexMatrix& Y);

}  // namespace weylgerbe
