#include "weylgerbe/gerbe_data.hpp"

#include <array>
#include <numbers>

namespace weylgerbe {

namespace {

constexpr Complex kI(0.0, 1.0);
constexpr double kPi = std::numbers::pi;

// (alpha ^ beta)(u, v, w) for a 1-form and a 2-form given as callables.
template <typename One, typename Two>
Complex wedge12(const One& alpha, const Two& beta, const ProductTangent& u, const ProductTangent& v,
                const ProductTangent& w) {
  return alpha(u) * beta(v, w) - alpha(v) * beta(u, w) + alpha(w) * beta(u, v);
}

void check_same_rank(const TorusPoint& t, const ProjectionFrame& frame) {
  if (t.dim() != frame.dim()) throw GerbeError(ErrorKind::IndexError, "torus and frame ranks differ");
}

}  // namespace

Complex weyl_curving(const XtLift& x, const ProjectionFrame& frame, const ComplexMatrix& X,
                     const ComplexMatrix& Y) {
  Complex sum{};
  for (std::size_t i = 0; i < frame.dim(); ++i) sum -= x[i] * tau(frame, i, X, Y);
  return sum;
}

Complex weyl_curvature(const XtLift& x, const XtLift& y, const ProjectionFrame& frame,
                       const ComplexMatrix& X, const ComplexMatrix& Y) {
  Complex sum{};
  for (std::size_t i = 0; i < frame.dim(); ++i)
    sum += static_cast<double>(d_cocycle(x, y, i)) * tau(frame, i, X, Y);
  return sum;
}

Complex weyl_three_curvature(const BasePoint& at, const ProductTangent& u, const ProductTangent& v,
                             const ProductTangent& w) {
  check_same_rank(at.t, at.frame);
  Complex sum{};
  for (std::size_t i = 0; i < at.frame.dim(); ++i) {
    sum += wedge12([i](const ProductTangent& a) { return torus_oneform_dlogp(i, a); },
                   [&](const ProductTangent& a, const ProductTangent& b) { return tau(at.frame, i, a.X, b.X); },
                   u, v, w);
  }
  return -sum / (2.0 * kPi * kI);
}

Complex basic_curving_long(const YtPoint& y, const ProjectionFrame& frame, const ComplexMatrix& X,
                           const ComplexMatrix& Y) {
  check_same_rank(y.t, frame);
  const std::size_t n = frame.dim();
  Complex sum{};
  for (std::size_t i = 0; i < n; ++i) {
    const Complex pi = y.t.p(i);
    const Complex log_i = branch_log(y.z, pi);
    for (std::size_t k = 0; k < n; ++k) {
      if (k == i) continue;
      const Complex pk = y.t.p(k);
      const Complex coeff = log_i - branch_log(y.z, pk) + (pk - pi) / pk;
      sum += coeff * tr_form2(frame, i, k, k, X, Y);
    }
  }
  return kI / (4.0 * kPi) * sum;
}

Complex basic_curving_reduced(const YtPoint& y, const ProjectionFrame& frame, const ComplexMatrix& X,
                              const ComplexMatrix& Y) {
  check_same_rank(y.t, frame);
  Complex sum{};
  for (std::size_t k = 0; k < frame.dim(); ++k)
    sum += -branch_log(y.z, y.t.p(k)) / (2.0 * kPi * kI) * tau(frame, k, X, Y);
  return sum;
}

Complex basic_curvature(ZPoint z, ZPoint w, const TorusPoint& t, const ProjectionFrame& frame,
                        const ComplexMatrix& X, const ComplexMatrix& Y) {
  check_same_rank(t, frame);
  Complex sum{};
  for (std::size_t i = 0; i < frame.dim(); ++i)
    sum += static_cast<double>(epsilon_cocycle(z, w, t, i)) * tau(frame, i, X, Y);
  return sum;
}

Complex basic_three_curvature_long(const BasePoint& at, const ProductTangent& u, const ProductTangent& v,
                                   const ProductTangent& w) {
  check_same_rank(at.t, at.frame);
  const std::size_t n = at.frame.dim();
  Complex first{}, second{};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (k == i) continue;
      const Complex ratio = at.t.p(i) / at.t.p(k);
      // p_i^{-1}dp_i - p_k^{-1}dp_k - p_k^{-1}dp_i + p_k^{-1}dp_k p_k^{-1}p_i
      auto coeff = [&](const ProductTangent& a) {
        const Complex Di = torus_oneform_dlogp(i, a), Dk = torus_oneform_dlogp(k, a);
        return Di - Dk - ratio * Di + Dk * ratio;
      };
      auto trace = [&](const ProductTangent& a, const ProductTangent& b) {
        return tr_form2(at.frame, i, k, k, a.X, b.X);
      };
      first += wedge12(coeff, trace, u, v, w);
      second += ratio * tr_form3_dPPP(at.frame, i, k, k, u.X, v.X, w.X);
    }
  }
  return kI / (4.0 * kPi) * first - kI / (4.0 * kPi) * second;
}

Complex basic_three_curvature_reduced(const BasePoint& at, const ProductTangent& u,
                                      const ProductTangent& v, const ProductTangent& w) {
  // Same expression as omega_c with the X_T legs replaced by torus legs.
  return weyl_three_curvature(at, u, v, w);
}

Complex beta_form(const TorusPoint& t, const ProjectionFrame& frame, const ComplexMatrix& X,
                  const ComplexMatrix& Y) {
  check_same_rank(t, frame);
  const std::size_t n = frame.dim();
  Complex sum{};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (k != i) sum += t.p(i) / t.p(k) * tr_form2(frame, i, k, k, X, Y);
  return -kI / (4.0 * kPi) * sum;
}

FormValue beta_form_value() {
  return FormValue(2, [](const BasePoint& at, std::span<const ProductTangent> v) {
    return beta_form(at.t, at.frame, v[0].X, v[1].X);
  });
}

Complex beta_pair_coefficient(const TorusPoint& t, std::size_t i, std::size_t j) {
  if (i >= j || j >= t.dim()) throw GerbeError(ErrorKind::IndexError, "pair coefficient needs i < j < n");
  return -kI / (4.0 * kPi) * (t.p(j) / t.p(i) - t.p(i) / t.p(j));
}

Complex beta_exterior_derivative(const BasePoint& at, const ProductTangent& u, const ProductTangent& v,
                                 const ProductTangent& w) {
  check_same_rank(at.t, at.frame);
  const std::size_t n = at.frame.dim();
  Complex sum{};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (k == i) continue;
      const Complex ratio = at.t.p(i) / at.t.p(k);
      auto dcoeff = [&](const ProductTangent& a) {
        return ratio * (torus_oneform_dlogp(i, a) - torus_oneform_dlogp(k, a));
      };
      auto trace = [&](const ProductTangent& a, const ProductTangent& b) {
        return tr_form2(at.frame, i, k, k, a.X, b.X);
      };
      sum += wedge12(dcoeff, trace, u, v, w);
      sum += ratio * tr_form3_dPPP(at.frame, i, k, k, u.X, v.X, w.X);
    }
  }
  return -kI / (4.0 * kPi) * sum;
}

Complex trivializing_curvature_FR(const FiberPairXY& point, const ProjectionFrame& frame,
                                  const ComplexMatrix& X, const ComplexMatrix& Y) {
  check_same_rank(point.t, frame);
  Complex sum{};
  for (std::size_t i = 0; i < frame.dim(); ++i)
    sum += static_cast<double>(h_function(point.x, point.z, point.t, i)) * tau(frame, i, X, Y);
  return sum;
}

ConnectiveData weyl_connective_data() {
  return {
      CoverKind::XT,
      [](const CoverLift& lift, const BasePoint& at, const ComplexMatrix& X, const ComplexMatrix& Y) {
        const auto& x = std::get<XtLift>(lift);
        check_covers(x, at.t);
        return weyl_curving(x, at.frame, X, Y);
      },
      [](const CoverLift& a, const CoverLift& b, const BasePoint& at, const ComplexMatrix& X,
         const ComplexMatrix& Y) {
        const auto& x = std::get<XtLift>(a);
        check_covers(x, at.t);
        return weyl_curvature(x, std::get<XtLift>(b), at.frame, X, Y);
      },
      FormValue(3, [](const BasePoint& at, std::span<const ProductTangent> v) {
        return weyl_three_curvature(at, v[0], v[1], v[2]);
      }),
  };
}

ConnectiveData basic_connective_data() {
  return {
      CoverKind::YT,
      [](const CoverLift& lift, const BasePoint& at, const ComplexMatrix& X, const ComplexMatrix& Y) {
        return basic_curving_long(YtPoint(std::get<ZPoint>(lift), at.t), at.frame, X, Y);
      },
      [](const CoverLift& a, const CoverLift& b, const BasePoint& at, const ComplexMatrix& X,
         const ComplexMatrix& Y) {
        return basic_curvature(std::get<ZPoint>(a), std::get<ZPoint>(b), at.t, at.frame, X, Y);
      },
      FormValue(3, [](const BasePoint& at, std::span<const ProductTangent> v) {
        return basic_three_curvature_long(at, v[0], v[1], v[2]);
      }),
  };
}

double curving_defect(const ConnectiveData& data, const CoverLift& a, const CoverLift& b, const BasePoint& at,
                      const ComplexMatrix& X, const ComplexMatrix& Y) {
  // delta(f)(a, b) = f(b) - f(a)
  const Complex delta_f = data.curving(b, at, X, Y) - data.curving(a, at, X, Y);
  return std::abs(delta_f - data.curvature(a, b, at, X, Y));
}

}  // namespace weylgerbe
