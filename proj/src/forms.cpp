#include "weylgerbe/forms.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

namespace weylgerbe {

namespace {

constexpr Complex kI(0.0, 1.0);

// Signed permutations of three slots.
constexpr std::array<std::pair<std::array<int, 3>, int>, 6> kS3{{
    {{0, 1, 2}, +1},
    {{1, 2, 0}, +1},
    {{2, 0, 1}, +1},
    {{0, 2, 1}, -1},
    {{2, 1, 0}, -1},
    {{1, 0, 2}, -1},
}};

void check_index(std::size_t i, std::size_t n) {
  if (i >= n) throw GerbeError(ErrorKind::IndexError, "frame index " + std::to_string(i) + " out of range");
}

void check_shape(const ComplexMatrix& X, std::size_t n) {
  if (static_cast<std::size_t>(X.rows()) != n || static_cast<std::size_t>(X.cols()) != n)
    throw GerbeError(ErrorKind::InvalidTangent, "tangent has the wrong shape");
}

}  // namespace

ProductTangent ProductTangent::flag(const ComplexMatrix& X) {
  check_flag_tangent(X);
  const auto n = X.rows();
  return {RealVector::Zero(n), X, RealVector::Zero(n), 0.0};
}

ProductTangent ProductTangent::torus(const RealVector& a) {
  TorusTangent checked(a);
  const auto n = a.size();
  return {checked.a, ComplexMatrix::Zero(n, n), RealVector::Zero(n), 0.0};
}

ProductTangent ProductTangent::mixed(const RealVector& a, const ComplexMatrix& X) {
  TorusTangent checked(a);
  check_flag_tangent(X);
  return {checked.a, X, RealVector::Zero(a.size()), 0.0};
}

FormValue::FormValue(int degree, Evaluator eval) : degree_(degree), eval_(std::move(eval)) {
  if (degree_ < 1 || degree_ > 3) throw GerbeError(ErrorKind::DegreeMismatch, "form degree must be 1, 2 or 3");
}

Complex FormValue::operator()(const BasePoint& at, std::span<const ProductTangent> tangents) const {
  if (tangents.size() != static_cast<std::size_t>(degree_))
    throw GerbeError(ErrorKind::DegreeMismatch, "a degree " + std::to_string(degree_) + " form got " +
                                                    std::to_string(tangents.size()) + " tangents");
  return eval_(at, tangents);
}

FormValue FormValue::zero(int degree) {
  return FormValue(degree, [](const BasePoint&, std::span<const ProductTangent>) { return Complex{}; });
}

ComplexMatrix dP(const ProjectionFrame& frame, std::size_t i, const ComplexMatrix& X) {
  const std::size_t n = frame.dim();
  check_index(i, n);
  check_shape(X, n);
  check_flag_tangent(X);
  const ComplexMatrix& g = frame.witness().matrix();
  // [X, O_i] keeps only column i of X and row i of X.
  ComplexMatrix comm = ComplexMatrix::Zero(n, n);
  const auto ii = static_cast<Eigen::Index>(i);
  comm.col(ii) += X.col(ii);
  comm.row(ii) -= X.row(ii);
  return g * comm * g.adjoint();
}

Complex tr_form2(const ProjectionFrame& frame, std::size_t i, std::size_t j, std::size_t k,
                 const ComplexMatrix& X, const ComplexMatrix& Y) {
  check_index(i, frame.dim());
  const ComplexMatrix& Pi = frame.P(i);
  const ComplexMatrix djX = dP(frame, j, X), djY = dP(frame, j, Y);
  const ComplexMatrix dkX = dP(frame, k, X), dkY = dP(frame, k, Y);
  return (Pi * djX * dkY).trace() - (Pi * djY * dkX).trace();
}

Complex tr_form3_dPPP(const ProjectionFrame& frame, std::size_t i, std::size_t j, std::size_t k,
                      const ComplexMatrix& X, const ComplexMatrix& Y, const ComplexMatrix& Z) {
  const std::array<const ComplexMatrix*, 3> W{&X, &Y, &Z};
  std::array<std::array<ComplexMatrix, 3>, 3> d;  // d[slot][tangent]
  const std::array<std::size_t, 3> idx{i, j, k};
  for (int s = 0; s < 3; ++s)
    for (int w = 0; w < 3; ++w) d[s][w] = dP(frame, idx[s], *W[w]);
  Complex sum{};
  for (const auto& [perm, sign] : kS3)
    sum += static_cast<double>(sign) * (d[0][perm[0]] * d[1][perm[1]] * d[2][perm[2]]).trace();
  return sum;
}

Complex torus_oneform_dlogp(std::size_t i, const ProductTangent& v) {
  check_index(i, static_cast<std::size_t>(v.a.size()));
  const auto ii = static_cast<Eigen::Index>(i);
  const double xdot = v.xdot.size() > ii ? v.xdot(ii) : 0.0;
  return 2.0 * std::numbers::pi * kI * (v.a(ii) + xdot);
}

FormValue dlogp_form(std::size_t i) {
  return FormValue(1, [i](const BasePoint&, std::span<const ProductTangent> v) {
    return torus_oneform_dlogp(i, v[0]);
  });
}

FormValue trace_form(std::size_t i, std::size_t j, std::size_t k) {
  return FormValue(2, [i, j, k](const BasePoint& at, std::span<const ProductTangent> v) {
    return tr_form2(at.frame, i, j, k, v[0].X, v[1].X);
  });
}

FormValue wedge_1_2(FormValue alpha, FormValue beta) {
  if (alpha.degree() != 1 || beta.degree() != 2)
    throw GerbeError(ErrorKind::DegreeMismatch, "wedge_1_2 needs a 1-form and a 2-form");
  return FormValue(3, [alpha = std::move(alpha), beta = std::move(beta)](
                          const BasePoint& at, std::span<const ProductTangent> v) {
    const std::array<ProductTangent, 2> vw{v[1], v[2]}, uw{v[0], v[2]}, uv{v[0], v[1]};
    return alpha(at, v.subspan(0, 1)) * beta(at, vw) - alpha(at, v.subspan(1, 1)) * beta(at, uw) +
           alpha(at, v.subspan(2, 1)) * beta(at, uv);
  });
}

Complex basic_threeform_nu(const SpecialUnitary& g, const ComplexMatrix& X, const ComplexMatrix& Y,
                           const ComplexMatrix& Z) {
  const std::array<const ComplexMatrix*, 3> W{&X, &Y, &Z};
  for (const ComplexMatrix* m : W) {
    check_shape(*m, g.dim());
    if ((*m + m->adjoint()).cwiseAbs().maxCoeff() > kAlgTol || std::abs(m->trace()) > kAlgTol)
      throw GerbeError(ErrorKind::InvalidTangent, "nu needs skew-hermitian traceless tangents");
  }
  Complex sum{};
  for (const auto& [perm, sign] : kS3)
    sum += static_cast<double>(sign) * (*W[perm[0]] * *W[perm[1]] * *W[perm[2]]).trace();
  return -sum / (24.0 * std::numbers::pi * std::numbers::pi);
}

}  // namespace weylgerbe
