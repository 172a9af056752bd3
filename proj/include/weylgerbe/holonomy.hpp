#pragma once

// Quadrature of 2-forms over the sphere Sigma_n = {t0} x S^2 inside
// T x SU(n)/T, where S^2 = SU(2)/T sits in SU(n)/T through the block
// embedding g -> diag(g, I_{n-2}).
//
// The sphere is parametrised by (theta, phi) with P_1 the projection onto
// (cos(theta/2), e^{i phi} sin(theta/2)), and integrals are taken over
// d(theta) d(phi) in that order. With this orientation
// (i / 2 pi) * integral of tr(P_1 dP_1 dP_1) = -1.

#include <utility>
#include <vector>

#include "weylgerbe/forms.hpp"

namespace weylgerbe {

struct SphereChart {
  double theta;  // [0, pi]
  double phi;    // [0, 2 pi)
  std::size_t n;
};

struct QuadratureNode {
  SphereChart chart;
  double weight;  // includes 1/sin(theta) from the substitution x = cos(theta)
};

struct QuadratureMesh {
  std::vector<QuadratureNode> nodes;
  int order = 0;
};

/// Gauss-Legendre nodes and weights on [-1, 1].
std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int order);

/// Product mesh: `order` Gauss-Legendre nodes in cos(theta) times 2*order
/// trapezoid nodes in phi. Poles are never nodes.
QuadratureMesh make_sphere_mesh(std::size_t n, int order);

/// Sum of weight * sin(theta); equals the sphere area 4 pi.
double mesh_area(const QuadratureMesh& mesh);

/// The SU(2) element u(theta, phi) embedded block-diagonally in SU(n).
SpecialUnitary sphere_unitary(const SphereChart& chart);

ProjectionFrame sphere_frame(const SphereChart& chart);

/// Horizontal pushforwards of d/dtheta and d/dphi, as zero-diagonal
/// skew-hermitian matrices (off-diagonal parts of u^dagger du).
std::pair<ComplexMatrix, ComplexMatrix> sphere_chart_tangents(const SphereChart& chart);

/// Integral of a 2-form over {t0} x S^2. Node evaluations run in parallel and
/// are summed in node order, so the result does not depend on thread count.
Complex integrate_2form(const FormValue& form, const QuadratureMesh& mesh, const TorusPoint& t0);

/// Single-threaded reference for integrate_2form.
Complex integrate_2form_serial(const FormValue& form, const QuadratureMesh& mesh, const TorusPoint& t0);

/// t0 = diag(e^{i pi/4}, e^{-i pi/4}, 1, ..., 1).
TorusPoint sigma_torus_point(std::size_t n);

/// (i / 2 pi) * integral of tr(P_k dP_k dP_k) over {t0} x S^2.
Complex chern_number(std::size_t k, const QuadratureMesh& mesh);

/// Integral of beta_n over Sigma_n.
Complex integrate_beta_sigma(std::size_t n, const QuadratureMesh& mesh);

/// Closed form of the beta integral over Sigma_n: for n = 2,
/// beta = -i/(4 pi) (p^2 - p^{-2}) tr(P_1 dP_1 dP_1), and the Chern number -1
/// fixes the integral of tr(P_1 dP_1 dP_1) at 2 pi i. With p = e^{i pi/4} this is i.
Complex beta_sigma_closed_form();

/// exp(integral of beta_n over Sigma_n): the ratio of the two gerbes' holonomies.
Complex holonomy_ratio(std::size_t n, const QuadratureMesh& mesh);

/// Distance from z to the nearest point of 2 pi i Z.
double distance_to_2pi_i_Z(Complex z);

}  // namespace weylgerbe
