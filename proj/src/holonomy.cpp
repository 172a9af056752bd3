#include "weylgerbe/holonomy.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include <exception>

#include "weylgerbe/gerbe_data.hpp"

namespace weylgerbe {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr Complex kI(0.0, 1.0);

void check_chart(const SphereChart& c) {
  check_rank(c.n);
  if (!(c.theta >= 0.0 && c.theta <= kPi) || !(c.phi >= 0.0 && c.phi < 2.0 * kPi))
    throw GerbeError(ErrorKind::ChartOutOfRange, "sphere chart outside [0, pi] x [0, 2 pi)");
}

ComplexMatrix embed(const Eigen::Matrix2cd& block, std::size_t n, bool identity_rest) {
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  if (identity_rest) m.setIdentity();
  m.topLeftCorner(2, 2) = block;
  return m;
}

Complex node_value(const FormValue& form, const QuadratureNode& node, const TorusPoint& t0) {
  const auto [Xt, Xp] = sphere_chart_tangents(node.chart);
  const BasePoint at{t0, sphere_frame(node.chart)};
  const std::array<ProductTangent, 2> v{ProductTangent::flag(Xt), ProductTangent::flag(Xp)};
  return node.weight * form(at, v);
}

}  // namespace

std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int order) {
  if (order < 1) throw GerbeError(ErrorKind::ChartOutOfRange, "quadrature order must be positive");
  const auto m = static_cast<std::size_t>(order);
  std::vector<double> x(m), w(m);
  for (std::size_t i = 0; i < (m + 1) / 2; ++i) {
    double z = std::cos(kPi * (static_cast<double>(i) + 0.75) / (static_cast<double>(m) + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = 0.0;
      for (std::size_t j = 0; j < m; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
      }
      dp = static_cast<double>(m) * (z * p0 - p1) / (z * z - 1.0);
      const double step = p0 / dp;
      z -= step;
      if (std::abs(step) < 1e-15) break;
    }
    x[i] = -z;
    x[m - 1 - i] = z;
    w[i] = w[m - 1 - i] = 2.0 / ((1.0 - z * z) * dp * dp);
  }
  return {x, w};
}

QuadratureMesh make_sphere_mesh(std::size_t n, int order) {
  check_rank(n);
  const auto [x, w] = gauss_legendre(order);
  const int nphi = 2 * order;
  const double dphi = 2.0 * kPi / nphi;
  QuadratureMesh mesh;
  mesh.order = order;
  mesh.nodes.reserve(x.size() * static_cast<std::size_t>(nphi));
  for (std::size_t k = 0; k < x.size(); ++k) {
    const double theta = std::acos(x[k]);
    for (int j = 0; j < nphi; ++j)
      mesh.nodes.push_back({{theta, j * dphi, n}, w[k] * dphi / std::sin(theta)});
  }
  return mesh;
}

double mesh_area(const QuadratureMesh& mesh) {
  double area = 0.0;
  for (const QuadratureNode& node : mesh.nodes) area += node.weight * std::sin(node.chart.theta);
  return area;
}

SpecialUnitary sphere_unitary(const SphereChart& chart) {
  check_chart(chart);
  const double c = std::cos(chart.theta / 2.0), s = std::sin(chart.theta / 2.0);
  const Complex e = std::polar(1.0, chart.phi);
  Eigen::Matrix2cd u;
  u << c, -std::conj(e) * s, e * s, c;
  return SpecialUnitary(embed(u, chart.n, true));
}

ProjectionFrame sphere_frame(const SphereChart& chart) { return make_frame(sphere_unitary(chart)); }

std::pair<ComplexMatrix, ComplexMatrix> sphere_chart_tangents(const SphereChart& chart) {
  check_chart(chart);
  const double c = std::cos(chart.theta / 2.0), s = std::sin(chart.theta / 2.0);
  const Complex e = std::polar(1.0, chart.phi);
  Eigen::Matrix2cd u, du_theta, du_phi;
  u << c, -std::conj(e) * s, e * s, c;
  du_theta << -0.5 * s, -0.5 * std::conj(e) * c, 0.5 * e * c, -0.5 * s;
  du_phi << 0.0, kI * std::conj(e) * s, kI * e * s, 0.0;
  const Eigen::Matrix2cd Xt = u.adjoint() * du_theta;
  const Eigen::Matrix2cd Xp = u.adjoint() * du_phi;
  return {off_diagonal(embed(Xt, chart.n, false)), off_diagonal(embed(Xp, chart.n, false))};
}

Complex integrate_2form(const FormValue& form, const QuadratureMesh& mesh, const TorusPoint& t0) {
  if (form.degree() != 2) throw GerbeError(ErrorKind::DegreeMismatch, "surface integral needs a 2-form");
  const auto count = static_cast<std::ptrdiff_t>(mesh.nodes.size());
  std::vector<Complex> values(mesh.nodes.size());
  // Exceptions may not cross the parallel region; record and rethrow.
  std::exception_ptr failure;
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t k = 0; k < count; ++k) {
    try {
      values[static_cast<std::size_t>(k)] = node_value(form, mesh.nodes[static_cast<std::size_t>(k)], t0);
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  Complex sum{};
  for (const Complex v : values) sum += v;
  return sum;
}

Complex integrate_2form_serial(const FormValue& form, const QuadratureMesh& mesh, const TorusPoint& t0) {
  if (form.degree() != 2) throw GerbeError(ErrorKind::DegreeMismatch, "surface integral needs a 2-form");
  Complex sum{};
  for (const QuadratureNode& node : mesh.nodes) sum += node_value(form, node, t0);
  return sum;
}

TorusPoint sigma_torus_point(std::size_t n) {
  check_rank(n);
  Eigen::VectorXcd diag = Eigen::VectorXcd::Ones(static_cast<Eigen::Index>(n));
  diag(0) = std::polar(1.0, kPi / 4.0);
  diag(1) = std::polar(1.0, -kPi / 4.0);
  return TorusPoint(std::move(diag));
}

Complex chern_number(std::size_t k, const QuadratureMesh& mesh) {
  if (mesh.nodes.empty()) return {};
  const std::size_t n = mesh.nodes.front().chart.n;
  return kI / (2.0 * kPi) * integrate_2form(trace_form(k, k, k), mesh, sigma_torus_point(n));
}

Complex integrate_beta_sigma(std::size_t n, const QuadratureMesh& mesh) {
  check_rank(n);
  for (const QuadratureNode& node : mesh.nodes)
    if (node.chart.n != n) throw GerbeError(ErrorKind::RankOutOfRange, "mesh built for another rank");
  return integrate_2form(beta_form_value(), mesh, sigma_torus_point(n));
}

Complex beta_sigma_closed_form() {
  const Complex p = std::polar(1.0, kPi / 4.0);
  const Complex tau_integral = -2.0 * kPi * kI * -1.0;  // (i / 2 pi) * integral = -1
  return -kI / (4.0 * kPi) * (p * p - 1.0 / (p * p)) * tau_integral;
}

Complex holonomy_ratio(std::size_t n, const QuadratureMesh& mesh) {
  return std::exp(integrate_beta_sigma(n, mesh));
}

double distance_to_2pi_i_Z(Complex z) {
  const double k = std::round(z.imag() / (2.0 * kPi));
  return std::abs(z - Complex(0.0, 2.0 * kPi * k));
}

}  // namespace weylgerbe
