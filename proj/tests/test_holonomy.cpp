#include <doctest.h>

#include <array>

#include "oracles.hpp"
#include "weylgerbe/gerbe_data.hpp"
#include "weylgerbe/holonomy.hpp"

using namespace weylgerbe;
using oracle::kI;
using oracle::kPi;

TEST_CASE("Gauss-Legendre rule") {
  const auto [x3, w3] = gauss_legendre(3);
  CHECK(x3[0] == doctest::Approx(-std::sqrt(0.6)).epsilon(1e-14));
  CHECK(x3[1] == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(w3[0] == doctest::Approx(5.0 / 9).epsilon(1e-14));
  CHECK(w3[1] == doctest::Approx(8.0 / 9).epsilon(1e-14));

  const auto [x, w] = gauss_legendre(16);
  for (int p = 0; p < 32; ++p) {
    double sum = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) sum += w[k] * std::pow(x[k], p);
    const double exact = p % 2 == 0 ? 2.0 / (p + 1) : 0.0;
    CHECK(std::abs(sum - exact) < 1e-14);
  }
  CHECK_THROWS_AS(gauss_legendre(0), GerbeError);
}

TEST_CASE("sphere mesh calibrates to 4 pi and avoids the poles") {
  for (int order : {8, 32, 64}) {
    const QuadratureMesh mesh = make_sphere_mesh(3, order);
    CHECK(mesh.nodes.size() == static_cast<std::size_t>(2 * order * order));
    CHECK(std::abs(mesh_area(mesh) - 4 * kPi) < 1e-10);
    for (const QuadratureNode& node : mesh.nodes) {
      CHECK(node.weight > 0.0);
      CHECK(node.chart.theta > 0.0);
      CHECK(node.chart.theta < kPi);
    }
  }
}

TEST_CASE("sphere_frame examples") {
  const ProjectionFrame eq = sphere_frame({kPi / 2, 0.0, 3});
  ComplexMatrix expected = ComplexMatrix::Zero(3, 3);
  expected.topLeftCorner(2, 2).setConstant(0.5);
  CHECK(oracle::max_abs(eq.P(0) - expected) < 1e-15);
  CHECK(oracle::max_abs(eq.P(2) - diagonal_unit(3, 2)) < 1e-15);

  const ProjectionFrame north = sphere_frame({1e-9, 1.0, 2});
  CHECK(oracle::max_abs(north.P(0) - diagonal_unit(2, 0)) < 1e-9);

  CHECK_THROWS_AS(sphere_frame({-0.1, 0.0, 2}), GerbeError);
  CHECK_THROWS_AS(sphere_frame({1.0, 2 * kPi, 2}), GerbeError);
  CHECK_THROWS_AS(sphere_frame({1.0, 0.0, 9}), GerbeError);
}

TEST_CASE("chart tangents push forward the coordinate fields") {
  for (const auto& [theta, phi] : std::array<std::pair<double, double>, 4>{{{0.3, 0.2}, {1.1, 2.5}, {2.0, 4.0}, {2.9, 6.0}}}) {
    const SphereChart c{theta, phi, 4};
    const auto [Xt, Xp] = sphere_chart_tangents(c);
    const ProjectionFrame f = sphere_frame(c);
    for (std::size_t i = 0; i < 4; ++i) {
      auto P_at = [&](double th, double ph) { return sphere_frame({th, ph, 4}).P(i); };
      const ComplexMatrix fd_t = oracle::derivative([&](double h) { return P_at(theta + h, phi); }, 1e-4);
      const ComplexMatrix fd_p = oracle::derivative([&](double h) { return P_at(theta, phi + h); }, 1e-4);
      CHECK(oracle::max_abs(dP(f, i, Xt) - fd_t) < 1e-9);
      CHECK(oracle::max_abs(dP(f, i, Xp) - fd_p) < 1e-9);
      if (i >= 2) {
        CHECK(oracle::max_abs(dP(f, i, Xt)) == 0.0);
        CHECK(oracle::max_abs(dP(f, i, Xp)) == 0.0);
      }
    }
  }
}

TEST_CASE("Chern numbers of the tautological projections") {
  const QuadratureMesh mesh = make_sphere_mesh(4, 32);
  CHECK(std::abs(chern_number(0, mesh) + 1.0) < 1e-8);
  CHECK(std::abs(chern_number(1, mesh) - 1.0) < 1e-8);
  CHECK(std::abs(chern_number(2, mesh)) < 1e-12);
  CHECK(std::abs(chern_number(3, mesh)) < 1e-12);
}

TEST_CASE("Chern number by a finite-difference Riemann sum") {
  // Midpoint rule in (theta, phi) with dP from differences of the chart.
  const int nt = 120, np = 60;
  Complex integral{};
  for (int a = 0; a < nt; ++a) {
    const double theta = (a + 0.5) * kPi / nt;
    for (int b = 0; b < np; ++b) {
      const double phi = (b + 0.5) * 2 * kPi / np;
      auto P = [](double th, double ph) { return sphere_frame({th, ph, 2}).P(0); };
      const ComplexMatrix dt = oracle::derivative([&](double h) { return P(theta + h, phi); }, 1e-4);
      const ComplexMatrix dp = oracle::derivative([&](double h) { return P(theta, phi + h); }, 1e-4);
      const ComplexMatrix P0 = P(theta, phi);
      integral += ((P0 * dt * dp).trace() - (P0 * dp * dt).trace()) * (kPi / nt) * (2 * kPi / np);
    }
  }
  CHECK(std::abs(kI / (2 * kPi) * integral + 1.0) < 1e-3);
}

TEST_CASE("integrate_2form basics") {
  const QuadratureMesh mesh = make_sphere_mesh(2, 16);
  const TorusPoint t0 = sigma_torus_point(2);
  CHECK(integrate_2form(FormValue::zero(2), mesh, t0) == Complex{});
  CHECK_THROWS_AS(integrate_2form(FormValue::zero(3), mesh, t0), GerbeError);
  CHECK_THROWS_AS(integrate_2form_serial(FormValue::zero(1), mesh, t0), GerbeError);

  const FormValue failing(2, [](const BasePoint&, std::span<const ProductTangent>) -> Complex {
    throw GerbeError(ErrorKind::InvalidTangent, "boom");
  });
  CHECK_THROWS_AS(integrate_2form(failing, mesh, t0), GerbeError);
}

TEST_CASE("parallel and serial quadrature agree exactly") {
  const QuadratureMesh mesh = make_sphere_mesh(3, 24);
  const TorusPoint t0 = sigma_torus_point(3);
  for (const FormValue& form : {beta_form_value(), trace_form(0, 0, 0), trace_form(1, 0, 0)})
    CHECK(integrate_2form(form, mesh, t0) == integrate_2form_serial(form, mesh, t0));
}

TEST_CASE("beta integral over Sigma_n") {
  const Complex two = integrate_beta_sigma(2, make_sphere_mesh(2, 32));
  CHECK(std::abs(two.real()) < 1e-8);
  CHECK(std::abs(two - beta_sigma_closed_form()) < 1e-8);
  CHECK(std::abs(beta_sigma_closed_form() - kI) < 1e-15);
  for (std::size_t n = 3; n <= 4; ++n) CHECK(std::abs(integrate_beta_sigma(n, make_sphere_mesh(n, 32)) - two) < 1e-8);
  CHECK(std::abs(integrate_beta_sigma(2, make_sphere_mesh(2, 64)) - two) < 1e-8);
  CHECK_THROWS_AS(integrate_beta_sigma(3, make_sphere_mesh(2, 8)), GerbeError);
}

TEST_CASE("holonomy ratio") {
  for (std::size_t n = 2; n <= 3; ++n) {
    const Complex r = holonomy_ratio(n, make_sphere_mesh(n, 32));
    CHECK(std::abs(std::abs(r) - 1.0) < 1e-8);
    CHECK(std::abs(r - 1.0) > 0.1);
    CHECK(std::abs(r - std::exp(kI)) < 1e-12);
  }
  CHECK(std::exp(integrate_2form(FormValue::zero(2), make_sphere_mesh(2, 8), sigma_torus_point(2))) == Complex(1.0));
}

TEST_CASE("distance to 2 pi i Z") {
  CHECK(distance_to_2pi_i_Z(Complex(0, 2 * kPi)) < 1e-15);
  CHECK(distance_to_2pi_i_Z(Complex(0, -4 * kPi)) < 1e-15);
  CHECK(distance_to_2pi_i_Z(kI) == doctest::Approx(1.0));
  CHECK(distance_to_2pi_i_Z(1.0 / (kPi * kI)) == doctest::Approx(1.0 / kPi));
  CHECK(distance_to_2pi_i_Z(Complex(0.5, 2 * kPi)) == doctest::Approx(0.5));
}
