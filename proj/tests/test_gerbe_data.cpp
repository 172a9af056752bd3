#include <doctest.h>

#include <array>

#include "oracles.hpp"
#include "weylgerbe/gerbe_data.hpp"
#include "weylgerbe/sampling.hpp"

using namespace weylgerbe;
using oracle::kI;
using oracle::kPi;

namespace {

XtLift lift2(double a) {
  RealVector v(2);
  v << a, -a;
  return XtLift(v);
}

struct Fixture {
  XtLift x;
  TorusPoint t;
  ProjectionFrame frame;
  ComplexMatrix X, Y;
  ZPoint z;
};

Fixture sample(Sampler& rng, std::size_t n) {
  XtLift x = rng.xt_lift(n);
  TorusPoint t = project_xt(x);
  const ZPoint z = rng.z_off_spectrum(t);
  return {std::move(x), std::move(t), rng.frame(n), rng.flag_tangent(n), rng.flag_tangent(n), z};
}

// beta along the chart s -> (t exp(2 pi i sum s_j a_j), g exp(sum s_j X_j)),
// evaluated on coordinate fields with dP taken numerically.
struct BetaChart {
  TorusPoint t;
  ComplexMatrix g;
  std::array<RealVector, 3> a;
  std::array<ComplexMatrix, 3> X;

  ComplexMatrix P(std::size_t k, const Eigen::Vector3d& s) const {
    ComplexMatrix S = ComplexMatrix::Zero(g.rows(), g.cols());
    for (int j = 0; j < 3; ++j) S += s(j) * X[static_cast<std::size_t>(j)];
    const ComplexMatrix h = g * oracle::expm(S);
    const auto c = static_cast<Eigen::Index>(k);
    return h.col(c) * h.col(c).adjoint();
  }

  Complex p(std::size_t k, const Eigen::Vector3d& s) const {
    double phase = 0.0;
    for (int j = 0; j < 3; ++j) phase += s(j) * a[static_cast<std::size_t>(j)](static_cast<Eigen::Index>(k));
    return t.p(k) * std::polar(1.0, 2 * kPi * phase);
  }

  ComplexMatrix dP(std::size_t k, int dir, const Eigen::Vector3d& s) const {
    return oracle::derivative(
        [&](double h) {
          Eigen::Vector3d q = s;
          q(dir) += h;
          return P(k, q);
        },
        1e-4);
  }

  Complex beta(int u, int v, const Eigen::Vector3d& s) const {
    const std::size_t n = t.dim();
    Complex sum{};
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        if (i == k) continue;
        const ComplexMatrix Pi = P(i, s), du = dP(k, u, s), dv = dP(k, v, s);
        sum += p(i, s) / p(k, s) * ((Pi * du * dv).trace() - (Pi * dv * du).trace());
      }
    return -kI / (4 * kPi) * sum;
  }

  Complex d_beta() const {
    auto outer = [&](int dir, int u, int v) {
      return oracle::derivative(
          [&](double h) {
            Eigen::Vector3d s = Eigen::Vector3d::Zero();
            s(dir) = h;
            return beta(u, v, s);
          },
          1e-3);
    };
    return outer(0, 1, 2) - outer(1, 0, 2) + outer(2, 0, 1);
  }
};

}  // namespace

TEST_CASE("Weyl curving examples") {
  Sampler rng(1);
  const ProjectionFrame f = rng.frame(2);
  const ComplexMatrix X = rng.flag_tangent(2), Y = rng.flag_tangent(2);
  CHECK(weyl_curving(lift2(0.0), f, X, Y) == Complex{});
  const Complex expected = -(1.0 / 8) * (tau(f, 0, X, Y) - tau(f, 1, X, Y));
  CHECK(std::abs(weyl_curving(lift2(1.0 / 8), f, X, Y) - expected) < 1e-15);
}

TEST_CASE("Weyl curvature examples and the delta identity") {
  Sampler rng(2);
  const ProjectionFrame f = rng.frame(2);
  const ComplexMatrix X = rng.flag_tangent(2), Y = rng.flag_tangent(2);
  CHECK(weyl_curvature(lift2(0.3), lift2(0.3), f, X, Y) == Complex{});
  CHECK(std::abs(weyl_curvature(lift2(9.0 / 8), lift2(1.0 / 8), f, X, Y) - (tau(f, 0, X, Y) - tau(f, 1, X, Y))) <
        1e-15);
  CHECK_THROWS_AS(weyl_curvature(lift2(0.3), lift2(0.1), f, X, Y), GerbeError);

  const ConnectiveData data = weyl_connective_data();
  for (int s = 0; s < 100; ++s) {
    Fixture fx = sample(rng, 3);
    const XtLift y = rng.shifted_lift(fx.x);
    const BasePoint at{fx.t, fx.frame};
    CHECK(curving_defect(data, fx.x, y, at, fx.X, fx.Y) < 1e-10);
    // f_c(y) - f_c(x) written out by hand
    const Complex lhs = weyl_curving(y, fx.frame, fx.X, fx.Y) - weyl_curving(fx.x, fx.frame, fx.X, fx.Y);
    CHECK(std::abs(lhs - weyl_curvature(fx.x, y, fx.frame, fx.X, fx.Y)) < 1e-10);
  }
}

TEST_CASE("Weyl three-curvature") {
  Sampler rng(3);
  const BasePoint at{rng.torus_point(3), rng.frame(3)};
  const ComplexMatrix X = rng.flag_tangent(3), Y = rng.flag_tangent(3), Z = rng.flag_tangent(3);
  CHECK(std::abs(weyl_three_curvature(at, ProductTangent::flag(X), ProductTangent::flag(Y), ProductTangent::flag(Z))) <
        1e-15);
  CHECK(weyl_three_curvature(at, ProductTangent::torus(rng.torus_tangent(3)), ProductTangent::torus(rng.torus_tangent(3)),
                             ProductTangent::torus(rng.torus_tangent(3))) == Complex{});
  const RealVector a = rng.torus_tangent(3);
  Complex expected{};
  for (std::size_t i = 0; i < 3; ++i) expected -= a(static_cast<Eigen::Index>(i)) * tau(at.frame, i, X, Y);
  CHECK(std::abs(weyl_three_curvature(at, ProductTangent::torus(a), ProductTangent::flag(X), ProductTangent::flag(Y)) -
                 expected) < 1e-13);
}

TEST_CASE("basic curving at t = diag(i, -i), z = pi") {
  Sampler rng(4);
  Eigen::VectorXcd d(2);
  d << kI, -kI;
  const TorusPoint t(d);
  const YtPoint y(ZPoint(kPi), t);
  const ProjectionFrame f = rng.frame(2);
  const ComplexMatrix X = rng.flag_tangent(2), Y = rng.flag_tangent(2);
  // log_z(i) = i pi/2 and log_z(-i) = -i pi/2, so the long form collapses to -tau_1/2.
  const Complex hand = -0.5 * tau(f, 0, X, Y);
  CHECK(std::abs(basic_curving_long(y, f, X, Y) - hand) < 1e-14);
  CHECK(std::abs(basic_curving_reduced(y, f, X, Y) - hand) < 1e-14);
  CHECK(std::abs(beta_form(t, f, X, Y)) < 1e-14);
  CHECK(std::abs(basic_curving_long(y, f, X, X)) < 1e-14);
}

TEST_CASE("long basic curving is the reduced curving plus beta") {
  Sampler rng(5);
  for (std::size_t n = 2; n <= 4; ++n)
    for (int s = 0; s < 100; ++s) {
      const Fixture fx = sample(rng, n);
      const YtPoint y(fx.z, fx.t);
      CHECK(std::abs(basic_curving_long(y, fx.frame, fx.X, fx.Y) - basic_curving_reduced(y, fx.frame, fx.X, fx.Y) -
                     beta_form(fx.t, fx.frame, fx.X, fx.Y)) < 1e-10);
    }
}

TEST_CASE("delta of the basic curvings is the epsilon-weighted curvature") {
  Sampler rng(6);
  const ConnectiveData data = basic_connective_data();
  for (int s = 0; s < 100; ++s) {
    const Fixture fx = sample(rng, 3);
    const ZPoint w = rng.z_off_spectrum(fx.t);
    const BasePoint at{fx.t, fx.frame};
    CHECK(curving_defect(data, fx.z, w, at, fx.X, fx.Y) < 1e-10);
    const Complex reduced = basic_curving_reduced(YtPoint(w, fx.t), fx.frame, fx.X, fx.Y) -
                            basic_curving_reduced(YtPoint(fx.z, fx.t), fx.frame, fx.X, fx.Y);
    CHECK(std::abs(reduced - basic_curvature(fx.z, w, fx.t, fx.frame, fx.X, fx.Y)) < 1e-10);
  }
}

TEST_CASE("beta for n = 2 reduces to a multiple of tr(P_1 dP_1 dP_1)") {
  Sampler rng(7);
  for (int s = 0; s < 50; ++s) {
    const TorusPoint t = rng.torus_point(2);
    const ProjectionFrame f = rng.frame(2);
    const ComplexMatrix X = rng.flag_tangent(2), Y = rng.flag_tangent(2);
    const Complex p = t.p(0);
    const Complex expected = -kI / (4 * kPi) * (p * p - 1.0 / (p * p)) * tau(f, 0, X, Y);
    CHECK(std::abs(beta_form(t, f, X, Y) - expected) < 1e-13);
  }
}

TEST_CASE("beta vanishes at t = I and pulls back along the block embedding") {
  Sampler rng(8);
  for (std::size_t n = 3; n <= 4; ++n) {
    const ProjectionFrame f = rng.frame(n);
    const ComplexMatrix X = rng.flag_tangent(n), Y = rng.flag_tangent(n);
    CHECK(std::abs(beta_form(TorusPoint::identity(n), f, X, Y)) < 1e-14);

    const SpecialUnitary g2 = rng.special_unitary(2);
    const ComplexMatrix X2 = rng.flag_tangent(2), Y2 = rng.flag_tangent(2);
    ComplexMatrix gn = ComplexMatrix::Identity(n, n), Xn = ComplexMatrix::Zero(n, n), Yn = ComplexMatrix::Zero(n, n);
    gn.topLeftCorner(2, 2) = g2.matrix();
    Xn.topLeftCorner(2, 2) = X2;
    Yn.topLeftCorner(2, 2) = Y2;
    Eigen::VectorXcd d = Eigen::VectorXcd::Ones(static_cast<Eigen::Index>(n));
    const Complex p = rng.unit_complex();
    d(0) = p;
    d(1) = 1.0 / p;
    Eigen::VectorXcd d2(2);
    d2 << p, 1.0 / p;
    CHECK(std::abs(beta_form(TorusPoint(d), make_frame(SpecialUnitary(gn)), Xn, Yn) -
                   beta_form(TorusPoint(d2), make_frame(g2), X2, Y2)) < 1e-13);
  }
}

TEST_CASE("beta pair coefficients") {
  Sampler rng(9);
  const TorusPoint t = rng.torus_point(4);
  const ProjectionFrame f = rng.frame(4);
  const ComplexMatrix X = rng.flag_tangent(4), Y = rng.flag_tangent(4);
  Complex sum{};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) sum += beta_pair_coefficient(t, i, j) * tr_form2(f, j, i, i, X, Y);
  CHECK(std::abs(sum - beta_form(t, f, X, Y)) < 1e-12);
  CHECK_THROWS_AS(beta_pair_coefficient(t, 2, 1), GerbeError);
  CHECK_THROWS_AS(beta_pair_coefficient(t, 1, 4), GerbeError);
}

TEST_CASE("analytic d(beta) matches nested finite differences") {
  Sampler rng(10);
  for (std::size_t n = 2; n <= 3; ++n)
    for (int s = 0; s < 3; ++s) {
      BetaChart chart{rng.torus_point(n), rng.special_unitary(n).matrix(), {}, {}};
      std::array<ProductTangent, 3> u;
      for (std::size_t j = 0; j < 3; ++j) {
        chart.a[j] = rng.torus_tangent(n);
        chart.X[j] = rng.flag_tangent(n);
        u[j] = ProductTangent::mixed(chart.a[j], chart.X[j]);
      }
      const BasePoint at{chart.t, make_frame(SpecialUnitary(chart.g))};
      const Complex analytic = beta_exterior_derivative(at, u[0], u[1], u[2]);
      CHECK(std::abs(analytic - chart.d_beta()) < 1e-6);
    }
}

TEST_CASE("long three-curvature is the reduced one plus d(beta)") {
  Sampler rng(11);
  for (std::size_t n = 2; n <= 3; ++n)
    for (int s = 0; s < 100; ++s) {
      const BasePoint at{rng.torus_point(n), rng.frame(n)};
      const ProductTangent u = rng.product_tangent(n), v = rng.product_tangent(n), w = rng.product_tangent(n);
      CHECK(std::abs(basic_three_curvature_long(at, u, v, w) - basic_three_curvature_reduced(at, u, v, w) -
                     beta_exterior_derivative(at, u, v, w)) < 1e-8);
      CHECK(std::abs(basic_three_curvature_long(at, u, u, w)) < 1e-12);
    }
  Sampler r2(12);
  const BasePoint at{r2.torus_point(3), r2.frame(3)};
  CHECK(basic_three_curvature_long(at, ProductTangent::torus(r2.torus_tangent(3)),
                                   ProductTangent::torus(r2.torus_tangent(3)),
                                   ProductTangent::torus(r2.torus_tangent(3))) == Complex{});
}

TEST_CASE("trivialising curvature F_R") {
  Sampler rng(13);
  const ProjectionFrame f = rng.frame(2);
  const ComplexMatrix X = rng.flag_tangent(2), Y = rng.flag_tangent(2);
  const FiberPairXY zero(lift2(0.0), ZPoint(2.0), TorusPoint::identity(2));
  CHECK(trivializing_curvature_FR(zero, f, X, Y) == Complex{});
  const XtLift x = lift2(9.0 / 8);
  const FiberPairXY p(x, ZPoint(kPi), project_xt(x));
  CHECK(std::abs(trivializing_curvature_FR(p, f, X, Y) - (tau(f, 0, X, Y) - tau(f, 1, X, Y))) < 1e-15);
}

TEST_CASE("difference of curvings is F_R plus beta") {
  Sampler rng(14);
  for (std::size_t n = 2; n <= 3; ++n)
    for (int s = 0; s < 100; ++s) {
      Fixture fx = sample(rng, n);
      const XtLift x = rng.shifted_lift(fx.x);
      const FiberPairXY point(x, fx.z, fx.t);
      const Complex lhs = basic_curving_long(YtPoint(fx.z, fx.t), fx.frame, fx.X, fx.Y) -
                          weyl_curving(x, fx.frame, fx.X, fx.Y);
      const Complex rhs = trivializing_curvature_FR(point, fx.frame, fx.X, fx.Y) + beta_form(fx.t, fx.frame, fx.X, fx.Y);
      CHECK(std::abs(lhs - rhs) < 1e-9);
    }
}

TEST_CASE("connective data are conjugation invariant") {
  Sampler rng(15);
  for (int s = 0; s < 50; ++s) {
    const Fixture fx = sample(rng, 3);
    const ProjectionFrame moved = make_frame(rng.special_unitary(3) * fx.frame.witness());
    CHECK(std::abs(beta_form(fx.t, moved, fx.X, fx.Y) - beta_form(fx.t, fx.frame, fx.X, fx.Y)) < 1e-12);
    CHECK(std::abs(weyl_curving(fx.x, moved, fx.X, fx.Y) - weyl_curving(fx.x, fx.frame, fx.X, fx.Y)) < 1e-12);
  }
}
