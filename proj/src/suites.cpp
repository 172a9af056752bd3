#include "weylgerbe/suites.hpp"

#include <array>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

#include "weylgerbe/base_spaces.hpp"
#include "weylgerbe/cech.hpp"
#include "weylgerbe/forms.hpp"
#include "weylgerbe/gerbe_data.hpp"
#include "weylgerbe/holonomy.hpp"
#include "weylgerbe/sampling.hpp"

namespace weylgerbe {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr Complex kI(0.0, 1.0);
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

constexpr int kFormSamples = 100;
constexpr int kCocycleSamples = 200;
constexpr int kRootSamples = 50;

// Largest-modulus sample; a NaN is sticky so it cannot be hidden by later samples.
struct Worst {
  Complex v{};
  void add(Complex c) {
    if (std::isnan(std::abs(v))) return;
    if (!(std::abs(c) <= std::abs(v))) v = c;
  }
};

struct Outcome {
  Complex value;
  bool pass;
};

Outcome within(Complex residual, double tol) { return {residual, std::abs(residual) <= tol}; }

class Recorder {
 public:
  Recorder(std::vector<CheckResult>& out, std::string prefix) : out_(out), prefix_(std::move(prefix)) {}

  void check(const std::string& id, const std::string& anchor, double tol, const std::function<Outcome()>& body) {
    try {
      const Outcome o = body();
      push(id, anchor, o.pass ? CheckStatus::Pass : CheckStatus::Fail, o.value, tol);
    } catch (const GerbeError&) {
      push(id, anchor, CheckStatus::Fail, Complex(kNaN, kNaN), tol);
    }
  }

  void residual(const std::string& id, const std::string& anchor, double tol, const std::function<Complex()>& body) {
    check(id, anchor, tol, [&] { return within(body(), tol); });
  }

  void skip(const std::string& id, const std::string& anchor, double tol) {
    push(id, anchor, CheckStatus::Skip, {}, tol);
  }

 private:
  void push(const std::string& id, const std::string& anchor, CheckStatus s, Complex v, double tol) {
    out_.push_back({prefix_ + id, anchor, s, v, tol});
  }

  std::vector<CheckResult>& out_;
  std::string prefix_;
};

Complex max_entry(const ComplexMatrix& m) {
  Worst w;
  for (Eigen::Index c = 0; c < m.cols(); ++c)
    for (Eigen::Index r = 0; r < m.rows(); ++r) w.add(m(r, c));
  return w.v;
}

// Collected coefficient of tr(P_j dP_i dP_i) in the reduced decomposition of beta.
Complex reduced_coefficient(const TorusPoint& t, std::size_t i, std::size_t j) {
  const std::size_t last = t.dim() - 1;
  return beta_pair_coefficient(t, i, j) - beta_pair_coefficient(t, i, last) + beta_pair_coefficient(t, j, last);
}

TorusPoint s_matrix(std::size_t n, Complex s) {
  Eigen::VectorXcd d = Eigen::VectorXcd::Ones(static_cast<Eigen::Index>(n));
  d(0) = s;
  d(1) = 1.0 / s;
  return TorusPoint(std::move(d));
}

// ---------------------------------------------------------------------------

void appendix_lemmas(Recorder& rec, std::size_t n, Sampler& rng, double tol) {
  struct Sample {
    ProjectionFrame frame;
    TorusPoint t;
    ComplexMatrix X, Y, Z;
    RealVector alpha;
  };
  std::vector<Sample> samples;
  samples.reserve(kFormSamples);
  for (int s = 0; s < kFormSamples; ++s) {
    ProjectionFrame frame = rng.frame(n);
    TorusPoint t = rng.torus_point(n);
    ComplexMatrix X = rng.flag_tangent(n), Y = rng.flag_tangent(n), Z = rng.flag_tangent(n);
    samples.push_back({std::move(frame), std::move(t), std::move(X), std::move(Y), std::move(Z),
                       rng.torus_tangent(n)});
  }

  if (n < 3) {
    rec.skip("projection.distinct_indices", "tr(P_i dP_j dP_k) = 0 for distinct i, j, k", tol);
  } else {
    rec.residual("projection.distinct_indices", "tr(P_i dP_j dP_k) = 0 for distinct i, j, k", tol, [&] {
      Worst w;
      for (const Sample& s : samples)
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
              if (i != j && j != k && i != k) w.add(tr_form2(s.frame, i, j, k, s.X, s.Y));
      return w.v;
    });
  }

  rec.residual("projection.swap", "tr(P_i dP_j dP_j) = -tr(P_j dP_i dP_i) for i != j", tol, [&] {
    Worst w;
    for (const Sample& s : samples)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (i != j) w.add(tr_form2(s.frame, i, j, j, s.X, s.Y) + tr_form2(s.frame, j, i, i, s.X, s.Y));
    return w.v;
  });

  rec.residual("projection.trace_sum", "sum_k tr(P_k dP_k dP_k) = 0", tol, [&] {
    Worst w;
    for (const Sample& s : samples) {
      Complex sum{};
      for (std::size_t k = 0; k < n; ++k) sum += tau(s.frame, k, s.X, s.Y);
      w.add(sum);
    }
    return w.v;
  });

  rec.residual("projection.alpha_reduction",
               "sum_i a_i tr(P_i dP_i dP_i) = sum_{i<n} (a_i - a_n) tr(P_i dP_i dP_i)", tol, [&] {
                 Worst w;
                 for (const Sample& s : samples) {
                   const std::size_t last = n - 1;
                   Complex lhs{}, rhs{};
                   for (std::size_t i = 0; i < n; ++i) lhs += s.alpha(static_cast<Eigen::Index>(i)) * tau(s.frame, i, s.X, s.Y);
                   for (std::size_t i = 0; i < last; ++i)
                     rhs += (s.alpha(static_cast<Eigen::Index>(i)) - s.alpha(static_cast<Eigen::Index>(last))) *
                            tau(s.frame, i, s.X, s.Y);
                   w.add(lhs - rhs);
                 }
                 return w.v;
               });

  rec.residual("projection.dP_sum", "sum_i dP_i = 0", tol, [&] {
    Worst w;
    for (const Sample& s : samples) {
      ComplexMatrix sum = ComplexMatrix::Zero(n, n);
      for (std::size_t i = 0; i < n; ++i) sum += dP(s.frame, i, s.X);
      w.add(max_entry(sum));
    }
    return w.v;
  });

  rec.residual("projection.cubic_trace", "tr(dP_i dP_i dP_i) = 0", tol, [&] {
    Worst w;
    for (const Sample& s : samples)
      for (std::size_t i = 0; i < n; ++i) w.add(tr_form3_dPPP(s.frame, i, i, i, s.X, s.Y, s.Z));
    return w.v;
  });

  rec.residual("projection.conjugation_invariance", "tr(P_i dP_j dP_k) unchanged under g -> h g", tol, [&] {
    Worst w;
    for (const Sample& s : samples) {
      const ProjectionFrame moved = make_frame(rng.special_unitary(n) * s.frame.witness());
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
          w.add(tr_form2(moved, i, k, k, s.X, s.Y) - tr_form2(s.frame, i, k, k, s.X, s.Y));
    }
    return w.v;
  });

  rec.residual("nu.torus_restriction", "nu = -1/(24 pi^2) tr(g^{-1}dg)^3 vanishes on diagonal tangents", tol, [&] {
    Worst w;
    for (int s = 0; s < kRootSamples; ++s) {
      std::array<ComplexMatrix, 3> D;
      for (ComplexMatrix& d : D) d = (kI * rng.torus_tangent(n).cast<Complex>()).asDiagonal();
      w.add(basic_threeform_nu(samples[static_cast<std::size_t>(s)].frame.witness(), D[0], D[1], D[2]));
    }
    return w.v;
  });

  rec.residual("beta.pair_decomposition", "beta = sum_{i<j} beta_ij tr(P_j dP_i dP_i)", tol, [&] {
    Worst w;
    for (const Sample& s : samples) {
      Complex sum{};
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          sum += beta_pair_coefficient(s.t, i, j) * tr_form2(s.frame, j, i, i, s.X, s.Y);
      w.add(beta_form(s.t, s.frame, s.X, s.Y) - sum);
    }
    return w.v;
  });

  const std::string reduced_anchor =
      "beta = sum_{i<j<n} (beta_ij - beta_in + beta_jn) tr(P_j dP_i dP_i) - sum_{i<n} beta_in tr(P_i dP_i dP_i)";
  const std::string s_anchor = "at S = diag(t, 1/t, 1, ...), t = e^{i pi/4}: only beta_12 - beta_1n + beta_2n "
                               "survives and equals -i/(4 pi) (2t - 2/t + 1/t^2 - t^2)";
  const std::string nonzero_anchor = "sum_{i<j<n} (beta_ij - beta_in + beta_jn) tr(P_j dP_i dP_i) != 0 at S";
  if (n < 3) {
    rec.skip("beta.reduced_decomposition", reduced_anchor, tol);
    rec.skip("beta.S_coefficient", s_anchor, tol);
    rec.skip("beta.S_nonvanishing", nonzero_anchor, 1e-3);
    return;
  }
  rec.residual("beta.reduced_decomposition", reduced_anchor, tol, [&] {
    Worst w;
    const std::size_t last = n - 1;
    for (const Sample& s : samples) {
      Complex sum{};
      for (std::size_t i = 0; i < last; ++i) {
        for (std::size_t j = i + 1; j < last; ++j)
          sum += reduced_coefficient(s.t, i, j) * tr_form2(s.frame, j, i, i, s.X, s.Y);
        sum -= beta_pair_coefficient(s.t, i, last) * tau(s.frame, i, s.X, s.Y);
      }
      w.add(beta_form(s.t, s.frame, s.X, s.Y) - sum);
    }
    return w.v;
  });

  const Complex t = std::polar(1.0, kPi / 4.0);
  const TorusPoint S = s_matrix(n, t);
  rec.residual("beta.S_coefficient", s_anchor, tol, [&] {
    Worst w;
    const Complex expected = -kI / (4.0 * kPi) * (2.0 * t - 2.0 / t + 1.0 / (t * t) - t * t);
    for (std::size_t i = 0; i + 1 < n - 1; ++i)
      for (std::size_t j = i + 1; j < n - 1; ++j)
        w.add(reduced_coefficient(S, i, j) - (i == 0 && j == 1 ? expected : Complex{}));
    return w.v;
  });

  rec.check("beta.S_nonvanishing", nonzero_anchor, 1e-3, [&] {
    const ProjectionFrame frame = make_frame(SpecialUnitary::identity(n));
    const ComplexMatrix X = root_vector(n, 0, 1, 1.0), Y = root_vector(n, 0, 1, kI);
    Complex sum{};
    for (std::size_t i = 0; i < n - 1; ++i)
      for (std::size_t j = i + 1; j < n - 1; ++j) sum += reduced_coefficient(S, i, j) * tr_form2(frame, j, i, i, X, Y);
    return Outcome{sum, std::abs(sum) > 1e-3};
  });
}

// ---------------------------------------------------------------------------

void cocycles(Recorder& rec, std::size_t n, Sampler& rng, double tol) {
  const auto count = kCocycleSamples;

  rec.check("d.cocycle", "delta(d_i) = 0 on X_T^[3]", 0.0, [&] {
    std::int64_t worst = 0;
    for (int s = 0; s < count; ++s) {
      const XtLift x = rng.xt_lift(n);
      const FiberTuple<XtLift> tuple{project_xt(x), {x, rng.shifted_lift(x), rng.shifted_lift(x)}};
      for (std::size_t i = 0; i < n; ++i) {
        const Cochain<XtLift, std::int64_t> d{
            2, [i](const FiberTuple<XtLift>& p) { return d_cocycle(p.lifts[0], p.lifts[1], i); }};
        const std::int64_t r = delta(d, tuple);
        if (std::abs(r) > std::abs(worst)) worst = r;
      }
    }
    return Outcome{static_cast<double>(worst), worst == 0};
  });

  rec.check("epsilon.cocycle", "delta(epsilon_i) = 0 on Y_T^[3]", 0.0, [&] {
    std::int64_t worst = 0;
    for (int s = 0; s < count; ++s) {
      const TorusPoint t = rng.torus_point(n);
      const FiberTuple<ZPoint> tuple{t, {rng.z_off_spectrum(t), rng.z_off_spectrum(t), rng.z_off_spectrum(t)}};
      for (std::size_t i = 0; i < n; ++i) {
        const Cochain<ZPoint, std::int64_t> eps{2, [i](const FiberTuple<ZPoint>& p) {
                                                  return std::int64_t{epsilon_cocycle(p.lifts[0], p.lifts[1], p.base, i)};
                                                }};
        const std::int64_t r = delta(eps, tuple);
        if (std::abs(r) > std::abs(worst)) worst = r;
      }
    }
    return Outcome{static_cast<double>(worst), worst == 0};
  });

  rec.residual("epsilon.log_identity", "epsilon_i(z, w, t) = (log_z p_i - log_w p_i) / (2 pi i)", tol, [&] {
    Worst w;
    for (int s = 0; s < count; ++s) {
      const TorusPoint t = rng.torus_point(n);
      const ZPoint z = rng.z_off_spectrum(t), v = rng.z_off_spectrum(t);
      for (std::size_t i = 0; i < n; ++i)
        w.add(static_cast<double>(epsilon_cocycle(z, v, t, i)) -
              (branch_log(z, t.p(i)) - branch_log(v, t.p(i))) / (2.0 * kPi * kI));
    }
    return w.v;
  });

  rec.check("h.integer", "h_i(x, z, t) = x_i - log_z(p_i) / (2 pi i) is an integer", 0.0, [&] {
    int failures = 0;
    for (int s = 0; s < count; ++s) {
      const XtLift x = rng.shifted_lift(rng.xt_lift(n));
      const TorusPoint t = project_xt(x);
      const ZPoint z = rng.z_off_spectrum(t);
      for (std::size_t i = 0; i < n; ++i) {
        try {
          (void)h_function(x, z, t, i);
        } catch (const GerbeError& e) {
          if (e.kind() != ErrorKind::NotInteger) throw;
          ++failures;
        }
      }
    }
    return Outcome{static_cast<double>(failures), failures == 0};
  });

  auto xy_pair_sample = [&](int arity) {
    const XtLift x = rng.xt_lift(n);
    const TorusPoint t = project_xt(x);
    FiberTuple<XYLift> tuple{t, {}};
    for (int k = 0; k < arity; ++k) tuple.lifts.push_back({rng.shifted_lift(x), rng.z_off_spectrum(t)});
    return tuple;
  };

  rec.check("h.coboundary", "delta(h_i) = epsilon_i - d_i on (X_T x_T Y_T)^[2]", 0.0, [&] {
    std::int64_t worst = 0;
    for (int s = 0; s < count; ++s) {
      const FiberTuple<XYLift> pair = xy_pair_sample(2);
      const XYLift& a = pair.lifts[0];
      const XYLift& b = pair.lifts[1];
      for (std::size_t i = 0; i < n; ++i) {
        const Cochain<XYLift, std::int64_t> h{
            1, [i](const FiberTuple<XYLift>& p) { return h_function(p.lifts[0].x, p.lifts[0].z, p.base, i); }};
        const std::int64_t r =
            delta(h, pair) - (epsilon_cocycle(a.z, b.z, pair.base, i) - d_cocycle(a.x, b.x, i));
        if (std::abs(r) > std::abs(worst)) worst = r;
      }
    }
    return Outcome{static_cast<double>(worst), worst == 0};
  });

  rec.check("h.delta_squared", "delta(delta(h_i)) = 0", 0.0, [&] {
    std::int64_t worst = 0;
    for (int s = 0; s < count; ++s) {
      const FiberTuple<XYLift> triple = xy_pair_sample(3);
      for (std::size_t i = 0; i < n; ++i) {
        const Cochain<XYLift, std::int64_t> h{
            1, [i](const FiberTuple<XYLift>& p) { return h_function(p.lifts[0].x, p.lifts[0].z, p.base, i); }};
        const std::int64_t r = delta_squared_check(h, triple);
        if (std::abs(r) > std::abs(worst)) worst = r;
      }
    }
    return Outcome{static_cast<double>(worst), worst == 0};
  });

  rec.residual("curving.delta_squared", "delta(delta(f_c)) = 0 on X_T^[3] at fixed tangents", tol, [&] {
    Worst w;
    for (int s = 0; s < count; ++s) {
      const XtLift x = rng.xt_lift(n);
      const ProjectionFrame frame = rng.frame(n);
      const ComplexMatrix X = rng.flag_tangent(n), Y = rng.flag_tangent(n);
      const Cochain<XtLift, Complex> f{
          1, [&](const FiberTuple<XtLift>& p) { return weyl_curving(p.lifts[0], frame, X, Y); }};
      const FiberTuple<XtLift> triple{project_xt(x), {x, rng.shifted_lift(x), rng.shifted_lift(x)}};
      w.add(delta_squared_check(f, triple));
    }
    return w.v;
  });

  rec.residual("weyl_map.spectrum", "spec(sum_i p_i(t) P_i) = {t_i}", tol, [&] {
    double worst = 0.0;
    for (int s = 0; s < kFormSamples; ++s) {
      const TorusPoint t = rng.torus_point(n);
      const ProjectionFrame frame = rng.frame(n);
      const std::vector<Complex> expected(t.diag().data(), t.diag().data() + t.dim());
      worst = std::max(worst, spectrum_distance(spectrum(weyl_map(t, frame)), expected));
    }
    return Complex(worst);
  });

  rec.residual("weyl_map.equivariance", "p(t, hT) = h t h^{-1}", tol, [&] {
    Worst w;
    for (int s = 0; s < kFormSamples; ++s) {
      const TorusPoint t = rng.torus_point(n);
      const SpecialUnitary h = rng.special_unitary(n);
      const ComplexMatrix expected = h.matrix() * t.matrix() * h.matrix().adjoint();
      w.add(max_entry(weyl_map(t, make_frame(h)).matrix() - expected));
    }
    return w.v;
  });
}

// ---------------------------------------------------------------------------

void connective_data(Recorder& rec, std::size_t n, Sampler& rng, double tol) {
  struct Sample {
    XtLift x, y;
    ZPoint z, w;
    BasePoint at;
    ComplexMatrix X, Y;
    std::array<ProductTangent, 3> uvw;
    RealVector a;
  };
  std::vector<Sample> samples;
  samples.reserve(kFormSamples);
  for (int s = 0; s < kFormSamples; ++s) {
    XtLift x = rng.xt_lift(n);
    XtLift y = rng.shifted_lift(x);
    TorusPoint t = project_xt(x);
    const ZPoint z = rng.z_off_spectrum(t), w = rng.z_off_spectrum(t);
    ProjectionFrame frame = rng.frame(n);
    ComplexMatrix X = rng.flag_tangent(n), Y = rng.flag_tangent(n);
    std::array<ProductTangent, 3> uvw{rng.product_tangent(n), rng.product_tangent(n), rng.product_tangent(n)};
    RealVector a = rng.torus_tangent(n);
    samples.push_back({std::move(x), std::move(y), z, w, BasePoint{std::move(t), std::move(frame)}, std::move(X),
                       std::move(Y), std::move(uvw), std::move(a)});
  }

  const ConnectiveData weyl = weyl_connective_data();
  const ConnectiveData basic = basic_connective_data();

  rec.residual("weyl.delta_curving", "delta(f_c) = F_c", tol, [&] {
    Worst w;
    for (const Sample& s : samples) w.add(curving_defect(weyl, s.x, s.y, s.at, s.X, s.Y));
    return w.v;
  });

  rec.residual("weyl.three_curvature_mixed", "omega_c(a; X, Y) = -sum_i a_i tr(P_i dP_i dP_i)(X, Y)", tol, [&] {
    Worst w;
    for (const Sample& s : samples) {
      Complex expected{};
      for (std::size_t i = 0; i < n; ++i) expected -= s.a(static_cast<Eigen::Index>(i)) * tau(s.at.frame, i, s.X, s.Y);
      const std::array<ProductTangent, 3> v{ProductTangent::torus(s.a), ProductTangent::flag(s.X),
                                            ProductTangent::flag(s.Y)};
      w.add(weyl.three_curvature(s.at, v) - expected);
    }
    return w.v;
  });

  rec.residual("basic.curving_long_vs_reduced", "f_{p*b} = sum_k (-1/(2 pi i)) log_z(p_k) tr(P_k dP_k dP_k) + beta",
               tol, [&] {
                 Worst w;
                 for (const Sample& s : samples) {
                   const YtPoint y(s.z, s.at.t);
                   w.add(basic_curving_long(y, s.at.frame, s.X, s.Y) - basic_curving_reduced(y, s.at.frame, s.X, s.Y) -
                         beta_form(s.at.t, s.at.frame, s.X, s.Y));
                 }
                 return w.v;
               });

  rec.residual("basic.delta_curving", "delta(f_{p*b}) = sum_i epsilon_i tr(P_i dP_i dP_i)", tol, [&] {
    Worst w;
    for (const Sample& s : samples) w.add(curving_defect(basic, s.z, s.w, s.at, s.X, s.Y));
    return w.v;
  });

  rec.residual("main.curving_difference", "f_{p*b} - f_c = F_R + beta", tol, [&] {
    Worst w;
    for (const Sample& s : samples) {
      const FiberPairXY point(s.x, s.z, s.at.t);
      w.add(basic_curving_long(YtPoint(s.z, s.at.t), s.at.frame, s.X, s.Y) - weyl_curving(s.x, s.at.frame, s.X, s.Y) -
            trivializing_curvature_FR(point, s.at.frame, s.X, s.Y) - beta_form(s.at.t, s.at.frame, s.X, s.Y));
    }
    return w.v;
  });

  const double three_tol = 10.0 * tol;
  rec.residual("basic.three_curvature_long_vs_reduced",
               "omega_{p*b} = -1/(2 pi i) sum_k p_k^{-1} dp_k tr(P_k dP_k dP_k) + d(beta)", three_tol, [&] {
                 Worst w;
                 for (const Sample& s : samples) {
                   const auto& [u, v, x] = s.uvw;
                   w.add(basic_three_curvature_long(s.at, u, v, x) - basic_three_curvature_reduced(s.at, u, v, x) -
                         beta_exterior_derivative(s.at, u, v, x));
                 }
                 return w.v;
               });
}

// ---------------------------------------------------------------------------

void root_space(Recorder& rec, std::size_t n, Sampler& rng, double tol) {
  const std::size_t last = n - 1;
  struct Sample {
    ProjectionFrame frame;
    Complex mu, lambda;
  };
  std::vector<Sample> samples;
  for (int s = 0; s < kRootSamples; ++s) {
    ProjectionFrame frame = rng.frame(n);
    const Complex mu = rng.gaussian_complex();
    samples.push_back({std::move(frame), mu, rng.gaussian_complex()});
  }

  const std::string off_anchor = "tr(P_j dP_i dP_i)(g A_in^mu, g A_in^lambda) = 0 for i < j < n";
  if (n < 3) {
    rec.skip("root.off_index", off_anchor, tol);
  } else {
    rec.residual("root.off_index", off_anchor, tol, [&] {
      Worst w;
      for (const Sample& s : samples)
        for (std::size_t i = 0; i < last; ++i)
          for (std::size_t j = i + 1; j < last; ++j)
            w.add(tr_form2(s.frame, j, i, i, root_vector(n, i, last, s.mu), root_vector(n, i, last, s.lambda)));
      return w.v;
    });
  }

  rec.residual("root.tau_value",
               "tr(P_i dP_i dP_i)(g A_in^mu, g A_in^lambda) = conj(lambda) mu - conj(mu) lambda", tol, [&] {
                 Worst w;
                 for (const Sample& s : samples)
                   for (std::size_t i = 0; i < last; ++i) {
                     const Complex expected = std::conj(s.lambda) * s.mu - std::conj(s.mu) * s.lambda;
                     w.add(tau(s.frame, i, root_vector(n, i, last, s.mu), root_vector(n, i, last, s.lambda)) -
                           expected);
                   }
                 return w.v;
               });

  rec.residual("root.tau_other_index", "tr(P_m dP_m dP_m)(g A_kn^mu, g A_kn^lambda) = 0 for m not in {k, n}", tol,
               [&] {
                 Worst w;
                 for (const Sample& s : samples)
                   for (std::size_t k = 0; k < last; ++k)
                     for (std::size_t m = 0; m < last; ++m)
                       if (m != k)
                         w.add(tau(s.frame, m, root_vector(n, k, last, s.mu), root_vector(n, k, last, s.lambda)));
                 return w.v;
               });

  const std::string forced_anchor =
      "sum_{i<j<n} b_ij tr(P_j dP_i dP_i) = sum_{k<n} alpha_k tr(P_k dP_k dP_k) forces alpha = 0";
  if (n < 3) {
    rec.skip("root.forced_alpha", forced_anchor, tol);
    return;
  }
  rec.check("root.forced_alpha", forced_anchor, tol, [&] {
    // Evaluate both sides at (A_kn^1, A_kn^i), g = I, for each k < n and solve for alpha.
    const ProjectionFrame frame = make_frame(SpecialUnitary::identity(n));
    const auto k_count = static_cast<Eigen::Index>(last);
    ComplexMatrix M(k_count, k_count);
    Eigen::VectorXcd rhs(k_count);
    for (std::size_t k = 0; k < last; ++k) {
      const ComplexMatrix X = root_vector(n, k, last, 1.0), Y = root_vector(n, k, last, kI);
      Complex lhs{};
      for (std::size_t i = 0; i < last; ++i)
        for (std::size_t j = i + 1; j < last; ++j)
          lhs += Complex(1.0 + static_cast<double>(i), static_cast<double>(j)) * tr_form2(frame, j, i, i, X, Y);
      rhs(static_cast<Eigen::Index>(k)) = lhs;
      for (std::size_t m = 0; m < last; ++m)
        M(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(m)) = tau(frame, m, X, Y);
    }
    const Eigen::JacobiSVD<ComplexMatrix> svd(M, Eigen::ComputeThinU | Eigen::ComputeThinV);
    if (svd.singularValues().minCoeff() < 0.5) return Outcome{Complex(kNaN, kNaN), false};
    const Eigen::VectorXcd alpha = svd.solve(rhs);
    Worst w;
    for (Eigen::Index k = 0; k < alpha.size(); ++k) w.add(alpha(k));
    return within(w.v, tol);
  });
}

// ---------------------------------------------------------------------------

void holonomy(Recorder& rec, std::size_t n, int order, double tol) {
  const QuadratureMesh mesh = make_sphere_mesh(n, order);

  rec.residual("mesh.area", "sum of weights * sin(theta) = 4 pi", tol, [&] { return Complex(mesh_area(mesh) - 4.0 * kPi); });

  for (std::size_t k = 0; k < n; ++k) {
    const double expected = k == 0 ? -1.0 : k == 1 ? 1.0 : 0.0;
    rec.residual("chern." + std::to_string(k + 1),
                 "(i / 2 pi) integral of tr(P_" + std::to_string(k + 1) + " dP dP) over S^2 = " +
                     std::to_string(static_cast<int>(expected)),
                 tol, [&] { return chern_number(k, mesh) - expected; });
  }

  const Complex integral = integrate_beta_sigma(n, mesh);
  const Complex oracle = beta_sigma_closed_form();
  const Complex stated = 1.0 / (kPi * kI);

  rec.residual("beta.integral.imaginary", "Re integral of beta over Sigma_n = 0", tol,
               [&] { return Complex(integral.real()); });
  rec.residual("beta.integral.closed_form", "integral of beta = -i/(4 pi) (p^2 - p^{-2}) (2 pi i), p = e^{i pi/4}",
               tol, [&] { return integral - oracle; });
  rec.check("beta.integral.quadrature", "integral of beta over Sigma_n not in 2 pi i Z (value reported)", 0.1,
            [&] { return Outcome{integral, distance_to_2pi_i_Z(integral) > 0.1}; });
  rec.check("beta.integral.stated", "stated value 1/(pi i) not in 2 pi i Z (value reported)", 0.1,
            [&] { return Outcome{stated, distance_to_2pi_i_Z(stated) > 0.1}; });
  rec.residual("beta.integral.rank_independence", "integral of beta_n = integral of beta_2", tol,
               [&] { return integral - integrate_beta_sigma(2, make_sphere_mesh(2, order)); });

  const Complex ratio = std::exp(integral);
  rec.check("holonomy.ratio_not_one", "exp(integral of beta) != 1 (value is the ratio)", 0.1,
            [&] { return Outcome{ratio, std::abs(ratio - 1.0) > 0.1}; });
  rec.residual("holonomy.unit_modulus", "|exp(integral of beta)| = 1", tol, [&] { return Complex(std::abs(ratio) - 1.0); });

  rec.residual("quadrature.convergence", "integral at order m = integral at order 2m", tol,
               [&] { return integral - integrate_beta_sigma(n, make_sphere_mesh(n, 2 * order)); });
  rec.residual("quadrature.parallel_matches_serial", "parallel sum = serial sum", tol, [&] {
    return integrate_2form(beta_form_value(), mesh, sigma_torus_point(n)) -
           integrate_2form_serial(beta_form_value(), mesh, sigma_torus_point(n));
  });
}

using SuiteFn = std::function<void(Recorder&, const SuiteOptions&, Sampler&)>;

struct SuiteEntry {
  std::string name;
  std::uint64_t stream;
  SuiteFn run;
};

const std::vector<SuiteEntry>& registry() {
  static const std::vector<SuiteEntry> entries{
      {"appendix-lemmas", 1, [](Recorder& r, const SuiteOptions& o, Sampler& s) { appendix_lemmas(r, o.n, s, o.tol); }},
      {"cocycles", 2, [](Recorder& r, const SuiteOptions& o, Sampler& s) { cocycles(r, o.n, s, o.tol); }},
      {"connective-data", 3, [](Recorder& r, const SuiteOptions& o, Sampler& s) { connective_data(r, o.n, s, o.tol); }},
      {"root-space", 4, [](Recorder& r, const SuiteOptions& o, Sampler& s) { root_space(r, o.n, s, o.tol); }},
      {"holonomy", 5, [](Recorder& r, const SuiteOptions& o, Sampler&) { holonomy(r, o.n, o.mesh_order, o.tol); }},
  };
  return entries;
}

void run_entry(const SuiteEntry& e, const SuiteOptions& o, std::vector<CheckResult>& out, const std::string& prefix) {
  // Each suite gets its own stream so "all" reproduces the individual suites.
  Sampler rng(o.seed * 0x9E3779B97F4A7C15ULL + e.stream);
  Recorder rec(out, prefix);
  e.run(rec, o, rng);
}

}  // namespace

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skip: return "skip";
  }
  return "?";
}

bool SuiteReport::all_passed() const { return count(CheckStatus::Fail) == 0; }

std::size_t SuiteReport::count(CheckStatus s) const {
  std::size_t c = 0;
  for (const CheckResult& r : checks) c += r.status == s;
  return c;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const SuiteEntry& e : registry()) v.push_back(e.name);
    v.emplace_back("all");
    return v;
  }();
  return names;
}

SuiteReport run_suite(std::string_view name, const SuiteOptions& options) {
  if (options.n < kMinRank || options.n > kMaxRank)
    throw GerbeError(ErrorKind::RankOutOfRange, "n = " + std::to_string(options.n) + " outside [2, 8]");
  if (options.mesh_order < 1) throw GerbeError(ErrorKind::ChartOutOfRange, "mesh order must be positive");

  const auto start = std::chrono::steady_clock::now();
  SuiteReport report;
  report.suite = std::string(name);
  report.n = options.n;
  report.seed = options.seed;
  if (name == "all") {
    for (const SuiteEntry& e : registry()) run_entry(e, options, report.checks, e.name + "/");
  } else {
    const SuiteEntry* found = nullptr;
    for (const SuiteEntry& e : registry())
      if (e.name == name) found = &e;
    if (!found) throw GerbeError(ErrorKind::UnknownSuite, "unknown suite '" + std::string(name) + "'");
    run_entry(*found, options, report.checks, "");
  }
  report.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

nlohmann::json to_json(const SuiteReport& report) {
  nlohmann::json checks = nlohmann::json::array();
  for (const CheckResult& c : report.checks) {
    checks.push_back({{"id", c.id},
                      {"anchor", c.anchor},
                      {"status", to_string(c.status)},
                      {"value", {c.value.real(), c.value.imag()}},
                      {"tolerance", c.tolerance}});
  }
  return {{"suite", report.suite},
          {"n", report.n},
          {"seed", report.seed},
          {"checks", std::move(checks)},
          {"wall_time_s", report.wall_time_s}};
}

}  // namespace weylgerbe
