#include "weylgerbe/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include <Eigen/Eigenvalues>

namespace weylgerbe {

namespace {

bool all_finite(const ComplexMatrix& m) {
  for (Eigen::Index c = 0; c < m.cols(); ++c)
    for (Eigen::Index r = 0; r < m.rows(); ++r)
      if (!std::isfinite(m(r, c).real()) || !std::isfinite(m(r, c).imag())) return false;
  return true;
}

}  // namespace

ComplexMatrix elementary(std::size_t n, std::size_t i, std::size_t j) {
  if (i >= n || j >= n)
    throw GerbeError(ErrorKind::IndexError, "matrix unit index out of range");
  ComplexMatrix e = ComplexMatrix::Zero(n, n);
  e(i, j) = 1.0;
  return e;
}

void check_rank(std::size_t n) {
  if (n < kMinRank || n > kMaxRank)
    throw GerbeError(ErrorKind::RankOutOfRange,
                     "rank " + std::to_string(n) + " outside [2, 8]");
}

SpecialUnitary::SpecialUnitary(ComplexMatrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols() || m_.rows() < 1)
    throw GerbeError(ErrorKind::InvalidUnitary, "matrix is not square");
  if (!all_finite(m_)) throw GerbeError(ErrorKind::InvalidUnitary, "non-finite entry");
  check_rank(dim());
  const auto n = m_.rows();
  const double unitarity = (m_.adjoint() * m_ - ComplexMatrix::Identity(n, n)).cwiseAbs().maxCoeff();
  if (unitarity > kAlgTol)
    throw GerbeError(ErrorKind::InvalidUnitary,
                     "U^dagger U deviates from I by " + std::to_string(unitarity));
  const double det_err = std::abs(m_.determinant() - Complex(1.0));
  if (det_err > kAlgTol)
    throw GerbeError(ErrorKind::InvalidUnitary, "det(U) deviates from 1 by " + std::to_string(det_err));
}

SpecialUnitary SpecialUnitary::identity(std::size_t n) {
  return SpecialUnitary(ComplexMatrix::Identity(n, n));
}

SpecialUnitary SpecialUnitary::operator*(const SpecialUnitary& other) const {
  return SpecialUnitary(m_ * other.m_);
}

SpecialUnitary SpecialUnitary::adjoint() const { return SpecialUnitary(m_.adjoint()); }

TorusPoint::TorusPoint(Eigen::VectorXcd diag) : diag_(std::move(diag)) {
  check_rank(dim());
  Complex prod(1.0);
  for (Eigen::Index i = 0; i < diag_.size(); ++i) {
    const Complex t = diag_(i);
    if (!std::isfinite(t.real()) || !std::isfinite(t.imag()) || std::abs(std::abs(t) - 1.0) > kAlgTol)
      throw GerbeError(ErrorKind::InvalidUnitary, "torus entry is not unit modulus");
    prod *= t;
  }
  if (std::abs(prod - Complex(1.0)) > kAlgTol)
    throw GerbeError(ErrorKind::InvalidUnitary, "torus entries do not multiply to 1");
}

TorusPoint TorusPoint::identity(std::size_t n) {
  return TorusPoint(Eigen::VectorXcd::Ones(static_cast<Eigen::Index>(n)));
}

ProjectionFrame make_frame(const SpecialUnitary& g) {
  const std::size_t n = g.dim();
  std::vector<ComplexMatrix> frame;
  frame.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    // g O_i g^dagger = v v^dagger with v the i-th column of g.
    const Eigen::VectorXcd v = g.matrix().col(static_cast<Eigen::Index>(i));
    frame.emplace_back(v * v.adjoint());
  }
  ProjectionFrame result(g, std::move(frame));
  const double defect = frame_defect(result);
  if (defect > kAlgTol)
    throw GerbeError(ErrorKind::InvalidFrame, "frame defect " + std::to_string(defect));
  return result;
}

double frame_defect(const ProjectionFrame& frame) {
  const std::size_t n = frame.dim();
  double worst = 0.0;
  ComplexMatrix sum = ComplexMatrix::Zero(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const ComplexMatrix& P = frame.P(i);
    worst = std::max(worst, (P - P.adjoint()).cwiseAbs().maxCoeff());
    worst = std::max(worst, (P * P - P).cwiseAbs().maxCoeff());
    worst = std::max(worst, std::abs(P.trace() - Complex(1.0)));
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) worst = std::max(worst, (P * frame.P(j)).cwiseAbs().maxCoeff());
    sum += P;
  }
  worst = std::max(worst, (sum - ComplexMatrix::Identity(n, n)).cwiseAbs().maxCoeff());
  return worst;
}

void check_flag_tangent(const ComplexMatrix& X) {
  if (X.rows() != X.cols())
    throw GerbeError(ErrorKind::InvalidTangent, "tangent matrix is not square");
  if (!all_finite(X)) throw GerbeError(ErrorKind::InvalidTangent, "non-finite tangent entry");
  if ((X + X.adjoint()).cwiseAbs().maxCoeff() > kAlgTol)
    throw GerbeError(ErrorKind::InvalidTangent, "tangent is not skew-hermitian");
  if (X.diagonal().cwiseAbs().maxCoeff() > kAlgTol)
    throw GerbeError(ErrorKind::InvalidTangent, "tangent has non-zero diagonal");
}

FlagTangent::FlagTangent(ComplexMatrix m) : X(std::move(m)) { check_flag_tangent(X); }

TorusTangent::TorusTangent(RealVector v) : a(std::move(v)) {
  if (!a.allFinite() || std::abs(a.sum()) > kAlgTol)
    throw GerbeError(ErrorKind::InvalidTangent, "torus tangent entries must sum to zero");
}

ComplexMatrix root_vector(std::size_t n, std::size_t i, std::size_t j, Complex mu) {
  if (i == j) throw GerbeError(ErrorKind::IndexError, "root vector needs i != j");
  if (i >= n || j >= n) throw GerbeError(ErrorKind::IndexError, "root vector index out of range");
  ComplexMatrix A = ComplexMatrix::Zero(n, n);
  A(i, j) = mu;
  A(j, i) = -std::conj(mu);
  return A;
}

double angle_0_2pi(Complex w) {
  double a = std::arg(w);
  if (a < 0.0) a += 2.0 * std::numbers::pi;
  // arg can return exactly -0.0 or round up to 2 pi.
  if (a >= 2.0 * std::numbers::pi) a = 0.0;
  return a;
}

std::vector<Complex> spectrum(const SpecialUnitary& u) {
  Eigen::ComplexEigenSolver<ComplexMatrix> solver(u.matrix(), /*computeEigenvectors=*/false);
  std::vector<Complex> eig(solver.eigenvalues().data(),
                           solver.eigenvalues().data() + solver.eigenvalues().size());
  std::sort(eig.begin(), eig.end(),
            [](Complex a, Complex b) { return angle_0_2pi(a) < angle_0_2pi(b); });
  return eig;
}

double spectrum_distance(std::vector<Complex> a, std::vector<Complex> b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  for (const Complex x : a) {
    auto best = std::min_element(b.begin(), b.end(), [x](Complex l, Complex r) {
      return std::abs(l - x) < std::abs(r - x);
    });
    worst = std::max(worst, std::abs(*best - x));
    b.erase(best);
  }
  return worst;
}

ComplexMatrix expm_skew(const ComplexMatrix& X) {
  const Complex i(0.0, 1.0);
  const ComplexMatrix H = -i * X;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(0.5 * (H + H.adjoint()));
  const Eigen::VectorXcd phases =
      (i * solver.eigenvalues().cast<Complex>()).array().exp().matrix();
  return solver.eigenvectors() * phases.asDiagonal() * solver.eigenvectors().adjoint();
}

ComplexMatrix off_diagonal(const ComplexMatrix& X) {
  ComplexMatrix Y = X;
  Y.diagonal().setZero();
  return Y;
}

}  // namespace weylgerbe
