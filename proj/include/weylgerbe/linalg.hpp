#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "weylgerbe/error.hpp"

namespace weylgerbe {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

/// Tolerance for validating algebraic invariants (unitarity, idempotency, ...).
inline constexpr double kAlgTol = 1e-9;

inline constexpr std::size_t kMinRank = 2;
inline constexpr std::size_t kMaxRank = 8;

/// E_ij: 1 in entry (i, j), zero elsewhere.
ComplexMatrix elementary(std::size_t n, std::size_t i, std::size_t j);

/// O_i = E_ii.
inline ComplexMatrix diagonal_unit(std::size_t n, std::size_t i) { return elementary(n, i, i); }

/// Throws RankOutOfRange unless kMinRank <= n <= kMaxRank.
void check_rank(std::size_t n);

/// A validated element of SU(n).
class SpecialUnitary {
 public:
  explicit SpecialUnitary(ComplexMatrix m);

  static SpecialUnitary identity(std::size_t n);

  const ComplexMatrix& matrix() const noexcept { return m_; }
  std::size_t dim() const noexcept { return static_cast<std::size_t>(m_.rows()); }

  SpecialUnitary operator*(const SpecialUnitary& other) const;
  SpecialUnitary adjoint() const;

 private:
  ComplexMatrix m_;
};

/// A diagonal element of SU(n), stored by its diagonal entries t_1..t_n.
class TorusPoint {
 public:
  explicit TorusPoint(Eigen::VectorXcd diag);

  static TorusPoint identity(std::size_t n);

  /// p_i(t) = t_i, zero-based.
  Complex p(std::size_t i) const { return diag_(static_cast<Eigen::Index>(i)); }
  const Eigen::VectorXcd& diag() const noexcept { return diag_; }
  std::size_t dim() const noexcept { return static_cast<std::size_t>(diag_.size()); }
  ComplexMatrix matrix() const { return diag_.asDiagonal(); }

 private:
  Eigen::VectorXcd diag_;
};

/// A point of SU(n)/T, realised as n mutually orthogonal rank-one projections
/// P_i = g O_i g^dagger. The witness g is always kept so that derivatives of
/// the P_i can be taken exactly through commutators.
class ProjectionFrame {
 public:
  const SpecialUnitary& witness() const noexcept { return g_; }
  const ComplexMatrix& P(std::size_t i) const { return frame_.at(i); }
  std::size_t dim() const noexcept { return frame_.size(); }

 private:
  friend ProjectionFrame make_frame(const SpecialUnitary& g);
  ProjectionFrame(SpecialUnitary g, std::vector<ComplexMatrix> frame)
      : g_(std::move(g)), frame_(std::move(frame)) {}

  SpecialUnitary g_;
  std::vector<ComplexMatrix> frame_;
};

ProjectionFrame make_frame(const SpecialUnitary& g);

/// Largest deviation of the frame from the Proj_n axioms (hermitian,
/// idempotent, unit trace, mutually orthogonal, summing to the identity).
double frame_defect(const ProjectionFrame& frame);

/// Throws InvalidTangent unless X is skew-hermitian with zero diagonal.
void check_flag_tangent(const ComplexMatrix& X);

/// Horizontal tangent to SU(n)/T: a zero-diagonal skew-hermitian matrix X,
/// standing for the tangent vector gX at the frame with witness g.
struct FlagTangent {
  explicit FlagTangent(ComplexMatrix X);
  ComplexMatrix X;
};

/// Velocity of s -> t * exp(2 pi i s diag(a)); the entries of a sum to zero.
struct TorusTangent {
  explicit TorusTangent(RealVector a);
  RealVector a;
};

/// mu E_ij - conj(mu) E_ji, zero-based indices.
ComplexMatrix root_vector(std::size_t n, std::size_t i, std::size_t j, Complex mu);

/// Eigenvalues counted with multiplicity, sorted by angle in [0, 2 pi).
std::vector<Complex> spectrum(const SpecialUnitary& u);

/// Angle of a unit complex number in [0, 2 pi).
double angle_0_2pi(Complex w);

/// Largest distance under a greedy nearest-neighbour matching of two
/// multisets of unit complex numbers of the same size.
double spectrum_distance(std::vector<Complex> a, std::vector<Complex> b);

/// exp(X) for X skew-hermitian, computed by hermitian diagonalisation of -iX.
ComplexMatrix expm_skew(const ComplexMatrix& X);

/// Zero-diagonal projection of a matrix (the horizontal part of u^dagger du).
ComplexMatrix off_diagonal(const ComplexMatrix& X);

}  // namespace weylgerbe
