#pragma once

// Finite-dimensional complex Hilbert spaces: unit state vectors,
// orthogonal projectors (closed subspaces) and their lattice operations,
// Born-rule values, and Pauli operators on qubit registers.
//
// Conventions: |0> = (1, 0) is the +1 eigenvector of sigma_Z ("spin up");
// multi-qubit bases are big-endian, site 1 being the leftmost tensor factor.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "lukq/error.hpp"

namespace lukq {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// Numerical tolerances shared by every module.
struct Tolerances {
  /// Invariant checks on construction and the rank cutoff for
  /// orthonormalisation.
  double construction = 1e-9;
  /// Checks of algebraic identities between computed values.
  double identity = 1e-12;
};

class ZeroVector : public ValidationError {
 public:
  ZeroVector() : ValidationError("cannot normalise the zero vector") {}
};

class NotHermitian : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class IndexOutOfRange : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class NumericRange : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class StateVector {
 public:
  /// Wraps an already-normalised vector; throws InvariantViolation when
  /// the norm differs from 1 by more than `tol`.
  static StateVector from_unit(CVector amplitudes, double tol = 1e-9);

  std::size_t dim() const { return static_cast<std::size_t>(amps_.size()); }
  const CVector& amplitudes() const { return amps_; }

 private:
  explicit StateVector(CVector amps) : amps_(std::move(amps)) {}
  CVector amps_;
};

/// Normalises `amplitudes`. Throws ZeroVector on a zero (or empty) input.
StateVector state_new(const CVector& amplitudes);
StateVector state_new(std::span<const Complex> amplitudes);

/// Deterministic per-(seed, stream, index) generator, so sampled objects do
/// not depend on the order in which they are drawn.
std::mt19937_64 make_stream(std::uint64_t seed, std::uint64_t stream = 0,
                            std::uint64_t index = 0);

/// Haar-uniform unit vector: 2*dim standard normals as real and imaginary
/// parts, normalised.
StateVector random_state(std::size_t dim, std::mt19937_64& rng);
StateVector random_state(std::size_t dim, std::uint64_t seed);

/// Residuals of the projector invariants for a candidate matrix.
struct ProjectorDefects {
  double hermiticity = 0;  // max |M - M^H| entrywise
  double idempotence = 0;  // ||M^2 - M||_F
  double spectrum = 0;     // max distance of an eigenvalue from {0, 1}

  double worst() const;
};

ProjectorDefects projector_defects(const CMatrix& m);

/// Orthogonal projector onto a closed subspace.
class Projector {
 public:
  /// Validates the invariants at tolerance `tol` and throws
  /// InvariantViolation naming the first one violated.
  static Projector from_matrix(CMatrix m, double tol = 1e-9);
  /// Q Q^H for a matrix with orthonormal columns.
  static Projector from_orthonormal_basis(const CMatrix& basis);
  static Projector zero(std::size_t dim);
  static Projector identity(std::size_t dim);

  std::size_t dim() const { return static_cast<std::size_t>(m_.rows()); }
  const CMatrix& matrix() const { return m_; }
  std::size_t rank() const;
  /// Orthonormal basis of the range, one column per dimension.
  CMatrix range_basis() const;

 private:
  friend Projector orthocomplement(const Projector& p);

  explicit Projector(CMatrix m) : m_(std::move(m)) {}
  CMatrix m_;
};

class HermitianOperator {
 public:
  static HermitianOperator from_matrix(CMatrix m, double tol = 1e-9);

  std::size_t dim() const { return static_cast<std::size_t>(m_.rows()); }
  const CMatrix& matrix() const { return m_; }

 private:
  explicit HermitianOperator(CMatrix m) : m_(std::move(m)) {}
  CMatrix m_;
};

/// Orthonormal basis (as columns) of the span of `columns`; singular values
/// at or below `rank_tol` count as zero.
CMatrix orthonormalize(const CMatrix& columns, double rank_tol = 1e-9);

/// Projector onto span(vectors). `dim` is needed for the empty family,
/// which yields the zero projector; every vector must have that dimension.
Projector projector_from_vectors(std::span<const StateVector> vectors,
                                 std::size_t dim, double rank_tol = 1e-9);
Projector projector_from_vectors(std::span<const StateVector> vectors);

/// I - P
Projector orthocomplement(const Projector& p);
/// Projector onto the span of both ranges.
Projector join(const Projector& p, const Projector& q, double rank_tol = 1e-9);
/// Intersection of ranges, computed as ~(~P v ~Q).
Projector meet(const Projector& p, const Projector& q, double rank_tol = 1e-9);
/// range(P) is contained in range(Q): ||QP - P||_F <= tol.
bool leq(const Projector& p, const Projector& q, double tol = 1e-9);

/// <psi|P|psi>, clamped into [0,1] when within `tol` of it. Throws
/// NumericRange otherwise.
double born_value(const Projector& p, const StateVector& psi,
                  double tol = 1e-9);

double lambda_max(const HermitianOperator& a);

enum class PauliAxis { X, Y, Z };

CMatrix pauli_matrix(PauliAxis axis);
/// Kronecker product of a list of square factors, leftmost first.
CMatrix kron(std::span<const CMatrix> factors);
/// I x ... x sigma_axis x ... x I with sigma at 1-based `site`.
HermitianOperator pauli_embed(PauliAxis axis, std::size_t site,
                              std::size_t n_sites);

}  // namespace lukq
