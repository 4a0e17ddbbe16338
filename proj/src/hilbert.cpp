#include "lukq/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace lukq {

namespace {

void require_same_dim(std::size_t a, std::size_t b) {
  if (a != b) throw DimensionMismatch(a, b);
}

double max_abs(const CMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

CMatrix hermitian_part(const CMatrix& m) {
  return (m + m.adjoint()) * 0.5;
}

}  // namespace

// ---------------------------------------------------------------------------
// States

StateVector StateVector::from_unit(CVector amplitudes, double tol) {
  if (amplitudes.size() == 0) throw ValidationError("state has dimension 0");
  double norm = amplitudes.norm();
  if (!std::isfinite(norm) || std::abs(norm - 1.0) > tol) {
    throw InvariantViolation("state vector norm " + std::to_string(norm) +
                             " differs from 1");
  }
  return StateVector(std::move(amplitudes));
}

StateVector state_new(const CVector& amplitudes) {
  double norm = amplitudes.norm();
  if (amplitudes.size() == 0 || norm == 0.0) throw ZeroVector();
  if (!std::isfinite(norm)) throw ValidationError("state has non-finite amplitudes");
  return StateVector::from_unit(amplitudes / norm);
}

StateVector state_new(std::span<const Complex> amplitudes) {
  CVector v(static_cast<Eigen::Index>(amplitudes.size()));
  for (std::size_t i = 0; i < amplitudes.size(); ++i) {
    v(static_cast<Eigen::Index>(i)) = amplitudes[i];
  }
  return state_new(v);
}

std::mt19937_64 make_stream(std::uint64_t seed, std::uint64_t stream,
                            std::uint64_t index) {
  auto lo = [](std::uint64_t x) { return static_cast<std::uint32_t>(x); };
  auto hi = [](std::uint64_t x) { return static_cast<std::uint32_t>(x >> 32); };
  std::seed_seq seq{lo(seed), hi(seed), lo(stream), hi(stream), lo(index), hi(index)};
  return std::mt19937_64(seq);
}

StateVector random_state(std::size_t dim, std::mt19937_64& rng) {
  if (dim == 0) throw ValidationError("random_state: dimension must be positive");
  std::normal_distribution<double> normal(0.0, 1.0);
  CVector v(static_cast<Eigen::Index>(dim));
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    double re = normal(rng);
    double im = normal(rng);
    v(i) = Complex(re, im);
  }
  return state_new(v);
}

StateVector random_state(std::size_t dim, std::uint64_t seed) {
  auto rng = make_stream(seed);
  return random_state(dim, rng);
}

// ---------------------------------------------------------------------------
// Projectors

double ProjectorDefects::worst() const {
  return std::max({hermiticity, idempotence, spectrum});
}

ProjectorDefects projector_defects(const CMatrix& m) {
  ProjectorDefects d;
  d.hermiticity = max_abs(m - m.adjoint());
  d.idempotence = (m * m - m).norm();
  if (m.size() > 0) {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(hermitian_part(m),
                                              Eigen::EigenvaluesOnly);
    for (double ev : es.eigenvalues()) {
      d.spectrum = std::max(d.spectrum, std::min(std::abs(ev), std::abs(ev - 1.0)));
    }
  }
  return d;
}

Projector Projector::from_matrix(CMatrix m, double tol) {
  if (m.rows() != m.cols()) {
    throw InvariantViolation("projector matrix is not square");
  }
  if (m.rows() == 0) throw InvariantViolation("projector has dimension 0");
  if (!m.allFinite()) throw InvariantViolation("projector has non-finite entries");
  ProjectorDefects d = projector_defects(m);
  if (d.hermiticity > tol) {
    throw InvariantViolation("projector is not Hermitian (max |P - P^H| = " +
                             std::to_string(d.hermiticity) + ")");
  }
  if (d.idempotence > tol) {
    throw InvariantViolation("projector is not idempotent (||P^2 - P||_F = " +
                             std::to_string(d.idempotence) + ")");
  }
  if (d.spectrum > tol) {
    throw InvariantViolation("projector has an eigenvalue outside {0, 1}");
  }
  return Projector(std::move(m));
}

Projector Projector::from_orthonormal_basis(const CMatrix& basis) {
  if (basis.rows() == 0) throw InvariantViolation("projector has dimension 0");
  if (basis.cols() == 0) return zero(static_cast<std::size_t>(basis.rows()));
  return Projector(hermitian_part(basis * basis.adjoint()));
}

Projector Projector::zero(std::size_t dim) {
  auto n = static_cast<Eigen::Index>(dim);
  return Projector(CMatrix::Zero(n, n));
}

Projector Projector::identity(std::size_t dim) {
  auto n = static_cast<Eigen::Index>(dim);
  return Projector(CMatrix::Identity(n, n));
}

std::size_t Projector::rank() const {
  return static_cast<std::size_t>(std::max(0.0, std::round(m_.trace().real())));
}

CMatrix Projector::range_basis() const {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(m_);
  const auto& values = es.eigenvalues();
  std::vector<Eigen::Index> keep;
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    if (values(i) > 0.5) keep.push_back(i);
  }
  CMatrix basis(m_.rows(), static_cast<Eigen::Index>(keep.size()));
  for (std::size_t j = 0; j < keep.size(); ++j) {
    basis.col(static_cast<Eigen::Index>(j)) = es.eigenvectors().col(keep[j]);
  }
  return basis;
}

HermitianOperator HermitianOperator::from_matrix(CMatrix m, double tol) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw NotHermitian("operator matrix is not square and non-empty");
  }
  double err = max_abs(m - m.adjoint());
  if (!(err <= tol)) {
    throw NotHermitian("operator is not Hermitian (max |A - A^H| = " +
                       std::to_string(err) + ")");
  }
  return HermitianOperator(std::move(m));
}

CMatrix orthonormalize(const CMatrix& columns, double rank_tol) {
  if (columns.cols() == 0) return CMatrix(columns.rows(), 0);
  Eigen::JacobiSVD<CMatrix> svd(columns, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  Eigen::Index r = 0;
  while (r < sv.size() && sv(r) > rank_tol) ++r;
  return svd.matrixU().leftCols(r);
}

Projector projector_from_vectors(std::span<const StateVector> vectors,
                                 std::size_t dim, double rank_tol) {
  if (dim == 0) throw ValidationError("projector dimension must be positive");
  CMatrix columns(static_cast<Eigen::Index>(dim),
                  static_cast<Eigen::Index>(vectors.size()));
  for (std::size_t j = 0; j < vectors.size(); ++j) {
    require_same_dim(dim, vectors[j].dim());
    columns.col(static_cast<Eigen::Index>(j)) = vectors[j].amplitudes();
  }
  return Projector::from_orthonormal_basis(orthonormalize(columns, rank_tol));
}

Projector projector_from_vectors(std::span<const StateVector> vectors) {
  if (vectors.empty()) {
    throw ValidationError("empty vector family: dimension unknown");
  }
  return projector_from_vectors(vectors, vectors.front().dim());
}

Projector orthocomplement(const Projector& p) {
  auto n = static_cast<Eigen::Index>(p.dim());
  return Projector(CMatrix::Identity(n, n) - p.matrix());
}

Projector join(const Projector& p, const Projector& q, double rank_tol) {
  require_same_dim(p.dim(), q.dim());
  CMatrix bp = p.range_basis();
  CMatrix bq = q.range_basis();
  CMatrix both(bp.rows(), bp.cols() + bq.cols());
  both << bp, bq;
  return Projector::from_orthonormal_basis(orthonormalize(both, rank_tol));
}

Projector meet(const Projector& p, const Projector& q, double rank_tol) {
  require_same_dim(p.dim(), q.dim());
  return orthocomplement(
      join(orthocomplement(p), orthocomplement(q), rank_tol));
}

bool leq(const Projector& p, const Projector& q, double tol) {
  require_same_dim(p.dim(), q.dim());
  return (q.matrix() * p.matrix() - p.matrix()).norm() <= tol;
}

double born_value(const Projector& p, const StateVector& psi, double tol) {
  require_same_dim(p.dim(), psi.dim());
  const CVector& v = psi.amplitudes();
  double raw = v.dot(p.matrix() * v).real();
  if (!(raw >= -tol && raw <= 1.0 + tol)) {
    throw NumericRange("Born value " + std::to_string(raw) +
                       " is outside [0,1]");
  }
  return std::clamp(raw, 0.0, 1.0);
}

double lambda_max(const HermitianOperator& a) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(a.matrix(), Eigen::EigenvaluesOnly);
  return es.eigenvalues().maxCoeff();
}

// ---------------------------------------------------------------------------
// Pauli operators

CMatrix pauli_matrix(PauliAxis axis) {
  const Complex i(0.0, 1.0);
  CMatrix s(2, 2);
  switch (axis) {
    case PauliAxis::X: s << 0, 1, 1, 0; break;
    case PauliAxis::Y: s << 0, -i, i, 0; break;
    case PauliAxis::Z: s << 1, 0, 0, -1; break;
  }
  return s;
}

CMatrix kron(std::span<const CMatrix> factors) {
  CMatrix acc = CMatrix::Identity(1, 1);
  for (const CMatrix& f : factors) {
    CMatrix next(acc.rows() * f.rows(), acc.cols() * f.cols());
    for (Eigen::Index r = 0; r < acc.rows(); ++r) {
      for (Eigen::Index c = 0; c < acc.cols(); ++c) {
        next.block(r * f.rows(), c * f.cols(), f.rows(), f.cols()) = acc(r, c) * f;
      }
    }
    acc = std::move(next);
  }
  return acc;
}

HermitianOperator pauli_embed(PauliAxis axis, std::size_t site,
                              std::size_t n_sites) {
  if (n_sites == 0 || n_sites > 20 || site < 1 || site > n_sites) {
    throw IndexOutOfRange("site " + std::to_string(site) +
                          " is not in 1.." + std::to_string(n_sites));
  }
  std::vector<CMatrix> factors(n_sites, CMatrix::Identity(2, 2));
  factors[site - 1] = pauli_matrix(axis);
  return HermitianOperator::from_matrix(kron(factors));
}

}  // namespace lukq
