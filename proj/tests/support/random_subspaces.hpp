#pragma once

#include <random>
#include <vector>

#include "lukq/hilbert.hpp"
#include "lukq/representation.hpp"

namespace lukq::testing {

/// Random projector P with range(P) inside range(q).
inline Projector random_subprojector(const Projector& q, std::mt19937_64& rng) {
  CMatrix basis = q.range_basis();
  if (basis.cols() == 0) return Projector::zero(q.dim());
  std::uniform_int_distribution<Eigen::Index> k_dist(0, basis.cols());
  Eigen::Index k = k_dist(rng);
  std::vector<StateVector> vectors;
  for (Eigen::Index i = 0; i < k; ++i) {
    CVector coeffs = random_state(static_cast<std::size_t>(basis.cols()), rng).amplitudes();
    vectors.push_back(state_new(CVector(basis * coeffs)));
  }
  return projector_from_vectors(vectors, q.dim());
}

inline double distance(const Projector& a, const Projector& b) {
  return (a.matrix() - b.matrix()).norm();
}

// Random pairwise orthogonal family built from a random orthonormal basis.
inline std::vector<PropFunction> orthogonal_family(std::size_t dim, std::size_t size,
                                                   std::mt19937_64& rng) {
  CMatrix cols(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (Eigen::Index j = 0; j < cols.cols(); ++j) {
    cols.col(j) = random_state(dim, rng).amplitudes();
  }
  CMatrix basis = orthonormalize(cols);
  std::vector<PropFunction> out;
  std::uniform_int_distribution<std::size_t> slot(0, size);
  std::vector<std::vector<Eigen::Index>> groups(size);
  for (Eigen::Index j = 0; j < basis.cols(); ++j) {
    auto g = slot(rng);
    if (g < size) groups[g].push_back(j);
  }
  for (const auto& g : groups) {
    CMatrix b(basis.rows(), static_cast<Eigen::Index>(g.size()));
    for (std::size_t k = 0; k < g.size(); ++k) b.col(static_cast<Eigen::Index>(k)) = basis.col(g[k]);
    out.emplace_back(Projector::from_orthonormal_basis(b));
  }
  return out;
}

}  // namespace lukq::testing
