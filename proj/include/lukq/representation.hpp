#pragma once

// Propositional functions on the unit sphere of a Hilbert space. A closed
// subspace with projector P becomes the function psi -> <psi|P|psi>, and
// Lukasiewicz negation / disjunction of exclusive functions are realised
// as orthocomplement / orthogonal sum of projectors.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "lukq/hilbert.hpp"

namespace lukq {

class PropFunction {
 public:
  explicit PropFunction(Projector projector,
                        std::optional<std::string> label = std::nullopt);

  /// The constant F (zero projector).
  static PropFunction always_false(std::size_t dim);
  /// The constant V (identity).
  static PropFunction always_true(std::size_t dim);

  const Projector& projector() const { return projector_; }
  const std::optional<std::string>& label() const { return label_; }
  std::size_t dim() const { return projector_.dim(); }

 private:
  Projector projector_;
  std::optional<std::string> label_;
};

class NotExclusive : public ValidationError {
 public:
  NotExclusive(std::size_t i, std::size_t j);
  std::size_t first() const { return i_; }
  std::size_t second() const { return j_; }

 private:
  std::size_t i_;
  std::size_t j_;
};

/// Truth value of p at state psi (the Born value of p's projector).
double pf_eval(const PropFunction& p, const StateVector& psi,
               const Tolerances& tol = {});

PropFunction pf_neg(const PropFunction& p);

/// sup_psi [v(p) + v(q)] <= 1, decided by lambda_max(P + Q) <= 1 + tol.
/// The equivalent algebraic test ||PQ||_F <= tol is evaluated as well;
/// NumericalError is thrown if the two disagree.
bool pf_exclusive(const PropFunction& p, const PropFunction& q,
                  const Tolerances& tol = {});

/// Lukasiewicz disjunction of a pairwise exclusive family: the orthogonal
/// sum of the projectors. Throws NotExclusive(i, j) for the first offending
/// pair, ValidationError for an empty family.
PropFunction pf_disj_exclusive(std::span<const PropFunction> family,
                               const Tolerances& tol = {});

/// True unless p is exclusive with itself while not being F.
bool only_F_self_exclusive(const PropFunction& p, const Tolerances& tol = {});

struct ConditionResult {
  bool passed = true;
  /// Largest deviation observed; non-negative.
  double worst_residual = 0;
  std::size_t checks = 0;
};

struct TheoremReport {
  std::size_t dim = 0;
  std::size_t n_state_samples = 0;
  std::size_t n_family_samples = 0;
  std::uint64_t seed = 0;
  /// 1. F belongs to the family.
  /// 2. Closure under negation.
  /// 3. Closure under disjunction of pairwise exclusive members.
  /// 4. F is the only self-exclusive member.
  std::array<ConditionResult, 4> conditions{};

  bool all_passed() const;
};

/// Sampling-based check of the four structural conditions on the family of
/// propositional functions induced by projectors in dimension `dim`.
///
/// Draws `n_state_samples` Haar-random states and `n_family_samples`
/// random projectors (rank uniform in 0..dim) and the same number of
/// random pairwise orthogonal families (size 1..dim). Every sample has its
/// own random stream derived from (seed, sample index). Failures are
/// reported, never thrown.
TheoremReport verify_conditions(std::size_t dim, std::size_t n_state_samples,
                                std::size_t n_family_samples,
                                std::uint64_t seed, const Tolerances& tol = {});

/// Random projector with rank drawn uniformly from {0, ..., dim}.
Projector random_projector(std::size_t dim, std::mt19937_64& rng,
                           double rank_tol = 1e-9);

}  // namespace lukq
