#pragma once

// The three-particle GHZ argument, three ways: quantum expectation values
// of the four X/Y product observables, exhaustive search for a classical
// +-1 preassignment, the same system recast as crisp XOR formulas, and the
// Born-rule degrees of the six single-particle spin propositions.

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lukq/formula.hpp"
#include "lukq/hilbert.hpp"

namespace lukq {

inline constexpr std::size_t kGhzSites = 3;
inline constexpr std::size_t kGhzDim = 8;

/// Observable patterns in the order X1Y2Y3, Y1X2Y3, Y1Y2X3, X1X2X3, and the
/// product values quantum mechanics assigns to them in the default state.
inline constexpr std::array<std::string_view, 4> kGhzPatterns{"XYY", "YXY", "YYX", "XXX"};
inline constexpr std::array<int, 4> kGhzOutcomes{+1, +1, +1, -1};

/// Phase giving the sign pattern (+1, +1, +1, -1) under this library's
/// Pauli and basis conventions. The state (|000> + |111>)/sqrt2 yields the
/// opposite signs.
inline constexpr int kDefaultGhzPhase = -1;

/// (|000> + phase |111>) / sqrt2. Throws ValidationError unless phase is +-1.
StateVector ghz_state(int phase = kDefaultGhzPhase);

struct GhzObservable {
  std::string pattern;
  HermitianOperator op;
};

/// Tensor product of per-site Pauli X/Y for a three-letter pattern.
GhzObservable ghz_observable(std::string_view pattern);

/// <psi|O|psi> for each pattern in kGhzPatterns.
std::array<double, 4> ghz_expectations(const StateVector& psi);

/// A +-1 preassignment of outcomes, index 0..2 for particles 1..3.
struct ClassicalAssignment {
  std::array<int, 3> x{};
  std::array<int, 3> y{};

  int value(char axis, std::size_t site) const;
  friend bool operator==(const ClassicalAssignment&, const ClassicalAssignment&) = default;
};

/// "The product over the pattern's factors equals rhs".
struct ProductConstraint {
  std::string pattern;
  int rhs = 1;
};

/// All 64 assignments in canonical order: the index bits, most significant
/// first, are X1 X2 X3 Y1 Y2 Y3 with bit 0 meaning +1 and bit 1 meaning -1.
std::vector<ClassicalAssignment> all_classical_assignments();

bool satisfies(const ClassicalAssignment& a, const ProductConstraint& c);

struct ClassicalSearch {
  std::vector<ClassicalAssignment> solutions;
  std::size_t examined = 0;
  /// Product of all left-hand sides when it is the same for every
  /// assignment (every symbol then occurs an even number of times).
  std::optional<int> lhs_product;
  int rhs_product = 1;
};

ClassicalSearch classical_search(std::span<const ProductConstraint> constraints);
/// The four GHZ product equations.
std::vector<ProductConstraint> ghz_constraints();
ClassicalSearch classical_exhaustive();

/// Crisp encoding of outcomes as truth values: +1 -> 1, -1 -> 0, bound to
/// atoms x1 x2 x3 y1 y2 y3.
Assignment crisp_encoding(const ClassicalAssignment& a);

struct XorSystemCheck {
  /// Left-hand sides, e.g. "x1 ^ y2 ^ y3", and right-hand constants.
  std::array<Formula, 4> lhs;
  std::array<Formula, 4> rhs;
  std::size_t satisfying = 0;
  std::size_t examined = 0;
  /// XOR of all four left-hand sides, and whether it was 0 under every
  /// crisp assignment.
  Formula aggregate_lhs;
  bool aggregate_lhs_always_false = false;
  /// v(V ^ V ^ V ^ F)
  TruthValue aggregate_rhs;
};

XorSystemCheck xor_system_check();

struct ElementaryDegree {
  std::string name;  // "X1" .. "Y3"
  double up = 0;     // degree of "spin of particle i along D is up"
  double down = 0;   // degree of its negation
};

/// (I + sigma_axis)/2 at `site` of an `n_sites` register.
Projector spin_up_projector(PauliAxis axis, std::size_t site, std::size_t n_sites);

/// Degrees in the order X1, X2, X3, Y1, Y2, Y3.
std::array<ElementaryDegree, 6> elementary_degrees(const StateVector& psi);

struct GhzReport {
  int phase = kDefaultGhzPhase;
  StateVector state = ghz_state(kDefaultGhzPhase);
  std::array<double, 4> expectations{};
  std::size_t classical_solutions = 0;
  std::size_t classical_examined = 0;
  int lhs_product = 1;
  int rhs_product = 1;
  std::size_t xor_satisfying = 0;
  std::size_t xor_examined = 0;
  bool xor_aggregate_lhs_always_false = false;
  TruthValue xor_aggregate_rhs;
  std::array<ElementaryDegree, 6> degrees{};
  std::string conclusion;
};

GhzReport ghz_report(int phase = kDefaultGhzPhase);

}  // namespace lukq
