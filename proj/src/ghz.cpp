#include "lukq/ghz.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace lukq {

namespace {

PauliAxis axis_of(char c) {
  switch (c) {
    case 'X': return PauliAxis::X;
    case 'Y': return PauliAxis::Y;
    default:
      throw ValidationError(std::string("GHZ pattern letter must be X or Y, got '") +
                            c + "'");
  }
}

void check_pattern(std::string_view pattern) {
  if (pattern.size() != kGhzSites) {
    throw ValidationError("GHZ pattern must have three letters: \"" +
                          std::string(pattern) + "\"");
  }
  for (char c : pattern) axis_of(c);
}

std::string atom_name(char axis, std::size_t site) {
  return std::string(1, static_cast<char>(axis - 'A' + 'a')) + std::to_string(site);
}

}  // namespace

StateVector ghz_state(int phase) {
  if (phase != 1 && phase != -1) {
    throw ValidationError("GHZ phase must be +1 or -1, got " + std::to_string(phase));
  }
  CVector v = CVector::Zero(kGhzDim);
  v(0) = 1.0 / std::sqrt(2.0);
  v(kGhzDim - 1) = static_cast<double>(phase) / std::sqrt(2.0);
  return StateVector::from_unit(std::move(v));
}

GhzObservable ghz_observable(std::string_view pattern) {
  check_pattern(pattern);
  std::vector<CMatrix> factors;
  for (char c : pattern) factors.push_back(pauli_matrix(axis_of(c)));
  return {std::string(pattern), HermitianOperator::from_matrix(kron(factors))};
}

std::array<double, 4> ghz_expectations(const StateVector& psi) {
  if (psi.dim() != kGhzDim) throw DimensionMismatch(psi.dim(), kGhzDim);
  std::array<double, 4> out{};
  const CVector& v = psi.amplitudes();
  for (std::size_t k = 0; k < kGhzPatterns.size(); ++k) {
    out[k] = v.dot(ghz_observable(kGhzPatterns[k]).op.matrix() * v).real();
  }
  return out;
}

int ClassicalAssignment::value(char axis, std::size_t site) const {
  if (site < 1 || site > kGhzSites) {
    throw IndexOutOfRange("particle index " + std::to_string(site) + " is not in 1..3");
  }
  switch (axis) {
    case 'X': return x[site - 1];
    case 'Y': return y[site - 1];
    default: throw ValidationError(std::string("unknown axis '") + axis + "'");
  }
}

std::vector<ClassicalAssignment> all_classical_assignments() {
  std::vector<ClassicalAssignment> out;
  out.reserve(64);
  for (unsigned index = 0; index < 64; ++index) {
    ClassicalAssignment a;
    for (std::size_t k = 0; k < 6; ++k) {
      int v = ((index >> (5 - k)) & 1U) != 0 ? -1 : +1;
      (k < 3 ? a.x[k] : a.y[k - 3]) = v;
    }
    out.push_back(a);
  }
  return out;
}

bool satisfies(const ClassicalAssignment& a, const ProductConstraint& c) {
  check_pattern(c.pattern);
  int product = 1;
  for (std::size_t site = 1; site <= kGhzSites; ++site) {
    product *= a.value(c.pattern[site - 1], site);
  }
  return product == c.rhs;
}

ClassicalSearch classical_search(std::span<const ProductConstraint> constraints) {
  ClassicalSearch out;
  for (const auto& c : constraints) {
    check_pattern(c.pattern);
    if (c.rhs != 1 && c.rhs != -1) throw ValidationError("constraint value must be +-1");
    out.rhs_product *= c.rhs;
  }

  std::optional<int> common;
  bool constant = true;
  for (const auto& a : all_classical_assignments()) {
    ++out.examined;
    int lhs = 1;
    bool all = true;
    for (const auto& c : constraints) {
      int product = 1;
      for (std::size_t site = 1; site <= kGhzSites; ++site) {
        product *= a.value(c.pattern[site - 1], site);
      }
      lhs *= product;
      all = all && product == c.rhs;
    }
    if (all) out.solutions.push_back(a);
    if (!common) common = lhs;
    constant = constant && *common == lhs;
  }
  if (constant) out.lhs_product = common;
  return out;
}

std::vector<ProductConstraint> ghz_constraints() {
  std::vector<ProductConstraint> out;
  for (std::size_t k = 0; k < kGhzPatterns.size(); ++k) {
    out.push_back({std::string(kGhzPatterns[k]), kGhzOutcomes[k]});
  }
  return out;
}

ClassicalSearch classical_exhaustive() {
  auto constraints = ghz_constraints();
  return classical_search(constraints);
}

Assignment crisp_encoding(const ClassicalAssignment& a) {
  Assignment out;
  for (std::size_t site = 1; site <= kGhzSites; ++site) {
    for (char axis : {'X', 'Y'}) {
      out.emplace(atom_name(axis, site),
                  a.value(axis, site) == 1 ? TruthValue::one() : TruthValue::zero());
    }
  }
  return out;
}

XorSystemCheck xor_system_check() {
  XorSystemCheck out;
  std::string aggregate;
  for (std::size_t k = 0; k < kGhzPatterns.size(); ++k) {
    std::string text;
    for (std::size_t site = 1; site <= kGhzSites; ++site) {
      if (site > 1) text += " ^ ";
      text += atom_name(kGhzPatterns[k][site - 1], site);
    }
    out.lhs[k] = parse(text);
    out.rhs[k] = Formula::constant(kGhzOutcomes[k] == 1);
    if (k > 0) aggregate += " ^ ";
    aggregate += "(" + text + ")";
  }
  out.aggregate_lhs = parse(aggregate);

  out.aggregate_lhs_always_false = true;
  for (const auto& a : all_classical_assignments()) {
    ++out.examined;
    Assignment crisp = crisp_encoding(a);
    bool all = true;
    for (std::size_t k = 0; k < out.lhs.size(); ++k) {
      all = all && evaluate(out.lhs[k], crisp) == evaluate(out.rhs[k], crisp);
    }
    if (all) ++out.satisfying;
    if (!evaluate(out.aggregate_lhs, crisp).is_zero()) {
      out.aggregate_lhs_always_false = false;
    }
  }
  out.aggregate_rhs = evaluate(parse("V ^ V ^ V ^ F"), {});
  return out;
}

Projector spin_up_projector(PauliAxis axis, std::size_t site, std::size_t n_sites) {
  CMatrix sigma = pauli_embed(axis, site, n_sites).matrix();
  CMatrix id = CMatrix::Identity(sigma.rows(), sigma.cols());
  return Projector::from_matrix((id + sigma) * 0.5);
}

std::array<ElementaryDegree, 6> elementary_degrees(const StateVector& psi) {
  if (psi.dim() != kGhzDim) throw DimensionMismatch(psi.dim(), kGhzDim);
  std::array<ElementaryDegree, 6> out;
  std::size_t k = 0;
  for (char axis : {'X', 'Y'}) {
    for (std::size_t site = 1; site <= kGhzSites; ++site, ++k) {
      Projector up = spin_up_projector(axis_of(axis), site, kGhzSites);
      out[k].name = std::string(1, axis) + std::to_string(site);
      out[k].up = born_value(up, psi);
      out[k].down = born_value(orthocomplement(up), psi);
    }
  }
  return out;
}

GhzReport ghz_report(int phase) {
  GhzReport r;
  r.phase = phase;
  r.state = ghz_state(phase);
  r.expectations = ghz_expectations(r.state);

  ClassicalSearch classical = classical_exhaustive();
  r.classical_solutions = classical.solutions.size();
  r.classical_examined = classical.examined;
  r.lhs_product = classical.lhs_product.value_or(0);
  r.rhs_product = classical.rhs_product;

  XorSystemCheck xs = xor_system_check();
  r.xor_satisfying = xs.satisfying;
  r.xor_examined = xs.examined;
  r.xor_aggregate_lhs_always_false = xs.aggregate_lhs_always_false;
  r.xor_aggregate_rhs = xs.aggregate_rhs;

  r.degrees = elementary_degrees(r.state);

  bool none_crisp = std::all_of(r.degrees.begin(), r.degrees.end(),
                                [](const ElementaryDegree& d) {
                                  return d.up > 1e-9 && d.up < 1.0 - 1e-9;
                                });
  std::ostringstream c;
  c << r.classical_solutions << " of " << r.classical_examined
    << " +-1 preassignments of X1..Y3 satisfy the four product equations;"
       " the left-hand sides multiply to "
    << r.lhs_product << ", the right-hand sides to " << r.rhs_product << ". ";
  if (none_crisp) {
    c << "Every single-particle spin proposition has a degree strictly between"
         " 0 and 1, so none is crisp and the XOR system cannot be formed.";
  } else {
    c << "Some single-particle spin proposition is crisp in this state.";
  }
  r.conclusion = c.str();
  return r;
}

}  // namespace lukq
