#include <doctest.h>

#include <cmath>
#include <random>

#include "lukq/ghz.hpp"
#include "lukq/io.hpp"

using namespace lukq;

namespace {

// Applies a product of X/Y to a three-qubit vector by flipping bits, with
// site 1 as the most significant bit. Y|0> = i|1>, Y|1> = -i|0>.
CVector apply_pattern(const std::string& pattern, const CVector& v) {
  CVector out = CVector::Zero(8);
  for (unsigned b = 0; b < 8; ++b) {
    unsigned target = b;
    Complex factor = 1.0;
    for (unsigned site = 0; site < 3; ++site) {
      unsigned mask = 1U << (2 - site);
      bool one = (b & mask) != 0;
      target ^= mask;
      if (pattern[site] == 'Y') factor *= one ? Complex(0, -1) : Complex(0, 1);
    }
    out(target) += factor * v(b);
  }
  return out;
}

double oracle_expectation(const std::string& pattern, const CVector& v) {
  return v.dot(apply_pattern(pattern, v)).real();
}

int classical_product(const ClassicalAssignment& a, const std::string& pattern) {
  int p = 1;
  for (std::size_t s = 0; s < 3; ++s) p *= pattern[s] == 'X' ? a.x[s] : a.y[s];
  return p;
}

std::size_t brute_force(const std::vector<std::pair<std::string, int>>& eqs) {
  std::size_t count = 0;
  for (unsigned idx = 0; idx < 64; ++idx) {
    ClassicalAssignment a;
    for (std::size_t s = 0; s < 3; ++s) {
      a.x[s] = (idx >> (5 - s)) & 1U ? -1 : 1;
      a.y[s] = (idx >> (2 - s)) & 1U ? -1 : 1;
    }
    bool ok = true;
    for (const auto& [pat, rhs] : eqs) ok = ok && classical_product(a, pat) == rhs;
    count += ok;
  }
  return count;
}

}  // namespace

TEST_CASE("ghz_state amplitudes") {
  auto psi = ghz_state();
  const double r = 1.0 / std::sqrt(2.0);
  for (Eigen::Index i = 0; i < 8; ++i) {
    double expected = i == 0 ? r : (i == 7 ? -r : 0.0);
    CHECK(std::abs(psi.amplitudes()(i) - Complex(expected, 0)) < 1e-15);
  }
  CHECK(std::abs(ghz_state(+1).amplitudes()(7).real() - r) < 1e-15);
  CHECK_THROWS_AS(ghz_state(2), ValidationError);
}

TEST_CASE("expectations match the bit-flip oracle") {
  for (int phase : {-1, +1}) {
    auto psi = ghz_state(phase);
    auto e = ghz_expectations(psi);
    for (std::size_t k = 0; k < 4; ++k) {
      std::string pat(kGhzPatterns[k]);
      CHECK(std::abs(e[k] - oracle_expectation(pat, psi.amplitudes())) < 1e-12);
      int expected = phase == kDefaultGhzPhase ? kGhzOutcomes[k] : -kGhzOutcomes[k];
      CHECK(std::abs(e[k] - expected) < 1e-9);
    }
  }
  auto rng = make_stream(11);
  for (int i = 0; i < 20; ++i) {
    auto psi = random_state(8, rng);
    auto e = ghz_expectations(psi);
    for (std::size_t k = 0; k < 4; ++k) {
      CHECK(std::abs(e[k] - oracle_expectation(std::string(kGhzPatterns[k]), psi.amplitudes())) <
            1e-12);
    }
  }
  CVector zero = CVector::Zero(8);
  zero(0) = 1;
  for (double x : ghz_expectations(StateVector::from_unit(zero))) CHECK(std::abs(x) < 1e-15);
  CHECK_THROWS_AS(ghz_expectations(random_state(4, rng)), DimensionMismatch);
}

TEST_CASE("observables are commuting involutions with the GHZ state as eigenvector") {
  std::vector<CMatrix> ops;
  for (auto pat : kGhzPatterns) ops.push_back(ghz_observable(pat).op.matrix());
  auto psi = ghz_state().amplitudes();
  for (std::size_t k = 0; k < ops.size(); ++k) {
    CHECK((ops[k] * ops[k] - CMatrix::Identity(8, 8)).norm() < 1e-12);
    Eigen::SelfAdjointEigenSolver<CMatrix> es(ops[k]);
    for (Eigen::Index i = 0; i < 8; ++i) CHECK(std::abs(std::abs(es.eigenvalues()(i)) - 1.0) < 1e-12);
    for (std::size_t l = 0; l < ops.size(); ++l) {
      CHECK((ops[k] * ops[l] - ops[l] * ops[k]).norm() < 1e-12);
    }
    CHECK((ops[k] * psi - kGhzOutcomes[k] * psi).norm() < 1e-12);
  }
  CHECK_THROWS_AS(ghz_observable("XZY"), ValidationError);
  CHECK_THROWS_AS(ghz_observable("XY"), ValidationError);
}

TEST_CASE("classical search") {
  auto all = all_classical_assignments();
  CHECK(all.size() == 64);
  CHECK(all.front().x == std::array<int, 3>{1, 1, 1});
  CHECK(all.back().y == std::array<int, 3>{-1, -1, -1});
  CHECK(all[1].y == std::array<int, 3>{1, 1, -1});
  CHECK(all[32].x == std::array<int, 3>{-1, 1, 1});

  auto search = classical_exhaustive();
  CHECK(search.solutions.empty());
  CHECK(search.examined == 64);
  REQUIRE(search.lhs_product.has_value());
  CHECK(*search.lhs_product == 1);
  CHECK(search.rhs_product == -1);

  std::vector<std::pair<std::string, int>> eqs{{"XYY", 1}, {"YXY", 1}, {"YYX", 1}, {"XXX", -1}};
  CHECK(brute_force(eqs) == 0);

  // Flipping the last equation makes the system solvable; three are independent.
  std::vector<ProductConstraint> relaxed{{"XYY", 1}, {"YXY", 1}, {"YYX", 1}, {"XXX", 1}};
  CHECK(classical_search(relaxed).solutions.size() == 8);
  eqs.back().second = 1;
  CHECK(brute_force(eqs) == 8);
  std::vector<ProductConstraint> single{{"XYY", 1}};
  auto one = classical_search(single);
  CHECK(one.solutions.size() == 32);
  CHECK_FALSE(one.lhs_product.has_value());
}

TEST_CASE("satisfies agrees with the crisp XOR reading") {
  auto constraints = ghz_constraints();
  auto xs = xor_system_check();
  for (const auto& a : all_classical_assignments()) {
    auto crisp = crisp_encoding(a);
    for (std::size_t k = 0; k < 4; ++k) {
      bool formula_holds = evaluate(xs.lhs[k], crisp) == evaluate(xs.rhs[k], crisp);
      CHECK(satisfies(a, constraints[k]) == formula_holds);
    }
  }
}

TEST_CASE("xor system") {
  auto xs = xor_system_check();
  CHECK(xs.satisfying == 0);
  CHECK(xs.examined == 64);
  CHECK(format(xs.lhs[0]) == "x1 ^ y2 ^ y3");
  CHECK(format(xs.lhs[3]) == "x1 ^ x2 ^ x3");
  CHECK(xs.rhs[3] == Formula::constant(false));
  CHECK(xs.aggregate_lhs_always_false);
  CHECK(xs.aggregate_rhs == TruthValue::one());

  std::mt19937_64 rng(12);
  std::uniform_int_distribution<unsigned> pick(0, 63);
  auto all = all_classical_assignments();
  for (int i = 0; i < 10; ++i) {
    CHECK(evaluate(xs.aggregate_lhs, crisp_encoding(all[pick(rng)])).is_zero());
  }
}

TEST_CASE("elementary degrees") {
  for (int phase : {-1, +1}) {
    auto degrees = elementary_degrees(ghz_state(phase));
    const char* names[] = {"X1", "X2", "X3", "Y1", "Y2", "Y3"};
    for (std::size_t k = 0; k < 6; ++k) {
      CHECK(degrees[k].name == names[k]);
      CHECK(std::abs(degrees[k].up - 0.5) <= 1e-12);
      CHECK(std::abs(degrees[k].down - 0.5) <= 1e-12);
      CHECK(std::abs(degrees[k].up + degrees[k].down - 1.0) <= 1e-12);
    }
  }
  CVector zero = CVector::Zero(8);
  zero(0) = 1;
  auto d = elementary_degrees(StateVector::from_unit(zero));
  CHECK(std::abs(d[0].up - 0.5) <= 1e-12);

  // Z-basis spin up at site 1 is the top half of the diagonal.
  auto up_x = spin_up_projector(PauliAxis::X, 1, 3);
  CHECK(up_x.rank() == 4);
}

TEST_CASE("ghz_report is deterministic and survives a JSON round trip") {
  auto a = io::to_json(ghz_report());
  auto b = io::to_json(ghz_report());
  CHECK(a.dump() == b.dump());
  CHECK(a["classical_solutions"] == 0);
  CHECK(a["degrees"]["Y2"] == "1/2");
  CHECK(a["parity"]["rhs_product"] == -1);
  auto again = io::to_json(io::ghz_report_from_json(a));
  CHECK(again == a);
  CHECK(ghz_report().conclusion.find("none is crisp") != std::string::npos);
}
