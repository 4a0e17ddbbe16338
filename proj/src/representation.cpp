#include "lukq/representation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace lukq {

namespace {

// Random stream tags for verify_conditions.
constexpr std::uint64_t kStateStream = 1;
constexpr std::uint64_t kProjectorStream = 2;
constexpr std::uint64_t kFamilyStream = 3;

std::string label_or(const PropFunction& p, const char* fallback) {
  return p.label().value_or(fallback);
}

void record(ConditionResult& c, double residual, bool ok) {
  ++c.checks;
  if (std::isnan(residual)) residual = std::numeric_limits<double>::infinity();
  c.worst_residual = std::max(c.worst_residual, residual);
  c.passed = c.passed && ok;
}

// Random pairwise orthogonal family: a random orthonormal basis whose
// vectors are dealt into `size` members or left unused.
std::vector<PropFunction> random_orthogonal_family(std::size_t dim,
                                                   std::mt19937_64& rng,
                                                   double rank_tol) {
  std::uniform_int_distribution<std::size_t> size_dist(1, dim);
  std::size_t size = size_dist(rng);

  CMatrix columns(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t j = 0; j < dim; ++j) {
    columns.col(static_cast<Eigen::Index>(j)) = random_state(dim, rng).amplitudes();
  }
  CMatrix basis = orthonormalize(columns, rank_tol);

  std::uniform_int_distribution<std::size_t> slot(0, size);  // size = unused
  std::vector<std::vector<Eigen::Index>> groups(size);
  for (Eigen::Index j = 0; j < basis.cols(); ++j) {
    std::size_t g = slot(rng);
    if (g < size) groups[g].push_back(j);
  }

  std::vector<PropFunction> family;
  for (const auto& g : groups) {
    CMatrix b(basis.rows(), static_cast<Eigen::Index>(g.size()));
    for (std::size_t k = 0; k < g.size(); ++k) {
      b.col(static_cast<Eigen::Index>(k)) = basis.col(g[k]);
    }
    family.emplace_back(Projector::from_orthonormal_basis(b));
  }
  return family;
}

}  // namespace

PropFunction::PropFunction(Projector projector, std::optional<std::string> label)
    : projector_(std::move(projector)), label_(std::move(label)) {}

PropFunction PropFunction::always_false(std::size_t dim) {
  return PropFunction(Projector::zero(dim), "F");
}

PropFunction PropFunction::always_true(std::size_t dim) {
  return PropFunction(Projector::identity(dim), "V");
}

NotExclusive::NotExclusive(std::size_t i, std::size_t j)
    : ValidationError("propositional functions " + std::to_string(i) + " and " +
                      std::to_string(j) + " are not exclusive"),
      i_(i),
      j_(j) {}

double pf_eval(const PropFunction& p, const StateVector& psi,
               const Tolerances& tol) {
  return born_value(p.projector(), psi, tol.construction);
}

PropFunction pf_neg(const PropFunction& p) {
  std::optional<std::string> label;
  if (p.label()) label = "~" + *p.label();
  return PropFunction(orthocomplement(p.projector()), std::move(label));
}

bool pf_exclusive(const PropFunction& p, const PropFunction& q,
                  const Tolerances& tol) {
  if (p.dim() != q.dim()) throw DimensionMismatch(p.dim(), q.dim());
  const CMatrix& pm = p.projector().matrix();
  const CMatrix& qm = q.projector().matrix();
  CMatrix sum = pm + qm;
  double top = lambda_max(
      HermitianOperator::from_matrix((sum + sum.adjoint()) * 0.5));
  bool spectral = top <= 1.0 + tol.construction;
  bool algebraic = (pm * qm).norm() <= tol.construction;
  if (spectral != algebraic) {
    throw NumericalError("exclusivity tests disagree for " +
                         label_or(p, "p") + " and " + label_or(q, "q") +
                         " (lambda_max(P+Q) = " + std::to_string(top) +
                         ", ||PQ||_F = " + std::to_string((pm * qm).norm()) + ")");
  }
  return spectral;
}

PropFunction pf_disj_exclusive(std::span<const PropFunction> family,
                               const Tolerances& tol) {
  if (family.empty()) {
    throw ValidationError("disjunction of an empty family: dimension unknown");
  }
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      if (!pf_exclusive(family[i], family[j], tol)) throw NotExclusive(i, j);
    }
  }
  CMatrix sum = family.front().projector().matrix();
  bool labelled = family.front().label().has_value();
  std::string label = labelled ? *family.front().label() : "";
  for (std::size_t i = 1; i < family.size(); ++i) {
    sum += family[i].projector().matrix();
    labelled = labelled && family[i].label().has_value();
    if (labelled) label += " | " + *family[i].label();
  }
  std::optional<std::string> out_label;
  if (labelled) out_label = std::move(label);
  return PropFunction(Projector::from_matrix(std::move(sum), tol.construction),
                      std::move(out_label));
}

bool only_F_self_exclusive(const PropFunction& p, const Tolerances& tol) {
  const CMatrix& m = p.projector().matrix();
  bool self_exclusive =
      lambda_max(HermitianOperator::from_matrix(m + m.adjoint())) <=
      1.0 + tol.construction;
  if (!self_exclusive) return true;
  return p.projector().rank() == 0 && m.norm() <= tol.construction;
}

Projector random_projector(std::size_t dim, std::mt19937_64& rng,
                           double rank_tol) {
  std::uniform_int_distribution<std::size_t> rank_dist(0, dim);
  std::size_t rank = rank_dist(rng);
  std::vector<StateVector> vectors;
  vectors.reserve(rank);
  for (std::size_t k = 0; k < rank; ++k) vectors.push_back(random_state(dim, rng));
  return projector_from_vectors(vectors, dim, rank_tol);
}

bool TheoremReport::all_passed() const {
  return std::all_of(conditions.begin(), conditions.end(),
                     [](const ConditionResult& c) { return c.passed; });
}

TheoremReport verify_conditions(std::size_t dim, std::size_t n_state_samples,
                                std::size_t n_family_samples,
                                std::uint64_t seed, const Tolerances& tol) {
  if (dim == 0) throw ValidationError("verify_conditions: dim must be positive");

  TheoremReport report;
  report.dim = dim;
  report.n_state_samples = n_state_samples;
  report.n_family_samples = n_family_samples;
  report.seed = seed;
  auto& [c1, c2, c3, c4] = report.conditions;

  std::vector<StateVector> states;
  states.reserve(n_state_samples);
  for (std::size_t i = 0; i < n_state_samples; ++i) {
    auto rng = make_stream(seed, kStateStream, i);
    states.push_back(random_state(dim, rng));
  }

  // Evaluations that fail numerically count as infinite residuals.
  auto eval = [&](const PropFunction& p, const StateVector& psi) {
    try {
      return pf_eval(p, psi, tol);
    } catch (const NumericalError&) {
      return std::numeric_limits<double>::quiet_NaN();
    }
  };

  const PropFunction f = PropFunction::always_false(dim);
  const PropFunction v = PropFunction::always_true(dim);

  // 1. F is a member: its matrix is the zero projector and it is 0 everywhere.
  {
    double r = f.projector().matrix().norm();
    record(c1, r, r <= tol.construction);
    for (const auto& psi : states) {
      double x = std::abs(eval(f, psi));
      record(c1, x, x <= tol.identity);
    }
  }

  std::vector<PropFunction> sampled{f, v};
  for (std::size_t j = 0; j < n_family_samples; ++j) {
    auto rng = make_stream(seed, kProjectorStream, j);
    sampled.emplace_back(random_projector(dim, rng, tol.construction));
  }

  // 2. Closure under negation, pointwise 1 - v.
  for (const auto& p : sampled) {
    PropFunction neg = pf_neg(p);
    double defect = projector_defects(neg.projector().matrix()).worst();
    record(c2, defect, defect <= tol.construction);
    for (const auto& psi : states) {
      double x = std::abs(eval(neg, psi) - (1.0 - eval(p, psi)));
      record(c2, x, x <= tol.identity);
    }
  }

  // 3. Closure under disjunction of pairwise exclusive families, pointwise
  //    min(sum v_i, 1).
  for (std::size_t j = 0; j < n_family_samples; ++j) {
    auto rng = make_stream(seed, kFamilyStream, j);
    auto family = random_orthogonal_family(dim, rng, tol.construction);
    std::optional<PropFunction> sum;
    try {
      sum = pf_disj_exclusive(family, tol);
    } catch (const Error&) {
      record(c3, std::numeric_limits<double>::infinity(), false);
      continue;
    }
    double defect = projector_defects(sum->projector().matrix()).worst();
    record(c3, defect, defect <= tol.construction);
    for (const auto& psi : states) {
      double total = 0;
      for (const auto& member : family) total += eval(member, psi);
      double x = std::abs(eval(*sum, psi) - std::min(total, 1.0));
      record(c3, x, x <= tol.identity);
    }
  }

  // 4. Only F is exclusive with itself. The residual is the size of any
  //    self-exclusive member, which must be zero.
  for (const auto& p : sampled) {
    bool ok = only_F_self_exclusive(p, tol);
    const CMatrix& m = p.projector().matrix();
    bool self_exclusive =
        lambda_max(HermitianOperator::from_matrix(m + m.adjoint())) <=
        1.0 + tol.construction;
    record(c4, self_exclusive ? m.norm() : 0.0, ok);
  }

  return report;
}

}  // namespace lukq
