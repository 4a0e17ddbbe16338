#include "lukq/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace lukq::io {

namespace {

[[noreturn]] void invalid(const std::string& what, const std::string& why) {
  throw ValidationError(what + ": " + why);
}

const json& field(const json& j, const char* key, const std::string& what) {
  if (!j.is_object()) invalid(what, "expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) invalid(what, std::string("missing field '") + key + "'");
  return *it;
}

std::size_t dim_field(const json& j, const std::string& what) {
  const json& d = field(j, "dim", what);
  if (!d.is_number_integer() || d.get<long long>() < 1) {
    invalid(what, "'dim' must be a positive integer");
  }
  return d.get<std::size_t>();
}

Complex complex_from_json(const json& j, const std::string& what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    invalid(what, "complex entries must be [re, im] number pairs");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

json complex_to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

std::string shortest(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

}  // namespace

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open file '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json read_json_file(const std::filesystem::path& path) {
  std::string text = read_text_file(path);
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError("invalid JSON in '" + path.string() + "': " + e.what());
  }
}

Assignment assignment_from_json(const json& j) {
  const std::string what = "assignment";
  const json& a = field(j, "atoms", what);
  if (!a.is_object()) invalid(what, "'atoms' must be an object");
  Assignment out;
  for (const auto& [name, value] : a.items()) {
    try {
      if (value.is_string()) {
        out.emplace(name, TruthValue::parse(value.get<std::string>()));
      } else if (value.is_number_integer()) {
        out.emplace(name, TruthValue(value.get<std::int64_t>(), 1));
      } else {
        invalid(what, "value of '" + name + "' must be a string like \"1/2\"");
      }
    } catch (const OutOfRange& e) {
      invalid(what, "atom '" + name + "': " + e.what());
    }
  }
  return out;
}

json state_to_json(const StateVector& psi) {
  json amps = json::array();
  for (Eigen::Index i = 0; i < psi.amplitudes().size(); ++i) {
    amps.push_back(complex_to_json(psi.amplitudes()(i)));
  }
  return {{"dim", psi.dim()}, {"amplitudes", std::move(amps)}};
}

StateVector state_from_json(const json& j, double tol) {
  const std::string what = "state";
  std::size_t dim = dim_field(j, what);
  const json& amps = field(j, "amplitudes", what);
  if (!amps.is_array() || amps.size() != dim) {
    invalid(what, "'amplitudes' must hold exactly dim = " + std::to_string(dim) +
                      " entries");
  }
  CVector v(static_cast<Eigen::Index>(dim));
  for (std::size_t i = 0; i < dim; ++i) {
    v(static_cast<Eigen::Index>(i)) = complex_from_json(amps[i], what);
  }
  try {
    return StateVector::from_unit(std::move(v), tol);
  } catch (const InvariantViolation& e) {
    invalid(what, std::string("unit norm violated: ") + e.what());
  }
}

json projector_to_json(const Projector& p) {
  json rows = json::array();
  const CMatrix& m = p.matrix();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return {{"dim", p.dim()}, {"matrix", std::move(rows)}};
}

Projector projector_from_json(const json& j, double tol) {
  const std::string what = "projector";
  std::size_t dim = dim_field(j, what);
  const json& rows = field(j, "matrix", what);
  if (!rows.is_array() || rows.size() != dim) {
    invalid(what, "'matrix' must have dim = " + std::to_string(dim) + " rows");
  }
  auto n = static_cast<Eigen::Index>(dim);
  CMatrix m(n, n);
  for (std::size_t r = 0; r < dim; ++r) {
    if (!rows[r].is_array() || rows[r].size() != dim) {
      invalid(what, "row " + std::to_string(r) + " must have dim entries");
    }
    for (std::size_t c = 0; c < dim; ++c) {
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          complex_from_json(rows[r][c], what);
    }
  }
  try {
    return Projector::from_matrix(std::move(m), tol);
  } catch (const InvariantViolation& e) {
    invalid(what, e.what());
  }
}

std::string format_degree(double x, double tol) {
  for (int den = 1; den <= 64; ++den) {
    double num = std::round(x * den);
    if (std::abs(x - num / den) <= tol) {
      return Rational(static_cast<long long>(num), den).str();
    }
  }
  return shortest(x);
}

double parse_degree(const std::string& text) {
  if (text.find('/') != std::string::npos) {
    return TruthValue::parse(text).to_double();
  }
  double x = 0;
  auto res = std::from_chars(text.data(), text.data() + text.size(), x);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size()) {
    throw ValidationError("invalid degree \"" + text + "\"");
  }
  return x;
}

json to_json(const TheoremReport& r) {
  json out = {{"dim", r.dim},
              {"n_state_samples", r.n_state_samples},
              {"n_family_samples", r.n_family_samples},
              {"seed", r.seed}};
  for (std::size_t k = 0; k < r.conditions.size(); ++k) {
    const auto& c = r.conditions[k];
    out["condition" + std::to_string(k + 1)] = {
        {"passed", c.passed}, {"worst_residual", c.worst_residual}, {"checks", c.checks}};
  }
  out["passed"] = r.all_passed();
  return out;
}

json to_json(const GhzReport& r) {
  json state = state_to_json(r.state);
  state["phase"] = r.phase;

  json expectations = json::object();
  for (std::size_t k = 0; k < kGhzPatterns.size(); ++k) {
    expectations[std::string(kGhzPatterns[k])] = r.expectations[k];
  }
  json degrees = json::object();
  json negated = json::object();
  for (const auto& d : r.degrees) {
    degrees[d.name] = format_degree(d.up);
    negated[d.name] = format_degree(d.down);
  }
  return {
      {"state", std::move(state)},
      {"expectations", std::move(expectations)},
      {"classical_solutions", r.classical_solutions},
      {"classical_examined", r.classical_examined},
      {"parity", {{"lhs_product", r.lhs_product}, {"rhs_product", r.rhs_product}}},
      {"xor_system",
       {{"satisfying", r.xor_satisfying},
        {"examined", r.xor_examined},
        {"aggregate_lhs_always_false", r.xor_aggregate_lhs_always_false},
        {"aggregate_rhs", r.xor_aggregate_rhs.str()}}},
      {"degrees", std::move(degrees)},
      {"negated_degrees", std::move(negated)},
      {"conclusion", r.conclusion},
  };
}

GhzReport ghz_report_from_json(const json& j) {
  const std::string what = "GHZ report";
  GhzReport r;
  try {
    const json& state = field(j, "state", what);
    r.phase = field(state, "phase", what).get<int>();
    r.state = state_from_json(state);
    const json& ex = field(j, "expectations", what);
    for (std::size_t k = 0; k < kGhzPatterns.size(); ++k) {
      r.expectations[k] = field(ex, std::string(kGhzPatterns[k]).c_str(), what).get<double>();
    }
    r.classical_solutions = field(j, "classical_solutions", what).get<std::size_t>();
    r.classical_examined = field(j, "classical_examined", what).get<std::size_t>();
    const json& parity = field(j, "parity", what);
    r.lhs_product = field(parity, "lhs_product", what).get<int>();
    r.rhs_product = field(parity, "rhs_product", what).get<int>();
    const json& xs = field(j, "xor_system", what);
    r.xor_satisfying = field(xs, "satisfying", what).get<std::size_t>();
    r.xor_examined = field(xs, "examined", what).get<std::size_t>();
    r.xor_aggregate_lhs_always_false =
        field(xs, "aggregate_lhs_always_false", what).get<bool>();
    r.xor_aggregate_rhs =
        TruthValue::parse(field(xs, "aggregate_rhs", what).get<std::string>());
    const json& degrees = field(j, "degrees", what);
    const json& negated = field(j, "negated_degrees", what);
    std::size_t k = 0;
    for (char axis : {'X', 'Y'}) {
      for (int site = 1; site <= 3; ++site, ++k) {
        std::string name = std::string(1, axis) + std::to_string(site);
        r.degrees[k].name = name;
        r.degrees[k].up = parse_degree(field(degrees, name.c_str(), what).get<std::string>());
        r.degrees[k].down = parse_degree(field(negated, name.c_str(), what).get<std::string>());
      }
    }
    r.conclusion = field(j, "conclusion", what).get<std::string>();
  } catch (const json::exception& e) {
    invalid(what, e.what());
  }
  return r;
}

}  // namespace lukq::io
