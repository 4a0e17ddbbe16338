#include "lukq/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "lukq/formula.hpp"
#include "lukq/ghz.hpp"
#include "lukq/hilbert.hpp"
#include "lukq/io.hpp"
#include "lukq/representation.hpp"

namespace lukq::cli {

namespace {

using io::json;

struct Config {
  bool json_output = false;
  std::string output_path;
  std::vector<std::string> tol_specs;
  Tolerances tol;

  // eval
  std::string formula_text;
  std::string formula_file;
  std::string assign_file;

  // lattice / born
  std::string lattice_op;
  std::vector<std::string> files;
  std::string projector_file;
  std::string state_file;

  // ghz
  std::string phase = "-1";

  // verify-theorem
  std::size_t dim = 0;
  std::size_t states = 1000;
  std::size_t families = 200;
  std::uint64_t seed = 42;
};

double parse_positive(const std::string& text, const std::string& flag) {
  double x = 0;
  auto res = std::from_chars(text.data(), text.data() + text.size(), x);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size() || !(x > 0)) {
    throw ValidationError(flag + ": expected a positive number, got '" + text + "'");
  }
  return x;
}

// --tol VALUE sets the construction tolerance; --tol construction=VALUE and
// --tol identity=VALUE set either one explicitly.
Tolerances parse_tolerances(const std::vector<std::string>& specs) {
  Tolerances tol;
  for (const auto& spec : specs) {
    auto eq = spec.find('=');
    if (eq == std::string::npos) {
      tol.construction = parse_positive(spec, "--tol");
      continue;
    }
    std::string key = spec.substr(0, eq);
    double value = parse_positive(spec.substr(eq + 1), "--tol " + key);
    if (key == "construction") {
      tol.construction = value;
    } else if (key == "identity") {
      tol.identity = value;
    } else {
      throw ValidationError("--tol: unknown tolerance '" + key +
                            "' (expected construction or identity)");
    }
  }
  return tol;
}

int parse_phase(const std::string& text) {
  if (text == "+1" || text == "1") return 1;
  if (text == "-1") return -1;
  throw ValidationError("--phase: expected +1 or -1, got '" + text + "'");
}

std::string decimal(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string decimal(const TruthValue& v) { return decimal(v.to_double()); }

void print_matrix(std::ostream& os, const CMatrix& m) {
  std::ostringstream cell;
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    os << "  [";
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      const Complex z = m(r, c);
      double re = std::abs(z.real()) < 1e-15 ? 0.0 : z.real();
      double im = std::abs(z.imag()) < 1e-15 ? 0.0 : z.imag();
      cell.str("");
      cell << std::fixed << std::setprecision(6) << re << (im < 0 ? "-" : "+")
           << std::abs(im) << "i";
      os << (c ? "  " : " ") << std::setw(20) << cell.str();
    }
    os << " ]\n";
  }
}

void print_projector(std::ostream& os, const Projector& p) {
  os << "projector dim=" << p.dim() << " rank=" << p.rank() << "\n";
  print_matrix(os, p.matrix());
}

std::string sign(int x) { return x > 0 ? "+" + std::to_string(x) : std::to_string(x); }

int cmd_eval(const Config& cfg, std::ostream& out) {
  if (cfg.formula_text.empty() == cfg.formula_file.empty()) {
    throw ValidationError("eval: give exactly one of <formula> or --formula-file");
  }
  std::string text =
      cfg.formula_file.empty() ? cfg.formula_text : io::read_text_file(cfg.formula_file);
  Formula f = parse(text);
  Assignment a;
  if (!cfg.assign_file.empty()) {
    a = io::assignment_from_json(io::read_json_file(cfg.assign_file));
  }
  TruthValue v = evaluate(f, a);
  if (cfg.json_output) {
    out << json{{"formula", format(f)}, {"value", v.str()}, {"decimal", v.to_double()}}
               .dump(2)
        << "\n";
  } else {
    out << v.str() << "\t" << decimal(v) << "\n";
  }
  return kOk;
}

int cmd_lattice(const Config& cfg, std::ostream& out) {
  const std::string& op = cfg.lattice_op;
  std::size_t need = op == "neg" ? 1 : 2;
  if (cfg.files.size() != need) {
    throw ValidationError("lattice " + op + ": expected " + std::to_string(need) +
                          " projector file(s), got " + std::to_string(cfg.files.size()));
  }
  std::vector<Projector> ps;
  for (const auto& path : cfg.files) {
    ps.push_back(io::projector_from_json(io::read_json_file(path), cfg.tol.construction));
  }

  std::optional<bool> answer;
  std::optional<Projector> result;
  if (op == "neg") {
    result = orthocomplement(ps[0]);
  } else if (op == "meet") {
    result = meet(ps[0], ps[1], cfg.tol.construction);
  } else if (op == "join") {
    result = join(ps[0], ps[1], cfg.tol.construction);
  } else if (op == "leq") {
    answer = leq(ps[0], ps[1], cfg.tol.construction);
  } else {
    answer = pf_exclusive(PropFunction(ps[0]), PropFunction(ps[1]), cfg.tol);
  }

  if (answer) {
    if (cfg.json_output) {
      out << json{{"op", op}, {"result", *answer}}.dump(2) << "\n";
    } else {
      out << (*answer ? "true" : "false") << "\n";
    }
  } else if (cfg.json_output) {
    out << io::projector_to_json(*result).dump(2) << "\n";
  } else {
    print_projector(out, *result);
  }
  return kOk;
}

int cmd_born(const Config& cfg, std::ostream& out) {
  Projector p = io::projector_from_json(io::read_json_file(cfg.projector_file),
                                        cfg.tol.construction);
  StateVector psi =
      io::state_from_json(io::read_json_file(cfg.state_file), cfg.tol.construction);
  double v = born_value(p, psi, cfg.tol.construction);
  if (cfg.json_output) {
    out << json{{"value", v}}.dump(2) << "\n";
  } else {
    out << decimal(v) << "\n";
  }
  return kOk;
}

int cmd_ghz(const Config& cfg, std::ostream& out) {
  GhzReport r = ghz_report(parse_phase(cfg.phase));
  if (cfg.json_output) {
    out << io::to_json(r).dump(2) << "\n";
    return kOk;
  }
  out << "GHZ state (|000> " << (r.phase > 0 ? "+" : "-") << " |111>)/sqrt2\n";
  out << "expectations:";
  for (std::size_t k = 0; k < kGhzPatterns.size(); ++k) {
    out << "  " << kGhzPatterns[k] << " = " << std::showpos << std::fixed
        << std::setprecision(9) << r.expectations[k] << std::noshowpos;
  }
  out << std::defaultfloat << "\n";
  out << "classical +-1 assignments satisfying all four: " << r.classical_solutions
      << " of " << r.classical_examined << "\n";
  out << "parity: product of LHS = " << sign(r.lhs_product)
      << ", product of RHS = " << sign(r.rhs_product) << "\n";
  out << "XOR system: " << r.xor_satisfying << " of " << r.xor_examined
      << " crisp assignments; aggregate LHS always 0: "
      << (r.xor_aggregate_lhs_always_false ? "yes" : "no")
      << "; v(V ^ V ^ V ^ F) = " << r.xor_aggregate_rhs.str() << "\n";
  out << "degrees:\n";
  for (const auto& d : r.degrees) {
    out << "  " << d.name << "  up " << io::format_degree(d.up, cfg.tol.identity)
        << "  not up " << io::format_degree(d.down, cfg.tol.identity) << "\n";
  }
  out << r.conclusion << "\n";
  return kOk;
}

int cmd_verify(const Config& cfg, std::ostream& out) {
  if (cfg.states < 1 || cfg.families < 1) {
    throw ValidationError("verify-theorem: sample counts must be at least 1");
  }
  TheoremReport r = verify_conditions(cfg.dim, cfg.states, cfg.families, cfg.seed, cfg.tol);
  if (cfg.json_output) {
    out << io::to_json(r).dump(2) << "\n";
  } else {
    static constexpr const char* kNames[] = {
        "contains F",
        "closed under negation",
        "closed under disjunction of exclusive families",
        "F is the only self-exclusive member",
    };
    out << "dim=" << r.dim << " states=" << r.n_state_samples
        << " families=" << r.n_family_samples << " seed=" << r.seed << "\n";
    for (std::size_t k = 0; k < r.conditions.size(); ++k) {
      const auto& c = r.conditions[k];
      out << "condition " << k + 1 << " (" << kNames[k] << "): "
          << (c.passed ? "PASS" : "FAIL") << "  worst residual " << std::scientific
          << std::setprecision(3) << c.worst_residual << std::defaultfloat << "  checks "
          << c.checks << "\n";
    }
  }
  return r.all_passed() ? kOk : kConditionFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Lukasiewicz many-valued logic and quantum propositions", "lukq"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", cfg.json_output, "Machine-readable JSON output");
  app.add_option("-o,--output", cfg.output_path, "Write results to this file");
  app.add_option("--tol", cfg.tol_specs,
                 "Tolerance override: VALUE, construction=VALUE or identity=VALUE")
      ->allow_extra_args(false);

  auto* eval = app.add_subcommand("eval", "Evaluate a formula exactly");
  eval->add_option("formula", cfg.formula_text, "Formula text");
  eval->add_option("-f,--formula-file", cfg.formula_file, "Read the formula from a file");
  eval->add_option("--assign", cfg.assign_file, "Assignment JSON file");

  auto* lattice = app.add_subcommand("lattice", "Subspace lattice operations");
  lattice->add_option("op", cfg.lattice_op, "neg | meet | join | leq | exclusive")
      ->required()
      ->check(CLI::IsMember({"neg", "meet", "join", "leq", "exclusive"}));
  lattice->add_option("projectors", cfg.files, "Projector JSON file(s)")->required();

  auto* born = app.add_subcommand("born", "Born-rule truth value <psi|P|psi>");
  born->add_option("projector", cfg.projector_file, "Projector JSON file")->required();
  born->add_option("state", cfg.state_file, "State JSON file")->required();

  auto* ghz = app.add_subcommand("ghz", "GHZ demonstrator report");
  ghz->add_option("--phase", cfg.phase, "Relative phase of |111>: +1 or -1");

  auto* verify = app.add_subcommand("verify-theorem",
                                    "Sample-based check of the representation conditions");
  verify->add_option("--dim", cfg.dim, "Hilbert space dimension")
      ->required()
      ->check(CLI::PositiveNumber);
  verify->add_option("--states", cfg.states, "Number of sampled states");
  verify->add_option("--families", cfg.families, "Number of sampled projectors and families");
  verify->add_option("--seed", cfg.seed, "Random seed");

  std::vector<std::string> rest(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
  std::reverse(rest.begin(), rest.end());  // CLI11 consumes from the back.
  try {
    app.parse(rest);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "lukq: " << e.what() << "\n";
    return kValidationError;
  }

  std::ostringstream buffer;
  int code = kOk;
  try {
    cfg.tol = parse_tolerances(cfg.tol_specs);
    if (eval->parsed()) {
      code = cmd_eval(cfg, buffer);
    } else if (lattice->parsed()) {
      code = cmd_lattice(cfg, buffer);
    } else if (born->parsed()) {
      code = cmd_born(cfg, buffer);
    } else if (ghz->parsed()) {
      code = cmd_ghz(cfg, buffer);
    } else {
      code = cmd_verify(cfg, buffer);
    }
  } catch (const ValidationError& e) {
    err << "lukq: " << e.what() << "\n";
    return kValidationError;
  } catch (const std::exception& e) {
    err << "lukq: numerical failure: " << e.what() << "\n";
    return kNumericalError;
  }

  if (cfg.output_path.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(cfg.output_path, std::ios::binary);
    if (!(file << buffer.str())) {
      err << "lukq: cannot write '" << cfg.output_path << "'\n";
      return kValidationError;
    }
  }
  return code;
}

}  // namespace lukq::cli
