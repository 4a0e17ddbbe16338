#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "lukq/cli.hpp"
#include "lukq/io.hpp"

using namespace lukq;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "lukq");
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  std::filesystem::path path;
  TempDir() : path(std::filesystem::temp_directory_path() / "lukq_cli_test") {
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  std::string write(const std::string& name, const std::string& text) const {
    auto p = path / name;
    std::ofstream(p) << text;
    return p.string();
  }
};

const char* kE1 = R"({"dim": 2, "matrix": [[[1,0],[0,0]],[[0,0],[0,0]]]})";
const char* kE2 = R"({"dim": 2, "matrix": [[[0,0],[0,0]],[[0,0],[1,0]]]})";
const char* kDiag = R"({"dim": 2, "matrix": [[[0.5,0],[0.5,0]],[[0.5,0],[0.5,0]]]})";
const char* kPlus = R"({"dim": 2, "amplitudes": [[0.7071067811865476,0],[0.7071067811865476,0]]})";

}  // namespace

TEST_CASE("eval") {
  TempDir tmp;
  auto half = tmp.write("half.json", R"({"atoms": {"p": "1/2", "q": "1/3"}})");
  auto r = run({"eval", "p | ~p", "--assign", half});
  CHECK(r.code == 0);
  CHECK(r.out == "1\t1\n");
  CHECK(r.err.empty());

  CHECK(run({"eval", "p /\\ ~p", "--assign", half}).out == "1/2\t0.5\n");
  CHECK(run({"eval", "p & q", "--assign", half}).out == "0\t0\n");
  CHECK(run({"eval", "V ^ V ^ V ^ F"}).out == "1\t1\n");

  auto file = tmp.write("f.txt", "p | q\n");
  CHECK(run({"eval", "-f", file, "--assign", half}).out == "5/6\t0.8333333333333334\n");

  auto j = io::json::parse(run({"--json", "eval", "p | q", "--assign", half}).out);
  CHECK(j["value"] == "5/6");
  CHECK(j["formula"] == "p | q");
}

TEST_CASE("errors go to stderr with a nonzero exit") {
  TempDir tmp;
  auto half = tmp.write("half.json", R"({"atoms": {"p": "1/2"}})");
  auto syntax = run({"eval", "p &"});
  CHECK(syntax.code == cli::kValidationError);
  CHECK(syntax.out.empty());
  CHECK(syntax.err.find("1:3") != std::string::npos);

  auto unbound = run({"eval", "p & q", "--assign", half});
  CHECK(unbound.code == cli::kValidationError);
  CHECK(unbound.err.find("q") != std::string::npos);

  auto crisp = run({"eval", "p ^ V", "--assign", half});
  CHECK(crisp.code == cli::kValidationError);
  CHECK(crisp.out.empty());

  CHECK(run({"eval"}).code == cli::kValidationError);
  CHECK(run({"frobnicate"}).code == cli::kValidationError);
  CHECK(run({}).code == cli::kValidationError);
  CHECK(run({"ghz", "--phase", "2"}).code == cli::kValidationError);
  CHECK(run({"eval", "p", "--assign", tmp.write("bad.json", "{")}).code == cli::kValidationError);
  CHECK(run({"verify-theorem", "--dim", "0"}).code == cli::kValidationError);
  CHECK(run({"--tol", "nope", "ghz"}).code == cli::kValidationError);
  CHECK(run({"--tol", "speed=1", "ghz"}).code == cli::kValidationError);
}

TEST_CASE("help") {
  auto r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("verify-theorem") != std::string::npos);
}

TEST_CASE("lattice and born") {
  TempDir tmp;
  auto e1 = tmp.write("e1.json", kE1);
  auto e2 = tmp.write("e2.json", kE2);
  auto diag = tmp.write("diag.json", kDiag);
  auto plus = tmp.write("plus.json", kPlus);

  CHECK(run({"lattice", "exclusive", e1, e2}).out == "true\n");
  CHECK(run({"lattice", "exclusive", e1, diag}).out == "false\n");
  CHECK(run({"lattice", "leq", e1, diag}).out == "false\n");

  auto neg = io::json::parse(run({"--json", "lattice", "neg", e1}).out);
  CHECK(io::projector_from_json(neg).matrix() == io::projector_from_json(io::json::parse(kE2)).matrix());

  auto join = io::json::parse(run({"--json", "lattice", "join", e1, diag}).out);
  CHECK(io::projector_from_json(join).rank() == 2);
  auto meet = io::json::parse(run({"--json", "lattice", "meet", e1, diag}).out);
  CHECK(io::projector_from_json(meet).rank() == 0);

  auto human = run({"lattice", "join", e1, e2});
  CHECK(human.out.rfind("projector dim=2 rank=2\n", 0) == 0);

  CHECK(run({"lattice", "neg", e1, e2}).code == cli::kValidationError);
  CHECK(run({"lattice", "twist", e1}).code == cli::kValidationError);
  CHECK(run({"lattice", "leq", e1, tmp.write("bad.json", R"({"dim": 2, "matrix": [[[1,0],[1,0]],[[0,0],[0,0]]]})")})
            .code == cli::kValidationError);

  auto born = run({"born", e1, plus});
  CHECK(born.code == 0);
  CHECK(std::abs(std::stod(born.out) - 0.5) < 1e-15);
  auto three = tmp.write("three.json", R"({"dim": 3, "amplitudes": [[1,0],[0,0],[0,0]]})");
  CHECK(run({"born", e1, three}).code == cli::kValidationError);
}

TEST_CASE("ghz") {
  auto r = run({"ghz"});
  CHECK(r.code == 0);
  CHECK(r.out.find("0 of 64") != std::string::npos);
  CHECK(r.out.find("X1  up 1/2  not up 1/2") != std::string::npos);
  CHECK(r.out.find("XXX = -1.000000000") != std::string::npos);
  CHECK(run({"ghz", "--phase", "+1"}).out.find("XXX = +1.000000000") != std::string::npos);

  auto a = run({"--json", "ghz"});
  auto b = run({"ghz", "--json"});
  CHECK(a.out == b.out);
  auto j = io::json::parse(a.out);
  CHECK(j["classical_solutions"] == 0);
  CHECK(j["xor_system"]["aggregate_rhs"] == "1");
}

TEST_CASE("verify-theorem") {
  auto r = run({"verify-theorem", "--dim", "3", "--states", "100", "--families", "30", "--seed", "7"});
  CHECK(r.code == 0);
  CHECK(r.out.find("condition 4") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);

  auto a = run({"--json", "verify-theorem", "--dim", "4", "--states", "50", "--families", "20"});
  auto b = run({"--json", "verify-theorem", "--dim", "4", "--states", "50", "--families", "20"});
  CHECK(a.out == b.out);
  auto j = io::json::parse(a.out);
  CHECK(j["seed"] == 42);
  CHECK(j["passed"] == true);

  // A tolerance far below double rounding is not satisfiable.
  auto tight = run({"--tol", "1e-30", "verify-theorem", "--dim", "6", "--states", "50",
                    "--families", "20"});
  CHECK(tight.code != cli::kOk);
}

TEST_CASE("output file") {
  TempDir tmp;
  auto path = (tmp.path / "out.json").string();
  auto r = run({"--json", "-o", path, "ghz"});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  CHECK(io::read_json_file(path)["classical_examined"] == 64);
}
