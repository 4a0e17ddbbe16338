#pragma once

// JSON file formats.
//
//   assignment : {"atoms": {"p": "1/2", "q": "0.25"}}
//   state      : {"dim": n, "amplitudes": [[re, im], ...]}
//   projector  : {"dim": n, "matrix": [[[re, im], ...], ...]}   (row-major)
//
// plus the serialised GHZ and theorem-verification reports.

#include <filesystem>
#include <string>

#include <json.hpp>

#include "lukq/formula.hpp"
#include "lukq/ghz.hpp"
#include "lukq/hilbert.hpp"
#include "lukq/representation.hpp"

namespace lukq::io {

using nlohmann::json;

std::string read_text_file(const std::filesystem::path& path);
json read_json_file(const std::filesystem::path& path);

/// Truth-value literals are strings ("1/2", "0.25") or the integers 0 and 1.
Assignment assignment_from_json(const json& j);

json state_to_json(const StateVector& psi);
StateVector state_from_json(const json& j, double tol = 1e-9);

json projector_to_json(const Projector& p);
Projector projector_from_json(const json& j, double tol = 1e-9);

/// A degree that lies within `tol` of a fraction with denominator <= 64 is
/// written as that fraction ("1/2"); anything else as a decimal.
std::string format_degree(double x, double tol = 1e-12);
double parse_degree(const std::string& text);

json to_json(const TheoremReport& r);

json to_json(const GhzReport& r);
GhzReport ghz_report_from_json(const json& j);

}  // namespace lukq::io
