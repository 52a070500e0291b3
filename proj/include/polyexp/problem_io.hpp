#pragma once

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "polyexp/linalg.hpp"
#include "polyexp/model.hpp"
#include "polyexp/specialize.hpp"

namespace polyexp {

using Json = nlohmann::json;

struct ProblemFile {
  EqSystem system;
  std::optional<std::string> name;
  std::optional<std::string> description;
};

/// Parses and validates the problem-file JSON. All rationals are exact
/// "p/q" strings (bare integers are accepted); floating-point literals are
/// rejected outright. Errors carry the JSON path of the offending field.
ProblemFile parse_problem(const std::string& text);

/// Inverse of parse_problem up to formatting; parse(emit(parse(x))) parses
/// to the same system.
Json problem_to_json(const ProblemFile& problem);

/// Poly-tuple file for the specialize command.
PolyTuple parse_poly_tuple(const std::string& text);

enum class ReportFormat { text, json };

/// Deterministic report envelope: serializing the same analysis twice
/// yields identical bytes in either format.
struct Report {
  std::string command;
  Json inputs;
  Json results;
  std::vector<std::string> warnings;
};

std::string emit_report(const Report& report, ReportFormat format);

// JSON helpers shared by the CLI and the report tests.
Json rat_json(const Rat& r);
Json qvec_json(const QVec& v);
Json zvec_json(const ZVec& v);
Json zmat_json(const ZMat& m);
Json cycnum_json(const CycNum& c);
Json lattice_json(const ZLattice& l);

Rat rat_from_json(const Json& node, const std::string& path);

}  // namespace polyexp
