#include <doctest.h>

#include <fstream>
#include <sstream>

#include "helpers.hpp"
#include "polyexp/error.hpp"
#include "polyexp/problem_io.hpp"
#include "polyexp/search.hpp"

using namespace polyexp;
using namespace polyexp::testing;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

const char* kPow4 = R"({
  "variables": 1,
  "coefficient_order": 1,
  "generators": [{"name": "g1", "value": "2"}],
  "terms": [
    {"poly": [{"exponents": [0], "coeff": ["1"]}],
     "alpha": [{"rho": "0", "logs": ["2"]}]},
    {"poly": [{"exponents": [0], "coeff": ["-2"]}],
     "alpha": [{"rho": "0", "logs": ["0"]}]}
  ]
})";

}  // namespace

TEST_CASE("parse_problem accepts the 4^x - 2 document") {
  ProblemFile pf = parse_problem(kPow4);
  CHECK(pf.system.num_terms() == 2);
  CHECK(pf.system.num_vars() == 1);
  CHECK(pf.system.genset.status == IndependenceStatus::verified);
  // It really is the system the builders produce.
  auto split = complement_and_projections(compute_V(pf.system.alpha), 1);
  auto records = search_box(pf.system, split, [] {
    SearchSpec s;
    s.box = rat("3");
    s.denominator = Int(12);
    return s;
  }());
  REQUIRE(records.size() == 1);
  CHECK(records[0].q == qvec({"1/2"}));
}

TEST_CASE("parse_problem rejects floats with the canonical message") {
  std::string doc = kPow4;
  auto pos = doc.find("\"1/2\"");
  (void)pos;
  std::string bad = doc;
  bad.replace(bad.find("\"2\""), 3, "\"0.5\"");
  try {
    parse_problem(bad);
    FAIL("expected rejection");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("floats forbidden; write 1/2") != std::string::npos);
  }
  // A raw JSON float is rejected too.
  std::string bad2 = doc;
  bad2.replace(bad2.find("\"2\""), 3, "0.5");
  CHECK_THROWS_AS(parse_problem(bad2), InputError);
}

TEST_CASE("parse_problem rejects structural defects") {
  CHECK_THROWS_WITH_AS(parse_problem(R"({"variables": 1, "coefficient_order": 1})"),
                       doctest::Contains("terms"), InputError);
  CHECK_THROWS_AS(parse_problem("not json"), InputError);
  // Wrong coefficient arity for the order.
  std::string bad = kPow4;
  bad.replace(bad.find("\"coefficient_order\": 1"), 22, "\"coefficient_order\": 4");
  CHECK_THROWS_AS(parse_problem(bad), InputError);
  // Dependent generators are reported through validation.
  const char* dep = R"({
    "variables": 1,
    "coefficient_order": 1,
    "generators": [{"name": "a", "value": "4"}, {"name": "b", "value": "8"}],
    "terms": [{"poly": [{"exponents": [0], "coeff": ["1"]}],
               "alpha": [{"rho": "0", "logs": ["1", "0"]}]}]
  })";
  CHECK_THROWS_WITH_AS(parse_problem(dep), doctest::Contains("dependent generators"), InputError);
}

TEST_CASE("round trip through problem_to_json") {
  for (const char* path : {"data/pow4_minus_2.json", "data/half_turn.json", "data/six.json",
                           "data/cancellation.json", "data/symbolic.json",
                           "data/gauss_times_two.json", "data/linear_factor.json",
                           "data/signed_double.json"}) {
    ProblemFile original = parse_problem(slurp(path));
    std::string emitted = problem_to_json(original).dump(2);
    ProblemFile reparsed = parse_problem(emitted);
    CHECK(problem_to_json(reparsed).dump(2) == emitted);
  }
}

TEST_CASE("emit_report is deterministic and carries warnings") {
  Report r;
  r.command = "search";
  r.inputs["box"] = "3";
  r.results["count"] = 1;
  Json rec;
  rec["q"] = qvec_json(qvec({"1/2"}));
  rec["status"] = "nondegenerate";
  r.results["records"] = Json::array({rec});
  r.warnings.push_back(
      "grouped zero test in use: nonzero verdicts rest on the radical-independence assumption");

  std::string t1 = emit_report(r, ReportFormat::text);
  std::string t2 = emit_report(r, ReportFormat::text);
  std::string j1 = emit_report(r, ReportFormat::json);
  std::string j2 = emit_report(r, ReportFormat::json);
  CHECK(t1 == t2);
  CHECK(j1 == j2);
  CHECK(t1.find("radical-independence assumption") != std::string::npos);
  CHECK(j1.find("radical-independence assumption") != std::string::npos);
  // JSON keys come out sorted.
  CHECK(j1.find("\"command\"") < j1.find("\"inputs\""));
  CHECK(j1.find("\"inputs\"") < j1.find("\"results\""));
  CHECK(j1.find("\"results\"") < j1.find("\"warnings\""));
}

TEST_CASE("parse_poly_tuple") {
  PolyTuple t = parse_poly_tuple(slurp("data/vandermonde_tuple.json"));
  CHECK(t.variables == std::vector<std::string>{"u"});
  CHECK(t.entries.size() == 3);
  CHECK_THROWS_AS(parse_poly_tuple("{}"), InputError);
}
