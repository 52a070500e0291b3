#include "polyexp/problem_io.hpp"

#include <sstream>

#include "polyexp/cyclotomic.hpp"
#include "polyexp/error.hpp"
#include "polyexp/linalg.hpp"

namespace polyexp {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw InputError(path + ": " + what);
}

const Json& field(const Json& node, const std::string& key, const std::string& path) {
  auto it = node.find(key);
  if (it == node.end()) fail(path, "missing \"" + key + "\"");
  return *it;
}

long int_from_json(const Json& node, const std::string& path) {
  if (node.is_number_float()) fail(path, "floats forbidden; write an exact integer");
  if (!node.is_number_integer()) fail(path, "expected an integer");
  return node.get<long>();
}

}  // namespace

Rat rat_from_json(const Json& node, const std::string& path) {
  if (node.is_number_float()) fail(path, "floats forbidden; write 1/2 style rationals");
  if (node.is_number_integer()) return Rat(node.get<long>());
  if (!node.is_string()) fail(path, "expected a rational as a \"p/q\" string");
  try {
    return Rat::parse(node.get<std::string>());
  } catch (const InputError& e) {
    fail(path, e.what());
  }
}

namespace {

QVec qvec_from_json(const Json& node, Index expect, const std::string& path) {
  if (!node.is_array()) fail(path, "expected an array of rationals");
  if (expect >= 0 && static_cast<Index>(node.size()) != expect) {
    fail(path, "expected " + std::to_string(expect) + " entries, got " +
                   std::to_string(node.size()));
  }
  QVec v(static_cast<Index>(node.size()));
  for (std::size_t i = 0; i < node.size(); ++i) {
    v[static_cast<Index>(i)] = rat_from_json(node[i], path + "[" + std::to_string(i) + "]");
  }
  return v;
}

CycNum cycnum_from_json(const Json& node, long order, const std::string& path) {
  QVec raw = qvec_from_json(node, euler_phi(order), path);
  return cyc_normalize(raw, order);
}

CycMPoly mpoly_from_json(const Json& node, long order, Index nvars, const std::string& path) {
  if (!node.is_array()) fail(path, "expected an array of monomials");
  CycMPoly poly(order, nvars);
  for (std::size_t i = 0; i < node.size(); ++i) {
    std::string mp = path + "[" + std::to_string(i) + "]";
    const Json& mono = node[i];
    if (!mono.is_object()) fail(mp, "expected a monomial object");
    const Json& exps = field(mono, "exponents", mp);
    if (!exps.is_array() || static_cast<Index>(exps.size()) != nvars) {
      fail(mp + ".exponents", "expected " + std::to_string(nvars) + " exponents");
    }
    Eigen::VectorXi e(nvars);
    for (std::size_t j = 0; j < exps.size(); ++j) {
      long v = int_from_json(exps[j], mp + ".exponents[" + std::to_string(j) + "]");
      if (v < 0) fail(mp + ".exponents[" + std::to_string(j) + "]", "exponents must be >= 0");
      e[static_cast<Index>(j)] = static_cast<int>(v);
    }
    poly.add_term(e, cycnum_from_json(field(mono, "coeff", mp), order, mp + ".coeff"));
  }
  return poly;
}

}  // namespace

ProblemFile parse_problem(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed problem file: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("problem file must be a JSON object");

  ProblemFile out;
  if (doc.contains("name")) out.name = doc["name"].get<std::string>();
  if (doc.contains("description")) out.description = doc["description"].get<std::string>();

  const long t = int_from_json(field(doc, "variables", "$"), "$.variables");
  if (t < 1) fail("$.variables", "need at least one variable");
  const long order = int_from_json(field(doc, "coefficient_order", "$"), "$.coefficient_order");
  if (order < 1) fail("$.coefficient_order", "order must be positive");

  GenSet gens;
  if (doc.contains("generators")) {
    const Json& list = doc["generators"];
    if (!list.is_array()) fail("$.generators", "expected an array");
    for (std::size_t i = 0; i < list.size(); ++i) {
      std::string gp = "$.generators[" + std::to_string(i) + "]";
      const Json& g = list[i];
      if (!g.is_object()) fail(gp, "expected an object");
      Generator gen;
      gen.name = field(g, "name", gp).get<std::string>();
      if (g.contains("value")) gen.value = rat_from_json(g["value"], gp + ".value");
      gens.generators.push_back(std::move(gen));
    }
  }
  const Index m = gens.size();

  const Json& terms = field(doc, "terms", "$");
  if (!terms.is_array() || terms.empty()) fail("$.terms", "expected a nonempty array");
  const Index s = static_cast<Index>(terms.size());

  AlphaMatrix alpha(s, t, m);
  std::vector<CycPolyMV> polys;
  for (Index i = 0; i < s; ++i) {
    std::string tp = "$.terms[" + std::to_string(i) + "]";
    const Json& term = terms[static_cast<std::size_t>(i)];
    if (!term.is_object()) fail(tp, "expected an object");
    polys.push_back(mpoly_from_json(field(term, "poly", tp), order, t, tp + ".poly"));
    const Json& arow = field(term, "alpha", tp);
    if (!arow.is_array() || static_cast<Index>(arow.size()) != t) {
      fail(tp + ".alpha", "expected " + std::to_string(t) + " entries");
    }
    for (Index j = 0; j < t; ++j) {
      std::string ap = tp + ".alpha[" + std::to_string(j) + "]";
      const Json& entry = arow[static_cast<std::size_t>(j)];
      if (!entry.is_object()) fail(ap, "expected an object");
      LogCoord c;
      c.rho = rat_from_json(field(entry, "rho", ap), ap + ".rho");
      c.logs = qvec_from_json(field(entry, "logs", ap), m, ap + ".logs");
      alpha.set(i, j, c);
    }
  }

  EqSystem sys{std::move(gens), std::move(alpha), std::move(polys), order};
  out.system = validate_system(std::move(sys));
  return out;
}

Json rat_json(const Rat& r) { return r.str(); }

Json qvec_json(const QVec& v) {
  Json a = Json::array();
  for (Index i = 0; i < v.size(); ++i) a.push_back(v[i].str());
  return a;
}

Json zvec_json(const ZVec& v) {
  Json a = Json::array();
  for (Index i = 0; i < v.size(); ++i) a.push_back(v[i].str());
  return a;
}

Json zmat_json(const ZMat& m) {
  Json a = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    a.push_back(row);
  }
  return a;
}

Json cycnum_json(const CycNum& c) {
  Json o;
  o["order"] = c.order();
  o["coeffs"] = qvec_json(c.coeffs());
  return o;
}

Json lattice_json(const ZLattice& l) {
  Json o;
  o["ambient_dim"] = l.ambient_dim();
  o["rank"] = l.rank();
  o["basis"] = zmat_json(l.basis());
  return o;
}

Json problem_to_json(const ProblemFile& problem) {
  const EqSystem& sys = problem.system;
  Json doc;
  if (problem.name) doc["name"] = *problem.name;
  if (problem.description) doc["description"] = *problem.description;
  doc["variables"] = sys.num_vars();
  doc["coefficient_order"] = sys.order;
  Json gens = Json::array();
  for (const Generator& g : sys.genset.generators) {
    Json o;
    o["name"] = g.name;
    if (g.value) o["value"] = g.value->str();
    gens.push_back(o);
  }
  doc["generators"] = gens;
  Json terms = Json::array();
  for (Index i = 0; i < sys.num_terms(); ++i) {
    Json term;
    Json poly = Json::array();
    for (const auto& mono : sys.polys[static_cast<std::size_t>(i)].terms()) {
      Json o;
      Json exps = Json::array();
      for (Index j = 0; j < mono.exponents.size(); ++j) exps.push_back(mono.exponents[j]);
      o["exponents"] = exps;
      o["coeff"] = qvec_json(mono.coeff.coeffs());
      poly.push_back(o);
    }
    term["poly"] = poly;
    Json arow = Json::array();
    for (Index j = 0; j < sys.num_vars(); ++j) {
      LogCoord c = sys.alpha.at(i, j);
      Json o;
      o["rho"] = c.rho.str();
      o["logs"] = qvec_json(c.logs);
      arow.push_back(o);
    }
    term["alpha"] = arow;
    terms.push_back(term);
  }
  doc["terms"] = terms;
  return doc;
}

PolyTuple parse_poly_tuple(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed poly-tuple file: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("poly-tuple file must be a JSON object");

  PolyTuple tuple;
  const Json& vars = field(doc, "variables", "$");
  if (!vars.is_array()) fail("$.variables", "expected an array of names");
  for (const auto& v : vars) tuple.variables.push_back(v.get<std::string>());
  tuple.order = int_from_json(field(doc, "coefficient_order", "$"), "$.coefficient_order");
  if (tuple.order < 1) fail("$.coefficient_order", "order must be positive");

  const Json& entries = field(doc, "entries", "$");
  if (!entries.is_array() || entries.empty()) fail("$.entries", "expected a nonempty array");
  const Index nvars = static_cast<Index>(tuple.variables.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    tuple.entries.push_back(
        mpoly_from_json(entries[i], tuple.order, nvars, "$.entries[" + std::to_string(i) + "]"));
  }
  return tuple;
}

namespace {

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  return v.dump();
}

bool is_scalar(const Json& v) { return !v.is_object() && !v.is_array(); }

bool is_uniform_table(const Json& a) {
  if (!a.is_array() || a.empty() || !a[0].is_object()) return false;
  std::vector<std::string> keys;
  for (auto it = a[0].begin(); it != a[0].end(); ++it) keys.push_back(it.key());
  for (const auto& row : a) {
    if (!row.is_object() || row.size() != keys.size()) return false;
    for (const auto& k : keys) {
      if (!row.contains(k)) return false;
    }
  }
  return true;
}

std::string cell_text(const Json& v) {
  if (is_scalar(v)) return scalar_text(v);
  return v.dump();
}

void render(std::ostream& os, const Json& node, int indent);

void render_table(std::ostream& os, const Json& rows, int indent) {
  std::vector<std::string> keys;
  for (auto it = rows[0].begin(); it != rows[0].end(); ++it) keys.push_back(it.key());
  std::vector<std::size_t> width(keys.size());
  for (std::size_t c = 0; c < keys.size(); ++c) width[c] = keys[c].size();
  std::vector<std::vector<std::string>> cells;
  for (const auto& row : rows) {
    std::vector<std::string> line;
    for (std::size_t c = 0; c < keys.size(); ++c) {
      line.push_back(cell_text(row[keys[c]]));
      width[c] = std::max(width[c], line.back().size());
    }
    cells.push_back(std::move(line));
  }
  std::string pad(static_cast<std::size_t>(indent), ' ');
  os << pad;
  for (std::size_t c = 0; c < keys.size(); ++c) {
    os << keys[c] << std::string(width[c] - keys[c].size() + 2, ' ');
  }
  os << "\n";
  for (const auto& line : cells) {
    os << pad;
    for (std::size_t c = 0; c < keys.size(); ++c) {
      os << line[c] << std::string(width[c] - line[c].size() + 2, ' ');
    }
    os << "\n";
  }
}

void render(std::ostream& os, const Json& node, int indent) {
  std::string pad(static_cast<std::size_t>(indent), ' ');
  if (node.is_object()) {
    for (auto it = node.begin(); it != node.end(); ++it) {
      if (is_scalar(it.value())) {
        os << pad << it.key() << ": " << scalar_text(it.value()) << "\n";
      } else {
        os << pad << it.key() << ":\n";
        render(os, it.value(), indent + 2);
      }
    }
    return;
  }
  if (node.is_array()) {
    if (node.empty()) {
      os << pad << "(none)\n";
      return;
    }
    if (is_uniform_table(node)) {
      render_table(os, node, indent);
      return;
    }
    for (const auto& item : node) {
      if (is_scalar(item)) {
        os << pad << "- " << scalar_text(item) << "\n";
      } else {
        os << pad << "- " << item.dump() << "\n";
      }
    }
    return;
  }
  os << pad << scalar_text(node) << "\n";
}

}  // namespace

std::string emit_report(const Report& report, ReportFormat format) {
  Json doc;
  doc["command"] = report.command;
  doc["inputs"] = report.inputs;
  doc["results"] = report.results;
  doc["warnings"] = report.warnings;
  if (format == ReportFormat::json) {
    return doc.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "command: " << report.command << "\n";
  os << "inputs:\n";
  render(os, report.inputs, 2);
  os << "results:\n";
  render(os, report.results, 2);
  os << "warnings:\n";
  if (report.warnings.empty()) {
    os << "  (none)\n";
  } else {
    for (const auto& w : report.warnings) os << "  - " << w << "\n";
  }
  return os.str();
}

}  // namespace polyexp
