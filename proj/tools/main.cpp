#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "polyexp/cyclotomic.hpp"
#include "polyexp/error.hpp"
#include "polyexp/problem_io.hpp"
#include "polyexp/search.hpp"
#include "polyexp/structure.hpp"
#include "polyexp/unity.hpp"

namespace {

using namespace polyexp;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

ReportFormat parse_format(const std::string& f) {
  if (f == "text") return ReportFormat::text;
  if (f == "json") return ReportFormat::json;
  throw InputError("unknown format: " + f + " (expected text or json)");
}

SearchMode parse_mode(const std::string& m) {
  if (m == "exact") return SearchMode::exact_only;
  if (m == "grouped") return SearchMode::allow_grouped;
  throw InputError("unknown mode: " + m + " (expected exact or grouped)");
}

const char* status_str(SolutionStatus s) {
  return s == SolutionStatus::nondegenerate ? "nondegenerate" : "degenerate";
}

const char* zero_mode_str(ZeroMode m) {
  return m == ZeroMode::exact_cyclotomic ? "exact_cyclotomic" : "grouped_radical";
}

Json record_json(const SolutionRecord& r) {
  Json o;
  o["q"] = qvec_json(r.q);
  o["status"] = status_str(r.status);
  o["zero_mode"] = zero_mode_str(r.zero_mode);
  o["pi_q"] = qvec_json(r.pi_q);
  o["pi_prime_q"] = qvec_json(r.pi_prime_q);
  Json w = Json::array();
  for (const auto& block : r.witness) w.push_back(block);
  o["witness"] = w;
  return o;
}

struct Analysis {
  ProblemFile problem;
  SplitSpace split;
  ZLattice h;
};

Analysis load_analysis(const std::string& path) {
  ProblemFile pf = parse_problem(read_file(path));
  std::vector<QVec> v = compute_V(pf.system.alpha);
  SplitSpace split = complement_and_projections(v, pf.system.num_vars());
  ZLattice h = compute_H(pf.system);
  return Analysis{std::move(pf), std::move(split), std::move(h)};
}

void add_mode_warnings(Report& report, const EqSystem& sys, const SearchSpec& spec) {
  if (!grid_fully_exact(sys, spec)) {
    report.warnings.push_back(
        "grouped zero test in use: nonzero verdicts rest on the radical-independence "
        "assumption");
  }
  if (!sys.genset.all_concrete()) {
    report.warnings.push_back("symbolic generators: multiplicative independence is assumed");
  }
}

void print_report(const Report& report, const std::string& format) {
  std::cout << emit_report(report, parse_format(format));
}

Int parse_den(const std::string& d) {
  Int v = Int::parse(d);
  if (v.sign() <= 0) throw InputError("denominator must be positive");
  return v;
}

Rat parse_box(const std::string& b) {
  Rat v = Rat::parse(b);
  if (v.sign() <= 0) throw InputError("box must be positive");
  return v;
}

std::vector<Int> divisors_of(const Int& n) {
  std::vector<Int> out;
  for (Int d(1); d * d <= n; d += Int(1)) {
    if ((n % d).is_zero()) {
      out.push_back(d);
      Int e = n / d;
      if (e != d) out.push_back(e);
    }
  }
  std::sort(out.begin(), out.end(), [](const Int& a, const Int& b) { return a < b; });
  return out;
}

void cmd_analyze(const std::string& file, long delta, const std::string& format) {
  Analysis a = load_analysis(file);
  const EqSystem& sys = a.problem.system;

  Report report;
  report.command = "analyze";
  report.inputs["problem"] = problem_to_json(a.problem);
  report.inputs["complement_fingerprint"] = a.split.fingerprint();
  report.inputs["delta"] = delta;

  Json v = Json::array();
  for (const auto& vec : a.split.v_basis()) v.push_back(qvec_json(vec));
  report.results["V_basis"] = v;
  report.results["V_dim"] = a.split.dim_v();
  Json vp = Json::array();
  for (Index idx : a.split.vprime_cols()) vp.push_back(idx + 1);
  report.results["Vprime_standard_indices"] = vp;

  const Index t = sys.num_vars();
  QMat pv(t, t), pvp(t, t);
  for (Index j = 0; j < t; ++j) {
    QVec e = QVec::Constant(t, Rat(0));
    e[j] = Rat(1);
    QVec col = a.split.project_v(e);
    QVec colp = a.split.project_vprime(e);
    for (Index i = 0; i < t; ++i) {
      pv(i, j) = col[i];
      pvp(i, j) = colp[i];
    }
  }
  Json pvj = Json::array(), pvpj = Json::array();
  for (Index i = 0; i < t; ++i) {
    Json r1 = Json::array(), r2 = Json::array();
    for (Index j = 0; j < t; ++j) {
      r1.push_back(pv(i, j).str());
      r2.push_back(pvp(i, j).str());
    }
    pvj.push_back(r1);
    pvpj.push_back(r2);
  }
  report.results["projection_V"] = pvj;
  report.results["projection_Vprime"] = pvpj;
  report.results["H"] = lattice_json(a.h);

  Json indep;
  switch (sys.genset.status) {
    case IndependenceStatus::verified:
      indep["status"] = "verified";
      break;
    case IndependenceStatus::assumed_symbolic:
      indep["status"] = "assumed_symbolic";
      break;
    case IndependenceStatus::refuted:
      indep["status"] = "refuted";
      break;
  }
  report.results["generator_independence"] = indep;

  DzBound bound = system_order_bound(sys, delta);
  Json dz;
  dz["T"] = bound.max_order;
  dz["feasible_order_count"] = bound.feasible_orders.size();
  report.results["root_of_unity_order_bound"] = dz;

  if (!sys.genset.all_concrete()) {
    report.warnings.push_back("symbolic generators: multiplicative independence is assumed");
  }
  print_report(report, format);
}

void cmd_search(const std::string& file, const std::string& box, const std::string& den,
                const std::string& mode, int jobs, const std::string& format) {
  Analysis a = load_analysis(file);
  SearchSpec spec;
  spec.box = parse_box(box);
  spec.denominator = parse_den(den);
  spec.mode = parse_mode(mode);
  spec.jobs = jobs;

  Report report;
  report.command = "search";
  report.inputs["problem"] = problem_to_json(a.problem);
  report.inputs["complement_fingerprint"] = a.split.fingerprint();
  report.inputs["box"] = spec.box.str();
  report.inputs["denominator"] = spec.denominator.str();
  report.inputs["mode"] = mode;
  add_mode_warnings(report, a.problem.system, spec);

  auto records = search_box(a.problem.system, a.split, spec);
  Json recs = Json::array();
  for (const auto& r : records) recs.push_back(record_json(r));
  report.results["records"] = recs;
  report.results["count"] = records.size();
  print_report(report, format);
}

void cmd_verify(const std::string& file, const std::string& box, const std::string& den,
                int growth, int jobs, const std::string& format) {
  Analysis a = load_analysis(file);
  const EqSystem& sys = a.problem.system;
  SearchSpec spec;
  spec.box = parse_box(box);
  spec.denominator = parse_den(den);
  spec.jobs = jobs;

  Report report;
  report.command = "verify";
  report.inputs["problem"] = problem_to_json(a.problem);
  report.inputs["complement_fingerprint"] = a.split.fingerprint();
  report.inputs["box"] = spec.box.str();
  report.inputs["denominator"] = spec.denominator.str();
  report.inputs["growth"] = growth;
  add_mode_warnings(report, sys, spec);

  auto records = search_box(sys, a.split, spec);
  EmpiricalCert cert = empirical_denominator(records, a.split, spec.box, spec.denominator);

  Json recs = Json::array();
  for (const auto& r : records) recs.push_back(record_json(r));
  report.results["records"] = recs;
  report.results["count"] = records.size();
  report.results["N_emp"] = cert.n_emp.str();
  report.results["complement_fingerprint"] = cert.complement_fingerprint;

  // Denominator sweep: restrict the records to each divisor grid.
  Json sweep = Json::array();
  for (const Int& d : divisors_of(spec.denominator)) {
    Int n_emp(1);
    long count = 0;
    for (const auto& r : records) {
      bool on_grid = true;
      for (Index j = 0; j < r.q.size(); ++j) {
        if (!((r.q[j] * Rat(d)).is_integer())) {
          on_grid = false;
          break;
        }
      }
      if (!on_grid || r.status != SolutionStatus::nondegenerate) continue;
      ++count;
      for (Index j = 0; j < r.pi_prime_q.size(); ++j) {
        n_emp = lcm(n_emp, r.pi_prime_q[j].denominator());
      }
    }
    Json row;
    row["denominator"] = d.str();
    row["nondegenerate_count"] = count;
    row["N_emp"] = n_emp.str();
    sweep.push_back(row);
  }
  report.results["denominator_sweep"] = sweep;

  // Growth steps double both box and denominator; N_emp should not move.
  Json growth_table = Json::array();
  {
    Json row;
    row["box"] = spec.box.str();
    row["denominator"] = spec.denominator.str();
    row["N_emp"] = cert.n_emp.str();
    growth_table.push_back(row);
  }
  bool stable = true;
  SearchSpec step = spec;
  for (int g = 1; g <= growth; ++g) {
    step.box = step.box * Rat(2);
    step.denominator = step.denominator * Int(2);
    auto rs = search_box(sys, a.split, step);
    EmpiricalCert c = empirical_denominator(rs, a.split, step.box, step.denominator);
    Json row;
    row["box"] = step.box.str();
    row["denominator"] = step.denominator.str();
    row["N_emp"] = c.n_emp.str();
    growth_table.push_back(row);
    stable = stable && c.n_emp == cert.n_emp;
  }
  report.results["growth_table"] = growth_table;
  report.results["N_emp_stable"] = stable;

  ZLattice agreement = system_congruence_lattice(sys, cert.n_emp);
  report.results["congruence_lattice"] = lattice_json(agreement);
  Json dist = Json::array();
  for (const auto& row : distance_report(records, agreement, cert.n_emp)) {
    Json o;
    o["q"] = qvec_json(row.q);
    o["nearest"] = qvec_json(row.nearest);
    o["distance"] = row.distance.str();
    std::ostringstream ln;
    ln.precision(12);
    ln << std::fixed << row.log_norm;
    o["log_norm"] = ln.str();
    dist.push_back(o);
  }
  report.results["distance_report"] = dist;
  print_report(report, format);
}

void cmd_dz_bound(long terms, long delta, const std::string& format) {
  Report report;
  report.command = "dz-bound";
  report.inputs["terms"] = terms;
  report.inputs["delta"] = delta;
  DzBound bound = dz_order_bound(DZParams{terms, delta});
  report.results["T"] = bound.max_order;
  report.results["feasible_orders"] = bound.feasible_orders;
  print_report(report, format);
}

void cmd_vanishing_sums(int max_terms, long max_order, const std::string& coeffs,
                        bool dedup_galois, const std::string& format) {
  std::vector<Rat> cs;
  std::stringstream ss(coeffs);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (!part.empty()) cs.push_back(Rat::parse(part));
  }
  Report report;
  report.command = "vanishing-sums";
  report.inputs["max_terms"] = max_terms;
  report.inputs["max_order"] = max_order;
  report.inputs["coefficients"] = coeffs;
  report.inputs["dedup_galois"] = dedup_galois;

  auto sums = enumerate_vanishing_sums(max_terms, max_order, cs);
  Json rows = Json::array();
  long emitted = 0;
  for (const auto& s : sums) {
    if (dedup_galois && !is_galois_canonical(s)) continue;
    Json o;
    o["order"] = s.order;
    o["exponents"] = s.exponents;
    Json c = Json::array();
    for (const auto& r : s.coefficients) c.push_back(r.str());
    o["coefficients"] = c;
    rows.push_back(o);
    ++emitted;
  }
  report.results["sums"] = rows;
  report.results["count"] = emitted;
  print_report(report, format);
}

void cmd_specialize(const std::string& file, const std::string& format) {
  PolyTuple tuple = parse_poly_tuple(read_file(file));
  Report report;
  report.command = "specialize";
  report.inputs["variables"] = tuple.variables;
  report.inputs["coefficient_order"] = tuple.order;
  report.inputs["entry_count"] = tuple.entries.size();

  SpecializationCert cert = build_specializations(tuple);
  report.results["dimension"] = cert.basis.size();
  Json basis = Json::array();
  for (Index i : cert.basis) basis.push_back(i + 1);
  report.results["basis_indices"] = basis;
  Json pts = Json::array();
  for (const auto& p : cert.points) pts.push_back(qvec_json(p));
  report.results["points"] = pts;
  Json matrix = Json::array();
  for (const auto& row : cert.matrix) {
    Json r = Json::array();
    for (const auto& c : row) r.push_back(qvec_json(c.coeffs()));
    matrix.push_back(r);
  }
  report.results["matrix"] = matrix;
  report.results["determinant"] = cycnum_json(cert.determinant);
  report.results["determinant_nonzero"] = !cert.determinant.is_zero();
  report.results["used_random_fallback"] = cert.used_random_fallback;
  print_report(report, format);
}

void cmd_mult_indep(const std::vector<std::string>& values, const std::string& format) {
  std::vector<Rat> vs;
  for (const auto& v : values) vs.push_back(Rat::parse(v));
  Report report;
  report.command = "mult-indep";
  Json in = Json::array();
  for (const auto& v : vs) in.push_back(v.str());
  report.inputs["values"] = in;
  MultIndepResult res = mult_independent(vs);
  report.results["independent"] = res.independent;
  report.results["relation"] = res.independent ? Json::array() : zvec_json(res.relation);
  print_report(report, format);
}

void cmd_translate_check(const std::string& file, const std::string& box, int jobs,
                         const std::string& format) {
  Analysis a = load_analysis(file);
  SearchSpec spec;
  spec.box = parse_box(box);
  spec.denominator = Int(1);
  spec.jobs = jobs;

  Report report;
  report.command = "translate-check";
  report.inputs["problem"] = problem_to_json(a.problem);
  report.inputs["complement_fingerprint"] = a.split.fingerprint();
  report.inputs["box"] = spec.box.str();
  add_mode_warnings(report, a.problem.system, spec);

  auto records = search_box(a.problem.system, a.split, spec);
  TranslateVerdict verdict = translate_check(a.problem.system, records, a.h, spec.box);
  report.results["pass"] = verdict.pass;
  Json reps = Json::array();
  for (const auto& r : verdict.coset_reps) reps.push_back(zvec_json(r));
  report.results["coset_representatives"] = reps;
  if (verdict.missing) {
    report.results["missing"] = zvec_json(*verdict.missing);
  }
  report.results["H"] = lattice_json(a.h);
  report.results["integer_solutions"] = std::count_if(
      records.begin(), records.end(), [](const SolutionRecord& r) {
        for (Index j = 0; j < r.q.size(); ++j) {
          if (!r.q[j].is_integer()) return false;
        }
        return r.status == SolutionStatus::nondegenerate;
      });
  print_report(report, format);
}

void cmd_finiteness(const std::string& file, const std::string& box, const std::string& den,
                    int growth, int jobs, const std::string& format) {
  Analysis a = load_analysis(file);
  SearchSpec spec;
  spec.box = parse_box(box);
  spec.denominator = parse_den(den);
  spec.growth_steps = growth;
  spec.jobs = jobs;

  Report report;
  report.command = "finiteness";
  report.inputs["problem"] = problem_to_json(a.problem);
  report.inputs["complement_fingerprint"] = a.split.fingerprint();
  report.inputs["box"] = spec.box.str();
  report.inputs["denominator"] = spec.denominator.str();
  report.inputs["growth"] = growth;
  add_mode_warnings(report, a.problem.system, spec);

  FinitenessReport fr = finiteness_monitor(a.problem.system, a.split, spec);
  Json steps = Json::array();
  for (const auto& s : fr.steps) {
    Json row;
    row["box"] = s.box.str();
    row["nondegenerate_count"] = s.nondegenerate_count;
    steps.push_back(row);
  }
  report.results["steps"] = steps;
  report.results["stabilized"] = fr.stabilized;
  report.results["hypothesis_ok"] = fr.hypothesis_ok;
  if (fr.beta_relation) report.results["beta_relation"] = zvec_json(*fr.beta_relation);
  for (const auto& w : fr.warnings) report.warnings.push_back(w);
  print_report(report, format);
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* cap = std::getenv("POLYEXP_MAX_ORDER")) {
    try {
      polyexp::set_max_order(polyexp::Int::parse(cap).to_long());
    } catch (const std::exception& e) {
      std::cerr << "error: bad POLYEXP_MAX_ORDER: " << e.what() << "\n";
      return 2;
    }
  }

  CLI::App app{"Exact analysis of polynomial-exponential equations over log-rational exponents"};
  app.require_subcommand(1);

  std::string file, box = "1", den = "1", mode = "grouped", format = "text", coeffs = "1";
  std::vector<std::string> values;
  long terms = 1, delta = 1, max_order_q = 12;
  int growth = 0, jobs = 1, max_terms = 3;
  bool dedup_galois = false;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format: text or json")->default_str("text");
  };

  auto* analyze = app.add_subcommand("analyze", "V, V', projections, H, independence report");
  analyze->add_option("file", file, "Problem file")->required();
  analyze->add_option("--delta", delta, "Cyclotomic intersection degree for the order bound");
  add_format(analyze);
  analyze->callback([&] { cmd_analyze(file, delta, format); });

  auto* search = app.add_subcommand("search", "Exhaustive bounded-denominator solution search");
  search->add_option("file", file)->required();
  search->add_option("--box", box, "Sup-norm bound B (rational)")->required();
  search->add_option("--den", den, "Grid denominator D")->required();
  search->add_option("--mode", mode, "exact or grouped");
  search->add_option("--jobs", jobs, "Worker threads");
  add_format(search);
  search->callback([&] { cmd_search(file, box, den, mode, jobs, format); });

  auto* verify = app.add_subcommand(
      "verify", "Search, classification, empirical denominator certificate, distance report");
  verify->add_option("file", file)->required();
  verify->add_option("--box", box)->required();
  verify->add_option("--den", den)->required();
  verify->add_option("--growth", growth, "Doublings of box and denominator to compare");
  verify->add_option("--jobs", jobs);
  add_format(verify);
  verify->callback([&] { cmd_verify(file, box, den, growth, jobs, format); });

  auto* dz = app.add_subcommand("dz-bound", "Root-of-unity order bound from (k, delta)");
  dz->add_option("--terms", terms, "Non-constant term count k")->required();
  dz->add_option("--delta", delta, "Cyclotomic intersection degree")->required();
  add_format(dz);
  dz->callback([&] { cmd_dz_bound(terms, delta, format); });

  auto* vs = app.add_subcommand("vanishing-sums", "Enumerate minimal vanishing sums");
  vs->add_option("--max-terms", max_terms, "Maximum number of terms")->required();
  vs->add_option("--max-order", max_order_q, "Maximum order Q")->required();
  vs->add_option("--coeffs", coeffs, "Comma-separated coefficient set, e.g. 1,-1");
  vs->add_flag("--dedup-galois", dedup_galois, "Keep one representative per Galois orbit");
  add_format(vs);
  vs->callback([&] { cmd_vanishing_sums(max_terms, max_order_q, coeffs, dedup_galois, format); });

  auto* spec = app.add_subcommand("specialize", "Nonsingular evaluation certificate");
  spec->add_option("file", file, "Poly-tuple file")->required();
  add_format(spec);
  spec->callback([&] { cmd_specialize(file, format); });

  auto* mi = app.add_subcommand("mult-indep", "Multiplicative independence of positive rationals");
  mi->add_option("values", values, "Values as p/q strings")->required()->expected(-1);
  add_format(mi);
  mi->callback([&] { cmd_mult_indep(values, format); });

  auto* tc = app.add_subcommand("translate-check", "Coset-translate check for integer solutions");
  tc->add_option("file", file)->required();
  tc->add_option("--box", box)->required();
  tc->add_option("--jobs", jobs);
  add_format(tc);
  tc->callback([&] { cmd_translate_check(file, box, jobs, format); });

  auto* fin = app.add_subcommand("finiteness", "Nondegenerate counts over nested boxes");
  fin->add_option("file", file)->required();
  fin->add_option("--box", box)->required();
  fin->add_option("--den", den)->required();
  fin->add_option("--growth", growth, "Number of box doublings")->required();
  fin->add_option("--jobs", jobs);
  add_format(fin);
  fin->callback([&] { cmd_finiteness(file, box, den, growth, jobs, format); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const polyexp::AnalysisRefusal& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return 1;
  } catch (const polyexp::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
