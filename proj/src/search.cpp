#include "polyexp/search.hpp"

#include <algorithm>
#include <set>
#include <thread>

#include "polyexp/error.hpp"

namespace polyexp {

namespace {

bool expvec_integral(const GroupVal& g) {
  for (Index i = 0; i < g.expvec.size(); ++i) {
    if (!g.expvec[i].is_integer()) return false;
  }
  return true;
}

// Per-term data of the folded zero test: a bucket key (the exponent
// vector; all-zero in exact mode) and the term's cyclotomic value in the
// common field Q(zeta_L).
struct FoldedTerms {
  std::vector<QVec> keys;
  std::vector<CycNum> values;
  long folded_order = 1;
  ZeroMode mode = ZeroMode::exact_cyclotomic;
};

FoldedTerms fold_terms(const EqSystem& sys, const QVec& q, SearchMode mode) {
  const Index s = sys.num_terms();
  const Index m = sys.num_logs();

  std::vector<TermValue> terms;
  bool integral = true;
  for (Index i = 0; i < s; ++i) {
    TermValue tv;
    tv.poly_value = poly_eval(sys.polys[static_cast<std::size_t>(i)], q);
    tv.exp_part = exp_value(sys.alpha, i, q);
    integral = integral && expvec_integral(tv.exp_part);
    terms.push_back(std::move(tv));
  }
  const bool exact = integral && sys.genset.all_concrete();
  if (!exact && mode == SearchMode::exact_only) {
    throw AnalysisRefusal("requires grouped mode");
  }

  Int l_int(sys.order);
  for (const auto& tv : terms) l_int = lcm(l_int, tv.exp_part.angle.denominator());
  const long l = l_int.to_long();

  FoldedTerms out;
  out.folded_order = l;
  out.mode = exact ? ZeroMode::exact_cyclotomic : ZeroMode::grouped_radical;
  const QVec zero_key = QVec::Constant(m, Rat(0));
  for (Index i = 0; i < s; ++i) {
    const TermValue& tv = terms[static_cast<std::size_t>(i)];
    CycNum v = cyc_embed(tv.poly_value, l);
    Int k = (tv.exp_part.angle * Rat(l_int)).numerator();
    v = v * CycNum::root_power(l, k);
    if (exact) {
      // Fold the torsion-free monomial into the rational scalar.
      Rat scalar(1);
      for (Index g = 0; g < m; ++g) {
        scalar *= pow(*sys.genset.generators[static_cast<std::size_t>(g)].value,
                      tv.exp_part.expvec[g].numerator());
      }
      v = v * scalar;
      out.keys.push_back(zero_key);
    } else {
      out.keys.push_back(tv.exp_part.expvec);
    }
    out.values.push_back(std::move(v));
  }
  return out;
}

// Sum of the selected terms, bucketed by key; zero iff every bucket sum is.
bool subset_is_zero(const FoldedTerms& folded, const std::vector<int>& subset) {
  std::map<QVec, CycNum, QVecLess> acc;
  for (int i : subset) {
    const QVec& key = folded.keys[static_cast<std::size_t>(i)];
    auto it = acc.find(key);
    if (it == acc.end()) {
      acc.emplace(key, folded.values[static_cast<std::size_t>(i)]);
    } else {
      it->second += folded.values[static_cast<std::size_t>(i)];
    }
  }
  for (const auto& [key, sum] : acc) {
    if (!sum.is_zero()) return false;
  }
  return true;
}

// Smallest (by size, then lexicographic) nonempty subset of `pool` whose
// sum vanishes; allow_full permits the whole pool.
std::optional<std::vector<int>> minimal_vanishing_subset(const FoldedTerms& folded,
                                                         const std::vector<int>& pool,
                                                         bool allow_full) {
  const std::size_t n = pool.size();
  const std::size_t max_size = allow_full ? n : n - 1;
  std::vector<int> pick;
  for (std::size_t k = 1; k <= max_size; ++k) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
      pick.clear();
      for (std::size_t i : idx) pick.push_back(pool[i]);
      if (subset_is_zero(folded, pick)) return pick;
      // next combination in lexicographic order
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return std::nullopt;
}

}  // namespace

EvalResult evaluate_at(const EqSystem& sys, const QVec& q, SearchMode mode) {
  if (q.size() != sys.num_vars()) throw InputError("dimension mismatch: point arity");
  FoldedTerms folded = fold_terms(sys, q, mode);

  EvalResult out;
  out.zero_mode = folded.mode;
  out.grouping.folded_order = folded.folded_order;
  for (Index i = 0; i < sys.num_terms(); ++i) {
    TermValue tv;
    tv.poly_value = poly_eval(sys.polys[static_cast<std::size_t>(i)], q);
    tv.exp_part = exp_value(sys.alpha, i, q);
    out.grouping.terms.push_back(std::move(tv));
    const QVec& key = folded.keys[static_cast<std::size_t>(i)];
    auto it = out.grouping.groups.find(key);
    if (it == out.grouping.groups.end()) {
      out.grouping.groups.emplace(key, folded.values[static_cast<std::size_t>(i)]);
    } else {
      it->second += folded.values[static_cast<std::size_t>(i)];
    }
  }
  out.is_zero = true;
  for (const auto& [key, sum] : out.grouping.groups) {
    if (!sum.is_zero()) {
      out.is_zero = false;
      break;
    }
  }
  return out;
}

bool grid_fully_exact(const EqSystem& sys, const SearchSpec& spec) {
  if (!sys.genset.all_concrete()) return false;
  Int k = floor(spec.box * Rat(spec.denominator));
  if (k.sign() <= 0) return true;  // only q = 0 lies in the box
  Rat d(spec.denominator);
  for (Index m = 0; m < sys.num_logs(); ++m) {
    for (Index i = 0; i < sys.num_terms(); ++i) {
      for (Index j = 0; j < sys.num_vars(); ++j) {
        if (!(sys.alpha.logs(m)(i, j) / d).is_integer()) return false;
      }
    }
  }
  return true;
}

std::optional<SolutionRecord> classify(const EqSystem& sys, const SplitSpace& split,
                                       const QVec& q, SearchMode mode, long subset_cap) {
  FoldedTerms folded = fold_terms(sys, q, mode);
  const Index s = sys.num_terms();

  std::vector<int> all;
  for (Index i = 0; i < s; ++i) all.push_back(static_cast<int>(i));
  if (!subset_is_zero(folded, all)) return std::nullopt;

  if (s > subset_cap) {
    throw InputError("subset explosion: " + std::to_string(s) +
                     " terms exceed the classification cap " + std::to_string(subset_cap));
  }

  SolutionRecord rec;
  rec.q = q;
  rec.zero_mode = folded.mode;
  rec.pi_q = split.project_v(q);
  rec.pi_prime_q = split.project_vprime(q);

  auto first = minimal_vanishing_subset(folded, all, /*allow_full=*/false);
  if (!first) {
    rec.status = SolutionStatus::nondegenerate;
    return rec;
  }

  rec.status = SolutionStatus::degenerate;
  // Greedy finest partition: peel off minimal vanishing blocks; the
  // remainder always sums to zero, so the loop terminates.
  std::vector<int> remaining = all;
  std::vector<int> block = *first;
  for (;;) {
    std::vector<int> ones;
    for (int i : block) ones.push_back(i + 1);
    rec.witness.push_back(ones);
    std::vector<int> next;
    std::set_difference(remaining.begin(), remaining.end(), block.begin(), block.end(),
                        std::back_inserter(next));
    remaining = std::move(next);
    if (remaining.empty()) break;
    block = *minimal_vanishing_subset(folded, remaining, /*allow_full=*/true);
  }
  return rec;
}

std::vector<SolutionRecord> search_box(const EqSystem& sys, const SplitSpace& split,
                                       const SearchSpec& spec) {
  if (spec.box.sign() <= 0) throw InputError("box must be positive");
  if (spec.denominator.sign() <= 0) throw InputError("denominator must be positive");
  const Index t = sys.num_vars();

  if (spec.mode == SearchMode::exact_only && !grid_fully_exact(sys, spec)) {
    throw AnalysisRefusal("requires grouped mode");
  }

  const Int k = floor(spec.box * Rat(spec.denominator));
  const Int side = Int(2) * k + Int(1);
  Int total(1);
  for (Index j = 0; j < t; ++j) total *= side;
  if (!total.fits_long() || total.to_long() > spec.grid_cap) {
    throw InputError("search too large: grid has " + total.str() + " points (cap " +
                     std::to_string(spec.grid_cap) + ")");
  }
  const long n = total.to_long();
  const long side_l = side.to_long();
  const Rat inv_d = Rat(Int(1), spec.denominator);

  auto point_at = [&](long flat) {
    QVec q(t);
    long rem = flat;
    for (Index j = t - 1; j >= 0; --j) {
      long digit = rem % side_l;
      rem /= side_l;
      q[j] = (Rat(digit) - Rat(k)) * inv_d;
    }
    return q;
  };

  const int jobs = std::max(1, spec.jobs);
  std::vector<std::vector<SolutionRecord>> partial(static_cast<std::size_t>(jobs));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(jobs));

  auto work = [&](int w, long lo, long hi) {
    try {
      for (long f = lo; f < hi; ++f) {
        QVec q = point_at(f);
        auto rec = classify(sys, split, q, spec.mode, spec.subset_cap);
        if (rec) partial[static_cast<std::size_t>(w)].push_back(std::move(*rec));
      }
    } catch (...) {
      errors[static_cast<std::size_t>(w)] = std::current_exception();
    }
  };

  if (jobs == 1) {
    work(0, 0, n);
  } else {
    std::vector<std::thread> threads;
    long chunk = (n + jobs - 1) / jobs;
    for (int w = 0; w < jobs; ++w) {
      long lo = std::min<long>(n, w * chunk);
      long hi = std::min<long>(n, lo + chunk);
      threads.emplace_back(work, w, lo, hi);
    }
    for (auto& th : threads) th.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  std::vector<SolutionRecord> out;
  for (auto& p : partial) {
    for (auto& r : p) out.push_back(std::move(r));
  }
  return out;
}

EmpiricalCert empirical_denominator(const std::vector<SolutionRecord>& records,
                                    const SplitSpace& split, const Rat& box,
                                    const Int& denominator) {
  EmpiricalCert cert;
  cert.records = records;
  cert.box = box;
  cert.denominator = denominator;
  cert.complement_fingerprint = split.fingerprint();
  for (const auto& r : records) {
    if (r.status != SolutionStatus::nondegenerate) continue;
    for (Index j = 0; j < r.pi_prime_q.size(); ++j) {
      cert.n_emp = lcm(cert.n_emp, r.pi_prime_q[j].denominator());
    }
  }
  return cert;
}

std::vector<DistanceRow> distance_report(const std::vector<SolutionRecord>& records,
                                         const ZLattice& lattice, const Int& scale) {
  if (scale.sign() <= 0) throw InputError("invalid modulus");
  std::vector<DistanceRow> out;
  for (const auto& r : records) {
    if (r.status != SolutionStatus::nondegenerate) continue;
    QVec target(r.pi_prime_q.size());
    for (Index j = 0; j < target.size(); ++j) target[j] = r.pi_prime_q[j] * Rat(scale);
    NearestPoint np = nearest_point(lattice, target);
    DistanceRow row;
    row.q = r.q;
    row.nearest = QVec(np.point.size());
    for (Index j = 0; j < np.point.size(); ++j) row.nearest[j] = Rat(np.point[j], scale);
    row.distance = np.distance / Rat(scale);
    double norm = sup_norm(r.pi_prime_q).to_double();
    row.log_norm = std::log(std::max(1.0, norm));
    out.push_back(std::move(row));
  }
  return out;
}

TranslateVerdict translate_check(const EqSystem& sys,
                                 const std::vector<SolutionRecord>& records, const ZLattice& h,
                                 const Rat& box) {
  for (const auto& p : sys.polys) {
    if (!p.is_constant()) {
      throw AnalysisRefusal("translate check applies only to constant polynomial coefficients");
    }
  }

  // Integer nondegenerate solutions, as a sorted set for the coset sweep.
  std::vector<ZVec> sols;
  for (const auto& r : records) {
    if (r.status != SolutionStatus::nondegenerate) continue;
    bool integral = true;
    for (Index j = 0; j < r.q.size(); ++j) integral = integral && r.q[j].is_integer();
    if (!integral) continue;
    ZVec v(r.q.size());
    for (Index j = 0; j < r.q.size(); ++j) v[j] = r.q[j].numerator();
    sols.push_back(std::move(v));
  }
  std::sort(sols.begin(), sols.end(), [](const ZVec& a, const ZVec& b) { return lex_less(a, b); });
  auto recorded = [&](const ZVec& v) {
    auto it = std::lower_bound(sols.begin(), sols.end(), v,
                               [](const ZVec& a, const ZVec& b) { return lex_less(a, b); });
    return it != sols.end() && !(lex_less(v, *it) || lex_less(*it, v));
  };

  TranslateVerdict verdict;
  std::set<std::vector<std::string>> seen;  // dedupe by printable rep
  for (const auto& s : sols) {
    ZVec rep = h.reduce(s);
    std::vector<std::string> key;
    for (Index j = 0; j < rep.size(); ++j) key.push_back(rep[j].str());
    if (!seen.insert(key).second) continue;
    verdict.coset_reps.push_back(rep);
    for (const ZVec& pt : lattice_points_in_box(h, rep, box)) {
      if (!recorded(pt)) {
        verdict.pass = false;
        if (!verdict.missing) verdict.missing = pt;
      }
    }
  }
  std::sort(verdict.coset_reps.begin(), verdict.coset_reps.end(),
            [](const ZVec& a, const ZVec& b) { return lex_less(a, b); });
  return verdict;
}

FinitenessReport finiteness_monitor(const EqSystem& sys, const SplitSpace& split,
                                    const SearchSpec& spec) {
  if (!sys.genset.all_concrete()) {
    throw AnalysisRefusal("finiteness monitor needs concrete generators");
  }

  FinitenessReport report;
  // Hypothesis: the indexed family beta_ij (row-major over terms and
  // variables) is multiplicatively independent. Repeats are dependences in
  // their own right, so no deduplication happens here.
  std::vector<GroupVal> betas;
  for (Index i = 0; i < sys.num_terms(); ++i) {
    for (Index j = 0; j < sys.num_vars(); ++j) {
      QVec ev(sys.num_logs());
      for (Index m = 0; m < sys.num_logs(); ++m) ev[m] = sys.alpha.logs(m)(i, j);
      betas.emplace_back(mod1(sys.alpha.rho()(i, j)), std::move(ev));
    }
  }
  if (auto rel = group_relation(betas)) {
    report.hypothesis_ok = false;
    report.beta_relation = rel;
    report.warnings.push_back(
        "beta family is multiplicatively dependent; the finiteness statement does not apply "
        "and the counts below are diagnostic only");
  }
  report.warnings.push_back(
      "a stabilized count is evidence of finiteness on the scanned boxes, not a proof");

  SearchSpec step = spec;
  for (int g = 0; g <= spec.growth_steps; ++g) {
    auto records = search_box(sys, split, step);
    FinitenessStep row;
    row.box = step.box;
    for (const auto& r : records) {
      if (r.status == SolutionStatus::nondegenerate) ++row.nondegenerate_count;
    }
    report.steps.push_back(row);
    step.box = step.box * Rat(2);
  }
  report.stabilized =
      report.steps.size() < 2 ||
      report.steps[report.steps.size() - 1].nondegenerate_count ==
          report.steps[report.steps.size() - 2].nondegenerate_count;
  return report;
}

}  // namespace polyexp
