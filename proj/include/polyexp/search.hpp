#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "polyexp/model.hpp"
#include "polyexp/structure.hpp"

namespace polyexp {

enum class SearchMode { exact_only, allow_grouped };
enum class ZeroMode { exact_cyclotomic, grouped_radical };

struct SearchSpec {
  Rat box{1};          // sup-norm bound B > 0
  Int denominator{1};  // grid (1/D) Z^t
  SearchMode mode = SearchMode::allow_grouped;
  int growth_steps = 0;
  long grid_cap = 10000000;  // refuse larger grids
  int jobs = 1;
  long subset_cap = 20;  // classification explosion guard
};

struct TermValue {
  CycNum poly_value;  // P_i(q) in Q(zeta_M)
  GroupVal exp_part;  // exp(q . alpha_i)
};

/// Terms bucketed by the torsion-free part of their exponential value. In
/// exact mode everything folds into the single trivial bucket inside one
/// cyclotomic field; in grouped mode each distinct exponent vector keeps
/// its own folded cyclotomic coefficient sum.
struct TermGrouping {
  std::map<QVec, CycNum, QVecLess> groups;
  std::vector<TermValue> terms;
  long folded_order = 1;  // the common cyclotomic order L used by the fold
};

struct EvalResult {
  bool is_zero = false;
  ZeroMode zero_mode = ZeroMode::exact_cyclotomic;
  TermGrouping grouping;
};

/// Exact evaluation of the equation at q. When every exponent vector is
/// integral and all generators are concrete, the whole sum folds into one
/// cyclotomic field and the zero test is unconditionally rigorous.
/// Otherwise terms are grouped by exponent vector: a zero verdict is still
/// rigorous, a nonzero verdict rests on the declared radical-independence
/// assumption. exact_only mode refuses inputs that would need grouping.
EvalResult evaluate_at(const EqSystem& sys, const QVec& q, SearchMode mode);

/// True when every point of the (1/D)-grid inside the box evaluates in
/// exact mode: concrete generators and all log coefficients divisible by D.
bool grid_fully_exact(const EqSystem& sys, const SearchSpec& spec);

enum class SolutionStatus { nondegenerate, degenerate };

struct SolutionRecord {
  QVec q;
  SolutionStatus status = SolutionStatus::nondegenerate;
  /// Finest partition into vanishing blocks (1-based term indices),
  /// present exactly when status == degenerate.
  std::vector<std::vector<int>> witness;
  ZeroMode zero_mode = ZeroMode::exact_cyclotomic;
  QVec pi_q, pi_prime_q;
};

/// Classifies a solution by checking all nonempty proper subset sums with
/// the same zero-test machinery; subsets are scanned by size then
/// lexicographic order, so the degeneracy witness is deterministic.
/// Returns nullopt when q is not a solution at all.
std::optional<SolutionRecord> classify(const EqSystem& sys, const SplitSpace& split,
                                       const QVec& q, SearchMode mode, long subset_cap = 20);

/// Exhaustive scan of all q in (1/D) Z^t with |q| <= B, in lexicographic
/// order, classifying every solution. Deterministic regardless of jobs.
std::vector<SolutionRecord> search_box(const EqSystem& sys, const SplitSpace& split,
                                       const SearchSpec& spec);

struct EmpiricalCert {
  Int n_emp{1};
  std::vector<SolutionRecord> records;
  Rat box;
  Int denominator;
  std::string complement_fingerprint;
};

/// N_emp = lcm of the coordinate denominators of pi'(q) over nondegenerate
/// records (1 when there are none).
EmpiricalCert empirical_denominator(const std::vector<SolutionRecord>& records,
                                    const SplitSpace& split, const Rat& box,
                                    const Int& denominator);

struct DistanceRow {
  QVec q;
  QVec nearest;     // m/N with m in the lattice
  Rat distance;     // sup-norm |pi'(q) - m/N|, exact
  double log_norm;  // log(max(1, |pi'(q)|)); diagnostic only
};

/// For each nondegenerate record, the nearest point of (1/N) L to pi'(q)
/// with the exact sup-norm distance. No constants are fitted; the rows are
/// the raw (distance, log-norm) pairs.
std::vector<DistanceRow> distance_report(const std::vector<SolutionRecord>& records,
                                         const ZLattice& lattice, const Int& scale);

struct TranslateVerdict {
  bool pass = true;
  std::vector<ZVec> coset_reps;  // canonical HNF-reduced representatives
  std::optional<ZVec> missing;   // box point of a represented coset not recorded
};

/// Checks that the integer nondegenerate solutions fill whole cosets of H
/// inside the box. Refuses systems with non-constant polynomial
/// coefficients, where the statement does not apply.
TranslateVerdict translate_check(const EqSystem& sys,
                                 const std::vector<SolutionRecord>& records, const ZLattice& h,
                                 const Rat& box);

struct FinitenessStep {
  Rat box;
  long nondegenerate_count = 0;
};

struct FinitenessReport {
  std::vector<FinitenessStep> steps;
  bool stabilized = false;   // last two counts agree; evidence, not proof
  bool hypothesis_ok = true; // the beta family is multiplicatively independent
  std::optional<ZVec> beta_relation;
  std::vector<std::string> warnings;
};

/// Runs the search over nested boxes B, 2B, ..., 2^growth B at fixed D and
/// tabulates the nondegenerate counts. Requires concrete generators; a
/// dependent beta set downgrades the run to a warning.
FinitenessReport finiteness_monitor(const EqSystem& sys, const SplitSpace& split,
                                    const SearchSpec& spec);

}  // namespace polyexp
