#include <doctest.h>

#include <random>
#include <set>

#include "helpers.hpp"
#include "polyexp/error.hpp"
#include "polyexp/search.hpp"

#if defined(POLYEXP_HAVE_MPFR)
#include "interval.hpp"
#endif

using namespace polyexp;
using namespace polyexp::testing;

namespace {

SplitSpace split_of(const EqSystem& sys) {
  return complement_and_projections(compute_V(sys.alpha), sys.num_vars());
}

SearchSpec spec_of(const std::string& box, long den, SearchMode mode = SearchMode::allow_grouped) {
  SearchSpec s;
  s.box = rat(box);
  s.denominator = Int(den);
  s.mode = mode;
  return s;
}

// s = 1 system with P_1 = X_1 (zero exactly at the origin).
EqSystem single_linear_term() {
  std::vector<Generator> gens{{"g1", rat("2")}};
  AlphaMatrix alpha(1, 1, 1);
  alpha.set(0, 0, LogCoord{rat("0"), qvec({"1"})});
  CycPolyMV p(1, 1);
  Eigen::VectorXi e(1);
  e << 1;
  p.add_term(e, CycNum::one(1));
  GenSet gs;
  gs.generators = gens;
  return validate_system(EqSystem{gs, alpha, {p}, 1});
}

}  // namespace

TEST_CASE("evaluate_at examples") {
  EqSystem sys = pow4_minus_2();
  {
    EvalResult ev = evaluate_at(sys, qvec({"1/2"}), SearchMode::allow_grouped);
    CHECK(ev.is_zero);
    CHECK(ev.zero_mode == ZeroMode::exact_cyclotomic);
    // Term values 2 and -2.
    CHECK(ev.grouping.terms[0].exp_part.expvec[0] == rat("1"));
    CHECK(ev.grouping.terms[1].poly_value == CycNum::from_rat(rat("-2"), 1));
  }
  {
    EvalResult ev = evaluate_at(sys, qvec({"1"}), SearchMode::allow_grouped);
    CHECK_FALSE(ev.is_zero);  // 4 - 2
  }
  {
    // Cancellation inside a single group at any q.
    EvalResult ev = evaluate_at(identical_rows(), qvec({"7/5"}), SearchMode::allow_grouped);
    CHECK(ev.is_zero);
    CHECK(ev.zero_mode == ZeroMode::grouped_radical);
    CHECK(ev.grouping.groups.size() == 1);
  }
  {
    // Fractional exponent in exact_only mode refuses.
    CHECK_THROWS_AS(evaluate_at(sys, qvec({"1/3"}), SearchMode::exact_only), AnalysisRefusal);
    // Integral exponents pass in exact mode.
    EvalResult ev = evaluate_at(sys, qvec({"1/2"}), SearchMode::exact_only);
    CHECK(ev.is_zero);
  }
  {
    // Symbolic generators force grouped mode.
    SystemBuilder b;
    b.gens = {{"u", std::nullopt}};
    b.coeffs = {"1", "-1"};
    b.rhos = {"0", "0"};
    b.logs = {{"1"}, {"2"}};
    EqSystem sym = b.build();
    CHECK_THROWS_AS(evaluate_at(sym, qvec({"1"}), SearchMode::exact_only), AnalysisRefusal);
    EvalResult ev = evaluate_at(sym, qvec({"0"}), SearchMode::allow_grouped);
    CHECK(ev.is_zero);
    CHECK(ev.zero_mode == ZeroMode::grouped_radical);
  }
}

TEST_CASE("classify examples") {
  {
    EqSystem sys = pow4_minus_2();
    auto rec = classify(sys, split_of(sys), qvec({"1/2"}), SearchMode::allow_grouped);
    REQUIRE(rec.has_value());
    CHECK(rec->status == SolutionStatus::nondegenerate);
    CHECK(rec->witness.empty());
    CHECK_FALSE(classify(sys, split_of(sys), qvec({"1"}), SearchMode::allow_grouped).has_value());
  }
  {
    EqSystem sys = paired_cancellation();
    SplitSpace split = split_of(sys);
    std::mt19937 rng(12);
    std::uniform_int_distribution<int> num(-10, 10);
    std::uniform_int_distribution<int> den(1, 6);
    for (int iter = 0; iter < 20; ++iter) {
      QVec q(1);
      q[0] = Rat(num(rng), den(rng));
      auto rec = classify(sys, split, q, SearchMode::allow_grouped);
      REQUIRE(rec.has_value());
      CHECK(rec->status == SolutionStatus::degenerate);
      REQUIRE(rec->witness.size() == 2);
      CHECK(rec->witness[0] == std::vector<int>{1, 2});
      CHECK(rec->witness[1] == std::vector<int>{3, 4});
    }
  }
  {
    // Single vanishing term: nondegenerate vacuously.
    EqSystem sys = single_linear_term();
    auto rec = classify(sys, split_of(sys), qvec({"0"}), SearchMode::allow_grouped);
    REQUIRE(rec.has_value());
    CHECK(rec->status == SolutionStatus::nondegenerate);
  }
  {
    // Cap on the subset explosion.
    EqSystem sys = paired_cancellation();
    CHECK_THROWS_AS(classify(sys, split_of(sys), qvec({"1"}), SearchMode::allow_grouped, 3),
                    InputError);
  }
}

TEST_CASE("search_box examples") {
  {
    EqSystem sys = pow4_minus_2();
    auto records = search_box(sys, split_of(sys), spec_of("3", 12));
    REQUIRE(records.size() == 1);
    CHECK(records[0].q == qvec({"1/2"}));
    CHECK(records[0].status == SolutionStatus::nondegenerate);
  }
  {
    EqSystem sys = half_turn();
    auto records = search_box(sys, split_of(sys), spec_of("3", 6));
    REQUIRE(records.size() == 4);
    CHECK(records[0].q == qvec({"-3"}));
    CHECK(records[1].q == qvec({"-1"}));
    CHECK(records[2].q == qvec({"1"}));
    CHECK(records[3].q == qvec({"3"}));
  }
  {
    // Integer grid, no integer solutions.
    EqSystem sys = pow4_minus_2();
    CHECK(search_box(sys, split_of(sys), spec_of("5", 1)).empty());
  }
  {
    // Worker count cannot change the result.
    EqSystem sys = half_turn();
    SearchSpec s = spec_of("4", 6);
    auto one = search_box(sys, split_of(sys), s);
    s.jobs = 3;
    auto three = search_box(sys, split_of(sys), s);
    REQUIRE(one.size() == three.size());
    for (std::size_t i = 0; i < one.size(); ++i) CHECK(one[i].q == three[i].q);
  }
  {
    SearchSpec s = spec_of("1000000", 100);
    EqSystem sys = pow4_minus_2();
    CHECK_THROWS_WITH_AS(search_box(sys, split_of(sys), s),
                         doctest::Contains("search too large"), InputError);
  }
  {
    // exact_only refuses a grid with fractional exponents, accepts D = 2.
    EqSystem sys = pow4_minus_2();
    CHECK_THROWS_AS(search_box(sys, split_of(sys), spec_of("3", 12, SearchMode::exact_only)),
                    AnalysisRefusal);
    auto records = search_box(sys, split_of(sys), spec_of("3", 2, SearchMode::exact_only));
    REQUIRE(records.size() == 1);
    CHECK(records[0].q == qvec({"1/2"}));
    CHECK(records[0].zero_mode == ZeroMode::exact_cyclotomic);
  }
}

TEST_CASE("empirical_denominator examples") {
  EqSystem sys = pow4_minus_2();
  SplitSpace split = split_of(sys);
  {
    auto records = search_box(sys, split, spec_of("3", 12));
    EmpiricalCert cert = empirical_denominator(records, split, rat("3"), Int(12));
    CHECK(cert.n_emp == Int(2));
    CHECK(cert.complement_fingerprint == split.fingerprint());
  }
  {
    EmpiricalCert cert = empirical_denominator({}, split, rat("3"), Int(12));
    CHECK(cert.n_emp == Int(1));
  }
  {
    EqSystem turn = half_turn();
    SplitSpace tsplit = split_of(turn);
    auto records = search_box(turn, tsplit, spec_of("3", 1));
    CHECK_FALSE(records.empty());
    EmpiricalCert cert = empirical_denominator(records, tsplit, rat("3"), Int(1));
    CHECK(cert.n_emp == Int(1));  // integer solutions only
  }
}

TEST_CASE("N_emp is stable under box growth at fixed D") {
  struct Case {
    EqSystem sys;
    std::string box;
    long den;
  };
  std::vector<Case> cases{{pow4_minus_2(), "3", 12}, {half_turn(), "3", 6},
                          {two_pow_three_pow_six(), "2", 6}};
  for (auto& c : cases) {
    SplitSpace split = split_of(c.sys);
    auto r1 = search_box(c.sys, split, spec_of(c.box, c.den));
    auto r2 = search_box(c.sys, split, spec_of((rat(c.box) * Rat(2)).str(), c.den));
    Int n1 = empirical_denominator(r1, split, rat(c.box), Int(c.den)).n_emp;
    Int n2 = empirical_denominator(r2, split, rat(c.box) * Rat(2), Int(c.den)).n_emp;
    CHECK(n1 == n2);
  }
}

TEST_CASE("distance_report examples") {
  {
    EqSystem sys = half_turn();
    SplitSpace split = split_of(sys);
    auto records = search_box(sys, split, spec_of("1", 1));  // q = 1 and q = -1
    ZLattice h = compute_H(sys);
    auto rows = distance_report(records, h, Int(1));
    REQUIRE(rows.size() == 2);
    CHECK(rows[1].q == qvec({"1"}));
    CHECK(rows[1].nearest == qvec({"0"}));
    CHECK(rows[1].distance == rat("1"));
    CHECK(rows[1].log_norm == 0.0);
  }
  {
    // pi'(q) in L/N exactly gives distance 0.
    EqSystem sys = pow4_minus_2();
    SplitSpace split = split_of(sys);
    auto records = search_box(sys, split, spec_of("3", 12));
    ZLattice full = ZLattice::full(1);
    auto rows = distance_report(records, full, Int(2));
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].distance == rat("0"));
    CHECK(rows[0].nearest == qvec({"1/2"}));
  }
  CHECK(distance_report({}, ZLattice::full(1), Int(1)).empty());
}

TEST_CASE("translate_check examples") {
  EqSystem sys = half_turn();
  SplitSpace split = split_of(sys);
  ZLattice h = compute_H(sys);
  auto records = search_box(sys, split, spec_of("5", 1));
  {
    TranslateVerdict v = translate_check(sys, records, h, rat("5"));
    CHECK(v.pass);
    REQUIRE(v.coset_reps.size() == 1);
    CHECK(v.coset_reps[0] == zvec({1}));
    CHECK_FALSE(v.missing.has_value());
  }
  {
    // Removing q = 3 breaks the coset and 3 is the reported witness.
    std::vector<SolutionRecord> broken;
    for (const auto& r : records) {
      if (r.q != qvec({"3"})) broken.push_back(r);
    }
    TranslateVerdict v = translate_check(sys, broken, h, rat("5"));
    CHECK_FALSE(v.pass);
    REQUIRE(v.missing.has_value());
    CHECK(*v.missing == zvec({3}));
  }
  {
    TranslateVerdict v = translate_check(sys, {}, h, rat("5"));
    CHECK(v.pass);
    CHECK(v.coset_reps.empty());
  }
  {
    EqSystem bad = single_linear_term();
    CHECK_THROWS_AS(translate_check(bad, {}, compute_H(bad), rat("2")), AnalysisRefusal);
  }
}

TEST_CASE("finiteness_monitor examples") {
  {
    EqSystem sys = two_pow_three_pow_six();
    SearchSpec s = spec_of("2", 6);
    s.growth_steps = 2;
    FinitenessReport r = finiteness_monitor(sys, split_of(sys), s);
    REQUIRE(r.steps.size() == 3);
    CHECK(r.steps[0].box == rat("2"));
    CHECK(r.steps[1].box == rat("4"));
    CHECK(r.steps[2].box == rat("8"));
    for (const auto& st : r.steps) CHECK(st.nondegenerate_count == 1);
    CHECK(r.stabilized);
  }
  {
    // Identical rows: every grid point solves nondegenerately, so counts grow.
    EqSystem sys = identical_rows();
    SearchSpec s = spec_of("2", 1);
    s.growth_steps = 2;
    FinitenessReport r = finiteness_monitor(sys, split_of(sys), s);
    REQUIRE(r.steps.size() == 3);
    CHECK(r.steps[0].nondegenerate_count < r.steps[1].nondegenerate_count);
    CHECK(r.steps[1].nondegenerate_count < r.steps[2].nondegenerate_count);
    CHECK_FALSE(r.stabilized);
    CHECK_FALSE(r.hypothesis_ok);  // the beta set contains 1
  }
  {
    // Empty solution set: all counts zero.
    EqSystem sys = pow4_minus_2();
    SearchSpec s = spec_of("2", 1);
    s.growth_steps = 1;
    FinitenessReport r = finiteness_monitor(sys, split_of(sys), s);
    for (const auto& st : r.steps) CHECK(st.nondegenerate_count == 0);
    CHECK(r.stabilized);
  }
  {
    // Symbolic generators are refused.
    SystemBuilder b;
    b.gens = {{"u", std::nullopt}};
    b.coeffs = {"1", "-1"};
    b.rhos = {"0", "0"};
    b.logs = {{"1"}, {"2"}};
    EqSystem sym = b.build();
    SearchSpec s = spec_of("2", 1);
    CHECK_THROWS_AS(finiteness_monitor(sym, split_of(sym), s), AnalysisRefusal);
  }
}

TEST_CASE("normalization preserves the solution set") {
  std::mt19937 rng(21);
  std::uniform_int_distribution<int> num(-8, 8);
  std::uniform_int_distribution<int> den(1, 5);
  std::vector<EqSystem> systems{pow4_minus_2(), half_turn(), two_pow_three_pow_six(),
                                paired_cancellation()};
  for (const EqSystem& sys : systems) {
    EqSystem normalized = sys;
    normalized.alpha = normalize_alpha(sys.alpha);
    for (int iter = 0; iter < 40; ++iter) {
      QVec q(sys.num_vars());
      for (Index j = 0; j < q.size(); ++j) q[j] = Rat(num(rng), den(rng));
      bool before = evaluate_at(sys, q, SearchMode::allow_grouped).is_zero;
      bool after = evaluate_at(normalized, q, SearchMode::allow_grouped).is_zero;
      CHECK(before == after);
    }
  }
}

TEST_CASE("classification re-verified through subsystems") {
  // Independent walker: subset sums recomputed by evaluating the subsystem
  // with only those terms, rather than through the classifier's folding.
  auto subset_is_zero = [](const EqSystem& sys, const std::vector<int>& subset, const QVec& q) {
    AlphaMatrix alpha(static_cast<Index>(subset.size()), sys.num_vars(), sys.num_logs());
    std::vector<CycPolyMV> polys;
    for (std::size_t i = 0; i < subset.size(); ++i) {
      for (Index j = 0; j < sys.num_vars(); ++j) {
        alpha.set(static_cast<Index>(i), j, sys.alpha.at(subset[i], j));
      }
      polys.push_back(sys.polys[static_cast<std::size_t>(subset[i])]);
    }
    EqSystem sub{sys.genset, alpha, polys, sys.order};
    return evaluate_at(sub, q, SearchMode::allow_grouped).is_zero;
  };

  std::vector<std::pair<EqSystem, SearchSpec>> cases;
  cases.emplace_back(pow4_minus_2(), spec_of("3", 12));
  cases.emplace_back(half_turn(), spec_of("3", 6));
  cases.emplace_back(paired_cancellation(), spec_of("1", 2));
  for (auto& [sys, spec] : cases) {
    SplitSpace split = split_of(sys);
    for (const auto& rec : search_box(sys, split, spec)) {
      const int s = static_cast<int>(sys.num_terms());
      if (rec.status == SolutionStatus::nondegenerate) {
        for (unsigned mask = 1; mask + 1 < (1u << s); ++mask) {
          std::vector<int> subset;
          for (int i = 0; i < s; ++i) {
            if (mask & (1u << i)) subset.push_back(i);
          }
          CHECK_FALSE(subset_is_zero(sys, subset, rec.q));
        }
      } else {
        for (const auto& block : rec.witness) {
          std::vector<int> subset;
          for (int i : block) subset.push_back(i - 1);
          CHECK(subset_is_zero(sys, subset, rec.q));
        }
      }
    }
  }
}

TEST_CASE("search exhaustiveness spot-check") {
  EqSystem sys = pow4_minus_2();
  SplitSpace split = split_of(sys);
  auto records = search_box(sys, split, spec_of("3", 12));
  std::set<std::string> found;
  for (const auto& r : records) found.insert(r.q[0].str());
  std::mt19937 rng(9);
  std::uniform_int_distribution<long> pick(-36, 36);
  for (int iter = 0; iter < 100; ++iter) {
    QVec q(1);
    q[0] = Rat(Int(pick(rng)), Int(12));
    bool zero = evaluate_at(sys, q, SearchMode::allow_grouped).is_zero;
    CHECK(zero == (found.count(q[0].str()) > 0));
  }
}

#if defined(POLYEXP_HAVE_MPFR)

namespace {

CInterval system_interval(const EqSystem& sys, const QVec& q, mpfr_prec_t prec) {
  CInterval acc(prec);
  for (Index i = 0; i < sys.num_terms(); ++i) {
    CycNum pv = poly_eval(sys.polys[static_cast<std::size_t>(i)], q);
    GroupVal g = exp_value(sys.alpha, i, q);
    CInterval term = cyc_interval(pv, prec);
    CInterval rot(prec);
    rot.re = Interval::cos2pi(g.angle, prec);
    rot.im = Interval::sin2pi(g.angle, prec);
    term = term * rot;
    Interval radial = Interval::from_rat(rat("1"), prec);
    for (Index m = 0; m < sys.num_logs(); ++m) {
      radial = radial * Interval::pow_rat(*sys.genset.generators[static_cast<std::size_t>(m)].value,
                                          g.expvec[m], prec);
    }
    CInterval scaled(prec);
    scaled.re = term.re * radial;
    scaled.im = term.im * radial;
    acc = acc + scaled;
  }
  return acc;
}

EqSystem gauss_system() {
  std::vector<Generator> gens{{"g1", rat("2")}};
  AlphaMatrix alpha(2, 1, 1);
  alpha.set(0, 0, LogCoord{rat("0"), qvec({"2"})});
  alpha.set(1, 0, LogCoord{rat("0"), qvec({"0"})});
  CycPolyMV p1(4, 1), p2(4, 1);
  p1.add_term(Eigen::VectorXi::Zero(1), CycNum::root_power(4, Int(1)));
  p2.add_term(Eigen::VectorXi::Zero(1), CycNum::root_power(4, Int(1)) * rat("-2"));
  GenSet gs;
  gs.generators = gens;
  return validate_system(EqSystem{gs, alpha, {p1, p2}, 4});
}

}  // namespace

TEST_CASE("interval cross-check of the zero tests") {
  std::vector<EqSystem> systems{pow4_minus_2(), half_turn(), two_pow_three_pow_six(),
                                paired_cancellation(), gauss_system()};
  std::mt19937 rng(55);
  std::uniform_int_distribution<long> num(-18, 18);
  for (const EqSystem& sys : systems) {
    for (int iter = 0; iter < 30; ++iter) {
      QVec q(sys.num_vars());
      for (Index j = 0; j < q.size(); ++j) q[j] = Rat(Int(num(rng)), Int(6));
      EvalResult ev = evaluate_at(sys, q, SearchMode::allow_grouped);
      for (mpfr_prec_t prec : {64, 256}) {
        CInterval enc = system_interval(sys, q, prec);
        // Zero verdicts must be numerically consistent at every precision.
        if (ev.is_zero) CHECK(enc.contains_zero());
        // An interval that excludes zero forces a nonzero verdict.
        if (!enc.contains_zero()) CHECK_FALSE(ev.is_zero);
      }
      if (ev.zero_mode == ZeroMode::exact_cyclotomic && !ev.is_zero) {
        // Exact-mode nonzero verdicts separate from zero at high precision.
        CInterval enc = system_interval(sys, q, 512);
        CHECK_FALSE(enc.contains_zero());
      }
    }
  }
}

#endif  // POLYEXP_HAVE_MPFR

TEST_CASE("mixed torsion and log coordinates in one system") {
  // (-1)^x 2^y = 2: x must be an even integer, y = 1.
  std::vector<Generator> gens{{"g1", rat("2")}};
  AlphaMatrix alpha(2, 2, 1);
  alpha.set(0, 0, LogCoord{rat("1/2"), qvec({"0"})});
  alpha.set(0, 1, LogCoord{rat("0"), qvec({"1"})});
  alpha.set(1, 0, LogCoord{rat("0"), qvec({"0"})});
  alpha.set(1, 1, LogCoord{rat("0"), qvec({"0"})});
  GenSet gs;
  gs.generators = gens;
  EqSystem sys =
      validate_system(EqSystem{gs, alpha, {const_poly("1", 2), const_poly("-2", 2)}, 1});

  SplitSpace split = split_of(sys);
  CHECK(split.dim_v() == 0);
  ZLattice h = compute_H(sys);
  CHECK(h.basis() == zmat({{2, 0}}));

  SearchSpec s = spec_of("3", 4);
  auto records = search_box(sys, split, s);
  REQUIRE(records.size() == 3);
  CHECK(records[0].q == qvec({"-2", "1"}));
  CHECK(records[1].q == qvec({"0", "1"}));
  CHECK(records[2].q == qvec({"2", "1"}));
  for (const auto& r : records) CHECK(r.status == SolutionStatus::nondegenerate);

  // Whole-coset check inside the box at denominator 1.
  auto integer_records = search_box(sys, split, spec_of("3", 1));
  TranslateVerdict v = translate_check(sys, integer_records, h, rat("3"));
  CHECK(v.pass);
  REQUIRE(v.coset_reps.size() == 1);
  CHECK(v.coset_reps[0] == zvec({0, 1}));
}

TEST_CASE("grouped nonzero verdicts can miss cyclotomic-radical identities") {
  // 2^x - (zeta_8 + zeta_8^7) vanishes at x = 1/2 because the constant is
  // sqrt(2), but the torsion-free parts live in different buckets. The
  // grouped test must still answer nonzero (that one-sidedness is the
  // declared contract) and the record carries the grouped_radical marker.
  std::vector<Generator> gens{{"g1", rat("2")}};
  AlphaMatrix alpha(2, 1, 1);
  alpha.set(0, 0, LogCoord{rat("0"), qvec({"1"})});
  alpha.set(1, 0, LogCoord{rat("0"), qvec({"0"})});
  CycPolyMV p1(8, 1), p2(8, 1);
  p1.add_term(Eigen::VectorXi::Zero(1), CycNum::one(8));
  p2.add_term(Eigen::VectorXi::Zero(1),
              -(CycNum::root_power(8, Int(1)) + CycNum::root_power(8, Int(7))));
  GenSet gs;
  gs.generators = gens;
  EqSystem sys = validate_system(EqSystem{gs, alpha, {p1, p2}, 8});

  EvalResult ev = evaluate_at(sys, qvec({"1/2"}), SearchMode::allow_grouped);
  CHECK(ev.zero_mode == ZeroMode::grouped_radical);
  CHECK_FALSE(ev.is_zero);  // the documented assumption-dependent answer

#if defined(POLYEXP_HAVE_MPFR)
  // Numerically the sum really is zero, which is exactly why grouped
  // nonzero verdicts are flagged rather than trusted.
  CInterval enc = system_interval(sys, qvec({"1/2"}), 256);
  CHECK(enc.contains_zero());
#endif
}

TEST_CASE("witness blocks may interleave") {
  // Terms 2^q, 1, -2^q, -1: the finest partition is {1,3}, {2,4}.
  SystemBuilder b;
  b.gens = {{"g1", rat("2")}};
  b.coeffs = {"1", "1", "-1", "-1"};
  b.rhos = {"0", "0", "0", "0"};
  b.logs = {{"1"}, {"0"}, {"1"}, {"0"}};
  EqSystem sys = b.build();
  auto rec = classify(sys, split_of(sys), qvec({"5/3"}), SearchMode::allow_grouped);
  REQUIRE(rec.has_value());
  CHECK(rec->status == SolutionStatus::degenerate);
  REQUIRE(rec->witness.size() == 2);
  CHECK(rec->witness[0] == std::vector<int>{1, 3});
  CHECK(rec->witness[1] == std::vector<int>{2, 4});
}

TEST_CASE("polynomial roots interact with the classifier") {
  // (x-1) 2^x + (1-x) 2 = 0 holds only at x = 1, where both terms vanish
  // individually, so the solution is degenerate with singleton blocks.
  std::vector<Generator> gens{{"g1", rat("2")}};
  AlphaMatrix alpha(2, 1, 1);
  alpha.set(0, 0, LogCoord{rat("0"), qvec({"1"})});
  alpha.set(1, 0, LogCoord{rat("0"), qvec({"0"})});
  CycPolyMV p1(1, 1), p2(1, 1);
  Eigen::VectorXi x(1);
  x << 1;
  p1.add_term(x, CycNum::one(1));
  p1.add_term(Eigen::VectorXi::Zero(1), CycNum::from_rat(rat("-1"), 1));
  p2.add_term(x, CycNum::from_rat(rat("-2"), 1));
  p2.add_term(Eigen::VectorXi::Zero(1), CycNum::from_rat(rat("2"), 1));
  GenSet gs;
  gs.generators = gens;
  EqSystem sys = validate_system(EqSystem{gs, alpha, {p1, p2}, 1});

  SplitSpace split = split_of(sys);
  auto records = search_box(sys, split, spec_of("4", 2));
  REQUIRE(records.size() == 1);
  CHECK(records[0].q == qvec({"1"}));
  CHECK(records[0].status == SolutionStatus::degenerate);
  REQUIRE(records[0].witness.size() == 2);
  CHECK(records[0].witness[0] == std::vector<int>{1});
  CHECK(records[0].witness[1] == std::vector<int>{2});
}
