#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "polyexp/error.hpp"
#include "polyexp/model.hpp"

using namespace polyexp;
using namespace polyexp::testing;

TEST_CASE("mult_independent examples") {
  CHECK(mult_independent({rat("2"), rat("3")}).independent);

  MultIndepResult r48 = mult_independent({rat("4"), rat("8")});
  CHECK_FALSE(r48.independent);
  CHECK(r48.relation == zvec({3, -2}));

  CHECK(mult_independent({rat("6"), rat("10"), rat("15")}).independent);

  MultIndepResult rone = mult_independent({rat("2"), rat("1")});
  CHECK_FALSE(rone.independent);
  CHECK(rone.relation == zvec({0, 1}));

  CHECK_THROWS_AS(mult_independent({rat("-2")}), InputError);

  // Rationals factor over both numerator and denominator.
  MultIndepResult rr = mult_independent({rat("2/3"), rat("4/9")});
  CHECK_FALSE(rr.independent);
}

TEST_CASE("relation really multiplies to 1") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> pick(1, 40);
  for (int iter = 0; iter < 200; ++iter) {
    std::vector<Rat> vals;
    for (int i = 0; i < 3; ++i) {
      int n = pick(rng), d = pick(rng);
      if (n == d) ++n;
      vals.push_back(Rat(Int(n), Int(d)));
    }
    MultIndepResult r = mult_independent(vals);
    if (r.independent) continue;
    Rat prod(1);
    bool nonzero = false;
    for (std::size_t i = 0; i < vals.size(); ++i) {
      if (!r.relation[static_cast<Index>(i)].is_zero()) nonzero = true;
      prod *= pow(vals[i], r.relation[static_cast<Index>(i)]);
    }
    CHECK(nonzero);
    CHECK(prod == Rat(1));
  }
}

TEST_CASE("validate_system") {
  CHECK_NOTHROW(pow4_minus_2());

  {
    // Dependent generators (4, 8) are rejected with the relation.
    SystemBuilder b;
    b.gens = {{"a", rat("4")}, {"b", rat("8")}};
    b.coeffs = {"1", "-2"};
    b.rhos = {"0", "0"};
    b.logs = {{"1", "0"}, {"0", "0"}};
    CHECK_THROWS_WITH_AS(b.build(), doctest::Contains("dependent generators"), InputError);
  }
  {
    // Polynomial count must match the number of terms.
    EqSystem sys = pow4_minus_2();
    sys.polys.pop_back();
    CHECK_THROWS_AS(validate_system(sys), InputError);
  }
  {
    // Generators equal to 1 or nonpositive are rejected.
    SystemBuilder b;
    b.gens = {{"a", rat("1")}};
    b.coeffs = {"1"};
    b.rhos = {"0"};
    b.logs = {{"1"}};
    CHECK_THROWS_AS(b.build(), InputError);
    b.gens = {{"a", rat("-2")}};
    CHECK_THROWS_AS(b.build(), InputError);
  }
  {
    // Symbolic generators validate with assumed independence.
    SystemBuilder b;
    b.gens = {{"u", std::nullopt}};
    b.coeffs = {"1", "-1"};
    b.rhos = {"0", "0"};
    b.logs = {{"1"}, {"2"}};
    EqSystem sys = b.build();
    CHECK(sys.genset.status == IndependenceStatus::assumed_symbolic);
  }
}

TEST_CASE("normalize_alpha examples") {
  {
    // Single row becomes the zero row.
    SystemBuilder b;
    b.gens = {{"g", rat("2")}};
    b.coeffs = {"1"};
    b.rhos = {"1/3"};
    b.logs = {{"5"}};
    EqSystem sys = b.build();
    AlphaMatrix n = normalize_alpha(sys.alpha);
    CHECK(n.at(0, 0).rho == rat("0"));
    CHECK(n.at(0, 0).logs[0] == rat("0"));
  }
  {
    // Rows (log2), (2 log2) -> (0), (log2).
    EqSystem sys = [&] {
      SystemBuilder b;
      b.gens = {{"g", rat("2")}};
      b.coeffs = {"1", "-1"};
      b.rhos = {"0", "0"};
      b.logs = {{"1"}, {"2"}};
      return b.build();
    }();
    AlphaMatrix n = normalize_alpha(sys.alpha);
    CHECK(n.at(0, 0).logs[0] == rat("0"));
    CHECK(n.at(1, 0).logs[0] == rat("1"));
  }
  {
    // Rho parts (1/2, 1/3) -> (0, -1/6).
    SystemBuilder b;
    b.gens = {};
    b.coeffs = {"1", "1"};
    b.rhos = {"1/2", "1/3"};
    b.logs = {{}, {}};
    EqSystem sys = b.build();
    AlphaMatrix n = normalize_alpha(sys.alpha);
    CHECK(n.at(0, 0).rho == rat("0"));
    CHECK(n.at(1, 0).rho == rat("-1/6"));
  }
}

TEST_CASE("exp_value examples") {
  {
    // Zero row gives the identity.
    EqSystem sys = pow4_minus_2();
    GroupVal v = exp_value(sys.alpha, 1, qvec({"7/3"}));
    CHECK(v.is_identity());
  }
  {
    // alpha = 2 log2 at q = 1/2: 4^(1/2) = 2^1.
    EqSystem sys = pow4_minus_2();
    GroupVal v = exp_value(sys.alpha, 0, qvec({"1/2"}));
    CHECK(v.angle == rat("0"));
    CHECK(v.expvec[0] == rat("1"));
  }
  {
    // alpha = 2 pi i / 2 at q = 3: angle 3/2 reduces to 1/2.
    EqSystem sys = half_turn();
    GroupVal v = exp_value(sys.alpha, 0, qvec({"3"}));
    CHECK(v.angle == rat("1/2"));
    CHECK(v.expvec.size() == 0);
  }
}

TEST_CASE("exp_value is a homomorphism in q") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> num(-8, 8);
  std::uniform_int_distribution<int> den(1, 5);
  EqSystem sys = pow4_minus_2();
  EqSystem turn = half_turn();
  for (int iter = 0; iter < 200; ++iter) {
    QVec q1(1), q2(1);
    q1[0] = Rat(num(rng), den(rng));
    q2[0] = Rat(num(rng), den(rng));
    QVec q12(1);
    q12[0] = q1[0] + q2[0];
    for (const EqSystem* s : {&sys, &turn}) {
      for (Index row = 0; row < s->num_terms(); ++row) {
        GroupVal a = exp_value(s->alpha, row, q1);
        GroupVal b = exp_value(s->alpha, row, q2);
        GroupVal c = exp_value(s->alpha, row, q12);
        CHECK(a * b == c);
      }
    }
  }
}

TEST_CASE("poly_eval examples") {
  {
    CycPolyMV p = const_poly("1", 2);
    CHECK(poly_eval(p, qvec({"5", "-7/2"})) == CycNum::one(1));
  }
  {
    // X1^2 - 2 at 3/2 -> 1/4.
    CycPolyMV p(1, 1);
    Eigen::VectorXi e(1);
    e << 2;
    p.add_term(e, CycNum::one(1));
    p.add_term(Eigen::VectorXi::Zero(1), CycNum::from_rat(rat("-2"), 1));
    CHECK(poly_eval(p, qvec({"3/2"})) == CycNum::from_rat(rat("1/4"), 1));
  }
  {
    // zeta_4 * X1 at 2 -> 2 zeta_4.
    CycPolyMV p(4, 1);
    Eigen::VectorXi e(1);
    e << 1;
    p.add_term(e, CycNum::root_power(4, Int(1)));
    CHECK(poly_eval(p, qvec({"2"})) == CycNum::root_power(4, Int(1)) * rat("2"));
  }
}

TEST_CASE("radical_member examples") {
  {
    GroupVal x(rat("0"), qvec({"1/2"}));
    std::vector<GroupVal> gens{GroupVal(rat("0"), qvec({"1"}))};
    RadicalResult r = radical_member(x, gens);
    CHECK(r.member);
    CHECK(r.witness == Int(2));
  }
  {
    GroupVal x(rat("0"), qvec({"0", "1"}));
    std::vector<GroupVal> gens{GroupVal(rat("0"), qvec({"1", "0"}))};
    CHECK_FALSE(radical_member(x, gens).member);
  }
  {
    // Roots of unity are radical over the trivial group.
    GroupVal x(rat("1/3"), QVec(0));
    RadicalResult r = radical_member(x, {});
    CHECK(r.member);
    CHECK(r.witness == Int(3));
  }
  {
    // Torsion reachable through generator relations: x = (1/2, (1)),
    // generators (1/4, (2)) and (0, (0)): x^2 has expvec (2) = g1, needs
    // angle 2*(1/2) - 1/4 = 3/4 from torsion... x^8 works via g1^4.
    GroupVal x(rat("1/2"), qvec({"1"}));
    std::vector<GroupVal> gens{GroupVal(rat("1/4"), qvec({"2"}))};
    RadicalResult r = radical_member(x, gens);
    CHECK(r.member);
    GroupVal probe = x.pow(r.witness);
    // witness n: exists k with n*(1) = 2k and n/2 - k/4 integral.
    bool verified = false;
    for (long k = -20; k <= 20; ++k) {
      QVec gv = gens[0].pow(Int(k)).expvec;
      if (gv[0] == probe.expvec[0] && mod1(probe.angle - gens[0].pow(Int(k)).angle).is_zero()) {
        verified = true;
      }
    }
    CHECK(verified);
  }
}

TEST_CASE("group_relation finds beta relations") {
  // {2, 3} independent.
  std::vector<GroupVal> indep{GroupVal(rat("0"), qvec({"1", "0"})),
                              GroupVal(rat("0"), qvec({"0", "1"}))};
  CHECK_FALSE(group_relation(indep).has_value());

  // {-1} is torsion: (-1)^2 = 1.
  std::vector<GroupVal> torsion{GroupVal(rat("1/2"), QVec(0))};
  auto rel = group_relation(torsion);
  REQUIRE(rel.has_value());
  CHECK((*rel)[0] == Int(2));

  // {2, 4}: 2^2 / 4 = 1.
  std::vector<GroupVal> dep{GroupVal(rat("0"), qvec({"1"})), GroupVal(rat("0"), qvec({"2"}))};
  auto rel2 = group_relation(dep);
  REQUIRE(rel2.has_value());
  Rat combo = Rat((*rel2)[0]) * rat("1") + Rat((*rel2)[1]) * rat("2");
  CHECK(combo == rat("0"));
}
