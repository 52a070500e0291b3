#pragma once

#include <vector>

#include "polyexp/model.hpp"
#include "polyexp/rational.hpp"

namespace polyexp {

/// Parameters of the root-of-unity order bound: k non-constant terms in the
/// vanishing relation and delta, the degree of the cyclotomic intersection
/// of the coefficient field.
struct DZParams {
  long k = 1;
  long delta = 1;
};

struct DzPrimeDiag {
  long p = 0;
  int exponent = 0;
  bool divisibility_ok = true;   // p^{e+1} | Q implies p^e | 2*delta
  long sum_contribution = 0;     // (p-1)/gcd(delta, p-1) - 1 when p || Q
};

struct DzFeasibility {
  bool feasible = true;
  bool divisibility_ok = true;
  long sum = 0;     // total of the per-prime contributions
  long budget = 0;  // k - 1
  std::vector<DzPrimeDiag> primes;
};

/// Both order constraints checked directly against the factorization of q:
/// (a) whenever p^{n+1} | q, p^n must divide 2*delta, and (b) the primes
/// dividing q exactly once contribute at most k - 1 in total.
DzFeasibility dz_feasible(long q, const DZParams& params);

struct DzBound {
  long max_order = 1;                // T
  std::vector<long> feasible_orders; // sorted ascending, includes 1
};

/// Largest feasible order and the full feasible list, by enumeration over
/// the finitely many candidate prime powers the constraints allow.
DzBound dz_order_bound(const DZParams& params);

/// The bound for a whole equation system: k = s - 1 terms in the folded
/// relation. Systems with fewer than two terms admit no relation (T = 1).
DzBound system_order_bound(const EqSystem& sys, long delta);

struct VanishingSum {
  long order = 1;                 // Q
  std::vector<long> exponents;    // n_0 = 0 < n_1 < ... < n_k < Q
  std::vector<Rat> coefficients;  // parallel to exponents, from the input set
};

/// Exhaustive search for minimal vanishing sums of roots of unity with
/// coefficients drawn from the given finite set: at most max_terms terms,
/// order Q <= max_order, exponents normalized by gcd(Q, n_1, ..., n_k) = 1
/// and n_0 = 0. Every emitted sum is exactly zero and has no vanishing
/// nonempty proper subset. Output ordered by (Q, exponents, coefficients).
std::vector<VanishingSum> enumerate_vanishing_sums(int max_terms, long max_order,
                                                   const std::vector<Rat>& coeff_set);

/// True when the sum is the lexicographically smallest member of its orbit
/// under zeta -> zeta^a, gcd(a, Q) = 1. Used by the report-level Galois
/// deduplication option.
bool is_galois_canonical(const VanishingSum& sum);

}  // namespace polyexp
