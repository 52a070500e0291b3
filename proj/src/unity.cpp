#include "polyexp/unity.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "polyexp/cyclotomic.hpp"
#include "polyexp/error.hpp"

namespace polyexp {

DzFeasibility dz_feasible(long q, const DZParams& params) {
  if (q < 1) throw InputError("order must be positive");
  if (params.k < 1 || params.delta < 1) throw InputError("k and delta must be positive");
  DzFeasibility out;
  out.budget = params.k - 1;
  const long two_delta = 2 * params.delta;
  for (auto [p, e] : factorize(q)) {
    DzPrimeDiag diag;
    diag.p = p;
    diag.exponent = e;
    if (e >= 2) {
      // p^{e} | q with e = n+1 forces p^n | 2*delta for n = 1..e-1; the
      // largest n dominates.
      long pn = 1;
      for (int i = 1; i < e; ++i) pn *= p;
      diag.divisibility_ok = (two_delta % pn) == 0;
    }
    if (e == 1) {
      long g = std::gcd(params.delta, p - 1);
      diag.sum_contribution = (p - 1) / g - 1;
      out.sum += diag.sum_contribution;
    }
    out.divisibility_ok = out.divisibility_ok && diag.divisibility_ok;
    out.primes.push_back(diag);
  }
  out.feasible = out.divisibility_ok && out.sum <= out.budget;
  return out;
}

DzBound dz_order_bound(const DZParams& params) {
  if (params.k < 1 || params.delta < 1) throw InputError("k and delta must be positive");
  const long two_delta = 2 * params.delta;

  // Candidate primes: divisors of 2*delta may appear with exponent up to
  // 1 + v_p(2*delta); any other prime appears at most once and must fit in
  // the contribution budget, which caps it at k*delta + 1.
  struct Candidate {
    long p;
    int max_exp;
    long contribution;  // when the exponent is exactly 1
  };
  std::vector<Candidate> cands;
  long pmax = params.k * params.delta + 1;
  for (auto [p, e] : factorize(two_delta)) pmax = std::max(pmax, p);
  for (long p = 2; p <= pmax; ++p) {
    bool prime = p >= 2;
    for (long d = 2; d * d <= p; ++d) {
      if (p % d == 0) {
        prime = false;
        break;
      }
    }
    if (!prime) continue;
    Candidate c;
    c.p = p;
    c.max_exp = 1;
    if (two_delta % p == 0) {
      long v = 0, m = two_delta;
      while (m % p == 0) {
        m /= p;
        ++v;
      }
      c.max_exp = static_cast<int>(v) + 1;
    }
    long g = std::gcd(params.delta, p - 1);
    c.contribution = (p - 1) / g - 1;
    if (c.max_exp == 1 && c.contribution > params.k - 1) continue;  // can never appear
    cands.push_back(c);
  }

  std::vector<long> feasible;
  constexpr std::size_t kEnumerationGuard = 1u << 22;
  // Depth-first over exponent choices; the single-exponent contributions
  // are nonnegative, so the budget prunes exactly.
  std::function<void(std::size_t, Int, long)> walk = [&](std::size_t i, Int q, long sum) {
    if (i == cands.size()) {
      if (!q.fits_long()) throw Error("order bound enumeration too large");
      feasible.push_back(q.to_long());
      if (feasible.size() > kEnumerationGuard) {
        throw Error("order bound enumeration too large");
      }
      return;
    }
    const Candidate& c = cands[i];
    walk(i + 1, q, sum);  // exponent 0
    long s1 = sum + c.contribution;
    if (s1 <= params.k - 1) walk(i + 1, q * Int(c.p), s1);  // exponent 1
    Int pe = Int(c.p);
    for (int e = 2; e <= c.max_exp; ++e) {
      pe *= Int(c.p);
      walk(i + 1, q * pe, sum);  // p^2 and above contribute nothing to the sum
    }
  };
  walk(0, Int(1), 0);

  std::sort(feasible.begin(), feasible.end());
  DzBound out;
  out.feasible_orders = std::move(feasible);
  out.max_order = out.feasible_orders.back();
  return out;
}

DzBound system_order_bound(const EqSystem& sys, long delta) {
  if (delta < 1) throw InputError("delta must be positive");
  const long s = sys.num_terms();
  if (s < 2) {
    DzBound out;
    out.max_order = 1;
    out.feasible_orders = {1};
    return out;
  }
  return dz_order_bound(DZParams{s - 1, delta});
}

namespace {

// Rows of the reduction X^e mod Phi_Q as machine integers; exact because
// the entries stay tiny at the orders handled here.
struct ReductionTable {
  long q = 1;
  long phi = 1;
  std::vector<std::vector<long>> row;
  long max_abs = 1;

  explicit ReductionTable(long order) : q(order) {
    const CycPoly& p = cyclotomic_polynomial(order);
    phi = p.degree();
    std::vector<long> mod(static_cast<std::size_t>(phi) + 1);
    for (long i = 0; i <= phi; ++i) {
      mod[static_cast<std::size_t>(i)] = p.coeffs[i].to_long();
    }
    row.assign(static_cast<std::size_t>(q), std::vector<long>(static_cast<std::size_t>(phi), 0));
    for (long e = 0; e < q; ++e) {
      auto& r = row[static_cast<std::size_t>(e)];
      if (e < phi) {
        r[static_cast<std::size_t>(e)] = 1;
      } else {
        // X * row[e-1], reduced by the monic modulus.
        const auto& prev = row[static_cast<std::size_t>(e - 1)];
        long carry = prev[static_cast<std::size_t>(phi - 1)];
        for (long j = phi - 1; j >= 1; --j) r[static_cast<std::size_t>(j)] = prev[static_cast<std::size_t>(j - 1)];
        r[0] = 0;
        if (carry != 0) {
          for (long j = 0; j < phi; ++j) {
            r[static_cast<std::size_t>(j)] -= carry * mod[static_cast<std::size_t>(j)];
          }
        }
      }
      for (long j = 0; j < phi; ++j) max_abs = std::max(max_abs, std::abs(r[static_cast<std::size_t>(j)]));
    }
    if (max_abs > (1L << 31)) throw Error("order too large for the vanishing-sum enumerator");
  }
};

}  // namespace

std::vector<VanishingSum> enumerate_vanishing_sums(int max_terms, long max_order,
                                                   const std::vector<Rat>& coeff_set) {
  if (max_terms < 2) throw InputError("max_terms must be at least 2");
  if (max_order < 1) throw InputError("max_order must be positive");
  if (coeff_set.empty()) throw InputError("coefficient set must be nonempty");

  std::vector<Rat> coeffs;
  for (const Rat& c : coeff_set) {
    if (c.is_zero()) throw InputError("coefficient set must not contain 0");
    if (std::find(coeffs.begin(), coeffs.end(), c) == coeffs.end()) coeffs.push_back(c);
  }

  // Clear denominators once: zero sums are invariant under global scaling.
  Int scale(1);
  for (const Rat& c : coeffs) scale = lcm(scale, c.denominator());
  std::vector<long> icoeffs;
  long max_abs_coeff = 1;
  for (const Rat& c : coeffs) {
    long v = (c * Rat(scale)).numerator().to_long();
    icoeffs.push_back(v);
    max_abs_coeff = std::max(max_abs_coeff, std::abs(v));
  }
  const std::size_t ncoeffs = icoeffs.size();

  std::vector<VanishingSum> out;

  for (long q = 1; q <= max_order; ++q) {
    ReductionTable table(q);
    const long phi = table.phi;
    std::vector<long> sum(static_cast<std::size_t>(phi), 0);
    std::vector<long> exps, cidx;
    exps.reserve(static_cast<std::size_t>(max_terms));
    cidx.reserve(static_cast<std::size_t>(max_terms));

    auto add_term = [&](long e, std::size_t ci, long sign) {
      const auto& r = table.row[static_cast<std::size_t>(e)];
      long c = sign * icoeffs[ci];
      for (long j = 0; j < phi; ++j) sum[static_cast<std::size_t>(j)] += c * r[static_cast<std::size_t>(j)];
    };
    auto sum_is_zero = [&] {
      for (long j = 0; j < phi; ++j) {
        if (sum[static_cast<std::size_t>(j)] != 0) return false;
      }
      return true;
    };
    auto sup = [&] {
      long m = 0;
      for (long j = 0; j < phi; ++j) m = std::max(m, std::abs(sum[static_cast<std::size_t>(j)]));
      return m;
    };

    auto emit_if_valid = [&] {
      const std::size_t d = exps.size();
      long g = q;
      for (std::size_t i = 1; i < d; ++i) g = std::gcd(g, exps[i]);
      if (g != 1) return;
      // Minimality: no nonempty proper subset may vanish.
      std::vector<long> sub(static_cast<std::size_t>(phi));
      for (unsigned mask = 1; mask + 1 < (1u << d); ++mask) {
        std::fill(sub.begin(), sub.end(), 0);
        for (std::size_t i = 0; i < d; ++i) {
          if (!(mask & (1u << i))) continue;
          const auto& r = table.row[static_cast<std::size_t>(exps[i])];
          long c = icoeffs[cidx[static_cast<std::size_t>(i)]];
          for (long j = 0; j < phi; ++j) sub[static_cast<std::size_t>(j)] += c * r[static_cast<std::size_t>(j)];
        }
        bool zero = std::all_of(sub.begin(), sub.end(), [](long v) { return v == 0; });
        if (zero) return;
      }
      VanishingSum v;
      v.order = q;
      v.exponents = exps;
      for (std::size_t i = 0; i < d; ++i) v.coefficients.push_back(coeffs[cidx[i]]);
      out.push_back(std::move(v));
    };

    std::function<void(long)> dfs = [&](long next_exp) {
      const std::size_t d = exps.size();
      if (d >= 2 && sum_is_zero()) {
        // Any extension would contain this vanishing prefix, so it could
        // never be minimal.
        emit_if_valid();
        return;
      }
      if (d == static_cast<std::size_t>(max_terms)) return;
      const long remaining = max_terms - static_cast<long>(d);
      if (sup() > remaining * table.max_abs * max_abs_coeff) return;
      for (long e = next_exp; e < q; ++e) {
        for (std::size_t ci = 0; ci < ncoeffs; ++ci) {
          add_term(e, ci, +1);
          exps.push_back(e);
          cidx.push_back(static_cast<long>(ci));
          dfs(e + 1);
          exps.pop_back();
          cidx.pop_back();
          add_term(e, ci, -1);
        }
      }
    };

    // The first exponent is pinned to 0 by the normalization.
    for (std::size_t ci = 0; ci < ncoeffs; ++ci) {
      add_term(0, ci, +1);
      exps.push_back(0);
      cidx.push_back(static_cast<long>(ci));
      dfs(1);
      exps.pop_back();
      cidx.pop_back();
      add_term(0, ci, -1);
    }
  }
  return out;
}

bool is_galois_canonical(const VanishingSum& sum) {
  const long q = sum.order;
  const std::size_t d = sum.exponents.size();
  using Key = std::vector<std::pair<long, Rat>>;
  auto key_of = [&](long a) {
    Key k;
    for (std::size_t i = 0; i < d; ++i) {
      k.emplace_back((sum.exponents[i] * a) % q, sum.coefficients[i]);
    }
    std::sort(k.begin(), k.end(), [](const auto& x, const auto& y) {
      if (x.first != y.first) return x.first < y.first;
      return x.second < y.second;
    });
    return k;
  };
  Key self = key_of(1);
  for (long a = 2; a < q; ++a) {
    if (std::gcd(a, q) != 1) continue;
    Key img = key_of(a);
    if (std::lexicographical_compare(img.begin(), img.end(), self.begin(), self.end(),
                                     [](const auto& x, const auto& y) {
                                       if (x.first != y.first) return x.first < y.first;
                                       return x.second < y.second;
                                     })) {
      return false;
    }
  }
  return true;
}

}  // namespace polyexp
