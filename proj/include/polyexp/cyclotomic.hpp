#pragma once

#include <vector>

#include "polyexp/eigen_support.hpp"
#include "polyexp/rational.hpp"

namespace polyexp {

/// Cap on cyclotomic orders accepted by cyclotomic_polynomial and CycNum.
/// Defaults to 10^4; the CLI honors the POLYEXP_MAX_ORDER environment
/// variable by calling set_max_order at startup.
long max_order();
void set_max_order(long cap);

long euler_phi(long m);
std::vector<long> divisors(long m);
std::vector<std::pair<long, int>> factorize(long m);

/// The m-th cyclotomic polynomial: monic, integer coefficients,
/// degree phi(m), stored low-order-first (length phi(m)+1).
struct CycPoly {
  long order = 1;
  ZVec coeffs;

  long degree() const { return coeffs.size() - 1; }
};

/// Returns Phi_m, computed by exact recursive division of X^m - 1 by the
/// product of Phi_d over proper divisors d of m. Memoized; safe to call
/// concurrently.
const CycPoly& cyclotomic_polynomial(long m);

/// Element of the m-th cyclotomic field Q(zeta_m), stored as the canonical
/// residue modulo Phi_m in the power basis 1, zeta, ..., zeta^{phi(m)-1}.
/// Zero is the all-zero coefficient vector, so equality and zero tests are
/// plain coefficient comparisons.
class CycNum {
 public:
  CycNum() : order_(1), coeffs_(QVec::Constant(1, Rat(0))) {}

  static CycNum zero(long order);
  static CycNum one(long order);
  static CycNum from_rat(const Rat& r, long order);
  /// zeta_order^k (k may be any integer; reduced mod order).
  static CycNum root_power(long order, const Int& k);

  long order() const { return order_; }
  const QVec& coeffs() const { return coeffs_; }
  bool is_zero() const;
  bool is_rational() const;
  /// The value as a rational; throws unless is_rational().
  Rat rational_value() const;

  friend bool operator==(const CycNum& a, const CycNum& b);
  friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

  CycNum operator-() const;
  friend CycNum operator+(const CycNum& a, const CycNum& b);
  friend CycNum operator-(const CycNum& a, const CycNum& b);
  friend CycNum operator*(const CycNum& a, const CycNum& b);
  CycNum& operator+=(const CycNum& o) { *this = *this + o; return *this; }
  CycNum& operator-=(const CycNum& o) { *this = *this - o; return *this; }
  CycNum& operator*=(const CycNum& o) { *this = *this * o; return *this; }

  friend CycNum operator*(const CycNum& a, const Rat& s);
  friend CycNum operator*(const Rat& s, const CycNum& a) { return a * s; }

  friend CycNum cyc_normalize(const QVec& raw, long order);

 private:
  long order_;
  QVec coeffs_;  // length phi(order_)
};

/// Reduces an arbitrary-length coefficient vector (low-order-first
/// polynomial in zeta_order) to the canonical residue modulo Phi_order.
CycNum cyc_normalize(const QVec& raw, long order);

/// Multiplicative inverse via the extended Euclidean algorithm against
/// Phi_order. Throws on zero.
CycNum cyc_inverse(const CycNum& a);

/// Image of a under zeta_m -> zeta_{new_order}^{new_order/m}.
/// Requires order(a) | new_order ("incompatible orders" otherwise).
CycNum cyc_embed(const CycNum& a, long new_order);

}  // namespace polyexp
