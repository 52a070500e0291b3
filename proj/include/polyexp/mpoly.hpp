#pragma once

#include <vector>

#include "polyexp/cyclotomic.hpp"
#include "polyexp/eigen_support.hpp"

namespace polyexp {

/// Multivariate polynomial with coefficients in Q(zeta_order). Terms are
/// kept sorted by exponent vector (lexicographic) with no zero
/// coefficients, so equal polynomials compare equal term-by-term.
class CycMPoly {
 public:
  struct Term {
    Eigen::VectorXi exponents;
    CycNum coeff;
  };

  CycMPoly(long order, Index nvars)
      : order_(order), nvars_(nvars) {}
  CycMPoly(long order, Index nvars, std::vector<Term> terms);

  static CycMPoly zero(long order, Index nvars) { return CycMPoly(order, nvars); }
  static CycMPoly constant(const CycNum& c, Index nvars);

  long order() const { return order_; }
  Index nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// True when every term has an all-zero exponent vector (or no terms).
  bool is_constant() const;
  long total_degree() const;

  CycNum eval(const QVec& point) const;

  void add_term(const Eigen::VectorXi& exponents, const CycNum& coeff);

  friend CycMPoly operator+(const CycMPoly& a, const CycMPoly& b);
  friend CycMPoly operator*(const CycMPoly& a, const CycMPoly& b);
  friend CycMPoly operator*(const CycNum& s, const CycMPoly& a);
  friend bool operator==(const CycMPoly& a, const CycMPoly& b);
  friend bool operator!=(const CycMPoly& a, const CycMPoly& b) { return !(a == b); }

 private:
  long order_;
  Index nvars_;
  std::vector<Term> terms_;
};

}  // namespace polyexp
