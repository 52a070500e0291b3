#include "polyexp/mpoly.hpp"

#include <algorithm>

#include "polyexp/error.hpp"

namespace polyexp {

namespace {

bool exp_less(const Eigen::VectorXi& a, const Eigen::VectorXi& b) {
  for (Index i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

}  // namespace

CycMPoly::CycMPoly(long order, Index nvars, std::vector<Term> terms)
    : order_(order), nvars_(nvars) {
  for (auto& t : terms) add_term(t.exponents, t.coeff);
}

CycMPoly CycMPoly::constant(const CycNum& c, Index nvars) {
  CycMPoly p(c.order(), nvars);
  p.add_term(Eigen::VectorXi::Zero(nvars), c);
  return p;
}

bool CycMPoly::is_constant() const {
  for (const auto& t : terms_) {
    if (t.exponents.any()) return false;
  }
  return true;
}

long CycMPoly::total_degree() const {
  long d = 0;
  for (const auto& t : terms_) d = std::max<long>(d, t.exponents.sum());
  return d;
}

void CycMPoly::add_term(const Eigen::VectorXi& exponents, const CycNum& coeff) {
  if (exponents.size() != nvars_) throw Error("dimension mismatch");
  if (exponents.size() > 0 && exponents.minCoeff() < 0) throw Error("negative exponent");
  if (coeff.order() != order_) throw Error("incompatible orders");
  if (coeff.is_zero()) return;
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), exponents,
      [](const Term& t, const Eigen::VectorXi& e) { return exp_less(t.exponents, e); });
  if (it != terms_.end() && it->exponents == exponents) {
    it->coeff += coeff;
    if (it->coeff.is_zero()) terms_.erase(it);
  } else {
    terms_.insert(it, Term{exponents, coeff});
  }
}

CycNum CycMPoly::eval(const QVec& point) const {
  if (point.size() != nvars_) throw Error("dimension mismatch");
  CycNum acc = CycNum::zero(order_);
  for (const auto& t : terms_) {
    Rat mono(1);
    for (Index j = 0; j < nvars_; ++j) {
      if (t.exponents[j] != 0) mono *= pow(point[j], Int(static_cast<long>(t.exponents[j])));
    }
    acc += t.coeff * mono;
  }
  return acc;
}

CycMPoly operator+(const CycMPoly& a, const CycMPoly& b) {
  if (a.order_ != b.order_ || a.nvars_ != b.nvars_) throw Error("incompatible polynomials");
  CycMPoly out = a;
  for (const auto& t : b.terms_) out.add_term(t.exponents, t.coeff);
  return out;
}

CycMPoly operator*(const CycMPoly& a, const CycMPoly& b) {
  if (a.order_ != b.order_ || a.nvars_ != b.nvars_) throw Error("incompatible polynomials");
  CycMPoly out(a.order_, a.nvars_);
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      out.add_term(ta.exponents + tb.exponents, ta.coeff * tb.coeff);
    }
  }
  return out;
}

CycMPoly operator*(const CycNum& s, const CycMPoly& a) {
  CycMPoly out(a.order_, a.nvars_);
  for (const auto& t : a.terms_) out.add_term(t.exponents, s * t.coeff);
  return out;
}

bool operator==(const CycMPoly& a, const CycMPoly& b) {
  if (a.order_ != b.order_ || a.nvars_ != b.nvars_) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].exponents != b.terms_[i].exponents) return false;
    if (a.terms_[i].coeff != b.terms_[i].coeff) return false;
  }
  return true;
}

}  // namespace polyexp
