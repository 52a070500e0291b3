#include "polyexp/eigen_support.hpp"

#include "polyexp/error.hpp"

namespace polyexp {

Rat sup_norm(const QVec& v) {
  Rat m(0);
  for (Index i = 0; i < v.size(); ++i) {
    Rat a = abs(v[i]);
    if (a > m) m = a;
  }
  return m;
}

Rat sup_norm_int(const ZVec& v) {
  Int m(0);
  for (Index i = 0; i < v.size(); ++i) {
    Int a = abs(v[i]);
    if (a > m) m = a;
  }
  return Rat(m);
}

Int denominator_lcm(const QMat& m) {
  Int l(1);
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) l = lcm(l, m(i, j).denominator());
  return l;
}

Int denominator_lcm(const QVec& v) {
  Int l(1);
  for (Index i = 0; i < v.size(); ++i) l = lcm(l, v[i].denominator());
  return l;
}

ZMat clear_row_denominators(const QMat& m) {
  ZMat out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i) {
    Int l(1);
    for (Index j = 0; j < m.cols(); ++j) l = lcm(l, m(i, j).denominator());
    for (Index j = 0; j < m.cols(); ++j) {
      Rat scaled = m(i, j) * Rat(l);
      out(i, j) = scaled.numerator();
    }
  }
  return out;
}

ZVec to_int_vec(const QVec& v) {
  ZVec out(v.size());
  for (Index i = 0; i < v.size(); ++i) {
    if (!v[i].is_integer()) throw Error("vector entry is not an integer: " + v[i].str());
    out[i] = v[i].numerator();
  }
  return out;
}

QVec to_rat_vec(const ZVec& v) {
  QVec out(v.size());
  for (Index i = 0; i < v.size(); ++i) out[i] = Rat(v[i]);
  return out;
}

QMat to_rat_mat(const ZMat& m) {
  QMat out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) out(i, j) = Rat(m(i, j));
  return out;
}

bool lex_less(const QVec& a, const QVec& b) {
  Index n = std::min(a.size(), b.size());
  for (Index i = 0; i < n; ++i) {
    if (a[i] < b[i]) return true;
    if (b[i] < a[i]) return false;
  }
  return a.size() < b.size();
}

bool lex_less(const ZVec& a, const ZVec& b) {
  Index n = std::min(a.size(), b.size());
  for (Index i = 0; i < n; ++i) {
    if (a[i] < b[i]) return true;
    if (b[i] < a[i]) return false;
  }
  return a.size() < b.size();
}

}  // namespace polyexp
