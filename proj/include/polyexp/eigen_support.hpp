#pragma once

#include <Eigen/Core>

#include "polyexp/rational.hpp"

namespace Eigen {

template <>
struct NumTraits<polyexp::Int> : GenericNumTraits<polyexp::Int> {
  typedef polyexp::Int Real;
  typedef polyexp::Int NonInteger;
  typedef polyexp::Int Nested;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 30,
    MulCost = 50
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<polyexp::Rat> : GenericNumTraits<polyexp::Rat> {
  typedef polyexp::Rat Real;
  typedef polyexp::Rat NonInteger;
  typedef polyexp::Rat Nested;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 60,
    MulCost = 60
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace polyexp {

using QMat = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using QVec = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;
using ZMat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using ZVec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using Index = Eigen::Index;

/// Sup norm max|v_i| of a rational vector; 0 for the empty vector.
Rat sup_norm(const QVec& v);
Rat sup_norm_int(const ZVec& v);

/// lcm of the denominators of all entries (1 for an empty block).
Int denominator_lcm(const QMat& m);
Int denominator_lcm(const QVec& v);

/// Smallest integer matrix with the same kernel/row space: every row is
/// scaled by the lcm of its denominators.
ZMat clear_row_denominators(const QMat& m);

ZVec to_int_vec(const QVec& v);  // throws unless all entries integral
QVec to_rat_vec(const ZVec& v);
QMat to_rat_mat(const ZMat& m);

bool lex_less(const QVec& a, const QVec& b);
bool lex_less(const ZVec& a, const ZVec& b);

/// Strict weak order usable as a std::map comparator for rational vectors.
struct QVecLess {
  bool operator()(const QVec& a, const QVec& b) const { return lex_less(a, b); }
};

}  // namespace polyexp
