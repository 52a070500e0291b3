#pragma once

#include <optional>
#include <vector>

#include "polyexp/eigen_support.hpp"

namespace polyexp {

/// Reduced row-echelon form of a rational matrix with exact pivots.
struct RrefResult {
  QMat rref;
  long rank = 0;
  std::vector<Index> pivot_cols;
  /// Kernel basis in the canonical free-variable-equals-one form, one
  /// vector per non-pivot column, ordered by that column index ascending.
  std::vector<QVec> kernel;
};

/// Fraction-free forward elimination (Bareiss) on the denominator-cleared
/// matrix, followed by exact back substitution.
RrefResult rref_kernel(const QMat& a);

/// Row-style Hermite normal form of the row space of b: pivots positive and
/// strictly right-moving, entries above a pivot reduced into [0, pivot).
/// Zero rows are dropped, so the result is the canonical basis of the row
/// lattice (0 x cols for the zero lattice).
ZMat hnf(const ZMat& b);

/// Same reduction, also returning a unimodular u with u*b = [hnf; 0].
/// Zero rows are kept so that u's rows line up.
struct HnfTransform {
  ZMat h;  // rows() == b.rows(), echelon with trailing zero rows
  ZMat u;  // unimodular, u*b == h
  long rank = 0;
};
HnfTransform hnf_with_transform(const ZMat& b);

struct SnfResult {
  ZMat d;  // diagonal, d_i | d_{i+1}, nonnegative
  ZMat u;  // unimodular rows() x rows()
  ZMat v;  // unimodular cols() x cols()
};

/// Smith normal form with transforms: u*b*v = d. The unimodularity of u
/// and v is verified exactly before returning.
SnfResult snf(const ZMat& b);

/// Determinant of a square integer matrix (fraction-free elimination).
Int int_det(const ZMat& a);

/// Integer lattice in canonical row-HNF basis.
class ZLattice {
 public:
  explicit ZLattice(Index ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}
  /// Canonicalizes the spanning rows (HNF); rows may be dependent.
  ZLattice(Index ambient_dim, const ZMat& spanning_rows);

  static ZLattice full(Index ambient_dim);  // all of Z^t
  static ZLattice zero(Index ambient_dim) { return ZLattice(ambient_dim); }

  Index ambient_dim() const { return ambient_; }
  long rank() const { return basis_.rows(); }
  const ZMat& basis() const { return basis_; }

  bool contains(const ZVec& v) const;
  /// Coefficients u with u*basis == v, if v is a lattice member.
  std::optional<ZVec> coordinates(const ZVec& v) const;
  /// Canonical coset representative of v modulo the lattice: pivot
  /// coordinates reduced into [0, pivot) of the triangular basis.
  ZVec reduce(const ZVec& v) const;

  friend bool operator==(const ZLattice& a, const ZLattice& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  Index ambient_;
  ZMat basis_;
};

/// All integer vectors n with a*n = 0, as a canonical lattice.
ZLattice integer_kernel(const ZMat& a);

/// Lattice of n with (a*n)_r ≡ 0 (mod modulus_r) for every row r, after
/// clearing row denominators. Throws InputError on a nonpositive modulus.
ZLattice congruence_lattice(const QMat& a, const std::vector<Int>& moduli);

ZLattice lattice_intersect(const ZLattice& l1, const ZLattice& l2);
bool lattice_member(const ZLattice& l, const ZVec& v);
/// Index [sup : sub]; empty optional means infinite. Requires sub ⊆ sup.
std::optional<Int> lattice_index(const ZLattice& sub, const ZLattice& sup);

struct NearestPoint {
  ZVec point;    // lattice member minimizing the sup-norm distance
  Rat distance;  // exact sup-norm distance to the target
};

/// Closest lattice point to a rational target in the sup norm, by exact
/// branch-and-bound over the triangular HNF coefficients. Ties go to the
/// lexicographically smallest lattice point.
NearestPoint nearest_point(const ZLattice& l, const QVec& target);

/// All points of offset + L with sup norm <= radius, sorted lexicographically.
std::vector<ZVec> lattice_points_in_box(const ZLattice& l, const ZVec& offset, const Rat& radius);

}  // namespace polyexp
