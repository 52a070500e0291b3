#pragma once

#include <string>
#include <vector>

#include "polyexp/linalg.hpp"
#include "polyexp/model.hpp"

namespace polyexp {

/// The direct-sum frame Q^t = V ⊕ V'. V' is spanned by the standard basis
/// vectors at the non-pivot columns of V's reduced row-echelon form. That
/// choice is deterministic, so projections are reproducible and the
/// certificate fingerprints are comparable across runs.
class SplitSpace {
 public:
  SplitSpace(Index t, const std::vector<QVec>& v_basis);

  Index dim() const { return t_; }
  Index dim_v() const { return static_cast<Index>(v_basis_.size()); }
  Index dim_vprime() const { return static_cast<Index>(vprime_cols_.size()); }
  const std::vector<QVec>& v_basis() const { return v_basis_; }
  const std::vector<Index>& vprime_cols() const { return vprime_cols_; }

  QVec project_v(const QVec& q) const;
  QVec project_vprime(const QVec& q) const;

  /// Deterministic serialization of the complement choice, embedded in
  /// certificates so that two runs are comparable.
  std::string fingerprint() const;

 private:
  Index t_;
  std::vector<QVec> v_basis_;       // RREF rows of V
  std::vector<Index> vprime_cols_;  // standard basis indices spanning V'
  QMat inverse_;                    // inverse of [v_basis | e_j] as columns
};

/// Basis of V = {q : q . alpha_i = q . alpha_i' for all i, i'}: the exact
/// kernel of the (rho, logs) difference rows against the first term.
std::vector<QVec> compute_V(const AlphaMatrix& alpha);

SplitSpace complement_and_projections(const std::vector<QVec>& v_basis, Index t);

/// H = integer vectors on which all exponential monomials agree: the
/// integer kernel of the log differences intersected with the mod-1
/// congruence lattice of the rho differences.
ZLattice compute_H(const EqSystem& sys);

/// Lattice of m with log differences annihilated and rho differences
/// congruent to 0 mod N.
ZLattice system_congruence_lattice(const EqSystem& sys, const Int& n);

}  // namespace polyexp
