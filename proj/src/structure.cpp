#include "polyexp/structure.hpp"

#include <sstream>

#include "polyexp/error.hpp"

namespace polyexp {

namespace {

// Exact inverse by Gauss-Jordan; throws on singular input.
QMat invert(const QMat& a) {
  const Index n = a.rows();
  QMat m = a;
  QMat inv = QMat::Constant(n, n, Rat(0));
  for (Index i = 0; i < n; ++i) inv(i, i) = Rat(1);
  for (Index col = 0; col < n; ++col) {
    Index sel = -1;
    for (Index i = col; i < n; ++i) {
      if (!m(i, col).is_zero()) {
        sel = i;
        break;
      }
    }
    if (sel < 0) throw Error("singular matrix");
    if (sel != col) {
      for (Index j = 0; j < n; ++j) {
        std::swap(m(col, j), m(sel, j));
        std::swap(inv(col, j), inv(sel, j));
      }
    }
    Rat p = Rat(1) / m(col, col);
    for (Index j = 0; j < n; ++j) {
      m(col, j) *= p;
      inv(col, j) *= p;
    }
    for (Index i = 0; i < n; ++i) {
      if (i == col || m(i, col).is_zero()) continue;
      Rat f = m(i, col);
      for (Index j = 0; j < n; ++j) {
        m(i, j) -= f * m(col, j);
        inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

// Difference rows (alpha_i - alpha_1) for i = 2..s; one rho row and one
// row per log coordinate for each i. Pairing everything against the first
// term suffices by transitivity.
QMat difference_matrix_rho(const AlphaMatrix& alpha) {
  const Index s = alpha.rows(), t = alpha.cols();
  QMat rows(std::max<Index>(s - 1, 0), t);
  for (Index i = 1; i < s; ++i)
    for (Index j = 0; j < t; ++j) rows(i - 1, j) = alpha.rho()(i, j) - alpha.rho()(0, j);
  return rows;
}

QMat difference_matrix_logs(const AlphaMatrix& alpha) {
  const Index s = alpha.rows(), t = alpha.cols(), m = alpha.num_logs();
  QMat rows(std::max<Index>(s - 1, 0) * m, t);
  Index r = 0;
  for (Index i = 1; i < s; ++i) {
    for (Index k = 0; k < m; ++k) {
      for (Index j = 0; j < t; ++j) rows(r, j) = alpha.logs(k)(i, j) - alpha.logs(k)(0, j);
      ++r;
    }
  }
  return rows;
}

}  // namespace

std::vector<QVec> compute_V(const AlphaMatrix& alpha) {
  const Index s = alpha.rows(), t = alpha.cols(), m = alpha.num_logs();
  if (s == 1) {
    std::vector<QVec> full;
    for (Index j = 0; j < t; ++j) {
      QVec e = QVec::Constant(t, Rat(0));
      e[j] = Rat(1);
      full.push_back(e);
    }
    return full;
  }
  QMat constraints((s - 1) * (m + 1), t);
  QMat rho = difference_matrix_rho(alpha);
  QMat logs = difference_matrix_logs(alpha);
  Index r = 0;
  for (Index i = 0; i < rho.rows(); ++i, ++r)
    for (Index j = 0; j < t; ++j) constraints(r, j) = rho(i, j);
  for (Index i = 0; i < logs.rows(); ++i, ++r)
    for (Index j = 0; j < t; ++j) constraints(r, j) = logs(i, j);
  return rref_kernel(constraints).kernel;
}

SplitSpace::SplitSpace(Index t, const std::vector<QVec>& v_basis) : t_(t) {
  const Index dv = static_cast<Index>(v_basis.size());
  QMat rows(dv, t);
  for (Index i = 0; i < dv; ++i) {
    if (v_basis[static_cast<std::size_t>(i)].size() != t) throw Error("dimension mismatch");
    for (Index j = 0; j < t; ++j) rows(i, j) = v_basis[static_cast<std::size_t>(i)][j];
  }
  RrefResult rr = rref_kernel(rows);
  if (rr.rank != dv) throw InputError("dependent input basis");

  // Store V in canonical RREF row form.
  v_basis_.clear();
  for (Index i = 0; i < dv; ++i) {
    QVec row(t);
    for (Index j = 0; j < t; ++j) row[j] = rr.rref(i, j);
    v_basis_.push_back(std::move(row));
  }
  std::vector<bool> pivot(static_cast<std::size_t>(t), false);
  for (Index p : rr.pivot_cols) pivot[static_cast<std::size_t>(p)] = true;
  for (Index j = 0; j < t; ++j) {
    if (!pivot[static_cast<std::size_t>(j)]) vprime_cols_.push_back(j);
  }

  // Columns: V basis vectors, then the chosen standard vectors. The stacked
  // matrix is square and invertible exactly when V ⊕ V' = Q^t.
  QMat cols = QMat::Constant(t, t, Rat(0));
  for (Index i = 0; i < dv; ++i)
    for (Index j = 0; j < t; ++j) cols(j, i) = v_basis_[static_cast<std::size_t>(i)][j];
  for (std::size_t k = 0; k < vprime_cols_.size(); ++k) {
    cols(vprime_cols_[k], dv + static_cast<Index>(k)) = Rat(1);
  }
  inverse_ = invert(cols);
}

QVec SplitSpace::project_v(const QVec& q) const {
  if (q.size() != t_) throw Error("dimension mismatch");
  const Index dv = dim_v();
  QVec out = QVec::Constant(t_, Rat(0));
  for (Index i = 0; i < dv; ++i) {
    Rat coeff(0);
    for (Index j = 0; j < t_; ++j) coeff += inverse_(i, j) * q[j];
    for (Index j = 0; j < t_; ++j) out[j] += coeff * v_basis_[static_cast<std::size_t>(i)][j];
  }
  return out;
}

QVec SplitSpace::project_vprime(const QVec& q) const { return q - project_v(q); }

std::string SplitSpace::fingerprint() const {
  std::ostringstream os;
  os << "V[";
  for (std::size_t i = 0; i < v_basis_.size(); ++i) {
    if (i) os << ";";
    for (Index j = 0; j < t_; ++j) {
      if (j) os << ",";
      os << v_basis_[i][j];
    }
  }
  os << "]+V'[";
  for (std::size_t i = 0; i < vprime_cols_.size(); ++i) {
    if (i) os << ",";
    os << "e" << (vprime_cols_[i] + 1);
  }
  os << "]";
  return os.str();
}

SplitSpace complement_and_projections(const std::vector<QVec>& v_basis, Index t) {
  return SplitSpace(t, v_basis);
}

ZLattice compute_H(const EqSystem& sys) {
  const Index t = sys.num_vars();
  QMat logs = difference_matrix_logs(sys.alpha);
  QMat rho = difference_matrix_rho(sys.alpha);
  ZLattice exact =
      logs.rows() == 0 ? ZLattice::full(t) : integer_kernel(clear_row_denominators(logs));
  if (rho.rows() == 0) return exact;
  std::vector<Int> ones(static_cast<std::size_t>(rho.rows()), Int(1));
  ZLattice torsion = congruence_lattice(rho, ones);
  return lattice_intersect(exact, torsion);
}

ZLattice system_congruence_lattice(const EqSystem& sys, const Int& n) {
  if (n.sign() <= 0) throw InputError("invalid modulus");
  const Index t = sys.num_vars();
  QMat logs = difference_matrix_logs(sys.alpha);
  QMat rho = difference_matrix_rho(sys.alpha);
  ZLattice exact =
      logs.rows() == 0 ? ZLattice::full(t) : integer_kernel(clear_row_denominators(logs));
  if (rho.rows() == 0) return exact;
  std::vector<Int> mods(static_cast<std::size_t>(rho.rows()), n);
  ZLattice torsion = congruence_lattice(rho, mods);
  return lattice_intersect(exact, torsion);
}

}  // namespace polyexp
