#include "polyexp/linalg.hpp"

#include <algorithm>
#include <functional>

#include "polyexp/error.hpp"

namespace polyexp {

namespace {

void swap_rows(ZMat& m, Index a, Index b) {
  if (a == b) return;
  for (Index j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

// row_a := x*row_a + y*row_b and row_b := p*row_a_old + q*row_b_old,
// applied simultaneously.
void apply_2x2(ZMat& m, Index a, Index b, const Int& x, const Int& y, const Int& p,
               const Int& q) {
  for (Index j = 0; j < m.cols(); ++j) {
    Int va = m(a, j), vb = m(b, j);
    m(a, j) = x * va + y * vb;
    m(b, j) = p * va + q * vb;
  }
}

void sub_scaled_row(ZMat& m, Index dst, Index src, const Int& q) {
  if (q.is_zero()) return;
  for (Index j = 0; j < m.cols(); ++j) m(dst, j) -= q * m(src, j);
}

void negate_row(ZMat& m, Index r) {
  for (Index j = 0; j < m.cols(); ++j) m(r, j) = -m(r, j);
}

}  // namespace

RrefResult rref_kernel(const QMat& a) {
  const Index rows = a.rows(), cols = a.cols();
  ZMat m = clear_row_denominators(a);

  // Fraction-free forward pass: after step k every entry is a minor of the
  // original matrix, which keeps growth polynomial.
  std::vector<Index> pivots;
  Int prev(1);
  Index r = 0;
  for (Index col = 0; col < cols && r < rows; ++col) {
    Index sel = -1;
    for (Index i = r; i < rows; ++i) {
      if (!m(i, col).is_zero()) {
        sel = i;
        break;
      }
    }
    if (sel < 0) continue;
    swap_rows(m, r, sel);
    for (Index i = r + 1; i < rows; ++i) {
      for (Index j = col + 1; j < cols; ++j) {
        m(i, j) = divexact(m(r, col) * m(i, j) - m(i, col) * m(r, j), prev);
      }
      m(i, col) = Int(0);
    }
    prev = m(r, col);
    pivots.push_back(col);
    ++r;
  }
  const long rank = static_cast<long>(pivots.size());

  // Back substitution over Q: unit pivots, zeros above.
  QMat rref = QMat::Constant(rows, cols, Rat(0));
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) rref(i, j) = Rat(m(i, j));
  for (long k = rank - 1; k >= 0; --k) {
    Index pc = pivots[static_cast<std::size_t>(k)];
    Rat inv = Rat(1) / rref(k, pc);
    for (Index j = pc; j < cols; ++j) rref(k, j) *= inv;
    for (Index i = 0; i < k; ++i) {
      Rat f = rref(i, pc);
      if (f.is_zero()) continue;
      for (Index j = pc; j < cols; ++j) rref(i, j) -= f * rref(k, j);
    }
  }

  RrefResult out;
  out.rref = std::move(rref);
  out.rank = rank;
  out.pivot_cols = pivots;

  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (Index p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  for (Index f = 0; f < cols; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    QVec v = QVec::Constant(cols, Rat(0));
    v[f] = Rat(1);
    for (long k = 0; k < rank; ++k) v[pivots[static_cast<std::size_t>(k)]] = -out.rref(k, f);
    out.kernel.push_back(std::move(v));
  }
  return out;
}

HnfTransform hnf_with_transform(const ZMat& b) {
  const Index rows = b.rows(), cols = b.cols();
  HnfTransform out;
  out.h = b;
  out.u = ZMat::Constant(rows, rows, Int(0));
  for (Index i = 0; i < rows; ++i) out.u(i, i) = Int(1);

  ZMat& h = out.h;
  ZMat& u = out.u;
  Index r = 0;
  for (Index col = 0; col < cols && r < rows; ++col) {
    Index sel = -1;
    for (Index i = r; i < rows; ++i) {
      if (!h(i, col).is_zero()) {
        sel = i;
        break;
      }
    }
    if (sel < 0) continue;
    swap_rows(h, r, sel);
    swap_rows(u, r, sel);
    for (Index i = r + 1; i < rows; ++i) {
      if (h(i, col).is_zero()) continue;
      Int x, y;
      Int g = exgcd(h(r, col), h(i, col), x, y);
      Int p = -divexact(h(i, col), g);
      Int q = divexact(h(r, col), g);
      // [[x, y], [p, q]] has determinant 1 by construction.
      apply_2x2(h, r, i, x, y, p, q);
      apply_2x2(u, r, i, x, y, p, q);
    }
    if (h(r, col).sign() < 0) {
      negate_row(h, r);
      negate_row(u, r);
    }
    for (Index i = 0; i < r; ++i) {
      Int q = floordiv(h(i, col), h(r, col));
      sub_scaled_row(h, i, r, q);
      sub_scaled_row(u, i, r, q);
    }
    ++r;
  }
  out.rank = r;
  return out;
}

ZMat hnf(const ZMat& b) {
  HnfTransform t = hnf_with_transform(b);
  return t.h.topRows(t.rank);
}

Int int_det(const ZMat& a) {
  if (a.rows() != a.cols()) throw Error("determinant of non-square matrix");
  const Index n = a.rows();
  if (n == 0) return Int(1);
  ZMat m = a;
  Int prev(1);
  int sign = 1;
  for (Index k = 0; k < n; ++k) {
    Index sel = -1;
    for (Index i = k; i < n; ++i) {
      if (!m(i, k).is_zero()) {
        sel = i;
        break;
      }
    }
    if (sel < 0) return Int(0);
    if (sel != k) {
      swap_rows(m, k, sel);
      sign = -sign;
    }
    for (Index i = k + 1; i < n; ++i) {
      for (Index j = k + 1; j < n; ++j) {
        m(i, j) = divexact(m(k, k) * m(i, j) - m(i, k) * m(k, j), prev);
      }
      m(i, k) = Int(0);
    }
    prev = m(k, k);
  }
  Int d = m(n - 1, n - 1);
  return sign < 0 ? -d : d;
}

SnfResult snf(const ZMat& b) {
  const Index rows = b.rows(), cols = b.cols();
  SnfResult out;
  out.d = b;
  out.u = ZMat::Constant(rows, rows, Int(0));
  out.v = ZMat::Constant(cols, cols, Int(0));
  for (Index i = 0; i < rows; ++i) out.u(i, i) = Int(1);
  for (Index j = 0; j < cols; ++j) out.v(j, j) = Int(1);
  ZMat& d = out.d;
  ZMat& u = out.u;
  ZMat& v = out.v;

  auto swap_cols = [&](ZMat& m, Index a, Index c) {
    if (a == c) return;
    for (Index i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, c));
  };
  auto sub_scaled_col = [&](ZMat& m, Index dst, Index src, const Int& q) {
    if (q.is_zero()) return;
    for (Index i = 0; i < m.rows(); ++i) m(i, dst) -= q * m(i, src);
  };

  const Index steps = std::min(rows, cols);
  for (Index s = 0; s < steps; ++s) {
    for (;;) {
      // Smallest nonzero entry of the trailing block moves to (s, s).
      Index bi = -1, bj = -1;
      for (Index i = s; i < rows; ++i) {
        for (Index j = s; j < cols; ++j) {
          if (d(i, j).is_zero()) continue;
          if (bi < 0 || abs(d(i, j)) < abs(d(bi, bj))) {
            bi = i;
            bj = j;
          }
        }
      }
      if (bi < 0) {
        s = steps;  // trailing block is zero; done
        break;
      }
      if (bi != s) {
        swap_rows(d, s, bi);
        swap_rows(u, s, bi);
      }
      if (bj != s) {
        swap_cols(d, s, bj);
        swap_cols(v, s, bj);
      }

      bool clean = true;
      for (Index i = s + 1; i < rows; ++i) {
        if (d(i, s).is_zero()) continue;
        Int q = floordiv(d(i, s), d(s, s));
        sub_scaled_row(d, i, s, q);
        sub_scaled_row(u, i, s, q);
        if (!d(i, s).is_zero()) clean = false;
      }
      for (Index j = s + 1; j < cols; ++j) {
        if (d(s, j).is_zero()) continue;
        Int q = floordiv(d(s, j), d(s, s));
        sub_scaled_col(d, j, s, q);
        sub_scaled_col(v, j, s, q);
        if (!d(s, j).is_zero()) clean = false;
      }
      if (!clean) continue;

      // Divisibility: d(s,s) must divide the rest of the trailing block.
      bool divides = true;
      for (Index i = s + 1; i < rows && divides; ++i) {
        for (Index j = s + 1; j < cols && divides; ++j) {
          if (!(d(i, j) % d(s, s)).is_zero()) {
            sub_scaled_row(d, s, i, Int(-1));  // row_s += row_i
            sub_scaled_row(u, s, i, Int(-1));
            divides = false;
          }
        }
      }
      if (divides) break;
    }
    if (s == steps) break;
  }
  for (Index s = 0; s < steps; ++s) {
    if (d(s, s).sign() < 0) {
      negate_row(d, s);
      negate_row(u, s);
    }
  }

  if (!(abs(int_det(out.u)).is_one() && abs(int_det(out.v)).is_one())) {
    throw Error("smith normal form transform is not unimodular");
  }
  return out;
}

ZLattice::ZLattice(Index ambient_dim, const ZMat& spanning_rows) : ambient_(ambient_dim) {
  if (spanning_rows.cols() != ambient_dim && spanning_rows.rows() != 0) {
    throw Error("dimension mismatch");
  }
  if (spanning_rows.rows() == 0) {
    basis_ = ZMat(0, ambient_dim);
  } else {
    basis_ = hnf(spanning_rows);
  }
}

ZLattice ZLattice::full(Index ambient_dim) {
  ZMat id = ZMat::Constant(ambient_dim, ambient_dim, Int(0));
  for (Index i = 0; i < ambient_dim; ++i) id(i, i) = Int(1);
  return ZLattice(ambient_dim, id);
}

namespace {

// First nonzero column of each HNF basis row.
std::vector<Index> pivot_columns(const ZMat& basis) {
  std::vector<Index> p(static_cast<std::size_t>(basis.rows()));
  for (Index i = 0; i < basis.rows(); ++i) {
    Index j = 0;
    while (j < basis.cols() && basis(i, j).is_zero()) ++j;
    p[static_cast<std::size_t>(i)] = j;
  }
  return p;
}

}  // namespace

std::optional<ZVec> ZLattice::coordinates(const ZVec& v) const {
  if (v.size() != ambient_) throw Error("dimension mismatch");
  const auto piv = pivot_columns(basis_);
  ZVec coeff(basis_.rows());
  ZVec w = v;
  for (Index k = 0; k < basis_.rows(); ++k) {
    Index pc = piv[static_cast<std::size_t>(k)];
    if (!(w[pc] % basis_(k, pc)).is_zero()) return std::nullopt;
    Int q = w[pc] / basis_(k, pc);
    coeff[k] = q;
    for (Index j = 0; j < ambient_; ++j) w[j] -= q * basis_(k, j);
  }
  for (Index j = 0; j < ambient_; ++j) {
    if (!w[j].is_zero()) return std::nullopt;
  }
  return coeff;
}

bool ZLattice::contains(const ZVec& v) const { return coordinates(v).has_value(); }

ZVec ZLattice::reduce(const ZVec& v) const {
  if (v.size() != ambient_) throw Error("dimension mismatch");
  const auto piv = pivot_columns(basis_);
  ZVec w = v;
  for (Index k = 0; k < basis_.rows(); ++k) {
    Index pc = piv[static_cast<std::size_t>(k)];
    Int q = floordiv(w[pc], basis_(k, pc));
    for (Index j = 0; j < ambient_; ++j) w[j] -= q * basis_(k, j);
  }
  return w;
}

ZLattice integer_kernel(const ZMat& a) {
  const Index cols = a.cols();
  if (a.rows() == 0) return ZLattice::full(cols);
  ZMat t = a.transpose();
  HnfTransform ht = hnf_with_transform(t);
  const Index n = t.rows();
  const Index k = n - ht.rank;
  ZMat basis(k, n);
  for (Index i = 0; i < k; ++i) {
    for (Index j = 0; j < n; ++j) basis(i, j) = ht.u(ht.rank + i, j);
  }
  return ZLattice(cols, basis);
}

ZLattice congruence_lattice(const QMat& a, const std::vector<Int>& moduli) {
  const Index rows = a.rows(), cols = a.cols();
  if (static_cast<Index>(moduli.size()) != rows) throw Error("dimension mismatch");
  for (const Int& m : moduli) {
    if (m.sign() <= 0) throw InputError("invalid modulus");
  }
  if (rows == 0) return ZLattice::full(cols);

  ZMat cleared = clear_row_denominators(a);
  ZMat big = ZMat::Constant(rows, cols + rows, Int(0));
  for (Index r = 0; r < rows; ++r) {
    Int d(1);
    for (Index j = 0; j < cols; ++j) d = lcm(d, a(r, j).denominator());
    for (Index j = 0; j < cols; ++j) big(r, j) = cleared(r, j);
    big(r, cols + r) = d * moduli[static_cast<std::size_t>(r)];
  }
  ZLattice aug = integer_kernel(big);
  ZMat proj(aug.rank(), cols);
  for (Index i = 0; i < aug.rank(); ++i) {
    for (Index j = 0; j < cols; ++j) proj(i, j) = aug.basis()(i, j);
  }
  return ZLattice(cols, proj);
}

ZLattice lattice_intersect(const ZLattice& l1, const ZLattice& l2) {
  if (l1.ambient_dim() != l2.ambient_dim()) throw Error("dimension mismatch");
  const Index t = l1.ambient_dim();
  const Index r1 = l1.rank(), r2 = l2.rank();
  if (r1 == 0 || r2 == 0) return ZLattice::zero(t);
  ZMat stacked(r1 + r2, t);
  for (Index i = 0; i < r1; ++i)
    for (Index j = 0; j < t; ++j) stacked(i, j) = l1.basis()(i, j);
  for (Index i = 0; i < r2; ++i)
    for (Index j = 0; j < t; ++j) stacked(r1 + i, j) = -l2.basis()(i, j);
  ZLattice pairs = integer_kernel(stacked.transpose());
  ZMat members(pairs.rank(), t);
  for (Index i = 0; i < pairs.rank(); ++i) {
    for (Index j = 0; j < t; ++j) {
      Int acc(0);
      for (Index k = 0; k < r1; ++k) acc += pairs.basis()(i, k) * l1.basis()(k, j);
      members(i, j) = acc;
    }
  }
  return ZLattice(t, members);
}

bool lattice_member(const ZLattice& l, const ZVec& v) { return l.contains(v); }

std::optional<Int> lattice_index(const ZLattice& sub, const ZLattice& sup) {
  if (sub.ambient_dim() != sup.ambient_dim()) throw Error("dimension mismatch");
  ZMat coeff(sub.rank(), sup.rank());
  for (Index i = 0; i < sub.rank(); ++i) {
    ZVec row(sub.ambient_dim());
    for (Index j = 0; j < sub.ambient_dim(); ++j) row[j] = sub.basis()(i, j);
    auto c = sup.coordinates(row);
    if (!c) throw Error("lattice_index: sub is not contained in sup");
    for (Index j = 0; j < sup.rank(); ++j) coeff(i, j) = (*c)[j];
  }
  if (sub.rank() < sup.rank()) return std::nullopt;
  return abs(int_det(coeff));
}

NearestPoint nearest_point(const ZLattice& l, const QVec& target) {
  if (target.size() != l.ambient_dim()) throw Error("dimension mismatch");
  const Index t = l.ambient_dim();
  const Index r = l.rank();
  NearestPoint best;
  best.point = ZVec::Constant(t, Int(0));
  best.distance = sup_norm(target);
  if (r == 0) return best;

  const ZMat& b = l.basis();
  const auto piv = pivot_columns(b);

  // Rounded triangular solve seeds the incumbent.
  {
    QVec w = target;
    ZVec pt = ZVec::Constant(t, Int(0));
    for (Index k = 0; k < r; ++k) {
      Index pc = piv[static_cast<std::size_t>(k)];
      Int q = round_nearest(w[pc] / Rat(b(k, pc)));
      for (Index j = 0; j < t; ++j) {
        w[j] -= Rat(q) * Rat(b(k, j));
        pt[j] += q * b(k, j);
      }
    }
    QVec diff(t);
    for (Index j = 0; j < t; ++j) diff[j] = Rat(pt[j]) - target[j];
    Rat d = sup_norm(diff);
    if (d < best.distance || (d == best.distance && lex_less(pt, best.point))) {
      best.point = pt;
      best.distance = d;
    }
  }

  // Branch and bound over the triangular coefficients: at depth k the pivot
  // coordinate p_k of the point is fixed, so |x[p_k] - target[p_k]| <= best
  // bounds the coefficient range exactly.
  ZVec partial = ZVec::Constant(t, Int(0));
  std::function<void(Index)> walk = [&](Index k) {
    if (k == r) {
      QVec diff(t);
      for (Index j = 0; j < t; ++j) diff[j] = Rat(partial[j]) - target[j];
      Rat d = sup_norm(diff);
      if (d < best.distance || (d == best.distance && lex_less(partial, best.point))) {
        best.point = partial;
        best.distance = d;
      }
      return;
    }
    Index pc = piv[static_cast<std::size_t>(k)];
    Rat pv = Rat(b(k, pc));
    Rat base = target[pc] - Rat(partial[pc]);
    Int lo = ceil((base - best.distance) / pv);
    Int hi = floor((base + best.distance) / pv);
    for (Int q = lo; q <= hi; q += Int(1)) {
      for (Index j = 0; j < t; ++j) partial[j] += q * b(k, j);
      // Re-check against the (possibly improved) incumbent before descending.
      Rat dev = abs(Rat(partial[pc]) - target[pc]);
      if (dev <= best.distance) walk(k + 1);
      for (Index j = 0; j < t; ++j) partial[j] -= q * b(k, j);
    }
  };
  walk(0);
  return best;
}

std::vector<ZVec> lattice_points_in_box(const ZLattice& l, const ZVec& offset,
                                        const Rat& radius) {
  if (offset.size() != l.ambient_dim()) throw Error("dimension mismatch");
  const Index t = l.ambient_dim();
  const Index r = l.rank();
  std::vector<ZVec> out;

  auto in_box = [&](const ZVec& x) {
    for (Index j = 0; j < t; ++j) {
      if (Rat(abs(x[j])) > radius) return false;
    }
    return true;
  };

  if (r == 0) {
    if (in_box(offset)) out.push_back(offset);
    return out;
  }

  const ZMat& b = l.basis();
  const auto piv = pivot_columns(b);
  ZVec x = offset;
  std::function<void(Index)> walk = [&](Index k) {
    if (k == r) {
      if (in_box(x)) out.push_back(x);
      return;
    }
    Index pc = piv[static_cast<std::size_t>(k)];
    Rat pv = Rat(b(k, pc));
    Rat base = -Rat(x[pc]);
    Int lo = ceil((base - radius) / pv);
    Int hi = floor((base + radius) / pv);
    for (Int q = lo; q <= hi; q += Int(1)) {
      for (Index j = 0; j < t; ++j) x[j] += q * b(k, j);
      walk(k + 1);
      for (Index j = 0; j < t; ++j) x[j] -= q * b(k, j);
    }
  };
  walk(0);
  std::sort(out.begin(), out.end(), [](const ZVec& a, const ZVec& c) { return lex_less(a, c); });
  return out;
}

}  // namespace polyexp
