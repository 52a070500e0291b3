#include "polyexp/specialize.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "polyexp/error.hpp"

namespace polyexp {

namespace {

struct ExpLess {
  bool operator()(const Eigen::VectorXi& a, const Eigen::VectorXi& b) const {
    for (Index i = 0; i < a.size(); ++i) {
      if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
  }
};

// Coefficient vectors of the entries over the union of their monomials.
std::vector<std::vector<CycNum>> coefficient_rows(const PolyTuple& tuple) {
  std::map<Eigen::VectorXi, Index, ExpLess> columns;
  for (const auto& e : tuple.entries) {
    for (const auto& t : e.terms()) columns.emplace(t.exponents, 0);
  }
  Index c = 0;
  for (auto& [mono, idx] : columns) idx = c++;
  std::vector<std::vector<CycNum>> rows;
  for (const auto& e : tuple.entries) {
    std::vector<CycNum> row(static_cast<std::size_t>(columns.size()),
                            CycNum::zero(tuple.order));
    for (const auto& t : e.terms()) row[static_cast<std::size_t>(columns.at(t.exponents))] = t.coeff;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

LinearDimension linear_dimension(const PolyTuple& tuple) {
  for (const auto& e : tuple.entries) {
    if (e.order() != tuple.order) throw InputError("dimension mismatch: coefficient order");
    if (e.nvars() != static_cast<Index>(tuple.variables.size())) {
      throw InputError("dimension mismatch: polynomial arity");
    }
  }
  auto rows = coefficient_rows(tuple);
  const std::size_t ncols = rows.empty() ? 0 : rows[0].size();

  LinearDimension out;
  // Echelon basis over the cyclotomic field; pivot = first nonzero column.
  std::vector<std::pair<std::size_t, std::vector<CycNum>>> echelon;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::vector<CycNum> r = rows[i];
    for (const auto& [pc, base] : echelon) {
      if (r[pc].is_zero()) continue;
      CycNum f = r[pc];
      for (std::size_t j = 0; j < ncols; ++j) r[j] -= f * base[j];
    }
    std::size_t pivot = ncols;
    for (std::size_t j = 0; j < ncols; ++j) {
      if (!r[j].is_zero()) {
        pivot = j;
        break;
      }
    }
    if (pivot == ncols) continue;
    CycNum inv = cyc_inverse(r[pivot]);
    for (std::size_t j = 0; j < ncols; ++j) r[j] = inv * r[j];
    echelon.emplace_back(pivot, std::move(r));
    std::sort(echelon.begin(), echelon.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    out.basis.push_back(static_cast<Index>(i));
  }
  out.dim = static_cast<long>(out.basis.size());
  return out;
}

CycNum cyc_det(std::vector<std::vector<CycNum>> m, long order) {
  const std::size_t n = m.size();
  CycNum det = CycNum::one(order);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = n;
    for (std::size_t i = col; i < n; ++i) {
      if (!m[i][col].is_zero()) {
        sel = i;
        break;
      }
    }
    if (sel == n) return CycNum::zero(order);
    if (sel != col) {
      std::swap(m[sel], m[col]);
      det = -det;
    }
    det *= m[col][col];
    CycNum inv = cyc_inverse(m[col][col]);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (m[i][col].is_zero()) continue;
      CycNum f = m[i][col] * inv;
      for (std::size_t j = col; j < n; ++j) m[i][j] -= f * m[col][j];
    }
  }
  return det;
}

namespace {

// 0, 1, -1, 2, -2, ...
long spiral_value(long i) { return (i % 2 == 1) ? (i + 1) / 2 : -(i / 2); }

// Enumerates integer points shell by shell (max spiral index), tuples in
// lexicographic index order within a shell; calls f until it returns true.
// Returns false if the budget runs out first.
bool spiral_scan(Index nvars, long budget, const std::function<bool(const QVec&)>& f) {
  if (nvars == 0) {
    QVec p(0);
    return f(p);
  }
  long tried = 0;
  std::vector<long> idx(static_cast<std::size_t>(nvars), 0);
  for (long shell = 0;; ++shell) {
    // All index tuples in [0, shell]^n containing at least one `shell`.
    std::function<bool(Index, bool)> rec = [&](Index pos, bool has_max) -> bool {
      if (pos == nvars) {
        if (!has_max) return false;
        QVec p(nvars);
        for (Index j = 0; j < nvars; ++j) {
          p[j] = Rat(spiral_value(idx[static_cast<std::size_t>(j)]));
        }
        ++tried;
        if (f(p)) return true;
        if (tried >= budget) throw std::range_error("spiral budget exhausted");
        return false;
      }
      for (long i = 0; i <= shell; ++i) {
        idx[static_cast<std::size_t>(pos)] = i;
        if (rec(pos + 1, has_max || i == shell)) return true;
      }
      return false;
    };
    try {
      if (rec(0, false)) return true;
    } catch (const std::range_error&) {
      return false;
    }
  }
}

}  // namespace

SpecializationCert build_specializations(const PolyTuple& tuple, long spiral_budget) {
  LinearDimension ld = linear_dimension(tuple);
  if (ld.dim == 0) throw InputError("all-zero tuple");
  const long order = tuple.order;
  const Index nvars = static_cast<Index>(tuple.variables.size());

  std::vector<const CycMPoly*> basis;
  for (Index i : ld.basis) basis.push_back(&tuple.entries[static_cast<std::size_t>(i)]);
  const std::size_t q = basis.size();

  SpecializationCert cert;
  cert.basis = ld.basis;

  // rows[i][j] = b_j evaluated at point i, for the points found so far.
  std::vector<std::vector<CycNum>> rows;
  for (std::size_t r = 1; r <= q; ++r) {
    // Bordered determinant with the last row left unevaluated: a linear
    // combination of b_1..b_r whose b_r coefficient is the leading minor,
    // nonzero by induction. Laplace along the polynomial row.
    CycMPoly bordered(order, nvars);
    for (std::size_t j = 0; j < r; ++j) {
      std::vector<std::vector<CycNum>> minor;
      for (std::size_t i = 0; i + 1 < r; ++i) {
        std::vector<CycNum> mrow;
        for (std::size_t c = 0; c < r; ++c) {
          if (c == j) continue;
          mrow.push_back(rows[i][c]);
        }
        minor.push_back(std::move(mrow));
      }
      CycNum cof = cyc_det(std::move(minor), order);
      if ((r + (j + 1)) % 2 == 1) cof = -cof;
      bordered = bordered + (cof * (*basis[j]));
    }
    if (bordered.is_zero()) throw Error("bordered determinant vanished; dependent basis");

    QVec found;
    bool ok = spiral_scan(nvars, spiral_budget, [&](const QVec& p) {
      if (bordered.eval(p).is_zero()) return false;
      found = p;
      return true;
    });
    if (!ok) {
      // Deterministic fallback: seeded uniform draws over growing boxes.
      std::mt19937_64 rng(0x706f6c79u);
      for (long range = 4;; range *= 2) {
        bool hit = false;
        for (int attempt = 0; attempt < 64; ++attempt) {
          QVec p(nvars);
          for (Index j = 0; j < nvars; ++j) {
            p[j] = Rat(static_cast<long>(rng() % (2 * range + 1)) - range);
          }
          if (!bordered.eval(p).is_zero()) {
            found = p;
            hit = true;
            break;
          }
        }
        if (hit) break;
      }
      cert.used_random_fallback = true;
    }

    std::vector<CycNum> row;
    for (std::size_t j = 0; j < q; ++j) row.push_back(basis[j]->eval(found));
    rows.push_back(std::move(row));
    cert.points.push_back(found);
  }

  // Truncate the stored rows to the leading square block and certify it.
  cert.matrix.assign(q, std::vector<CycNum>(q, CycNum::zero(order)));
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j) cert.matrix[i][j] = rows[i][j];
  cert.determinant = cyc_det(cert.matrix, order);
  if (cert.determinant.is_zero()) throw Error("specialization certificate is singular");
  return cert;
}

}  // namespace polyexp
