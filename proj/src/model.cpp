#include "polyexp/model.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "polyexp/error.hpp"
#include "polyexp/linalg.hpp"

namespace polyexp {

bool GenSet::all_concrete() const {
  return std::all_of(generators.begin(), generators.end(),
                     [](const Generator& g) { return g.value.has_value(); });
}

AlphaMatrix::AlphaMatrix(Index terms, Index vars, Index num_logs) {
  if (terms < 1 || vars < 1) throw InputError("alpha matrix needs s >= 1 and t >= 1");
  rho_ = QMat::Constant(terms, vars, Rat(0));
  logs_.assign(static_cast<std::size_t>(num_logs), QMat::Constant(terms, vars, Rat(0)));
}

LogCoord AlphaMatrix::at(Index i, Index j) const {
  LogCoord c;
  c.rho = rho_(i, j);
  c.logs = QVec(num_logs());
  for (Index m = 0; m < num_logs(); ++m) c.logs[m] = logs_[static_cast<std::size_t>(m)](i, j);
  return c;
}

void AlphaMatrix::set(Index i, Index j, const LogCoord& c) {
  if (c.logs.size() != num_logs()) throw InputError("dimension mismatch: logs length");
  rho_(i, j) = c.rho;
  for (Index m = 0; m < num_logs(); ++m) logs_[static_cast<std::size_t>(m)](i, j) = c.logs[m];
}

AlphaMatrix normalize_alpha(const AlphaMatrix& alpha) {
  AlphaMatrix out = alpha;
  const Index s = alpha.rows(), t = alpha.cols(), m = alpha.num_logs();
  for (Index i = s - 1; i >= 0; --i) {
    for (Index j = 0; j < t; ++j) {
      LogCoord c = alpha.at(i, j);
      LogCoord first = alpha.at(0, j);
      c.rho -= first.rho;
      for (Index k = 0; k < m; ++k) c.logs[k] -= first.logs[k];
      out.set(i, j, c);
    }
  }
  return out;
}

bool GroupVal::is_identity() const {
  if (!angle.is_zero()) return false;
  for (Index i = 0; i < expvec.size(); ++i)
    if (!expvec[i].is_zero()) return false;
  return true;
}

GroupVal operator*(const GroupVal& a, const GroupVal& b) {
  if (a.expvec.size() != b.expvec.size()) throw Error("dimension mismatch");
  return GroupVal(a.angle + b.angle, a.expvec + b.expvec);
}

GroupVal GroupVal::pow(const Int& n) const {
  QVec e(expvec.size());
  for (Index i = 0; i < expvec.size(); ++i) e[i] = expvec[i] * Rat(n);
  return GroupVal(angle * Rat(n), std::move(e));
}

bool operator==(const GroupVal& a, const GroupVal& b) {
  if (a.angle != b.angle || a.expvec.size() != b.expvec.size()) return false;
  for (Index i = 0; i < a.expvec.size(); ++i)
    if (a.expvec[i] != b.expvec[i]) return false;
  return true;
}

bool operator<(const GroupVal& a, const GroupVal& b) {
  if (a.angle != b.angle) return a.angle < b.angle;
  return lex_less(a.expvec, b.expvec);
}

namespace {

// Prime factorization by trial division; fine at desk scale.
void factor_into(const Int& n, std::map<Int, long>& out, long sign) {
  Int m = n;
  if (m.sign() < 0) throw Error("factor of negative integer");
  Int two(2);
  while ((m % two).is_zero()) {
    out[two] += sign;
    m /= two;
  }
  Int p(3);
  while (p * p <= m) {
    if ((m % p).is_zero()) {
      out[p] += sign;
      m /= p;
    } else {
      p += Int(2);
    }
  }
  if (m > Int(1)) out[m] += sign;
}

std::map<Int, long> factor_rat(const Rat& v) {
  std::map<Int, long> f;
  factor_into(v.numerator(), f, +1);
  factor_into(v.denominator(), f, -1);
  for (auto it = f.begin(); it != f.end();) {
    if (it->second == 0) it = f.erase(it);
    else ++it;
  }
  return f;
}

}  // namespace

MultIndepResult mult_independent(const std::vector<Rat>& values) {
  const Index k = static_cast<Index>(values.size());
  MultIndepResult res;
  for (Index i = 0; i < k; ++i) {
    if (values[static_cast<std::size_t>(i)].sign() <= 0) {
      throw InputError("multiplicative independence needs positive values");
    }
    if (values[static_cast<std::size_t>(i)].is_one()) {
      res.independent = false;
      res.relation = ZVec::Constant(k, Int(0));
      res.relation[i] = Int(1);
      return res;
    }
  }
  if (k == 0) return res;

  std::vector<std::map<Int, long>> factored;
  std::set<Int> primes;
  for (const Rat& v : values) {
    factored.push_back(factor_rat(v));
    for (const auto& [p, e] : factored.back()) primes.insert(p);
  }
  std::vector<Int> prime_list(primes.begin(), primes.end());

  // Exponent matrix: one column per value, one row per prime; the integer
  // kernel of this matrix is exactly the relation lattice.
  ZMat exp_t(static_cast<Index>(prime_list.size()), k);
  for (Index r = 0; r < exp_t.rows(); ++r)
    for (Index c = 0; c < k; ++c) exp_t(r, c) = Int(0);
  for (Index c = 0; c < k; ++c) {
    for (const auto& [p, e] : factored[static_cast<std::size_t>(c)]) {
      Index r = static_cast<Index>(
          std::lower_bound(prime_list.begin(), prime_list.end(), p) - prime_list.begin());
      exp_t(r, c) = Int(e);
    }
  }
  ZLattice relations = integer_kernel(exp_t);
  if (relations.rank() == 0) return res;
  res.independent = false;
  res.relation = ZVec(k);
  for (Index j = 0; j < k; ++j) res.relation[j] = relations.basis()(0, j);
  return res;
}

EqSystem validate_system(EqSystem sys) {
  const Index s = sys.alpha.rows();
  const Index t = sys.alpha.cols();
  const Index m = sys.alpha.num_logs();

  if (static_cast<Index>(sys.polys.size()) != s) {
    throw InputError("dimension mismatch: " + std::to_string(sys.polys.size()) +
                     " polynomials for " + std::to_string(s) + " terms");
  }
  if (m != sys.genset.size()) {
    throw InputError("dimension mismatch: log coordinates vs generators");
  }
  for (const auto& p : sys.polys) {
    if (p.nvars() != t) throw InputError("dimension mismatch: polynomial arity");
    if (p.order() != sys.order) throw InputError("dimension mismatch: coefficient order");
  }

  std::set<std::string> names;
  for (const Generator& g : sys.genset.generators) {
    if (g.name.empty()) throw InputError("generator with empty name");
    if (!names.insert(g.name).second) throw InputError("duplicate generator name: " + g.name);
    if (g.value) {
      if (g.value->sign() <= 0) {
        throw InputError("generator " + g.name + " must be positive, got " + g.value->str());
      }
      if (g.value->is_one()) {
        throw InputError("generator " + g.name + " must not be 1");
      }
    }
  }

  // Multiplicative independence of the concrete generators; symbols are
  // independent by assumption.
  std::vector<Rat> concrete;
  std::vector<std::string> concrete_names;
  for (const Generator& g : sys.genset.generators) {
    if (g.value) {
      concrete.push_back(*g.value);
      concrete_names.push_back(g.name);
    }
  }
  sys.genset.relation.reset();
  if (!concrete.empty()) {
    MultIndepResult ind = mult_independent(concrete);
    if (!ind.independent) {
      sys.genset.status = IndependenceStatus::refuted;
      sys.genset.relation = ind.relation;
      std::ostringstream msg;
      msg << "dependent generators: relation (";
      for (Index i = 0; i < ind.relation.size(); ++i) {
        if (i) msg << ", ";
        msg << concrete_names[static_cast<std::size_t>(i)] << "^" << ind.relation[i];
      }
      msg << ") = 1";
      throw InputError(msg.str());
    }
  }
  sys.genset.status = sys.genset.all_concrete() ? IndependenceStatus::verified
                                                : IndependenceStatus::assumed_symbolic;
  return sys;
}

GroupVal exp_value(const AlphaMatrix& alpha, Index row, const QVec& q) {
  if (q.size() != alpha.cols()) throw Error("dimension mismatch");
  Rat angle(0);
  for (Index j = 0; j < alpha.cols(); ++j) angle += q[j] * alpha.rho()(row, j);
  QVec ev = QVec::Constant(alpha.num_logs(), Rat(0));
  for (Index m = 0; m < alpha.num_logs(); ++m) {
    for (Index j = 0; j < alpha.cols(); ++j) ev[m] += q[j] * alpha.logs(m)(row, j);
  }
  return GroupVal(angle, std::move(ev));
}

CycNum poly_eval(const CycPolyMV& p, const QVec& q) { return p.eval(q); }

namespace {

// Scales all rows by the one global denominator lcm, preserving the row
// lattice (per-row scaling would not).
ZMat clear_common_denominator(const QMat& m) {
  Int d = denominator_lcm(m);
  ZMat out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) out(i, j) = (m(i, j) * Rat(d)).numerator();
  return out;
}

}  // namespace

RadicalResult radical_member(const GroupVal& x, const std::vector<GroupVal>& generators) {
  const Index m = x.expvec.size();
  const Index r = static_cast<Index>(generators.size());
  for (const GroupVal& g : generators) {
    if (g.expvec.size() != m) throw Error("dimension mismatch");
  }

  // Rows: x's exponent vector, then the generators'. A kernel vector
  // (n, -k) of the transpose says n*expvec(x) = sum k_i expvec(g_i).
  QMat stacked(1 + r, m);
  for (Index j = 0; j < m; ++j) stacked(0, j) = x.expvec[j];
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < m; ++j) stacked(1 + i, j) = generators[static_cast<std::size_t>(i)].expvec[j];
  ZMat stacked_int = clear_common_denominator(stacked);
  ZLattice kernel = integer_kernel(ZMat(stacked_int.transpose()));

  RadicalResult res;
  if (kernel.rank() == 0) return res;
  const ZMat& kb = kernel.basis();
  if (kb(0, 0).is_zero()) return res;  // every kernel vector has n = 0
  Int n0 = kb(0, 0);

  // Particular solution for n = n0.
  QVec k0(r);
  for (Index i = 0; i < r; ++i) k0[i] = Rat(-kb(0, 1 + i));

  // Torsion reachable from relations among the generators alone:
  // the angles of kernel vectors with n = 0 generate (1/w) Z / Z.
  Int w(1);
  for (Index b = 1; b < kernel.rank(); ++b) {
    Rat a(0);
    for (Index i = 0; i < r; ++i) a += Rat(-kb(b, 1 + i)) * generators[static_cast<std::size_t>(i)].angle;
    w = lcm(w, mod1(a).denominator());
  }

  Rat c = Rat(n0) * x.angle;
  for (Index i = 0; i < r; ++i) c -= k0[i] * generators[static_cast<std::size_t>(i)].angle;
  c = mod1(c);
  Int q = c.denominator();
  Int j = divexact(q, gcd(q, w));

  res.member = true;
  res.witness = n0 * j;
  return res;
}

std::optional<ZVec> group_relation(const std::vector<GroupVal>& values) {
  const Index k = static_cast<Index>(values.size());
  if (k == 0) return std::nullopt;
  const Index m = values[0].expvec.size();
  for (const GroupVal& v : values) {
    if (v.expvec.size() != m) throw Error("dimension mismatch");
  }

  // Exact part: sum n_i expvec(x_i) = 0 coordinatewise.
  QMat exact(m, k);
  for (Index r = 0; r < m; ++r)
    for (Index c = 0; c < k; ++c) exact(r, c) = values[static_cast<std::size_t>(c)].expvec[r];
  ZLattice l1 = integer_kernel(clear_row_denominators(exact));

  // Torsion part: sum n_i angle_i must be an integer.
  QMat angles(1, k);
  for (Index c = 0; c < k; ++c) angles(0, c) = values[static_cast<std::size_t>(c)].angle;
  ZLattice l2 = congruence_lattice(angles, {Int(1)});

  ZLattice rel = lattice_intersect(l1, l2);
  if (rel.rank() == 0) return std::nullopt;
  ZVec out(k);
  for (Index j = 0; j < k; ++j) out[j] = rel.basis()(0, j);
  return out;
}

}  // namespace polyexp
