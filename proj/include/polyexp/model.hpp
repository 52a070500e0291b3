#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "polyexp/eigen_support.hpp"
#include "polyexp/mpoly.hpp"

namespace polyexp {

/// One multiplicative generator g_m > 0, g_m != 1. Absent value = free
/// symbol, assumed multiplicatively independent of everything else.
struct Generator {
  std::string name;
  std::optional<Rat> value;
};

enum class IndependenceStatus { verified, assumed_symbolic, refuted };

struct GenSet {
  std::vector<Generator> generators;
  IndependenceStatus status = IndependenceStatus::verified;
  std::optional<ZVec> relation;  // set when status == refuted

  Index size() const { return static_cast<Index>(generators.size()); }
  bool all_concrete() const;
};

/// Exact exponent coordinate: alpha = 2*pi*i*rho + sum_m logs[m]*log(g_m).
struct LogCoord {
  Rat rho;
  QVec logs;
};

/// The s x t exponent matrix, stored as one rational matrix for the torsion
/// coordinates and one per generator for the log coordinates. This layout
/// makes the difference matrices of the structural computations row slices.
class AlphaMatrix {
 public:
  AlphaMatrix() = default;  // empty placeholder; real instances come below
  AlphaMatrix(Index terms, Index vars, Index num_logs);

  Index rows() const { return rho_.rows(); }
  Index cols() const { return rho_.cols(); }
  Index num_logs() const { return static_cast<Index>(logs_.size()); }

  LogCoord at(Index i, Index j) const;
  void set(Index i, Index j, const LogCoord& c);

  const QMat& rho() const { return rho_; }
  /// s x t matrix of the coefficients of log(g_m).
  const QMat& logs(Index m) const { return logs_[static_cast<std::size_t>(m)]; }

 private:
  QMat rho_;
  std::vector<QMat> logs_;
};

/// Row i becomes alpha_i - alpha_1 componentwise; the first row is zeroed.
AlphaMatrix normalize_alpha(const AlphaMatrix& alpha);

using CycPolyMV = CycMPoly;

/// A validated equation instance: sum_i P_i(X) exp(X . alpha_i) = 0.
struct EqSystem {
  GenSet genset;
  AlphaMatrix alpha;
  std::vector<CycPolyMV> polys;  // length s, uniform order
  long order = 1;                // M of the coefficient field

  Index num_terms() const { return alpha.rows(); }   // s
  Index num_vars() const { return alpha.cols(); }    // t
  Index num_logs() const { return alpha.num_logs(); }
};

/// Value of exp(q . alpha_i): a root of unity exp(2*pi*i*angle) times the
/// torsion-free monomial prod_m g_m^{expvec_m}.
struct GroupVal {
  Rat angle;   // canonical in [0, 1)
  QVec expvec; // length m

  GroupVal() = default;
  GroupVal(const Rat& a, QVec e) : angle(mod1(a)), expvec(std::move(e)) {}

  bool is_identity() const;
  friend GroupVal operator*(const GroupVal& a, const GroupVal& b);
  GroupVal pow(const Int& n) const;
  friend bool operator==(const GroupVal& a, const GroupVal& b);
  friend bool operator!=(const GroupVal& a, const GroupVal& b) { return !(a == b); }
  friend bool operator<(const GroupVal& a, const GroupVal& b);
};

struct MultIndepResult {
  bool independent = true;
  ZVec relation;  // nonzero integer vector e with prod v_i^{e_i} = 1
};

/// Multiplicative independence of positive rationals via exact prime
/// factorization and an integer kernel of the exponent matrix.
MultIndepResult mult_independent(const std::vector<Rat>& values);

/// Dimension checks, generator validation, concrete-independence check.
/// Returns the system with the independence status filled in; throws
/// InputError with the failing condition (including the explicit relation
/// for dependent generators).
EqSystem validate_system(EqSystem sys);

GroupVal exp_value(const AlphaMatrix& alpha, Index row, const QVec& q);

CycNum poly_eval(const CycPolyMV& p, const QVec& q);

struct RadicalResult {
  bool member = false;
  Int witness;  // minimal n >= 1 with x^n in the generated subgroup
};

/// Is some positive power of x inside the subgroup generated by the given
/// values? Rational linear algebra on the exponent vectors plus a torsion
/// congruence on the angles; the minimal exponent is returned.
RadicalResult radical_member(const GroupVal& x, const std::vector<GroupVal>& generators);

/// Nontrivial multiplicative relation among GroupVals, if any: a nonzero
/// integer vector n with prod x_i^{n_i} = 1. Used for the beta-data
/// hypothesis check of the finiteness monitor.
std::optional<ZVec> group_relation(const std::vector<GroupVal>& values);

}  // namespace polyexp
