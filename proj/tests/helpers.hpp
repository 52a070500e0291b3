#pragma once

#include <string>
#include <vector>

#include "polyexp/model.hpp"

namespace polyexp::testing {

inline Rat rat(const std::string& s) { return Rat::parse(s); }

inline QVec qvec(const std::vector<std::string>& entries) {
  QVec v(static_cast<Index>(entries.size()));
  for (std::size_t i = 0; i < entries.size(); ++i) v[static_cast<Index>(i)] = rat(entries[i]);
  return v;
}

inline ZVec zvec(const std::vector<long>& entries) {
  ZVec v(static_cast<Index>(entries.size()));
  for (std::size_t i = 0; i < entries.size(); ++i) v[static_cast<Index>(i)] = Int(entries[i]);
  return v;
}

inline ZMat zmat(const std::vector<std::vector<long>>& rows) {
  Index r = static_cast<Index>(rows.size());
  Index c = rows.empty() ? 0 : static_cast<Index>(rows[0].size());
  ZMat m(r, c);
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < c; ++j) m(i, j) = Int(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
  return m;
}

inline QMat qmat(const std::vector<std::vector<std::string>>& rows) {
  Index r = static_cast<Index>(rows.size());
  Index c = rows.empty() ? 0 : static_cast<Index>(rows[0].size());
  QMat m(r, c);
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < c; ++j) m(i, j) = rat(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
  return m;
}

/// Constant polynomial c (as a rational) in nvars variables at the given order.
inline CycPolyMV const_poly(const std::string& c, Index nvars, long order = 1) {
  CycPolyMV p(order, nvars);
  p.add_term(Eigen::VectorXi::Zero(nvars), CycNum::from_rat(rat(c), order));
  return p;
}

/// System with constant coefficients: one generator set, rho and log rows
/// given per term (logs flattened per generator).
struct SystemBuilder {
  std::vector<Generator> gens;
  std::vector<std::string> coeffs;            // constant P_i
  std::vector<std::string> rhos;              // rho per term (t = 1)
  std::vector<std::vector<std::string>> logs; // per term, length = #gens

  EqSystem build() const {
    Index s = static_cast<Index>(coeffs.size());
    Index m = static_cast<Index>(gens.size());
    AlphaMatrix alpha(s, 1, m);
    for (Index i = 0; i < s; ++i) {
      LogCoord c;
      c.rho = rat(rhos[static_cast<std::size_t>(i)]);
      c.logs = qvec(logs[static_cast<std::size_t>(i)]);
      alpha.set(i, 0, c);
    }
    std::vector<CycPolyMV> polys;
    for (const auto& c : coeffs) polys.push_back(const_poly(c, 1));
    GenSet gs;
    gs.generators = gens;
    return validate_system(EqSystem{gs, alpha, polys, 1});
  }
};

/// 4^x - 2 = 0 over the generator 2.
inline EqSystem pow4_minus_2() {
  SystemBuilder b;
  b.gens = {{"g1", rat("2")}};
  b.coeffs = {"1", "-2"};
  b.rhos = {"0", "0"};
  b.logs = {{"2"}, {"0"}};
  return b.build();
}

/// exp(pi*i*x) + 1 = 0.
inline EqSystem half_turn() {
  SystemBuilder b;
  b.gens = {};
  b.coeffs = {"1", "1"};
  b.rhos = {"1/2", "0"};
  b.logs = {{}, {}};
  return b.build();
}

/// 2^x 3^y - 6 = 0 (t = 2).
inline EqSystem two_pow_three_pow_six() {
  std::vector<Generator> gens{{"g1", rat("2")}, {"g2", rat("3")}};
  AlphaMatrix alpha(2, 2, 2);
  alpha.set(0, 0, LogCoord{rat("0"), qvec({"1", "0"})});
  alpha.set(0, 1, LogCoord{rat("0"), qvec({"0", "1"})});
  alpha.set(1, 0, LogCoord{rat("0"), qvec({"0", "0"})});
  alpha.set(1, 1, LogCoord{rat("0"), qvec({"0", "0"})});
  std::vector<CycPolyMV> polys{const_poly("1", 2), const_poly("-6", 2)};
  GenSet gs;
  gs.generators = gens;
  return validate_system(EqSystem{gs, alpha, polys, 1});
}

/// P = (1,-1,1,-1) on alpha rows (log2, log2, 0, 0): every point is a
/// degenerate solution with blocks {1,2},{3,4}.
inline EqSystem paired_cancellation() {
  SystemBuilder b;
  b.gens = {{"g1", rat("2")}};
  b.coeffs = {"1", "-1", "1", "-1"};
  b.rhos = {"0", "0", "0", "0"};
  b.logs = {{"1"}, {"1"}, {"0"}, {"0"}};
  return b.build();
}

/// Identical alpha rows with cancelling constants: solution set is all of
/// Q, H = Z, so nondegenerate integer solutions grow with the box.
inline EqSystem identical_rows() {
  SystemBuilder b;
  b.gens = {{"g1", rat("2")}};
  b.coeffs = {"1", "-1"};
  b.rhos = {"0", "0"};
  b.logs = {{"1"}, {"1"}};
  return b.build();
}

}  // namespace polyexp::testing
