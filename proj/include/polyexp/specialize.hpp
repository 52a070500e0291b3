#pragma once

#include <string>
#include <vector>

#include "polyexp/mpoly.hpp"

namespace polyexp {

/// Tuple of multivariate polynomials over Q(zeta_order) in named formal
/// variables. The variables play the role of the transcendentals being
/// specialized away.
struct PolyTuple {
  std::vector<std::string> variables;
  long order = 1;
  std::vector<CycMPoly> entries;
};

struct LinearDimension {
  long dim = 0;
  std::vector<Index> basis;  // first indices attaining the rank, ascending
};

/// Rank of the entries over Q(zeta_order), as vectors of monomial
/// coefficients, by exact elimination with cyclotomic inverses. The basis
/// is greedy: an entry joins it exactly when it enlarges the span.
LinearDimension linear_dimension(const PolyTuple& tuple);

/// Evaluation points and the nonsingular evaluation matrix they induce on
/// the basis entries.
struct SpecializationCert {
  std::vector<QVec> points;                   // one per basis row
  std::vector<Index> basis;                   // entry indices used
  std::vector<std::vector<CycNum>> matrix;    // matrix[i][j] = b_j(points[i])
  CycNum determinant;                         // nonzero
  bool used_random_fallback = false;
};

/// Builds the points row by row: with a nonsingular leading minor in hand,
/// the bordered determinant against the unevaluated entries is a nonzero
/// polynomial, and the first integer point (in deterministic spiral order
/// 0, 1, -1, 2, -2, ... per coordinate, enumerated shell by shell) that
/// keeps it nonzero extends the minor. A seeded random search takes over
/// if the spiral scan exceeds spiral_budget points; the certificate
/// records when that happened.
SpecializationCert build_specializations(const PolyTuple& tuple, long spiral_budget = 100000);

/// Determinant over Q(zeta) by elimination with exact inverses.
CycNum cyc_det(std::vector<std::vector<CycNum>> m, long order);

}  // namespace polyexp
