#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "k3lat/matrix.hpp"

namespace k3lat {

/// Exact determinant by fraction-free (Bareiss) elimination.
Integer determinant(const IntMatrix& m);

std::size_t rank(const IntMatrix& m);
std::size_t rank(const RatMatrix& m);

/// Inverse over Q; throws Error("singular") when det = 0.
RatMatrix inverse(const RatMatrix& m);
RatMatrix inverse(const IntMatrix& m);

/// Solve A x = b for square nonsingular A.
RatVector solve(const RatMatrix& a, const RatVector& b);

/// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... (all >= 0).
struct SmithForm {
  std::vector<Integer> diagonal;  // length min(rows, cols)
  IntMatrix left;                 // U, rows x rows
  IntMatrix right;                // V, cols x cols
};

SmithForm smith_normal_form(const IntMatrix& a);

/// Invariant factors only (no transforms); cheaper for tall matrices.
std::vector<Integer> smith_invariants(const IntMatrix& a);

/// Row Hermite normal form; returns the nonzero rows (upper echelon, positive
/// pivots, entries above each pivot reduced into [0, pivot)).
IntMatrix hermite_normal_form(const IntMatrix& a);

/// Saturated basis (as columns) of {x in Z^n : A x = 0}.
IntMatrix integer_kernel(const IntMatrix& a);

/// Least common multiple of all denominators.
Integer common_denominator(const RatMatrix& m);
Integer common_denominator(const RatVector& v);

}  // namespace k3lat
