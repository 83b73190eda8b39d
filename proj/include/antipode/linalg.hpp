#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "antipode/matrix.hpp"

namespace antipode {

Rat determinant(const RatMatrix& m);
std::size_t rank(const RatMatrix& m);
/// Throws MathError when m is singular.
RatMatrix inverse(const RatMatrix& m);

/// Reduced row echelon form over the rationals.
struct EchelonForm {
  RatMatrix reduced;
  std::vector<std::size_t> pivot_cols;
};
EchelonForm rref(const RatMatrix& m);

/// Basis (as rows) of the right null space {x : m x = 0}.
RatMatrix kernel(const RatMatrix& m);

/// Solution set of m x = rhs: particular + span(kernel rows).
struct Solution {
  RatVector particular;
  RatMatrix kernel;
};
/// std::nullopt when the system is inconsistent.
std::optional<Solution> solve(const RatMatrix& m, const RatVector& rhs);
/// Solution set of x m = rhs (x a row vector).
std::optional<Solution> solve_left(const RatMatrix& m, const RatVector& rhs);

/// Row-style Hermite normal form: h = u * m with u unimodular. Pivots are
/// positive, entries above a pivot lie in [0, pivot), and zero rows come last.
struct HermiteForm {
  RatMatrix h;
  RatMatrix u;
  std::size_t rank = 0;
};
/// Requires integer entries.
HermiteForm hnf(const RatMatrix& m);

/// Nonzero HNF rows of the lattice generated by the rows of a rational matrix
/// (denominators are cleared and restored).
RatMatrix lattice_basis_from_generators(const RatMatrix& generators);

/// Basis (as rows) of {c in Z^rows : c * m = 0}; m may be rational.
RatMatrix integer_left_kernel(const RatMatrix& m);

/// An integer row vector c with c * m = target, if one exists.
std::optional<RatVector> integer_solve_left(const RatMatrix& m, const RatVector& target);

/// LLL reduction (parameter 3/4, size reduction rounding half to even) of the
/// rows of `basis` with respect to the inner product gram_scale * (x . y).
/// Throws MathError("not a basis") for dependent rows.
RatMatrix lll_reduce(const RatMatrix& basis, const Rat& gram_scale);

/// As lll_reduce, also returning the unimodular transform with reduced = t * basis.
struct LllResult {
  RatMatrix reduced;
  RatMatrix transform;
};
LllResult lll_reduce_with_transform(const RatMatrix& basis, const Rat& gram_scale);

/// Exact LDL^T: gram = lower * diag(diagonal) * lower^T with `lower` unit
/// lower triangular. Throws MathError("not positive definite").
struct LdlDecomposition {
  RatMatrix lower;
  RatVector diagonal;
};
LdlDecomposition rational_cholesky(const RatMatrix& gram);

}  // namespace antipode
