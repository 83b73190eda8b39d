#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>

#include "antipode/matrix.hpp"

namespace antipode {

/// A rank-r lattice spanned by the rows of an r x n rational basis. The inner
/// product of ambient vectors x, y is scale * (x . y), so irrational rescalings
/// such as 1/sqrt(8) live entirely in `scale`.
class ScaledLattice {
 public:
  ScaledLattice(RatMatrix basis, Rat scale);

  std::size_t ambient_dim() const { return basis_.cols(); }
  std::size_t rank() const { return basis_.rows(); }
  const RatMatrix& basis() const { return basis_; }
  const Rat& scale() const { return scale_; }

 private:
  RatMatrix basis_;
  Rat scale_;
};

/// scale * B * B^T.
RatMatrix gram(const ScaledLattice& lattice);
/// det(gram).
Rat determinant(const ScaledLattice& lattice);
/// scale * |v|^2 for an ambient vector.
Rat norm(const ScaledLattice& lattice, const RatVector& v);
/// Dual lattice inside the span of `lattice`, same scale convention.
ScaledLattice dual(const ScaledLattice& lattice);
/// Same lattice with scale multiplied by `factor`.
ScaledLattice rescale(const ScaledLattice& lattice, const Rat& factor);
/// LLL-reduced basis of the same lattice.
ScaledLattice reduce(const ScaledLattice& lattice);
/// Places the coordinates into columns [offset, offset + n) of an ambient space
/// of dimension `ambient_dim`.
ScaledLattice embed(const ScaledLattice& lattice, std::size_t ambient_dim, std::size_t offset);

/// Canonical HNF basis of the lattice (denominators cleared and restored).
RatMatrix canonical_basis(const ScaledLattice& lattice);
/// True iff both generate the same point set (scale-aware, fixed coordinates).
bool lattice_equal(const ScaledLattice& a, const ScaledLattice& b);
/// Integer coordinates of v with respect to the basis, if v is in the lattice.
std::optional<RatVector> lattice_coordinates(const ScaledLattice& lattice, const RatVector& v);
bool contains(const ScaledLattice& lattice, const RatVector& v);

/// Canonical representative of t + lattice: nearest-plane reduction against
/// the stored basis, leaving every Gram-Schmidt coefficient in [-1/2, 1/2).
/// Components of t outside the span are kept unchanged.
RatVector reduce_modulo(const ScaledLattice& lattice, const RatVector& t);

enum class Side { U, V };

/// A lattice in W = U + V together with the subspace U (given by spanning
/// rows); V is the orthogonal complement. Sections are computed on
/// construction and the splitting is rejected unless rank(K) = k and
/// rank(L) = l.
class Splitting {
 public:
  Splitting(ScaledLattice lattice, RatMatrix u_span);

  const ScaledLattice& lattice() const { return lattice_; }
  const RatMatrix& u_basis() const { return u_basis_; }
  const RatMatrix& v_basis() const { return v_basis_; }
  std::size_t n() const { return lattice_.ambient_dim(); }
  std::size_t k() const { return u_basis_.rows(); }
  std::size_t l() const { return v_basis_.rows(); }

  /// Orthogonal projector onto the chosen side (symmetric n x n matrix).
  const RatMatrix& projector(Side side) const { return side == Side::U ? proj_u_ : proj_v_; }
  const ScaledLattice& section(Side side) const { return side == Side::U ? section_u_ : section_v_; }

 private:
  ScaledLattice lattice_;
  RatMatrix u_basis_;
  RatMatrix v_basis_;
  RatMatrix proj_u_;
  RatMatrix proj_v_;
  ScaledLattice section_u_;
  ScaledLattice section_v_;
};

/// Lattice vectors lying in the chosen subspace (K for U, L for V), LLL-reduced.
const ScaledLattice& section(const Splitting& split, Side side);
/// Lattice generated by the orthogonal projections of the basis (M for U, N for V).
ScaledLattice project(const Splitting& split, Side side);
RatVector project_point(const Splitting& split, const RatVector& w, Side side);

/// Lattice file: `ambient_dim rank`, `scale p/q`, then the basis in matrix format.
void write_lattice(std::ostream& os, const ScaledLattice& lattice);
ScaledLattice read_lattice(std::istream& is);

}  // namespace antipode
