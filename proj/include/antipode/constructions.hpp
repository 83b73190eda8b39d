#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "antipode/codes.hpp"
#include "antipode/lattice.hpp"

namespace antipode::constructions {

enum class RootFamily { Z, A, D, E };

/// Root lattice (or Z^n) in standard coordinates with scale `rescale`.
/// A_n lives in the sum-zero hyperplane of R^(n+1); E_6, E_7 are sections of E_8.
ScaledLattice make_root(RootFamily family, std::size_t rank, const Rat& rescale = Rat(1));

/// Leech lattice in MOG-style coordinates: vectors (1/sqrt 8)(a_1, ..., a_24)
/// built from golay24() by the mod-2 / mod-4 congruence construction.
ScaledLattice make_leech();

/// Coordinate sections of the Leech lattice: 20 (first four coordinates zero),
/// 22 (first three coordinates equal), 23 (second and third coordinates equal).
ScaledLattice make_laminated(int dim);

enum class P48Variant { P, Q };
/// Even unimodular 48-dimensional lattice with scale 1/3, built from the Pless
/// symmetry code (P) or the extended QR code (Q).
ScaledLattice make_p48(P48Variant variant);
const LinearCode& p48_code(P48Variant variant);
/// The glue vector added to the even part of the Construction-A lattice.
RatVector p48_glue(P48Variant variant);

/// Everything the antipode construction needs for one of the named packings.
struct PackingRecipe {
  std::string name;
  Splitting split;
  Rat host_min_norm;
  bool min_norm_assumed = false;
  std::size_t set_size = 1;
  /// Explicit antipodal points in ambient coordinates; empty means "search".
  std::vector<RatVector> points;
};

/// Names: v20, v22, v47p, v46p, v45p, v44p, v47q, v46q, v45q, v44q.
PackingRecipe make_splitting(const std::string& name);
std::vector<std::string> packing_names();

/// Spanning rows of U for the P48 splittings with dim U = d in {1, 2, 3, 4}.
RatMatrix p48_u_span(std::size_t d);

}  // namespace antipode::constructions
