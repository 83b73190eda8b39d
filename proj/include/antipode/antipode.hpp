#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "antipode/enumeration.hpp"
#include "antipode/lattice.hpp"

namespace antipode {

/// Finite subset of a projection lattice M. Points are ambient vectors lying
/// in the span of M; beta is the realized squared diameter.
class AntipodalSet {
 public:
  /// Throws InputError("not in projection lattice") when a point is not in `host`.
  AntipodalSet(ScaledLattice host, std::vector<RatVector> points);

  const ScaledLattice& host() const { return host_; }
  const std::vector<RatVector>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  const Rat& beta() const { return beta_; }

 private:
  ScaledLattice host_;
  std::vector<RatVector> points_;
  Rat beta_;
};

/// Union of s translates t_i + L of the base lattice L.
struct TranslatePacking {
  explicit TranslatePacking(ScaledLattice lattice) : base(std::move(lattice)) {}

  std::string name;
  ScaledLattice base;
  std::vector<RatVector> translates;
  Rat min_sqdist;
  Rat radius_sq;
  Rat density_sq;
  Rat host_min_norm;
  Rat beta;
  /// min_sqdist was set to host_min_norm - beta rather than enumerated.
  bool min_norm_assumed = false;
};

struct ConstructOptions {
  Rat host_min_norm = Rat(4);
  /// Skip the coset enumerations and take d = mu - beta.
  bool assume_min_norm = false;
  /// Explicit preimages w_i in the host lattice, one per point.
  std::optional<std::vector<RatVector>> preimages;
  EnumerationOptions enumeration;
};

/// A host-lattice vector whose U-projection is u; throws InputError when none exists.
RatVector preimage(const Splitting& split, const RatVector& u);

TranslatePacking antipode_construct(const Splitting& split, const AntipodalSet& set,
                                    const ConstructOptions& options = {});

/// The section L viewed as a one-translate packing with d = min_norm(L)
/// (or `assumed_min_norm` when given).
TranslatePacking lattice_packing(const ScaledLattice& lattice, std::optional<Rat> assumed_min_norm = std::nullopt,
                                 const EnumerationOptions& options = {});

/// delta^2 = s^2 (d/4)^l / det L.
Rat density_squared(std::size_t s, const Rat& min_sqdist, std::size_t l, const Rat& det);

struct Density {
  Rat squared;
  /// sqrt(squared), correctly rounded to 10 significant digits.
  std::string decimal;
};
Density center_density(const TranslatePacking& packing);

struct Ratio {
  Rat squared;
  std::string decimal;
  bool improves = false;
};
/// s^2 (1 - beta/mu)^l. Throws MathError("spheres vanish") unless 0 <= beta < mu.
Ratio improvement_ratio(std::size_t s, const Rat& beta, const Rat& mu, std::size_t l);

/// Smallest-diameter set of s points of M containing 0; beta_cap defaults to
/// twice min_norm(M). Throws InfeasibleError("infeasible at this cap").
AntipodalSet find_antipodal_set(const ScaledLattice& host, std::size_t s, std::optional<Rat> beta_cap = std::nullopt,
                                const EnumerationOptions& options = {});

struct KissingReport {
  std::uint64_t total = 0;
  /// Contacts from translate i (index 0 is the point's own translate).
  std::vector<std::uint64_t> per_translate;
};
/// Points at squared distance exactly min_sqdist from a point of translate 0.
KissingReport kissing_number(const TranslatePacking& packing, const EnumerationOptions& options = {});

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};
struct VerificationReport {
  std::string name;
  /// packing, lattice or code.
  std::string kind = "packing";
  bool pass = true;
  bool enumerated = false;
  bool min_norm_assumed = false;
  /// d = mu - beta holds exactly.
  bool tight = false;
  Rat min_sqdist;
  std::optional<KissingReport> kissing;
  std::vector<Check> checks;
};
/// With enumerate = true, recomputes d from the cosets and counts contacts;
/// otherwise checks the algebraic identities only.
VerificationReport verify_packing(const TranslatePacking& packing, bool enumerate,
                                  const EnumerationOptions& options = {});
void write_verification(std::ostream& os, const VerificationReport& report);

/// Packing file: the base lattice block, then `translates s` and s rows.
void write_packing(std::ostream& os, const TranslatePacking& packing);
/// Reads base and translates; the remaining fields are left at zero.
TranslatePacking read_packing(std::istream& is);

/// Set file: `points s`, s rows, then `beta p/q`.
void write_antipodal_set(std::ostream& os, const AntipodalSet& set);

}  // namespace antipode
