#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "antipode/lattice.hpp"

namespace antipode {

/// 10^7 unless the ANTIPODE_ENUM_CAP environment variable overrides it.
std::uint64_t default_enumeration_cap();

struct EnumerationOptions {
  std::uint64_t cap = default_enumeration_cap();
  bool list = false;
  /// LLL-reduce the basis before traversal.
  bool reduce = true;
  unsigned threads = 1;
};

/// Exact norm histogram of the vectors of L + t (the zero vector excluded)
/// whose norm is at most `bound`.
struct EnumerationReport {
  std::string lattice;
  RatVector offset;
  Rat bound;
  std::map<Rat, std::uint64_t> histogram;
  bool listed = false;
  /// Ambient coordinates, sorted lexicographically.
  std::vector<RatVector> vectors;
  /// Basis the traversal ran on.
  RatMatrix basis;

  std::uint64_t total() const;
  std::uint64_t count_at(const Rat& norm) const;
};

/// `offset` may be empty (zero) or any ambient vector, inside the span of the
/// lattice or not. Throws EnumerationCapError when more than options.cap
/// vectors qualify.
EnumerationReport count_by_norm(const ScaledLattice& lattice, const Rat& bound, const RatVector& offset = {},
                                const EnumerationOptions& options = {}, std::string name = {});

struct CosetMinimum {
  Rat value;
  /// The offset lies in the lattice; `value` is then the nonzero minimum.
  bool offset_in_lattice = false;
};
CosetMinimum coset_min_norm(const ScaledLattice& lattice, const RatVector& offset,
                            const EnumerationOptions& options = {});
Rat min_norm(const ScaledLattice& lattice, const EnumerationOptions& options = {});

/// Counts listed vectors by their first `block_size` coordinates.
std::map<RatVector, std::uint64_t> classify_first_block(const EnumerationReport& report, std::size_t block_size);

/// `lattice`, `offset`, `bound` header lines, then `norm p/q count` lines.
void write_report(std::ostream& os, const EnumerationReport& report);
EnumerationReport read_report(std::istream& is);

}  // namespace antipode
