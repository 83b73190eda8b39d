#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "antipode/antipode.hpp"
#include "antipode/codes.hpp"
#include "antipode/constructions.hpp"

namespace antipode {

/// leech, lambda20, lambda22, lambda23, p48p, p48q, zn, an, dn (needing
/// `dim`), e6, e7, e8. std::nullopt for names that are not lattices.
std::optional<ScaledLattice> named_lattice(const std::string& name, std::optional<int> dim = std::nullopt);
/// golay24, qr48, pless48.
std::optional<LinearCode> named_code(const std::string& name);
std::vector<std::string> lattice_names();
std::vector<std::string> code_names();

struct NamedPacking {
  constructions::PackingRecipe recipe;
  AntipodalSet set;
  TranslatePacking packing;
};
/// Builds one of constructions::packing_names(). With enumerate = false the
/// minimal distance is taken as mu - beta.
NamedPacking build_named_packing(const std::string& name, bool enumerate, const EnumerationOptions& options = {});

struct TableRow {
  std::string packing;
  std::size_t l = 0;
  std::size_t s = 1;
  Rat beta;
  Rat mu;
  bool mu_assumed = false;
  Rat density_sq;
  std::string density;
  Rat old_density_sq;
  std::string old_density;
  Ratio ratio;
  std::optional<std::uint64_t> kissing;
};
/// Rows for every named packing plus the one-translate sections Lambda20 and
/// Lambda22. Kissing numbers are enumerated for the enumerable rows when asked.
std::vector<TableRow> reproduction_table(bool enumerate_kissing, const EnumerationOptions& options = {});
void write_table(std::ostream& os, const std::vector<TableRow>& rows);

}  // namespace antipode
