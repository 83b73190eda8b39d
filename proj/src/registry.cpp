#include "antipode/registry.hpp"

#include <iomanip>
#include <ostream>

#include "antipode/errors.hpp"

namespace antipode {

using constructions::RootFamily;

std::optional<ScaledLattice> named_lattice(const std::string& name, std::optional<int> dim) {
  auto need_dim = [&]() -> std::size_t {
    if (!dim || *dim < 1) throw InputError("'" + name + "' needs --dim n with n >= 1");
    return static_cast<std::size_t>(*dim);
  };
  if (name == "leech") return constructions::make_leech();
  if (name == "lambda20") return constructions::make_laminated(20);
  if (name == "lambda22") return constructions::make_laminated(22);
  if (name == "lambda23") return constructions::make_laminated(23);
  if (name == "p48p") return constructions::make_p48(constructions::P48Variant::P);
  if (name == "p48q") return constructions::make_p48(constructions::P48Variant::Q);
  if (name == "zn") return constructions::make_root(RootFamily::Z, need_dim());
  if (name == "an") return constructions::make_root(RootFamily::A, need_dim());
  if (name == "dn") return constructions::make_root(RootFamily::D, need_dim());
  if (name == "e6") return constructions::make_root(RootFamily::E, 6);
  if (name == "e7") return constructions::make_root(RootFamily::E, 7);
  if (name == "e8") return constructions::make_root(RootFamily::E, 8);
  return std::nullopt;
}

std::optional<LinearCode> named_code(const std::string& name) {
  if (name == "golay24") return golay24();
  if (name == "qr48") return ternary_qr48();
  if (name == "pless48") return pless_symmetry48();
  return std::nullopt;
}

std::vector<std::string> lattice_names() {
  return {"leech", "lambda20", "lambda22", "lambda23", "p48p", "p48q", "zn", "an", "dn", "e6", "e7", "e8"};
}

std::vector<std::string> code_names() { return {"golay24", "qr48", "pless48"}; }

NamedPacking build_named_packing(const std::string& name, bool enumerate, const EnumerationOptions& options) {
  constructions::PackingRecipe recipe = constructions::make_splitting(name);
  const ScaledLattice host = project(recipe.split, Side::U);
  AntipodalSet set = recipe.points.empty() ? find_antipodal_set(host, recipe.set_size, std::nullopt, options)
                                           : AntipodalSet(host, recipe.points);
  ConstructOptions co;
  co.host_min_norm = recipe.host_min_norm;
  co.assume_min_norm = !enumerate || recipe.min_norm_assumed;
  co.enumeration = options;
  TranslatePacking packing = antipode_construct(recipe.split, set, co);
  packing.name = name;
  return NamedPacking{std::move(recipe), std::move(set), std::move(packing)};
}

namespace {

TableRow row_for(const TranslatePacking& p, const Rat& mu, bool mu_assumed) {
  TableRow row;
  row.packing = p.name;
  row.l = p.base.rank();
  row.s = p.translates.size();
  row.beta = p.beta;
  row.mu = mu;
  row.mu_assumed = mu_assumed;
  row.density_sq = p.density_sq;
  row.density = decimal_sqrt(p.density_sq, 10);
  row.old_density_sq = density_squared(1, mu, row.l, determinant(p.base));
  row.old_density = decimal_sqrt(row.old_density_sq, 10);
  row.ratio = improvement_ratio(row.s, row.beta, mu, row.l);
  return row;
}

}  // namespace

std::vector<TableRow> reproduction_table(bool enumerate_kissing, const EnumerationOptions& options) {
  std::vector<TableRow> rows;
  for (int dim : {20, 22}) {
    TranslatePacking p = lattice_packing(constructions::make_laminated(dim), std::nullopt, options);
    p.name = "lambda" + std::to_string(dim);
    TableRow row = row_for(p, p.min_sqdist, false);
    if (enumerate_kissing) row.kissing = kissing_number(p, options).total;
    rows.push_back(std::move(row));
  }
  for (const auto& name : constructions::packing_names()) {
    const NamedPacking np = build_named_packing(name, true, options);
    TableRow row = row_for(np.packing, np.recipe.host_min_norm, np.recipe.min_norm_assumed);
    if (enumerate_kissing && !np.packing.min_norm_assumed) row.kissing = kissing_number(np.packing, options).total;
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_table(std::ostream& os, const std::vector<TableRow>& rows) {
  os << std::left << std::setw(10) << "packing" << std::setw(4) << "l" << std::setw(3) << "s" << std::setw(6) << "beta"
     << std::setw(5) << "mu" << std::setw(14) << "delta" << std::setw(14) << "old_delta" << std::setw(14) << "ratio"
     << std::setw(9) << "kissing"
     << "delta_sq\n";
  for (const auto& r : rows) {
    os << std::setw(10) << r.packing << std::setw(4) << r.l << std::setw(3) << r.s << std::setw(6) << r.beta.str()
       << std::setw(5) << (r.mu.str() + (r.mu_assumed ? "*" : "")) << std::setw(14) << r.density << std::setw(14)
       << r.old_density << std::setw(14) << r.ratio.decimal << std::setw(9)
       << (r.kissing ? std::to_string(*r.kissing) : "-") << r.density_sq << '\n';
  }
  os << "* mu assumed, not enumerated\n";
}

}  // namespace antipode
