#include "antipode/constructions.hpp"

#include <map>
#include <mutex>

#include "antipode/errors.hpp"
#include "antipode/linalg.hpp"

namespace antipode::constructions {

namespace {

RatVector unit(std::size_t n, std::size_t i, const Rat& value = Rat(1)) {
  RatVector v(n, Rat(0));
  v[i] = value;
  return v;
}

RatVector difference_row(std::size_t n, std::size_t i, std::size_t j) {
  RatVector v(n, Rat(0));
  v[i] = 1;
  v[j] = -1;
  return v;
}

ScaledLattice make_e8(const Rat& rescale) {
  std::vector<RatVector> gens;
  for (std::size_t i = 0; i + 1 < 8; ++i) gens.push_back(difference_row(8, i, i + 1));
  RatVector last(8, Rat(0));
  last[6] = 1;
  last[7] = 1;
  gens.push_back(last);
  gens.emplace_back(8, Rat(1, 2));
  return ScaledLattice(lattice_basis_from_generators(RatMatrix::from_rows(gens)), rescale);
}

ScaledLattice leech_uncached() {
  const LinearCode golay = golay24();
  std::vector<RatVector> gens;
  for (const auto& row : golay.generator()) {
    RatVector v(24);
    for (std::size_t j = 0; j < 24; ++j) v[j] = 2 * static_cast<int>(row[j]);
    gens.push_back(std::move(v));
  }
  for (std::size_t i = 1; i < 24; ++i) {
    RatVector v(24, Rat(0));
    v[0] = 4;
    v[i] = 4;
    gens.push_back(std::move(v));
  }
  gens.push_back(unit(24, 0, Rat(8)));
  RatVector odd(24, Rat(1));
  odd[0] = -3;
  gens.push_back(std::move(odd));
  return ScaledLattice(lattice_basis_from_generators(RatMatrix::from_rows(gens)), Rat(1, 8));
}

struct P48Data {
  LinearCode code;
  RatVector glue;
  ScaledLattice lattice;
};

P48Data p48_uncached(P48Variant variant) {
  LinearCode code = variant == P48Variant::P ? pless_symmetry48() : ternary_qr48();
  const std::size_t n = 48;
  std::vector<RatVector> gens;
  for (const auto& row : code.generator()) {
    RatVector v(n);
    long sum = 0;
    for (std::size_t j = 0; j < n; ++j) {
      const int lift = row[j] == 2 ? -1 : row[j];
      v[j] = lift;
      sum += lift;
    }
    if (sum % 2 != 0) v[0] += 3;
    gens.push_back(std::move(v));
  }
  for (std::size_t i = 1; i < n; ++i) {
    RatVector plus(n, Rat(0)), minus(n, Rat(0));
    plus[0] = 3;
    plus[i] = 3;
    minus[0] = 3;
    minus[i] = -3;
    gens.push_back(std::move(plus));
    gens.push_back(std::move(minus));
  }
  // Translate coset x + (3/2)1 with x = c (mod 3): full-weight codewords give
  // norm-4 vectors when sum(x) has the parity of their number of 2s, so the
  // glue must pick the parity no full-weight codeword has.
  const FullWeightCensus census = full_weight_census(code);
  if (census.even_twos > 0 && census.odd_twos > 0) {
    throw MathError("ternary code has full-weight words of both parities; no extremal neighbor");
  }
  RatVector glue(n, Rat(3, 2));
  if (census.even_twos > 0) glue[0] += 3;
  gens.push_back(glue);
  ScaledLattice lattice(lattice_basis_from_generators(RatMatrix::from_rows(gens)), Rat(1, 3));
  return {std::move(code), std::move(glue), std::move(lattice)};
}

const P48Data& p48_data(P48Variant variant) {
  static const P48Data p = p48_uncached(P48Variant::P);
  static const P48Data q = p48_uncached(P48Variant::Q);
  return variant == P48Variant::P ? p : q;
}

PackingRecipe p48_recipe(const std::string& name, std::size_t l, P48Variant variant) {
  const std::size_t d = 48 - l;
  static const std::size_t sizes[] = {0, 2, 3, 4, 4};
  return PackingRecipe{name, Splitting(make_p48(variant), p48_u_span(d)), Rat(6), true, sizes[d], {}};
}

}  // namespace

ScaledLattice make_root(RootFamily family, std::size_t rank, const Rat& rescale) {
  if (rescale.sign() <= 0) throw InputError("rescale must be positive");
  switch (family) {
    case RootFamily::Z:
      if (rank < 1) throw InputError("Z_n needs n >= 1");
      return ScaledLattice(RatMatrix::identity(rank), rescale);
    case RootFamily::A: {
      if (rank < 1) throw InputError("A_n needs n >= 1");
      std::vector<RatVector> rows;
      for (std::size_t i = 0; i < rank; ++i) rows.push_back(difference_row(rank + 1, i, i + 1));
      return ScaledLattice(RatMatrix::from_rows(rows), rescale);
    }
    case RootFamily::D: {
      if (rank < 2) throw InputError("D_n needs n >= 2");
      std::vector<RatVector> rows;
      for (std::size_t i = 0; i + 1 < rank; ++i) rows.push_back(difference_row(rank, i, i + 1));
      RatVector last(rank, Rat(0));
      last[rank - 2] = 1;
      last[rank - 1] = 1;
      rows.push_back(last);
      return ScaledLattice(RatMatrix::from_rows(rows), rescale);
    }
    case RootFamily::E: {
      if (rank < 6 || rank > 8) throw InputError("E_n needs 6 <= n <= 8");
      const ScaledLattice e8 = make_e8(rescale);
      if (rank == 8) return e8;
      // E_7: x_7 = x_8; E_6: x_6 = x_7 = x_8.
      std::vector<RatVector> u{difference_row(8, 6, 7)};
      if (rank == 6) u.push_back(difference_row(8, 5, 6));
      return Splitting(e8, RatMatrix::from_rows(u)).section(Side::V);
    }
  }
  throw InputError("unknown root family");
}

ScaledLattice make_leech() {
  static const ScaledLattice leech = leech_uncached();
  return leech;
}

ScaledLattice make_laminated(int dim) {
  std::vector<RatVector> u;
  switch (dim) {
    case 20:
      for (std::size_t i = 0; i < 4; ++i) u.push_back(unit(24, i));
      break;
    case 22:
      u = {difference_row(24, 0, 1), difference_row(24, 1, 2)};
      break;
    case 23:
      u = {difference_row(24, 1, 2)};
      break;
    default:
      throw InputError("laminated lattices available: 20, 22, 23");
  }
  return Splitting(make_leech(), RatMatrix::from_rows(u)).section(Side::V);
}

ScaledLattice make_p48(P48Variant variant) { return p48_data(variant).lattice; }

const LinearCode& p48_code(P48Variant variant) { return p48_data(variant).code; }

RatVector p48_glue(P48Variant variant) { return p48_data(variant).glue; }

RatMatrix p48_u_span(std::size_t d) {
  std::vector<RatVector> rows;
  switch (d) {
    case 1:
    case 2:
    case 3:
      for (std::size_t i = 0; i < d; ++i) rows.push_back(difference_row(48, i, i + 1));
      break;
    case 4:
      for (std::size_t i = 0; i < 4; ++i) rows.push_back(unit(48, i));
      break;
    default:
      throw InputError("P48 subspaces exist for dimensions 1..4");
  }
  return RatMatrix::from_rows(rows);
}

PackingRecipe make_splitting(const std::string& name) {
  static std::mutex mutex;
  static std::map<std::string, PackingRecipe> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(name); it != cache.end()) return it->second;
  }
  auto build = [&]() -> PackingRecipe {
    if (name == "v20") {
      std::vector<RatVector> u;
      for (std::size_t i = 0; i < 4; ++i) u.push_back(unit(24, i));
      auto point = [](int a, int b, int c, int d) {
        RatVector v(24, Rat(0));
        v[0] = a;
        v[1] = b;
        v[2] = c;
        v[3] = d;
        return v;
      };
      return PackingRecipe{name,
                           Splitting(make_leech(), RatMatrix::from_rows(u)),
                           Rat(4),
                           false,
                           4,
                           {point(0, 0, 0, 0), point(1, 1, 1, 1), point(2, 0, 0, 0), point(1, 1, 1, -1)}};
    }
    if (name == "v22") {
      Splitting split(make_leech(), RatMatrix::from_rows({difference_row(24, 0, 1), difference_row(24, 1, 2)}));
      // U-projections of the translates beginning (a, a, a), (a+2, a, a), (a, a-2, a).
      std::vector<RatVector> points;
      for (const auto& head : std::vector<std::vector<int>>{{0, 0, 0}, {2, 0, 0}, {0, -2, 0}}) {
        RatVector w(24, Rat(0));
        for (std::size_t i = 0; i < 3; ++i) w[i] = head[i];
        points.push_back(project_point(split, w, Side::U));
      }
      return PackingRecipe{name, std::move(split), Rat(4), false, 3, std::move(points)};
    }
    if (name.size() == 4 && name[0] == 'v' && (name[3] == 'p' || name[3] == 'q')) {
      const int l = std::stoi(name.substr(1, 2));
      if (l >= 44 && l <= 47) return p48_recipe(name, static_cast<std::size_t>(l), name[3] == 'p' ? P48Variant::P : P48Variant::Q);
    }
    throw InputError("unknown packing '" + name + "'");
  };
  PackingRecipe recipe = build();
  std::lock_guard lock(mutex);
  cache.emplace(name, recipe);
  return recipe;
}

std::vector<std::string> packing_names() {
  return {"v20", "v22", "v47p", "v46p", "v45p", "v44p", "v47q", "v46q", "v45q", "v44q"};
}

}  // namespace antipode::constructions
