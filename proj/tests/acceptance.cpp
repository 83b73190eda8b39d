// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <exception>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "antipode/antipode.hpp"
#include "antipode/codes.hpp"
#include "antipode/constructions.hpp"
#include "antipode/enumeration.hpp"
#include "antipode/linalg.hpp"
#include "antipode/registry.hpp"

using namespace antipode;
namespace C = antipode::constructions;

namespace {

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class A, class B>
void expect_eq(const A& got, const B& want, const std::string& what) {
  if (!(got == want)) {
    std::ostringstream os;
    os << what << ": got " << got << ", want " << want;
    throw Failure(os.str());
  }
}

void expect(bool ok, const std::string& what) {
  if (!ok) throw Failure(what);
}

void expect_prefix(const std::string& text, const std::string& prefix, const std::string& what) {
  if (text.rfind(prefix, 0) != 0) throw Failure(what + ": got " + text + ", want " + prefix + "...");
}

bool even_gram(const ScaledLattice& l) {
  const RatMatrix g = gram(l);
  if (!g.is_integral()) return false;
  for (std::size_t i = 0; i < g.rows(); ++i)
    if (g(i, i).num() % 2 != 0) return false;
  return true;
}

RatMatrix random_unimodular(std::size_t n, std::mt19937& rng) {
  RatMatrix t = RatMatrix::identity(n);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<int> coef(-2, 2);
  for (std::size_t step = 0; step < 3 * n; ++step) {
    const std::size_t i = pick(rng), j = pick(rng);
    if (i == j) {
      t.swap_rows(i, (i + 1) % n);
      continue;
    }
    const Rat c = coef(rng);
    for (std::size_t k = 0; k < n; ++k) t(i, k) += c * t(j, k);
  }
  return t;
}

EnumerationOptions big_cap() {
  EnumerationOptions o;
  o.cap = 100'000'000;
  return o;
}

void criterion1() {
  const ScaledLattice leech = C::make_leech();
  expect_eq(determinant(leech), Rat(1), "det");
  expect(even_gram(leech), "Gram even");
  expect_eq(min_norm(leech), Rat(4), "min_norm");
  const EnumerationReport r = count_by_norm(leech, Rat(4));
  expect_eq(r.histogram.size(), std::size_t{1}, "histogram bins");
  expect_eq(r.count_at(Rat(4)), std::uint64_t{196560}, "norm-4 count");
}

void criterion2() {
  expect_eq(determinant(C::make_laminated(20)), Rat(64), "det lambda20");
  expect_eq(determinant(C::make_laminated(22)), Rat(12), "det lambda22");
  for (const std::string name : {"v20", "v22"}) {
    const Splitting& split = C::make_splitting(name).split;
    expect(lattice_equal(project(split, Side::U), dual(section(split, Side::U))), name + ": M = K*");
    expect(lattice_equal(project(split, Side::V), dual(section(split, Side::V))), name + ": N = L*");
  }
}

void criterion3() {
  const NamedPacking v20 = build_named_packing("v20", true);
  expect(!v20.packing.min_norm_assumed, "d enumerated");
  expect_eq(v20.packing.min_sqdist, Rat(7, 2), "d");
  expect_eq(v20.packing.density_sq, Rat(pow(Rat(7), 20).num(), pow(Rat(2), 62).num()), "delta^2");
  expect_prefix(center_density(v20.packing).decimal, "0.1315", "delta");
  const KissingReport k = kissing_number(v20.packing);
  expect_eq(k.total, std::uint64_t{15360}, "kissing");
  for (std::size_t i = 1; i < 4; ++i) expect_eq(k.per_translate[i], std::uint64_t{5120}, "contacts per translate");
}

void criterion4() {
  const NamedPacking v22 = build_named_packing("v22", true);
  const TranslatePacking& p = v22.packing;
  expect_eq(p.min_sqdist, Rat(11, 3), "d");
  expect_eq(p.density_sq, Rat(pow(Rat(11), 22).num(), (pow(Rat(2), 46) * pow(Rat(3), 21)).num()), "delta^2");
  expect_prefix(center_density(p).decimal, "0.3325", "delta");
  const EnumerationReport between = count_by_norm(p.base, Rat(11, 3), p.translates[1] - p.translates[0]);
  expect_eq(between.histogram.size(), std::size_t{1}, "coset bins");
  expect_eq(between.count_at(Rat(11, 3)), std::uint64_t{20736}, "per-coset touching count");

  // Leech vectors projecting onto the second point: they begin (a+2, a, a).
  const RatVector w = preimage(v22.recipe.split, v22.set.points()[1]);
  EnumerationOptions opts;
  opts.list = true;
  const EnumerationReport lifted = count_by_norm(p.base, Rat(4), w, opts);
  expect_eq(lifted.count_at(Rat(4)), std::uint64_t{20736}, "Leech minimal vectors over the point");
  const auto blocks = classify_first_block(lifted, 3);
  const std::map<std::vector<int>, std::uint64_t> want{
      {{0, -2, -2}, 1792}, {{1, -1, -1}, 10752}, {{2, 0, 0}, 7680}, {{3, 1, 1}, 512}};
  expect_eq(blocks.size(), want.size(), "block patterns");
  for (const auto& [head, count] : want) {
    const RatVector key{Rat(head[0]), Rat(head[1]), Rat(head[2])};
    const auto it = blocks.find(key);
    expect(it != blocks.end() && it->second == count,
           "block (" + std::to_string(head[0]) + "," + std::to_string(head[1]) + "," + std::to_string(head[2]) +
               ") count " + std::to_string(it == blocks.end() ? 0 : it->second));
  }
  expect_eq(kissing_number(p).total, std::uint64_t{41472}, "kissing");
}

void criterion5() {
  const Ratio v20 = improvement_ratio(4, Rat(1, 2), Rat(4), 20);
  expect_prefix(v20.decimal, "1.052", "V20 ratio");
  const NamedPacking p20 = build_named_packing("v20", false);
  const Rat old20 = density_squared(1, Rat(4), 20, determinant(p20.packing.base));
  expect_eq(p20.packing.density_sq / old20, v20.squared, "V20 ratio = density ratio");
  expect_prefix(improvement_ratio(3, Rat(1, 3), Rat(4), 22).decimal, "1.151", "V22 ratio");
  expect_prefix(improvement_ratio(2, Rat(1, 6), Rat(6), 47).decimal, "1.031", "dim 47 ratio");
  expect_prefix(improvement_ratio(3, Rat(2, 9), Rat(6), 46).decimal, "1.259", "dim 46 ratio");
  expect_prefix(improvement_ratio(4, Rat(1, 3), Rat(6), 45).decimal, "1.105", "dim 45 ratio");
  expect_prefix(improvement_ratio(4, Rat(1, 3), Rat(6), 44).decimal, "1.137", "dim 44 ratio");
}

void criterion6() {
  auto frac = [](const Rat& num, const Rat& den) { return num / den; };
  const std::map<std::string, std::pair<Rat, std::string>> want{
      {"47", {frac(pow(Rat(35), 47), pow(Rat(2), 140) * pow(Rat(3), 48)), "5788.8"}},
      {"46", {frac(pow(Rat(13), 46), pow(Rat(3), 93)), "2719.9"}},
      {"45", {frac(pow(Rat(17), 45), pow(Rat(2), 88) * pow(Rat(3), 48)), "974.6"}},
      {"44", {frac(pow(Rat(17), 44), pow(Rat(2), 86) * pow(Rat(3), 48)), "472.7"}},
  };
  for (const char variant : {'p', 'q'}) {
    const ScaledLattice p48 = C::make_p48(variant == 'p' ? C::P48Variant::P : C::P48Variant::Q);
    const std::string tag = std::string("P48") + variant;
    expect_eq(determinant(p48), Rat(1), tag + " det");
    expect(even_gram(p48), tag + " even");
    const LinearCode& code = C::p48_code(variant == 'p' ? C::P48Variant::P : C::P48Variant::Q);
    expect(is_self_orthogonal(code) && code.dimension() == 24, tag + " code self-dual");
    RatVector v(48, Rat(0));
    v[0] = 3;
    v[1] = 3;
    expect(contains(p48, v) && norm(p48, v) == Rat(6), tag + " norm-6 vector");
    for (const auto& [l, value] : want) {
      const NamedPacking np = build_named_packing("v" + l + variant, false);
      expect(np.packing.min_norm_assumed, "v" + l + variant + " flagged as assuming mu");
      expect_eq(np.packing.density_sq, value.first, "v" + l + variant + " delta^2");
      expect_prefix(center_density(np.packing).decimal, value.second, "v" + l + variant + " delta");
    }
  }
}

void criterion7() {
  for (const ScaledLattice& l : {C::make_leech(), C::make_laminated(20), C::make_laminated(22),
                                 dual(C::make_root(C::RootFamily::D, 4)), C::make_root(C::RootFamily::E, 6)}) {
    expect(lattice_equal(dual(dual(l)), l), "dual involution");
  }
  for (const std::string name : {"v20", "v22", "v47p", "v44q"}) {
    const Splitting& split = C::make_splitting(name).split;
    expect_eq(determinant(split.lattice()),
              determinant(project(split, Side::U)) * determinant(section(split, Side::V)),
              name + ": det = det M * det L");
    expect_eq(determinant(section(split, Side::U)) * determinant(project(split, Side::U)), Rat(1),
              name + ": det K * det M = 1");
  }

  // Basis invariance on a coset of Lambda20.
  const NamedPacking v20 = build_named_packing("v20", false);
  const ScaledLattice& l20 = v20.packing.base;
  const RatVector offset = v20.packing.translates[1] - v20.packing.translates[0];
  EnumerationOptions raw;
  raw.reduce = false;
  const auto reference = count_by_norm(l20, Rat(5), offset).histogram;
  for (unsigned seed = 1; seed <= 20; ++seed) {
    std::mt19937 rng(seed);
    const ScaledLattice moved(reduce(ScaledLattice(random_unimodular(20, rng) * l20.basis(), l20.scale())).basis(),
                              l20.scale());
    const RatVector shifted = offset + Rat(static_cast<long>(seed % 3)) * moved.basis().row(seed % 20);
    expect(count_by_norm(moved, Rat(5), shifted, raw).histogram == reference,
           "histogram changed under transform seed " + std::to_string(seed));
  }

  // Preimage independence.
  for (const std::string name : {"v20", "v22"}) {
    const NamedPacking np = build_named_packing(name, false);
    const Splitting& split = np.recipe.split;
    const ScaledLattice& base = np.packing.base;
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coef(-3, 3);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<RatVector> lifts;
      for (const auto& u : np.set.points()) {
        RatVector w = preimage(split, u);
        for (std::size_t i = 0; i < base.rank(); ++i) w = w + Rat(coef(rng)) * base.basis().row(i);
        lifts.push_back(std::move(w));
      }
      ConstructOptions co;
      co.assume_min_norm = true;
      co.preimages = lifts;
      expect(antipode_construct(split, np.set, co).translates == np.packing.translates,
             name + ": translates depend on the preimage");
    }
  }

  // V20 distance parity up to 8, over every ordered pair of translates.
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i; j < 4; ++j) {
      const RatVector diff = v20.packing.translates[j] - v20.packing.translates[i];
      const EnumerationReport r = count_by_norm(l20, Rat(8), diff, big_cap());
      expect(!r.histogram.empty(), "no distances found");
      for (const auto& [value, count] : r.histogram) {
        expect(value.is_integer() == (i == j),
               "parity of distance " + value.str() + " between translates " + std::to_string(i) + ", " + std::to_string(j));
      }
    }

  const auto dist = weight_distribution(golay24());
  const std::map<std::size_t, std::uint64_t> want{{0, 1}, {8, 759}, {12, 2576}, {16, 759}, {24, 1}};
  expect(dist == want, "Golay weight distribution");
}

void criterion8() {
  const std::vector<std::tuple<std::string, std::size_t, Rat>> cases{
      {"v20", 4, Rat(1, 2)}, {"v22", 3, Rat(1, 3)},  {"v47p", 2, Rat(1, 6)},
      {"v46p", 3, Rat(2, 9)}, {"v45p", 4, Rat(1, 3)}, {"v44p", 4, Rat(1, 3)}};
  for (const auto& [name, s, beta] : cases) {
    const ScaledLattice m = project(C::make_splitting(name).split, Side::U);
    const AntipodalSet set = find_antipodal_set(m, s);
    expect_eq(set.size(), s, name + " size");
    expect_eq(set.beta(), beta, name + " beta");
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void()>>> criteria{
      {"1 Leech det, evenness, min norm 4, 196560 minimal vectors", criterion1},
      {"2 det Lambda20 = 64, det Lambda22 = 12, projections are duals of sections", criterion2},
      {"3 V20 d = 7/2, delta^2 = 7^20/2^62, delta 0.1315, kissing 15360", criterion3},
      {"4 V22 d = 11/3, delta^2 exact, delta 0.3325, 20736 = 1792+10752+7680+512, kissing 41472", criterion4},
      {"5 improvement ratios 1.052, 1.151, 1.031, 1.259, 1.105, 1.137", criterion5},
      {"6 dimensions 44-47 densities, P48p/P48q even unimodular, self-dual codes, norm-6 vectors", criterion6},
      {"7 property suites", criterion7},
      {"8 antipodal set search on the six projection lattices", criterion8},
  };
  int failed = 0;
  for (const auto& [title, run] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      run();
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << title << " (" << std::fixed;
    std::cout.precision(1);
    std::cout << secs << "s)";
    if (!ok) std::cout << " : " << detail;
    std::cout << std::endl;
    failed += ok ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
