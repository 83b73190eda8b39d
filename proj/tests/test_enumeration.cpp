#include <gtest/gtest.h>

#include <cstdlib>
#include <random>
#include <sstream>

#include "antipode/constructions.hpp"
#include "antipode/enumeration.hpp"
#include "antipode/errors.hpp"
#include "antipode/linalg.hpp"

using namespace antipode;
namespace C = antipode::constructions;

namespace {

RatMatrix random_unimodular(std::size_t n, std::mt19937& rng) {
  RatMatrix t = RatMatrix::identity(n);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (std::size_t step = 0; step < 4 * n; ++step) {
    const std::size_t i = pick(rng), j = pick(rng);
    if (i == j) continue;
    const Rat c = coef(rng);
    for (std::size_t k = 0; k < n; ++k) t(i, k) += c * t(j, k);
  }
  return t;
}

}  // namespace

TEST(Enumeration, SmallExamples) {
  const ScaledLattice z2(RatMatrix::identity(2), Rat(1));
  const EnumerationReport r = count_by_norm(z2, Rat(1));
  EXPECT_EQ(r.histogram, (std::map<Rat, std::uint64_t>{{Rat(1), 4}}));
  EXPECT_EQ(min_norm(z2), Rat(1));
  const EnumerationReport r2 = count_by_norm(z2, Rat(5));
  EXPECT_EQ(r2.count_at(Rat(2)), 4u);
  EXPECT_EQ(r2.count_at(Rat(4)), 4u);
  EXPECT_EQ(r2.count_at(Rat(5)), 8u);
  EXPECT_EQ(r2.total(), 20u);
  EXPECT_THROW(count_by_norm(z2, Rat(0)), InputError);
}

TEST(Enumeration, RootSystems) {
  EXPECT_EQ(count_by_norm(C::make_root(C::RootFamily::E, 8), Rat(2)).count_at(Rat(2)), 240u);
  EXPECT_EQ(count_by_norm(C::make_root(C::RootFamily::E, 8), Rat(4)).count_at(Rat(4)), 2160u);
  EXPECT_EQ(count_by_norm(C::make_root(C::RootFamily::E, 7), Rat(2)).count_at(Rat(2)), 126u);
  EXPECT_EQ(count_by_norm(C::make_root(C::RootFamily::E, 6), Rat(2)).count_at(Rat(2)), 72u);
  EXPECT_EQ(count_by_norm(C::make_root(C::RootFamily::D, 4), Rat(2)).count_at(Rat(2)), 24u);
  EXPECT_EQ(count_by_norm(C::make_root(C::RootFamily::A, 3), Rat(2)).count_at(Rat(2)), 12u);
}

TEST(Enumeration, DualD4HasMinimalNormOneHalf) {
  const ScaledLattice m = rescale(dual(C::make_root(C::RootFamily::D, 4)), Rat(1, 2));
  EXPECT_EQ(min_norm(m), Rat(1, 2));
  EXPECT_EQ(count_by_norm(m, Rat(1, 2)).count_at(Rat(1, 2)), 24u);
}

TEST(Enumeration, CosetMinimum) {
  const ScaledLattice z2(RatMatrix::identity(2), Rat(1));
  const CosetMinimum half = coset_min_norm(z2, {Rat(1, 2), Rat(1, 2)});
  EXPECT_EQ(half.value, Rat(1, 2));
  EXPECT_FALSE(half.offset_in_lattice);
  const CosetMinimum in = coset_min_norm(z2, {Rat(3), Rat(-7)});
  EXPECT_TRUE(in.offset_in_lattice);
  EXPECT_EQ(in.value, Rat(1));
  // Offset with a component outside the span.
  const ScaledLattice line(RatMatrix::from_rows({{Rat(1), Rat(0)}}), Rat(1));
  const CosetMinimum off = coset_min_norm(line, {Rat(1, 3), Rat(1)});
  EXPECT_EQ(off.value, Rat(1, 9) + Rat(1));
  const EnumerationReport r = count_by_norm(line, Rat(2), {Rat(1, 2), Rat(1)});
  EXPECT_EQ(r.histogram, (std::map<Rat, std::uint64_t>{{Rat(5, 4), 2}}));
}

TEST(Enumeration, ListedVectorsRecertify) {
  const ScaledLattice l = C::make_laminated(22);
  EnumerationOptions opts;
  opts.list = true;
  RatVector t(24, Rat(0));
  t[3] = Rat(1, 2);
  t[5] = Rat(-1, 3);
  const EnumerationReport r = count_by_norm(l, Rat(5), t, opts);
  ASSERT_EQ(r.vectors.size(), r.total());
  std::map<Rat, std::uint64_t> recount;
  for (const auto& v : r.vectors) {
    ++recount[norm(l, v)];
    EXPECT_TRUE(contains(l, v - t));
  }
  EXPECT_EQ(recount, r.histogram);
  EXPECT_TRUE(std::is_sorted(r.vectors.begin(), r.vectors.end()));
}

TEST(Enumeration, SymmetricCountsAreEven) {
  for (const auto& [norm_value, count] : count_by_norm(C::make_laminated(20), Rat(6)).histogram) {
    EXPECT_EQ(count % 2, 0u) << norm_value;
  }
}

TEST(Enumeration, BasisInvarianceUnderUnimodularTransforms) {
  const ScaledLattice e8 = C::make_root(C::RootFamily::E, 8);
  const RatVector t{Rat(1, 3), Rat(0), Rat(1, 2), Rat(0), Rat(0), Rat(-1, 5), Rat(0), Rat(1)};
  const auto reference = count_by_norm(e8, Rat(6), t).histogram;
  for (unsigned seed = 0; seed < 20; ++seed) {
    std::mt19937 rng(seed);
    const ScaledLattice moved(random_unimodular(8, rng) * e8.basis(), e8.scale());
    EnumerationOptions opts;
    opts.reduce = seed % 2 == 0;
    EXPECT_EQ(count_by_norm(moved, Rat(6), t, opts).histogram, reference) << "seed " << seed;
  }
}

TEST(Enumeration, ThreadCountDoesNotChangeResults) {
  const ScaledLattice l = C::make_laminated(20);
  EnumerationOptions one, three;
  one.list = three.list = true;
  three.threads = 3;
  RatVector t(24, Rat(0));
  t[4] = Rat(1, 2);
  const EnumerationReport a = count_by_norm(l, Rat(5), t, one);
  const EnumerationReport b = count_by_norm(l, Rat(5), t, three);
  EXPECT_EQ(a.histogram, b.histogram);
  EXPECT_EQ(a.vectors, b.vectors);
  EXPECT_EQ(coset_min_norm(l, t, one).value, coset_min_norm(l, t, three).value);
}

TEST(Enumeration, CapIsEnforced) {
  EnumerationOptions opts;
  opts.cap = 100;
  EXPECT_THROW(count_by_norm(C::make_root(C::RootFamily::E, 8), Rat(2), {}, opts), EnumerationCapError);
  opts.cap = 240;
  EXPECT_NO_THROW(count_by_norm(C::make_root(C::RootFamily::E, 8), Rat(2), {}, opts));
}

TEST(Enumeration, CapReadsEnvironment) {
  ::setenv("ANTIPODE_ENUM_CAP", "1234", 1);
  EXPECT_EQ(default_enumeration_cap(), 1234u);
  ::setenv("ANTIPODE_ENUM_CAP", "junk", 1);
  EXPECT_EQ(default_enumeration_cap(), 10'000'000u);
  ::unsetenv("ANTIPODE_ENUM_CAP");
  EXPECT_EQ(default_enumeration_cap(), 10'000'000u);
}

TEST(Enumeration, ClassifyFirstBlock) {
  const ScaledLattice z2(RatMatrix::identity(2), Rat(1));
  EnumerationOptions opts;
  opts.list = true;
  const auto classes = classify_first_block(count_by_norm(z2, Rat(1), {}, opts), 1);
  EXPECT_EQ(classes.size(), 3u);
  EXPECT_EQ(classes.at(RatVector{Rat(0)}), 2u);
  EXPECT_THROW(classify_first_block(count_by_norm(z2, Rat(1)), 1), InputError);
  EXPECT_TRUE(classify_first_block(EnumerationReport{}, 3).empty());
}

TEST(Enumeration, ReportRoundTrip) {
  const ScaledLattice z2(RatMatrix::identity(2), Rat(1, 3));
  const EnumerationReport r = count_by_norm(z2, Rat(2), {Rat(1, 2), Rat(0)}, {}, "z2");
  std::stringstream ss;
  write_report(ss, r);
  EXPECT_EQ(ss.str().substr(0, 9), "lattice z");
  const EnumerationReport back = read_report(ss);
  EXPECT_EQ(back.lattice, "z2");
  EXPECT_EQ(back.offset, r.offset);
  EXPECT_EQ(back.bound, Rat(2));
  EXPECT_EQ(back.histogram, r.histogram);
  std::istringstream bad("lattice x\noffset 0\nbound 1\nnorm 1\n");
  EXPECT_THROW(read_report(bad), InputError);
}
