#include <gtest/gtest.h>

#include <sstream>

#include "antipode/codes.hpp"
#include "antipode/errors.hpp"

using namespace antipode;

TEST(Codes, GolayWeightDistribution) {
  const LinearCode g = golay24();
  EXPECT_EQ(g.length(), 24u);
  EXPECT_EQ(g.dimension(), 12u);
  const std::map<std::size_t, std::uint64_t> want{{0, 1}, {8, 759}, {12, 2576}, {16, 759}, {24, 1}};
  EXPECT_EQ(weight_distribution(g), want);
  EXPECT_TRUE(is_self_orthogonal(g));
}

TEST(Codes, TernaryCodesAreSelfDual) {
  for (const LinearCode& c : {ternary_qr48(), pless_symmetry48()}) {
    EXPECT_EQ(c.field_size(), 3);
    EXPECT_EQ(c.length(), 48u);
    EXPECT_EQ(c.dimension(), 24u);
    EXPECT_EQ(rank_mod(3, c.generator()), 24u);
    EXPECT_TRUE(is_self_orthogonal(c));
    for (const auto& row : c.generator()) EXPECT_EQ(weight(row) % 3, 0u);
  }
}

TEST(Codes, FullWeightWordsHaveOneParityOfTwos) {
  for (const LinearCode& c : {ternary_qr48(), pless_symmetry48()}) {
    const FullWeightCensus census = full_weight_census(c);
    EXPECT_GT(census.even_twos + census.odd_twos, 0u);
    EXPECT_TRUE(census.even_twos == 0 || census.odd_twos == 0);
  }
}

TEST(Codes, EncodeAndContains) {
  const LinearCode g = golay24();
  std::vector<std::uint8_t> msg(12, 0);
  msg[0] = msg[3] = msg[7] = 1;
  const Word w = encode(g, msg);
  EXPECT_TRUE(contains(g, w));
  Word flipped = w;
  flipped[5] ^= 1;
  EXPECT_FALSE(contains(g, flipped));
  EXPECT_THROW(contains(g, Word(23, 0)), InputError);
  EXPECT_THROW(contains(g, Word(24, 2)), InputError);
}

TEST(Codes, SystematicFormSpansTheCode) {
  const LinearCode c = pless_symmetry48();
  const SystematicForm s = systematic_form(c);
  ASSERT_EQ(s.rows.size(), 24u);
  for (std::size_t i = 0; i < 24; ++i) {
    EXPECT_TRUE(contains(c, s.rows[i]));
    for (std::size_t j = 0; j < 24; ++j) EXPECT_EQ(s.rows[i][s.info_set[j]], i == j ? 1 : 0);
  }
}

TEST(Codes, FileRoundTrip) {
  const LinearCode c = ternary_qr48();
  std::stringstream ss;
  write_code(ss, c);
  const LinearCode back = read_code(ss);
  EXPECT_EQ(back.field_size(), 3);
  EXPECT_EQ(back.generator(), c.generator());
  std::istringstream bad("2 4 1\n0120\n");
  EXPECT_THROW(read_code(bad), InputError);
}

TEST(Codes, RejectsDependentGenerators) {
  EXPECT_THROW(LinearCode(2, {Word{1, 1, 0}, Word{1, 1, 0}}), InputError);
  EXPECT_THROW(LinearCode(5, {Word{1}}), InputError);
}
