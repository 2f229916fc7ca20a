#include <gtest/gtest.h>

#include <random>

#include "satgenus/braid.hpp"
#include "support/reference.hpp"

namespace satgenus {
namespace {

using testing::ref_half_twist;
using testing::ref_strand_endpoints;
using testing::random_word;

std::vector<int> letters(const BraidWord& w) { return {w.letters().begin(), w.letters().end()}; }

TEST(ParseBraid, ReadsLettersInOrder) {
  EXPECT_EQ(parse_braid("1 2 1", 3), BraidWord(3, {1, 2, 1}));
  EXPECT_EQ(parse_braid("", 5), BraidWord::identity(5));
  EXPECT_EQ(parse_braid("-1 -1", 2), BraidWord(2, {-1, -1}));
}

TEST(ParseBraid, ExponentSuffix) {
  EXPECT_EQ(parse_braid("1^-3", 2), BraidWord(2, {-1, -1, -1}));
  EXPECT_EQ(parse_braid("-2^2 1^0 1", 3), BraidWord(3, {-2, -2, 1}));
  EXPECT_EQ(parse_braid("  2\t1\n", 3), BraidWord(3, {2, 1}));
}

TEST(ParseBraid, RejectsBadTokens) {
  EXPECT_THROW(parse_braid("1 x 2", 3), ParseError);
  EXPECT_THROW(parse_braid("0", 3), ParseError);
  EXPECT_THROW(parse_braid("1^", 3), ParseError);
  EXPECT_THROW(parse_braid("1^2^3", 3), ParseError);
  try {
    parse_braid("1 2 -3", 3);
    FAIL() << "expected an out-of-range error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 4u);
    EXPECT_NE(std::string(e.what()).find("'-3'"), std::string::npos);
  }
}

TEST(ParseBraid, FormatRoundTrips) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto w = random_word(rng, 6, 20);
    EXPECT_EQ(parse_braid(format_braid(w), 6), w);
  }
}

TEST(BraidWord, RejectsInvalidLetters) {
  EXPECT_THROW(BraidWord(3, {3}), ValidationError);
  EXPECT_THROW(BraidWord(3, {0}), ValidationError);
  EXPECT_THROW(BraidWord(0), ValidationError);
  EXPECT_NO_THROW(BraidWord(1));
}

TEST(Concat, NoAutomaticReduction) {
  EXPECT_EQ(concat(BraidWord(2, {1}), BraidWord(2, {-1})), BraidWord(2, {1, -1}));
  EXPECT_EQ(concat(BraidWord::identity(3), BraidWord(3, {2, -1})), BraidWord(3, {2, -1}));
  EXPECT_EQ(concat(BraidWord(3, {1, 2}), BraidWord(3, {2, 1})), BraidWord(3, {1, 2, 2, 1}));
  EXPECT_THROW(concat(BraidWord(2), BraidWord(3)), ValidationError);
}

TEST(Inverse, ReversesAndNegates) {
  EXPECT_EQ(inverse(BraidWord(3, {1, -2})), BraidWord(3, {2, -1}));
  EXPECT_EQ(inverse(BraidWord::identity(4)), BraidWord::identity(4));
  std::mt19937 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const auto w = random_word(rng, 5, 15);
    EXPECT_EQ(inverse(inverse(w)), w);
  }
}

TEST(HalfTwist, MatchesRecursion) {
  EXPECT_EQ(half_twist(2), BraidWord(2, {1}));
  EXPECT_EQ(half_twist(3), BraidWord(3, {1, 2, 1}));
  EXPECT_EQ(half_twist(0), BraidWord::identity(1));
  EXPECT_EQ(half_twist(1), BraidWord::identity(1));
  for (int n = 0; n <= 12; ++n) {
    EXPECT_EQ(letters(half_twist(n)), ref_half_twist(n)) << n;
    EXPECT_EQ(exponent_sum(half_twist(n)), n * (n - 1) / 2) << n;
  }
  EXPECT_THROW(half_twist(-1), ValidationError);
}

TEST(CableGenerator, FourLetterWord) {
  EXPECT_EQ(letters(cable_generator(1)), (std::vector<int>{2, 1, 3, 2}));
  EXPECT_EQ(letters(cable_generator(2)), (std::vector<int>{4, 3, 5, 4}));
  EXPECT_EQ(cable_generator(2, 8).strands(), 8);
  for (int j = 1; j < 6; ++j) EXPECT_EQ(exponent_sum(cable_generator(j)), 4);
  EXPECT_THROW(cable_generator(0), ValidationError);
  EXPECT_THROW(cable_generator(2, 5), ValidationError);
}

TEST(ExponentSum, Basics) {
  EXPECT_EQ(exponent_sum(BraidWord::identity(4)), 0);
  EXPECT_EQ(exponent_sum(BraidWord(3, {1, -2, -2, 1, 1})), 1);
  // Δ_4² · σ_3 σ_2 σ_1
  const auto w = concat(full_twist(4), BraidWord(4, {3, 2, 1}));
  EXPECT_EQ(exponent_sum(w), 15);
}

TEST(OrevkovK1, ExponentSumAndConnectedness) {
  EXPECT_EQ(orevkov_k1(2), BraidWord(2, {1, 1, 1}));
  for (int n = 2; n <= 10; ++n) {
    EXPECT_EQ(exponent_sum(orevkov_k1(n)), n * n - 1) << n;
    EXPECT_EQ(closure_component_count(orevkov_k1(n)), 1u) << n;
  }
  EXPECT_THROW(orevkov_k1(1), ValidationError);
}

TEST(OrevkovK2, ExponentSum) {
  for (int n = 2; n <= 8; ++n) {
    for (int N : {0, 1, 2, 7, 40}) {
      EXPECT_EQ(exponent_sum(orevkov_k2(n, N)), 4L * n * n + 2 * n - 4 - N);
      EXPECT_EQ(orevkov_k2(n, N).strands(), 2 * n);
    }
  }
  const auto w = orevkov_k2(3, 0);
  EXPECT_TRUE(std::all_of(w.letters().begin(), w.letters().end(), [](int l) { return l > 0; }));
  EXPECT_THROW(orevkov_k2(1, 1), ValidationError);
  EXPECT_THROW(orevkov_k2(3, -1), ValidationError);
}

// The closure is connected exactly for odd N; even N gives two components.
// Values computed independently by strand tracking.
TEST(OrevkovK2, ComponentsDependOnTwistParity) {
  for (int n = 2; n <= 6; ++n) {
    for (int N = 0; N <= 5; ++N) {
      const auto w = orevkov_k2(n, N);
      const auto ref = testing::ref_cycle_lengths(ref_strand_endpoints(letters(w), w.strands()));
      EXPECT_EQ(closure_component_count(w), ref.size());
      EXPECT_EQ(closure_component_count(w), N % 2 == 1 ? 1u : 2u) << "n=" << n << " N=" << N;
    }
  }
}

TEST(PermutationOf, AgreesWithStrandTracking) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + trial % 8;
    const auto w = random_word(rng, n, 25);
    EXPECT_EQ(testing::images_of(permutation_of(w)), ref_strand_endpoints(letters(w), n));
  }
}

TEST(PermutationOf, NamedFamilies) {
  EXPECT_EQ(permutation_of(BraidWord(2, {1})), Permutation::transposition(2, 1, 2));
  for (int n = 2; n <= 8; ++n) {
    EXPECT_TRUE(permutation_of(full_twist(n)).is_identity()) << n;
    std::vector<int> descending;
    for (int i = n - 1; i >= 1; --i) descending.push_back(i);
    EXPECT_EQ(cycle_type(permutation_of(BraidWord(n, descending))).parts, std::vector<std::size_t>{std::size_t(n)});
  }
}

TEST(ClosureComponents, Counts) {
  for (int n = 2; n <= 8; ++n) {
    EXPECT_EQ(closure_component_count(full_twist(n)), std::size_t(n));
    EXPECT_EQ(closure_component_count(BraidWord::identity(n)), std::size_t(n));
  }
  std::mt19937 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const auto w = random_word(rng, 6, 12);
    const auto c = closure_component_count(w);
    EXPECT_GE(c, 1u);
    EXPECT_LE(c, 6u);
    EXPECT_EQ(c == 6u, permutation_of(w).is_identity());
  }
}

TEST(ExpandBands, Definition) {
  EXPECT_EQ(expand_bands({3, {Band{BraidWord::identity(3), 2}}}), BraidWord(3, {2}));
  EXPECT_EQ(expand_bands({3, {Band{BraidWord(3, {1}), 2}}}), BraidWord(3, {-1, 2, 1}));
  EXPECT_THROW(expand_bands({3, {Band{BraidWord(4, {1}), 2}}}), ValidationError);
  EXPECT_THROW(expand_bands({3, {Band{BraidWord(3), 3}}}), ValidationError);
}

TEST(ExpandBands, ExponentSumIsBandCount) {
  std::mt19937 rng(21);
  std::uniform_int_distribution<int> count(0, 8);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 6;
    std::uniform_int_distribution<int> index(1, n - 1);
    BandFactorization f{n, {}};
    const int bands = count(rng);
    for (int b = 0; b < bands; ++b) f.bands.push_back(Band{random_word(rng, n, 10), index(rng)});
    EXPECT_EQ(exponent_sum(expand_bands(f)), bands);
  }
}

TEST(FreeReduce, CancelsPairs) {
  EXPECT_EQ(free_reduce(BraidWord(2, {1, -1})), BraidWord::identity(2));
  EXPECT_EQ(free_reduce(BraidWord(3, {1, 2, -2, -1})), BraidWord::identity(3));
  EXPECT_EQ(free_reduce(BraidWord(3, {1, 2, 1})), BraidWord(3, {1, 2, 1}));
  std::mt19937 rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    const auto w = random_word(rng, 4, 30);
    const auto r = free_reduce(w);
    EXPECT_EQ(exponent_sum(r), exponent_sum(w));
    EXPECT_EQ(permutation_of(r), permutation_of(w));
    EXPECT_LE(r.size(), w.size());
    EXPECT_EQ(free_reduce(r), r);
    EXPECT_TRUE(free_reduce(concat(w, inverse(w))).empty());
  }
}

TEST(BraidProperties, Homomorphisms) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + trial % 7;
    const auto a = random_word(rng, n, 12);
    const auto b = random_word(rng, n, 12);
    EXPECT_EQ(exponent_sum(concat(a, b)), exponent_sum(a) + exponent_sum(b));
    EXPECT_EQ(permutation_of(concat(a, b)), compose(permutation_of(a), permutation_of(b)));
    EXPECT_EQ(exponent_sum(inverse(a)), -exponent_sum(a));
    EXPECT_EQ(permutation_of(inverse(a)), inverse(permutation_of(a)));
  }
}

TEST(BraidProperties, BraidRelationAtPermutationLevel) {
  for (int n = 3; n <= 8; ++n) {
    for (int i = 1; i + 1 <= n - 1; ++i) {
      EXPECT_EQ(permutation_of(BraidWord(n, {i, i + 1, i})), permutation_of(BraidWord(n, {i + 1, i, i + 1})));
    }
  }
}

}  // namespace
}  // namespace satgenus
