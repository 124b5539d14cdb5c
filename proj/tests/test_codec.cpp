#include <gtest/gtest.h>

#include <boost/random/mersenne_twister.hpp>
#include <boost/random/uniform_int_distribution.hpp>

#include "golden_tables.hpp"
#include "varpi/codec.hpp"

using namespace varpi;

namespace {

// S_n listed straight from the generation rule with index arithmetic:
// S^k q places (q n)[(i + k) mod n] at index i.
std::vector<std::vector<Symbol>> brute_force_listing(std::size_t n) {
  if (n == 1) return {{1}};
  std::vector<std::vector<Symbol>> out;
  for (const auto& q : brute_force_listing(n - 1)) {
    std::vector<Symbol> tilde = q;
    tilde.push_back(static_cast<Symbol>(n));
    for (std::size_t k = 0; k < n; ++k) {
      std::vector<Symbol> p(n);
      for (std::size_t i = 0; i < n; ++i) p[i] = tilde[(i + k) % n];
      out.push_back(p);
    }
  }
  return out;
}

}  // namespace

TEST(RankToPerm, Examples) {
  EXPECT_EQ(rank_to_perm(5, 84), (Permutation{5, 1, 3, 2, 4}));
  EXPECT_EQ(rank_to_perm(6, 0), Permutation::identity(6));
  EXPECT_EQ(rank_to_perm(4, 17), (Permutation{3, 2, 4, 1}));
  EXPECT_EQ(rank_to_perm(4, 23), (Permutation{4, 3, 2, 1}));
  EXPECT_EQ(rank_to_perm(1, 0), Permutation{1});
  EXPECT_THROW(rank_to_perm(4, 24), range_error);
  EXPECT_THROW(rank_to_perm(1, 1), range_error);
}

TEST(PermToRank, Examples) {
  const auto p84 = perm_to_rank(Permutation{5, 1, 3, 2, 4});
  EXPECT_EQ(p84.rank, 84);
  EXPECT_EQ(to_text(p84.code), "1104");
  EXPECT_EQ(perm_to_rank(Permutation::identity(7)).rank, 0);
  EXPECT_EQ(perm_to_rank(Permutation{4, 2, 3, 1, 5}).rank, 35);
  EXPECT_EQ(perm_to_rank(Permutation{1}).rank, 0);
}

TEST(Codec, ListingS4MatchesReferenceTable) {
  for (const auto& row : golden::kListingS4) {
    const auto p = rank_to_perm(4, row.rank);
    EXPECT_EQ(to_text(p), row.perm) << row.rank;
    const auto back = perm_to_rank(p);
    EXPECT_EQ(back.rank, row.rank);
    EXPECT_EQ(back.code.digits(), (std::vector<Digit>{row.alpha0, row.alpha1, row.alpha2}));
  }
}

TEST(Codec, BijectionExhaustive) {
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto total = factorial_u64(n);
    for (std::uint64_t a = 0; a < total; ++a) ASSERT_EQ(perm_to_rank(rank_to_perm(n, a)).rank, a);
  }
}

TEST(Codec, BijectionRandom) {
  boost::random::mt19937_64 gen(5);
  for (std::size_t n : {9u, 12u, 16u, 20u, 24u}) {
    boost::random::uniform_int_distribution<Rank> dist(0, factorial(n) - 1);
    for (int t = 0; t < 2'000; ++t) {
      const Rank a = dist(gen);
      const auto rp = perm_to_rank(rank_to_perm(n, a));
      ASSERT_EQ(rp.rank, a);
      ASSERT_EQ(rp.code, encode(n, a));
    }
  }
}

TEST(Codec, PrefixOrbitLaw) {
  for (std::size_t n = 2; n <= 7; ++n) {
    const auto total = factorial_u64(n);
    for (std::uint64_t a = 0; a < total; ++a)
      ASSERT_EQ(rank_to_perm(n, a), cyclic_shift(a % n, rank_to_perm(n - 1, a / n)));
  }
}

TEST(GenerateAll, SmallOrders) {
  std::vector<std::string> listed;
  for (const auto& rp : generate_all(3)) listed.push_back(to_text(rp.perm));
  EXPECT_EQ(listed, (std::vector<std::string>{"123", "231", "312", "213", "132", "321"}));
  std::vector<std::string> bf;
  for (const auto& s : brute_force_listing(3)) bf.push_back(to_text(Permutation(s)));
  EXPECT_EQ(listed, bf);

  std::size_t count = 0;
  for (const auto& rp : generate_all(1)) {
    EXPECT_EQ(rp.perm, Permutation{1});
    ++count;
  }
  EXPECT_EQ(count, 1u);
}

TEST(GenerateAll, ListingOrderS4) {
  std::size_t i = 0;
  for (const auto& rp : generate_all(4)) {
    ASSERT_LT(i, 24u);
    EXPECT_EQ(to_text(rp.perm), golden::kListingS4[i].perm);
    EXPECT_EQ(rp.rank, golden::kListingS4[i].rank);
    ++i;
  }
  EXPECT_EQ(i, 24u);
}

TEST(GenerateAll, IncrementalMatchesNaiveAndCodes) {
  for (std::size_t n = 1; n <= 7; ++n) {
    CyclicShiftStream fast(n), slow(n, GenerationMode::naive);
    auto it = slow.begin();
    for (const auto& rp : fast) {
      ASSERT_FALSE(it == slow.end());
      ASSERT_EQ(rp, *it);
      if (n >= 2) {
        ASSERT_EQ(rp.code, encode(n, rp.rank));
      }
      ++it;
    }
    EXPECT_TRUE(it == slow.end());
  }
}

TEST(GenerateAll, EquivalentToOracle) {
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto oracle = oracle_generate(n);
    std::size_t i = 0;
    for (const auto& rp : generate_all(n)) {
      ASSERT_EQ(rp.perm, oracle[i]) << "n=" << n << " rank " << i;
      ++i;
    }
    EXPECT_EQ(i, oracle.size());
  }
}

TEST(GenerateAll, CarryDepthReported) {
  CyclicShiftStream s(4);
  std::vector<std::size_t> depths;
  while (true) {
    const auto d = s.advance();
    if (s.done()) break;
    depths.push_back(d);
  }
  EXPECT_EQ(depths, (std::vector<std::size_t>{1, 1, 1, 2, 1, 1, 1, 2, 1, 1, 1, 3, 1, 1, 1, 2, 1, 1, 1, 2, 1, 1, 1}));
}

TEST(GenerateAll, ResumableSlice) {
  CyclicShiftStream slice(6, 250, 260);
  Rank expected = 250;
  for (const auto& rp : slice) {
    EXPECT_EQ(rp.rank, expected);
    EXPECT_EQ(rp.perm, rank_to_perm(6, expected));
    ++expected;
  }
  EXPECT_EQ(expected, 260);
  CyclicShiftStream empty(5, 7, 7);
  EXPECT_TRUE(empty.done());
  EXPECT_THROW(CyclicShiftStream(4, 0, 25), range_error);
  EXPECT_THROW(CyclicShiftStream(4, 5, 3), range_error);
}

TEST(GenerateAll, DeepSliceAboveFastOrder) {
  const Rank start = factorial(22) - 5;
  CyclicShiftStream s(22, start, factorial(22));
  std::size_t count = 0;
  for (const auto& rp : s) {
    EXPECT_EQ(rp.perm, rank_to_perm(22, rp.rank));
    ++count;
  }
  EXPECT_EQ(count, 5u);
}

TEST(OracleGenerate, ExamplesAndCap) {
  EXPECT_EQ(oracle_generate(2), (std::vector<Permutation>{Permutation{1, 2}, Permutation{2, 1}}));
  EXPECT_EQ(oracle_generate(1), (std::vector<Permutation>{Permutation{1}}));
  const auto four = oracle_generate(4);
  for (std::size_t i = 0; i < 24; ++i) EXPECT_EQ(to_text(four[i]), golden::kListingS4[i].perm);
  EXPECT_THROW(oracle_generate(10), resource_error);
}
