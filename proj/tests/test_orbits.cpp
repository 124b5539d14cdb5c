#include <gtest/gtest.h>

#include "varpi/orbits.hpp"
#include "varpi/symmetry.hpp"

using namespace varpi;

TEST(SplitCode, Examples) {
  EXPECT_EQ(split_code(17, 4, 1), (CodeSplit{4, 1}));
  EXPECT_EQ(rank_to_perm(4, 17), cyclic_shift(1, rank_to_perm(3, 4)));
  EXPECT_EQ(split_code(93, 5, 0), (CodeSplit{93, 0}));
  EXPECT_EQ(split_code(84, 5, 2), (CodeSplit{4, 4}));
}

TEST(SplitCode, DigitsSplitHighLow) {
  for (std::size_t n = 2; n <= 6; ++n) {
    const auto total = factorial_u64(n);
    for (std::size_t k = 0; k + 2 <= n; ++k)
      for (std::uint64_t a = 0; a < total; ++a) {
        const auto s = split_code(a, n, k);
        const auto code = encode(n, a);
        ASSERT_EQ(s.beta * falling_factorial(n, k) + s.gamma, a);
        // beta's digits are alpha_k..alpha_{n-2}; gamma's are alpha_0..alpha_{k-1}.
        if (n - k >= 2) {
          const auto beta_code = encode(n - k, s.beta);
          for (std::size_t i = 0; i < beta_code.size(); ++i) ASSERT_EQ(beta_code[i], code[i + k]);
        } else {
          ASSERT_EQ(s.beta, 0);
        }
        Rank gamma = 0, base = 1;
        for (std::size_t i = 0; i < k; ++i) {
          gamma += base * code[i];
          base *= (n - i);
        }
        ASSERT_EQ(s.gamma, gamma);
      }
  }
}

TEST(SplitCode, Errors) {
  EXPECT_THROW(split_code(0, 4, 3), level_error);
  EXPECT_THROW(split_code(24, 4, 1), range_error);
}

TEST(OrbitMembers, Examples) {
  EXPECT_EQ(orbit_members(OrbitRef(4, 1, 4)), (std::vector<Rank>{16, 17, 18, 19}));
  EXPECT_EQ(orbit_members(OrbitRef(5, 0, 42)), (std::vector<Rank>{42}));
  const auto second = orbit_members(OrbitRef(4, 2, 1));
  ASSERT_EQ(second.size(), 12u);
  EXPECT_EQ(second.front(), 12);
  EXPECT_EQ(second.back(), 23);
  EXPECT_EQ(OrbitRef(4, 1, 4).base(), (Permutation{1, 3, 2}));
}

TEST(OrbitRef, WholeSetLevel) {
  const OrbitRef all(5, 4, 0);
  EXPECT_EQ(all.size(), 120);
  EXPECT_EQ(all.first(), 0);
  EXPECT_EQ(all.last(), 119);
  EXPECT_EQ(all.base(), Permutation{1});
  EXPECT_THROW(OrbitRef(5, 4, 1), range_error);
  EXPECT_THROW(OrbitRef(5, 5, 0), level_error);
}

TEST(OrbitRankDigit, Examples) {
  EXPECT_EQ(orbit_rank_digit(17, 4, 2), 1u);
  EXPECT_EQ(orbit_rank_digit(0, 6, 3), 0u);
  EXPECT_EQ(orbit_rank_digit(7, 4, 1), 1u);
  EXPECT_THROW(orbit_rank_digit(7, 4, 3), level_error);
}

TEST(OrbitRankDigit, IndexesSubOrbitInsideParent) {
  for (std::size_t n = 3; n <= 6; ++n) {
    const auto total = factorial_u64(n);
    for (std::size_t k = 0; k + 2 <= n; ++k)
      for (std::uint64_t a = 0; a < total; ++a) {
        const auto inner = split_code(a, n, k).beta;
        const Rank parent_beta = k + 3 <= n ? split_code(a, n, k + 1).beta : Rank(0);
        const Rank index = inner - parent_beta * (n - k);
        ASSERT_EQ(Rank(orbit_rank_digit(a, n, k)), index);
      }
  }
}

TEST(MaxTerminalLevel, Examples) {
  EXPECT_EQ(max_terminal_level(11, 4), (TerminalLevel{2, false}));
  EXPECT_EQ(max_terminal_level(5, 4), (TerminalLevel{0, false}));
  EXPECT_EQ(max_terminal_level(3, 4), (TerminalLevel{1, false}));
  EXPECT_EQ(max_terminal_level(23, 4), (TerminalLevel{2, true}));
}

TEST(Orbits, PartitionExhaustive) {
  for (std::size_t n = 2; n <= 7; ++n) {
    const auto total = factorial_u64(n);
    for (std::size_t k = 0; k + 2 <= n; ++k) {
      std::vector<int> hits(total, 0);
      const auto bases = factorial_u64(n - k);
      for (std::uint64_t beta = 0; beta < bases; ++beta)
        for (const auto& r : orbit_members(OrbitRef(n, k, beta))) ++hits[to_u64(r)];
      for (int h : hits) ASSERT_EQ(h, 1);
    }
  }
}

TEST(Orbits, BasePermutationRegeneratesMembers) {
  for (std::size_t n = 2; n <= 6; ++n) {
    const auto total = factorial_u64(n);
    for (std::size_t k = 0; k + 2 <= n; ++k)
      for (std::uint64_t a = 0; a < total; ++a) {
        const auto s = split_code(a, n, k);
        const auto code = encode(n, a);
        Permutation p = rank_to_perm(n - k, s.beta);
        for (std::size_t i = k; i-- > 0;) p = cyclic_shift(code[i], p);
        ASSERT_EQ(p, rank_to_perm(n, a));
      }
  }
}

TEST(Orbits, TerminalLevelPlusOneIsTransitionWeight) {
  for (std::size_t n = 2; n <= 7; ++n) {
    const auto total = factorial_u64(n);
    for (std::uint64_t a = 0; a + 1 < total; ++a) {
      const auto t = max_terminal_level(a, n);
      ASSERT_FALSE(t.global_last);
      ASSERT_EQ(t.level + 1, split_ab(n, a).a.size());
    }
  }
}
