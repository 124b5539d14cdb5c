#pragma once

// Mirror symmetry of the cyclic-shift listing and the transition structure
// between consecutive permutations.
//
// Consecutive permutations factor as p_a = reverse(A) B and p_{a+1} = B A.
// The weight e_n(a) = |A| is one more than the number of low code digits of a
// that sit at their maximum, i.e. the carry depth of a -> a+1. The sequence
// of weights over a = 0..n!-2 is the varpi-ruler sequence E_n.

#include <algorithm>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "varpi/codec.hpp"
#include "varpi/orbits.hpp"
#include "varpi/permutation.hpp"
#include "varpi/pi_radix.hpp"

namespace varpi {

/// (n!-1) - a; the rank of the mirror image of p_a.
inline Rank mirror_rank(std::size_t n, const Rank& a) {
  if (n == 0) throw order_error("order must be >= 1");
  const Rank total = factorial(n);
  if (a < 0 || a >= total) throw range_error("rank " + a.str() + " is outside Z_" + std::to_string(n) + "!");
  return total - 1 - a;
}

inline constexpr std::size_t kDefaultWordCap = 9;

/// Concatenation of p_0, ..., p_{n!-1}. Throws invariant_error if the word is
/// not its own reverse.
inline std::vector<Symbol> palindrome_word(std::size_t n, std::size_t cap = kDefaultWordCap) {
  if (n > cap) throw resource_error("palindrome word for n=" + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  std::vector<Symbol> word;
  word.reserve(n * to_u64(factorial(n)));
  for (const auto& rp : generate_all(n)) word.insert(word.end(), rp.perm.begin(), rp.perm.end());
  if (!std::equal(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(word.size() / 2), word.rbegin())) {
    throw invariant_error("concatenated listing is not a palindrome for n=" + std::to_string(n));
  }
  return word;
}

struct SplitAB {
  std::vector<Symbol> a;  ///< k+1 symbols, the tail of p_{a+1}
  std::vector<Symbol> b;  ///< n-k-1 symbols, the head of p_{a+1}
};

namespace detail {

inline PiNumber successor_code(std::size_t n, const Rank& a) {
  if (n < 2) throw no_successor_error("S_1 has a single permutation");
  PiNumber code = encode(n, a);
  const auto t = max_terminal_level(code);
  if (t.global_last) throw no_successor_error("rank " + a.str() + " is the last rank of S_" + std::to_string(n));
  return code;
}

}  // namespace detail

/// e_n(a) from the code digits alone.
inline std::size_t transition_weight(std::size_t n, const Rank& a) {
  return max_terminal_level(detail::successor_code(n, a)).level + 1;
}

/// Factors p_a and p_{a+1} and checks both factorizations symbol by symbol.
inline SplitAB split_ab(std::size_t n, const Rank& a) {
  const PiNumber code = detail::successor_code(n, a);
  const std::size_t k = max_terminal_level(code).level;
  const Permutation p = perm_from_code(code);
  const Permutation next = perm_from_code(increment(code));
  SplitAB s;
  s.b.assign(next.begin(), next.begin() + static_cast<std::ptrdiff_t>(n - k - 1));
  s.a.assign(next.begin() + static_cast<std::ptrdiff_t>(n - k - 1), next.end());

  std::vector<Symbol> rev_a_b(s.a.rbegin(), s.a.rend());
  rev_a_b.insert(rev_a_b.end(), s.b.begin(), s.b.end());
  if (!std::equal(rev_a_b.begin(), rev_a_b.end(), p.begin())) {
    throw invariant_error("p_a != reverse(A)B at rank " + a.str());
  }
  return s;
}

struct RulerSequence {
  std::size_t n = 0;
  std::vector<std::uint8_t> weights;

  bool is_palindrome() const { return std::equal(weights.begin(), weights.end(), weights.rbegin()); }

  /// Direct count of each weight value.
  std::map<std::size_t, std::uint64_t> histogram() const {
    std::map<std::size_t, std::uint64_t> h;
    for (auto w : weights) ++h[w];
    return h;
  }

  std::uint64_t sum() const {
    std::uint64_t s = 0;
    for (auto w : weights) s += w;
    return s;
  }
};

inline constexpr std::size_t kDefaultRulerCap = 10;

/// Weights e_n(a) for a in [first, stop). Each weight depends only on its own
/// rank, so disjoint chunks can be computed independently.
inline std::vector<std::uint8_t> ruler_chunk(std::size_t n, const Rank& first, const Rank& stop) {
  if (n < 2) return {};
  const Rank last_transition = factorial(n) - 1;
  if (first < 0 || stop < first || stop > last_transition) {
    throw range_error("ruler chunk [" + first.str() + ", " + stop.str() + ") outside 0.." + last_transition.str());
  }
  std::vector<std::uint8_t> out;
  if (first == stop) return out;
  const Rank count = stop - first;
  out.reserve(count.convert_to<std::size_t>());
  PiNumber code = encode(n, first);
  for (Rank r = 0; r < count; ++r) out.push_back(static_cast<std::uint8_t>(increment_in_place(code)));
  return out;
}

/// The n!-1 transition weights; the three counting laws are checked before returning.
inline RulerSequence ruler_sequence(std::size_t n, std::size_t cap = kDefaultRulerCap) {
  if (n == 0) throw order_error("order must be >= 1");
  if (n > cap) throw resource_error("ruler sequence for n=" + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  RulerSequence e{n, n < 2 ? std::vector<std::uint8_t>{} : ruler_chunk(n, 0, factorial(n) - 1)};
  if (!e.is_palindrome()) throw invariant_error("ruler sequence is not a palindrome");
  const auto h = e.histogram();
  for (std::size_t k = 1; k < n; ++k) {
    auto it = h.find(k);
    const std::uint64_t got = it == h.end() ? 0 : it->second;
    if (Rank(got) != factorial(n - k) * (n - k)) throw invariant_error("weight " + std::to_string(k) + " count mismatch");
  }
  std::uint64_t w = 0;
  for (std::size_t i = 1; i <= n; ++i) w += to_u64(factorial(i));
  if (e.sum() != w - n) throw invariant_error("ruler sum mismatch");
  return e;
}

/// W_n = 1! + 2! + ... + n! - n.
inline Rank total_weight(std::size_t n) {
  Rank w = 0;
  for (std::size_t i = 1; i <= n; ++i) w += factorial(i);
  return w - n;
}

struct WeightHistogram {
  std::size_t n = 0;
  std::map<std::size_t, Rank> counts;  ///< weight k -> (n-k)(n-k)!
  Rank total;                          ///< sum of k * counts[k]
};

/// Counts of each weight from the closed form, without enumerating.
inline WeightHistogram weight_histogram(std::size_t n) {
  if (n < 2) throw order_error("weight histogram needs n >= 2");
  WeightHistogram h{n, {}, 0};
  for (std::size_t k = 1; k < n; ++k) {
    h.counts[k] = factorial(n - k) * (n - k);
    h.total += h.counts[k] * k;
  }
  return h;
}

/// Run-length rendering: runs longer than one are written "d^j", tokens space-separated.
inline std::string to_run_length(std::span<const std::uint8_t> weights) {
  std::string out;
  for (std::size_t i = 0; i < weights.size();) {
    std::size_t j = i;
    while (j < weights.size() && weights[j] == weights[i]) ++j;
    if (!out.empty()) out += ' ';
    out += std::to_string(weights[i]);
    if (j - i > 1) out += '^' + std::to_string(j - i);
    i = j;
  }
  return out;
}

}  // namespace varpi
