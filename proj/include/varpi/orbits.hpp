#pragma once

// k-orbits of S_n. A rank a splits as a = beta * varpi_{n,k} + gamma where
// beta is the rank of the base permutation in S_{n-k} (the high digits of a)
// and gamma the offset inside the orbit (the k low digits).

#include <string>
#include <vector>

#include "varpi/codec.hpp"
#include "varpi/errors.hpp"
#include "varpi/pi_radix.hpp"
#include "varpi/rank.hpp"

namespace varpi {

/// The k-orbit O_{n,k}(q_beta). Level k = n-1 denotes the whole of S_n with beta = 0.
struct OrbitRef {
  std::size_t n = 0;
  std::size_t k = 0;
  Rank beta = 0;

  OrbitRef(std::size_t n_, std::size_t k_, Rank beta_) : n(n_), k(k_), beta(std::move(beta_)) {
    if (n < 1) throw order_error("order must be >= 1");
    if (k > n - 1) throw level_error("orbit level " + std::to_string(k) + " outside 0.." + std::to_string(n - 1));
    if (beta < 0 || beta >= factorial(n - k)) {
      throw range_error("base rank " + beta.str() + " outside Z_" + std::to_string(n - k) + "!");
    }
  }

  /// varpi_{n,k} = n!/(n-k)!.
  Rank size() const { return falling_factorial(n, k); }
  Rank first() const { return beta * size(); }
  Rank last() const { return first() + size() - 1; }

  /// q_beta, the permutation of S_{n-k} the orbit is generated from.
  Permutation base() const { return rank_to_perm(n - k, beta); }

  friend bool operator==(const OrbitRef&, const OrbitRef&) = default;
};

struct CodeSplit {
  Rank beta;
  Rank gamma;
  friend bool operator==(const CodeSplit&, const CodeSplit&) = default;
};

namespace detail {

inline void require_level(std::size_t n, std::size_t k) {
  if (n < 2 || k > n - 2) {
    throw level_error("level k=" + std::to_string(k) + " outside 0.." + (n >= 2 ? std::to_string(n - 2) : "-"));
  }
}

inline void require_rank(std::size_t n, const Rank& a) {
  if (a < 0 || a >= factorial(n)) throw range_error("rank " + a.str() + " is outside Z_" + std::to_string(n) + "!");
}

}  // namespace detail

/// a = beta * varpi_{n,k} + gamma, 0 <= gamma < varpi_{n,k}, for 0 <= k <= n-2.
inline CodeSplit split_code(const Rank& a, std::size_t n, std::size_t k) {
  detail::require_level(n, k);
  detail::require_rank(n, a);
  CodeSplit s;
  boost::multiprecision::divide_qr(a, falling_factorial(n, k), s.beta, s.gamma);
  return s;
}

/// The orbit containing rank a at level k.
inline OrbitRef orbit_of(const Rank& a, std::size_t n, std::size_t k) {
  return OrbitRef(n, k, split_code(a, n, k).beta);
}

/// Member ranks of an orbit in ascending order.
inline std::vector<Rank> orbit_members(const OrbitRef& o) {
  std::vector<Rank> out;
  const Rank count = o.size();
  if (count > 100'000'000) throw resource_error("orbit has " + count.str() + " members");
  out.reserve(count.convert_to<std::size_t>());
  for (Rank r = o.first(); r <= o.last(); ++r) out.push_back(r);
  return out;
}

/// Digit alpha_k of a, the index of a's k-orbit inside its (k+1)-orbit.
inline Digit orbit_rank_digit(const Rank& a, std::size_t n, std::size_t k) {
  detail::require_level(n, k);
  return encode(n, a)[k];
}

struct TerminalLevel {
  std::size_t level = 0;
  /// Set only for a = n!-1, which ends every orbit and has no successor.
  bool global_last = false;
  friend bool operator==(const TerminalLevel&, const TerminalLevel&) = default;
};

/// Number of leading digits alpha_0, alpha_1, ... sitting at their maximum n-i-1.
inline TerminalLevel max_terminal_level(const PiNumber& code) {
  std::size_t k = 0;
  while (k < code.size() && code[k] == code.radix(k) - 1) ++k;
  if (k == code.size()) return {code.size() == 0 ? 0 : code.size() - 1, true};
  return {k, false};
}

/// Largest k such that p_a closes a k-orbit without closing the enclosing (k+1)-orbit.
inline TerminalLevel max_terminal_level(const Rank& a, std::size_t n) {
  return max_terminal_level(encode(n, a));
}

}  // namespace varpi
