#pragma once

// Rank <-> permutation for S_n listed in cyclic-shift order. The code of a
// permutation is the sequence of shift exponents used while inserting the
// symbols 2, 3, ..., n; read as a varpi number it equals the rank.

#include <iterator>
#include <vector>

#include "varpi/errors.hpp"
#include "varpi/permutation.hpp"
#include "varpi/pi_radix.hpp"
#include "varpi/rank.hpp"

namespace varpi {

struct RankedPermutation {
  Rank rank;
  PiNumber code;
  Permutation perm;

  friend bool operator==(const RankedPermutation&, const RankedPermutation&) = default;
};

/// Runs the generation scheme from (1): digit alpha_i is the exponent used when
/// inserting symbol n-i, starting from alpha_{n-2}.
inline Permutation perm_from_code(const PiNumber& code) {
  Permutation p{1};
  for (std::size_t i = code.size(); i-- > 0;) p = cyclic_shift(code[i], p);
  return p;
}

inline Permutation rank_to_perm(std::size_t n, const Rank& a) {
  if (n == 0) throw order_error("order must be >= 1");
  if (n == 1) {
    if (a != 0) throw range_error("rank " + a.str() + " is outside Z_1!");
    return Permutation{1};
  }
  return perm_from_code(encode(n, a));
}

/// Reads the exponents back off p: the top symbol's right-counted position is
/// the next digit; undo that rotation and drop the symbol.
inline RankedPermutation perm_to_rank(const Permutation& p) {
  const std::size_t n = p.size();
  if (n == 1) return {0, PiNumber(1, {}), p};
  std::vector<Digit> digits(n - 1);
  Permutation current = p;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const std::size_t m = n - i;
    const auto pos = position_of_top(m, current).value;
    digits[i] = static_cast<Digit>(pos);
    current = strip_top(circular(m, m - pos, current));
  }
  PiNumber code(n, std::move(digits));
  Rank rank = decode(code);
  return {std::move(rank), std::move(code), p};
}

enum class GenerationMode {
  incremental,  ///< rebuild only the levels touched by the carry
  naive,        ///< rank_to_perm for every rank
};

/// Pull-based stream of p_first, ..., p_{stop-1} in rank order.
class CyclicShiftStream {
 public:
  explicit CyclicShiftStream(std::size_t n, GenerationMode mode = GenerationMode::incremental)
      : CyclicShiftStream(n, 0, factorial(n), mode) {}

  CyclicShiftStream(std::size_t n, const Rank& first, const Rank& stop,
                    GenerationMode mode = GenerationMode::incremental)
      : n_(n), mode_(mode), stop_(stop), current_{first, PiNumber::zero(n == 0 ? 1 : n), Permutation{1}} {
    if (n == 0) throw order_error("order must be >= 1");
    const Rank total = factorial(n);
    if (first < 0 || first > total) throw range_error("start rank " + first.str() + " outside 0.." + total.str());
    if (stop < first || stop > total) throw range_error("stop rank " + stop.str() + " outside " + first.str() + ".." + total.str());
    if (first < stop) load(first);
  }

  bool done() const { return current_.rank >= stop_; }
  const RankedPermutation& current() const { return current_; }
  std::size_t order() const { return n_; }

  /// Moves to the next rank. Returns the carry depth (number of code digits
  /// that changed), which is zero for n = 1.
  std::size_t advance() {
    ++current_.rank;
    if (done()) return 0;
    if (mode_ == GenerationMode::naive) {
      current_ = perm_to_rank(rank_to_perm(n_, current_.rank));
      return 0;
    }
    const std::size_t depth = increment_in_place(current_.code);
    // Digits 0..depth-1 changed; they drive levels n-depth+1..n.
    for (std::size_t m = n_ - depth + 1; m <= n_; ++m) rebuild_level(m);
    current_.perm.symbols_ = levels_[n_];
    return depth;
  }

  struct sentinel {};
  class iterator {
   public:
    using value_type = RankedPermutation;
    using difference_type = std::ptrdiff_t;
    iterator() = default;
    explicit iterator(CyclicShiftStream* s) : s_(s) {}
    const RankedPermutation& operator*() const { return s_->current(); }
    const RankedPermutation* operator->() const { return &s_->current(); }
    iterator& operator++() {
      s_->advance();
      return *this;
    }
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& it, sentinel) { return it.s_->done(); }

   private:
    CyclicShiftStream* s_ = nullptr;
  };

  iterator begin() { return iterator(this); }
  sentinel end() const { return {}; }

 private:
  void load(const Rank& first) {
    if (n_ == 1) {
      current_ = {first, PiNumber(1, {}), Permutation{1}};
      return;
    }
    current_.code = encode(n_, first);
    levels_.assign(n_ + 1, {});
    levels_[1] = {1};
    for (std::size_t m = 2; m <= n_; ++m) rebuild_level(m);
    current_.perm = Permutation(levels_[n_]);
  }

  void rebuild_level(std::size_t m) {
    auto& level = levels_[m];
    level = levels_[m - 1];
    level.push_back(static_cast<Symbol>(m));
    std::rotate(level.begin(), level.begin() + current_.code[n_ - m], level.end());
  }

  std::size_t n_;
  GenerationMode mode_;
  Rank stop_;
  RankedPermutation current_;
  std::vector<std::vector<Symbol>> levels_;  // levels_[m] is the intermediate permutation on m symbols
};

/// All of S_n in rank order.
inline CyclicShiftStream generate_all(std::size_t n, GenerationMode mode = GenerationMode::incremental) {
  return CyclicShiftStream(n, mode);
}

/// Largest n accepted by oracle_generate.
inline constexpr std::size_t kOracleCap = 9;

/// Independent listing of S_n built from the orbit recursion alone:
/// list(S_m) = concat over q in list(S_{m-1}) of [C^k(q m) for k = 0..m-1].
inline std::vector<Permutation> oracle_generate(std::size_t n) {
  if (n == 0) throw order_error("order must be >= 1");
  if (n > kOracleCap) throw resource_error("oracle_generate materializes n!; n=" + std::to_string(n) + " exceeds cap " + std::to_string(kOracleCap));
  std::vector<std::vector<Symbol>> list{{1}};
  for (Symbol m = 2; m <= n; ++m) {
    std::vector<std::vector<Symbol>> next;
    next.reserve(list.size() * m);
    for (const auto& q : list) {
      std::vector<Symbol> extended = q;
      extended.push_back(m);
      for (Symbol k = 0; k < m; ++k) {
        next.push_back(extended);
        std::rotate(extended.begin(), extended.begin() + 1, extended.end());
      }
    }
    list = std::move(next);
  }
  std::vector<Permutation> out;
  out.reserve(list.size());
  for (auto& s : list) out.emplace_back(std::move(s));
  return out;
}

}  // namespace varpi
