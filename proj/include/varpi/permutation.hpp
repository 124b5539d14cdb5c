#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "varpi/errors.hpp"

namespace varpi {

using Symbol = std::uint32_t;

class CyclicShiftStream;

/// A position counted from the right: the last symbol sits at 0, the first at n-1.
struct Position {
  std::size_t value = 0;
  friend bool operator==(const Position&, const Position&) = default;
};

/// An ordered arrangement of the symbols 1..n, n >= 1.
class Permutation {
 public:
  explicit Permutation(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) { validate(); }
  Permutation(std::initializer_list<Symbol> symbols) : symbols_(symbols) { validate(); }

  /// The identity (1 2 ... n).
  static Permutation identity(std::size_t n) {
    std::vector<Symbol> s(n);
    for (std::size_t i = 0; i < n; ++i) s[i] = static_cast<Symbol>(i + 1);
    return Permutation(std::move(s));
  }

  std::size_t size() const { return symbols_.size(); }
  Symbol operator[](std::size_t i) const { return symbols_[i]; }
  std::span<const Symbol> symbols() const { return symbols_; }
  auto begin() const { return symbols_.begin(); }
  auto end() const { return symbols_.end(); }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  struct unchecked_t {};
  Permutation(unchecked_t, std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {}

  void validate() const {
    if (symbols_.empty()) throw invariant_error("a permutation has at least one symbol");
    std::vector<bool> seen(symbols_.size() + 1, false);
    for (Symbol s : symbols_) {
      if (s < 1 || s > symbols_.size()) {
        throw invariant_error("symbol " + std::to_string(s) + " is outside 1.." + std::to_string(symbols_.size()));
      }
      if (seen[s]) throw invariant_error("symbol " + std::to_string(s) + " occurs twice");
      seen[s] = true;
    }
  }

  friend Permutation insert_right(const Permutation&);
  friend Permutation circular(std::size_t, std::size_t, const Permutation&);
  friend Permutation mirror(const Permutation&);
  friend Permutation strip_top(const Permutation&);
  friend class CyclicShiftStream;

  std::vector<Symbol> symbols_;
};

/// The injection S_{n-1} -> S_n appending symbol n on the right.
inline Permutation insert_right(const Permutation& q) {
  std::vector<Symbol> s(q.symbols_);
  s.push_back(static_cast<Symbol>(q.size() + 1));
  return Permutation(Permutation::unchecked_t{}, std::move(s));
}

/// C^k on m symbols: rotate left k times. k is reduced mod m.
inline Permutation circular(std::size_t m, std::size_t k, const Permutation& p) {
  if (p.size() != m) {
    throw order_error("circular: expected " + std::to_string(m) + " symbols, got " + std::to_string(p.size()));
  }
  std::vector<Symbol> s(p.symbols_);
  std::rotate(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(k % m), s.end());
  return Permutation(Permutation::unchecked_t{}, std::move(s));
}

/// S^k = C^k o insert_right, taking S_{n-1} to S_n.
inline Permutation cyclic_shift(std::size_t k, const Permutation& q) {
  return circular(q.size() + 1, k, insert_right(q));
}

/// Position of the top symbol m, counted from the right. This is the exponent
/// k with p = S^k(q).
inline Position position_of_top(std::size_t m, const Permutation& p) {
  if (p.size() != m) {
    throw order_error("position_of_top: expected " + std::to_string(m) + " symbols, got " + std::to_string(p.size()));
  }
  auto it = std::find(p.begin(), p.end(), static_cast<Symbol>(m));
  if (it == p.end()) throw invariant_error("symbol " + std::to_string(m) + " is absent");
  return Position{m - 1 - static_cast<std::size_t>(it - p.begin())};
}

/// Drops the top symbol n of a permutation ending with it.
inline Permutation strip_top(const Permutation& p) {
  if (p.size() < 2 || p.symbols_.back() != p.size()) {
    throw invariant_error("strip_top: the top symbol is not in last position");
  }
  std::vector<Symbol> s(p.symbols_.begin(), p.symbols_.end() - 1);
  return Permutation(Permutation::unchecked_t{}, std::move(s));
}

/// Reversal of the symbol sequence.
inline Permutation mirror(const Permutation& p) {
  std::vector<Symbol> s(p.symbols_.rbegin(), p.symbols_.rend());
  return Permutation(Permutation::unchecked_t{}, std::move(s));
}

// Text form -----------------------------------------------------------------

/// Concatenated digits for n <= 9 ("51324"), comma-separated above.
inline std::string to_text(const Permutation& p) {
  std::string out;
  const bool commas = p.size() > 9;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (commas && i != 0) out += ',';
    out += std::to_string(p[i]);
  }
  return out;
}

/// Same rendering for a raw symbol word (no separators when every symbol is a single digit).
inline std::string word_to_text(std::span<const Symbol> word, bool commas) {
  std::string out;
  out.reserve(word.size() * (commas ? 3 : 1));
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (commas && i != 0) out += ',';
    out += std::to_string(word[i]);
  }
  return out;
}

/// Accepts "4321" (n <= 9 only) or "4,3,2,1".
inline Permutation parse_permutation(std::string_view text) {
  std::vector<Symbol> s;
  if (text.find(',') != std::string_view::npos) {
    std::size_t start = 0;
    while (start <= text.size()) {
      auto end = text.find(',', start);
      if (end == std::string_view::npos) end = text.size();
      auto field = text.substr(start, end - start);
      if (field.empty()) throw format_error("empty symbol in '" + std::string(text) + "'");
      Symbol v = 0;
      for (char c : field) {
        if (c < '0' || c > '9') throw format_error("bad symbol in '" + std::string(text) + "'");
        v = v * 10 + static_cast<Symbol>(c - '0');
      }
      s.push_back(v);
      start = end + 1;
    }
  } else {
    if (text.size() > 9) {
      throw format_error("concatenated form is ambiguous for more than 9 symbols; use commas");
    }
    for (char c : text) {
      if (c < '0' || c > '9') throw format_error("bad symbol in '" + std::string(text) + "'");
      s.push_back(static_cast<Symbol>(c - '0'));
    }
  }
  return Permutation(std::move(s));
}

}  // namespace varpi
