#pragma once

// The varpi number system on Z_{n!}: the mixed-radix system whose digit i
// lies in Z_{n-i} and whose base elements are the falling factorials
// varpi_{n,i} = n(n-1)...(n-i+1).

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "varpi/errors.hpp"
#include "varpi/rank.hpp"

namespace varpi {

using Digit = std::uint32_t;

/// Base elements varpi_{n,0..n-2} of the system on Z_{n!}.
struct PiBase {
  std::size_t n = 0;
  std::vector<Rank> elements;

  const Rank& operator[](std::size_t i) const { return elements[i]; }
  std::size_t size() const { return elements.size(); }
};

/// Builds the base by the recurrence varpi_{i+1} = (n-i) varpi_i.
inline PiBase pi_base(std::size_t n) {
  if (n < 2) throw order_error("the varpi system is defined for n >= 2, got n=" + std::to_string(n));
  PiBase base{n, {}};
  base.elements.reserve(n - 1);
  Rank e = 1;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    base.elements.push_back(e);
    e *= (n - i);
  }
  return base;
}

/// Element of Z_{n!} held as little-endian digits alpha_0..alpha_{n-2}.
///
/// Order n = 1 is admitted as the trivial element (no digits, value 0) so that
/// higher layers can treat S_1 uniformly; encode() itself requires n >= 2.
class PiNumber {
 public:
  PiNumber(std::size_t n, std::vector<Digit> digits) : n_(n), digits_(std::move(digits)) {
    if (n_ < 1) throw order_error("order must be >= 1");
    if (digits_.size() != n_ - 1) {
      throw invariant_error("a code of order " + std::to_string(n_) + " has " + std::to_string(n_ - 1) +
                            " digits, got " + std::to_string(digits_.size()));
    }
    for (std::size_t i = 0; i < digits_.size(); ++i) {
      if (digits_[i] >= radix(i)) {
        throw invariant_error("digit " + std::to_string(i) + " = " + std::to_string(digits_[i]) +
                              " is outside Z_" + std::to_string(radix(i)));
      }
    }
  }

  static PiNumber zero(std::size_t n) { return PiNumber(n, std::vector<Digit>(n == 0 ? 0 : n - 1, 0)); }

  std::size_t order() const { return n_; }
  const std::vector<Digit>& digits() const { return digits_; }
  Digit operator[](std::size_t i) const { return digits_[i]; }
  std::size_t size() const { return digits_.size(); }

  /// Radix of digit i, n - i.
  Digit radix(std::size_t i) const { return static_cast<Digit>(n_ - i); }

  bool is_zero() const {
    for (Digit d : digits_)
      if (d != 0) return false;
    return true;
  }

  friend bool operator==(const PiNumber&, const PiNumber&) = default;

 private:
  friend std::size_t increment_in_place(PiNumber&);
  std::size_t n_;
  std::vector<Digit> digits_;
};

namespace detail {

inline void require_order(std::size_t n) {
  if (n < 2) throw order_error("the varpi system is defined for n >= 2, got n=" + std::to_string(n));
}

inline void require_same_order(const PiNumber& x, const PiNumber& y) {
  if (x.order() != y.order()) {
    throw order_error("operands have different orders " + std::to_string(x.order()) + " and " +
                      std::to_string(y.order()));
  }
}

}  // namespace detail

/// Integer -> digits by repeated mod/div with divisors n, n-1, ..., 2.
inline PiNumber encode(std::size_t n, const Rank& a) {
  detail::require_order(n);
  if (a < 0 || a >= factorial(n)) {
    throw range_error("rank " + a.str() + " is outside Z_" + std::to_string(n) + "!");
  }
  std::vector<Digit> digits(n - 1);
  if (n <= kFastOrder) {
    auto rest = a.convert_to<std::uint64_t>();
    for (std::size_t i = 0; i + 1 < n; ++i) {
      digits[i] = static_cast<Digit>(rest % (n - i));
      rest /= (n - i);
    }
  } else {
    Rank rest = a;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      Rank q, r;
      boost::multiprecision::divide_qr(rest, Rank(n - i), q, r);
      digits[i] = r.convert_to<Digit>();
      rest = std::move(q);
    }
  }
  return PiNumber(n, std::move(digits));
}

/// Digits -> integer, sum of alpha_i varpi_{n,i}.
inline Rank decode(const PiNumber& x) {
  const std::size_t n = x.order();
  if (n <= kFastOrder) {
    std::uint64_t value = 0, base = 1;
    for (std::size_t i = 0; i < x.size(); ++i) {
      value += x[i] * base;
      base *= (n - i);
    }
    return Rank(value);
  }
  Rank value = 0, base = 1;
  for (std::size_t i = 0; i < x.size(); ++i) {
    value += base * x[i];
    base *= (n - i);
  }
  return value;
}

/// Adds one in place and returns the carry depth: the number of digits that
/// changed. A full wrap from n!-1 to 0 changes all n-1 digits.
inline std::size_t increment_in_place(PiNumber& x) {
  for (std::size_t i = 0; i < x.digits_.size(); ++i) {
    if (++x.digits_[i] < x.radix(i)) return i + 1;
    x.digits_[i] = 0;
  }
  return x.digits_.size();
}

inline PiNumber increment(const PiNumber& x) {
  PiNumber y = x;
  increment_in_place(y);
  return y;
}

/// Digitwise sum with carries moving towards alpha_{n-2}; the carry out of the
/// last digit is dropped, which is reduction mod n!.
inline PiNumber add(const PiNumber& x, const PiNumber& y) {
  detail::require_same_order(x, y);
  std::vector<Digit> digits(x.size());
  Digit carry = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    Digit s = x[i] + y[i] + carry;
    carry = s >= x.radix(i) ? 1 : 0;
    digits[i] = s - carry * x.radix(i);
  }
  return PiNumber(x.order(), std::move(digits));
}

/// The digitwise complement y_i = (n-i-1) - x_i, so that x + y = -1.
inline PiNumber complement(const PiNumber& x) {
  std::vector<Digit> digits(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) digits[i] = x.radix(i) - 1 - x[i];
  return PiNumber(x.order(), std::move(digits));
}

/// Product in Z_{n!}, computed through the integer value.
inline PiNumber multiply(const PiNumber& x, const PiNumber& y) {
  detail::require_same_order(x, y);
  detail::require_order(x.order());
  return encode(x.order(), (decode(x) * decode(y)) % factorial(x.order()));
}

// Rendering -----------------------------------------------------------------

/// Big-endian digits alpha_{n-2}...alpha_0; dot-separated once a radix exceeds 10.
inline std::string to_text(const PiNumber& x, bool machine_suffix = false) {
  const bool dotted = x.order() > 10;
  std::string out;
  for (std::size_t i = x.size(); i-- > 0;) {
    out += std::to_string(x[i]);
    if (dotted && i != 0) out += '.';
  }
  if (machine_suffix) out += "_w";
  return out;
}

/// Inverse of to_text; accepts either form and an optional "_w" suffix.
inline PiNumber parse_code(std::size_t n, std::string_view text) {
  if (text.size() >= 2 && text.substr(text.size() - 2) == "_w") text.remove_suffix(2);
  std::vector<Digit> big_endian;
  if (text.find('.') != std::string_view::npos) {
    std::size_t start = 0;
    while (start <= text.size()) {
      auto end = text.find('.', start);
      if (end == std::string_view::npos) end = text.size();
      auto field = text.substr(start, end - start);
      if (field.empty()) throw format_error("empty digit in code '" + std::string(text) + "'");
      Digit d = 0;
      for (char c : field) {
        if (c < '0' || c > '9') throw format_error("bad digit in code '" + std::string(text) + "'");
        d = d * 10 + static_cast<Digit>(c - '0');
      }
      big_endian.push_back(d);
      start = end + 1;
    }
  } else {
    for (char c : text) {
      if (c < '0' || c > '9') throw format_error("bad digit in code '" + std::string(text) + "'");
      big_endian.push_back(static_cast<Digit>(c - '0'));
    }
  }
  return PiNumber(n, std::vector<Digit>(big_endian.rbegin(), big_endian.rend()));
}

// Identities of the base elements ---------------------------------------------

struct IdentityCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct IdentityReport {
  std::size_t n = 0;
  std::vector<IdentityCheck> checks;

  bool all_passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return !checks.empty();
  }
};

/// Checks, over the natural integers, the product rule varpi_{n,i+k} =
/// varpi_{n-k,i} varpi_{n,k}, the partial sums of (n-i-1) varpi_{n,i}, the full
/// sum n!-1, and the factorial-system identity sum i*i! = n!-1.
inline IdentityReport check_identities(std::size_t n) {
  detail::require_order(n);
  IdentityReport report{n, {}};
  const PiBase base = pi_base(n);
  const Rank n_fact = factorial(n);

  {
    IdentityCheck c{"product_rule", true, ""};
    for (std::size_t k = 0; k + 2 <= n && c.passed; ++k) {
      const PiBase shifted = pi_base(n - k);
      for (std::size_t i = 0; i + k + 2 <= n; ++i) {
        if (base[i + k] != shifted[i] * base[k]) {
          c.passed = false;
          c.detail = "fails at i=" + std::to_string(i) + ", k=" + std::to_string(k);
          break;
        }
      }
    }
    report.checks.push_back(std::move(c));
  }
  {
    IdentityCheck c{"partial_sums", true, ""};
    Rank sum = 0;
    for (std::size_t k = 1; k + 2 <= n; ++k) {
      sum += base[k - 1] * (n - (k - 1) - 1);
      if (sum != base[k] - 1) {
        c.passed = false;
        c.detail = "fails at k=" + std::to_string(k) + ": " + sum.str() + " != " + Rank(base[k] - 1).str();
        break;
      }
    }
    report.checks.push_back(std::move(c));
  }
  {
    Rank sum = 0;
    for (std::size_t i = 0; i + 1 < n; ++i) sum += base[i] * (n - i - 1);
    IdentityCheck c{"full_sum", sum == n_fact - 1, ""};
    if (!c.passed) c.detail = sum.str() + " != " + Rank(n_fact - 1).str();
    report.checks.push_back(std::move(c));
  }
  {
    Rank sum = 0;
    for (std::size_t i = 1; i < n; ++i) sum += factorial(i) * i;
    IdentityCheck c{"factorial_system", sum == n_fact - 1, ""};
    if (!c.passed) c.detail = sum.str() + " != " + Rank(n_fact - 1).str();
    report.checks.push_back(std::move(c));
  }
  return report;
}

}  // namespace varpi
