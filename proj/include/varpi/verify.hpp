#pragma once

// Runs the structural laws of the cyclic-shift listing for one order n and
// collects pass / fail / skip results. Each check has its own size cap and is
// skipped with a notice above it.

#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <boost/random/mersenne_twister.hpp>
#include <boost/random/uniform_int_distribution.hpp>

#include "varpi/codec.hpp"
#include "varpi/orbits.hpp"
#include "varpi/overlap_graph.hpp"
#include "varpi/pi_radix.hpp"
#include "varpi/symmetry.hpp"

namespace varpi {

enum class CheckStatus { pass, fail, skip };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "PASS";
    case CheckStatus::fail: return "FAIL";
    case CheckStatus::skip: return "SKIP";
  }
  return "?";
}

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::skip;
  std::string detail;
};

struct VerifyReport {
  std::size_t n = 0;
  std::vector<CheckResult> results;

  bool any_failed() const {
    for (const auto& r : results)
      if (r.status == CheckStatus::fail) return true;
    return false;
  }
  const CheckResult* find(std::string_view name) const {
    for (const auto& r : results)
      if (r.name == name) return &r;
    return nullptr;
  }
};

struct VerifyCaps {
  std::size_t word = kDefaultWordCap;
  std::size_t graph = kDefaultGraphCap;
  std::uint64_t budget = kDefaultSearchBudget;
  std::uint64_t random_samples = 10'000;
  std::uint64_t seed = 20240601;
};

inline const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names{"identities", "roundtrip", "arithmetic", "oracle",   "mirror",   "orbits",
                                              "ruler",      "palindrome", "degrees",   "canonical", "minpath", "superperm"};
  return names;
}

namespace detail {

struct Fail {
  std::string why;
};

inline CheckResult skip(std::string name, std::string why) { return {std::move(name), CheckStatus::skip, std::move(why)}; }

inline Rank random_rank(boost::random::mt19937_64& gen, std::size_t n) {
  boost::random::uniform_int_distribution<Rank> dist(0, factorial(n) - 1);
  return dist(gen);
}

inline CheckResult check_roundtrip(std::size_t n, const VerifyCaps& caps) {
  if (n < 2) return skip("roundtrip", "needs n >= 2");
  if (n <= 8) {
    std::set<std::vector<Digit>> seen;
    const auto total = to_u64(factorial(n));
    for (std::uint64_t a = 0; a < total; ++a) {
      const PiNumber code = encode(n, a);
      if (decode(code) != a) throw Fail{"decode(encode(" + std::to_string(a) + ")) differs"};
      if (!seen.insert(code.digits()).second) throw Fail{"two ranks share code " + to_text(code)};
      const auto back = perm_to_rank(rank_to_perm(n, a));
      if (back.rank != a || back.code != code) throw Fail{"perm_to_rank(rank_to_perm(" + std::to_string(a) + ")) differs"};
    }
    return {"roundtrip", CheckStatus::pass, "exhaustive over " + std::to_string(total) + " ranks"};
  }
  boost::random::mt19937_64 gen(caps.seed);
  for (std::uint64_t i = 0; i < caps.random_samples; ++i) {
    const Rank a = random_rank(gen, n);
    if (decode(encode(n, a)) != a) throw Fail{"decode(encode(" + a.str() + ")) differs"};
    if (perm_to_rank(rank_to_perm(n, a)).rank != a) throw Fail{"perm_to_rank(rank_to_perm(" + a.str() + ")) differs"};
  }
  return {"roundtrip", CheckStatus::pass, std::to_string(caps.random_samples) + " random ranks"};
}

inline CheckResult check_arithmetic(std::size_t n, const VerifyCaps& caps) {
  if (n < 2) return skip("arithmetic", "needs n >= 2");
  const Rank modulus = factorial(n);
  auto check_pair = [&](const Rank& a, const Rank& b) {
    const PiNumber x = encode(n, a), y = encode(n, b);
    if (decode(add(x, y)) != (a + b) % modulus) throw Fail{"add " + a.str() + " + " + b.str()};
    if (decode(multiply(x, y)) != (a * b) % modulus) throw Fail{"multiply " + a.str() + " * " + b.str()};
  };
  auto check_single = [&](const Rank& a) {
    const PiNumber x = encode(n, a);
    if (decode(x) + decode(complement(x)) != modulus - 1) throw Fail{"complement of " + a.str()};
    if (decode(increment(x)) != (a + 1) % modulus) throw Fail{"increment of " + a.str()};
  };
  if (n <= 5) {
    const auto total = to_u64(modulus);
    for (std::uint64_t a = 0; a < total; ++a) {
      check_single(a);
      for (std::uint64_t b = 0; b < total; ++b) check_pair(a, b);
    }
    return {"arithmetic", CheckStatus::pass, "exhaustive over all pairs"};
  }
  boost::random::mt19937_64 gen(caps.seed + 1);
  const std::uint64_t samples = std::min<std::uint64_t>(caps.random_samples, 2'000);
  for (std::uint64_t i = 0; i < samples; ++i) {
    check_single(random_rank(gen, n));
    check_pair(random_rank(gen, n), random_rank(gen, n));
  }
  return {"arithmetic", CheckStatus::pass, std::to_string(samples) + " random pairs"};
}

inline CheckResult check_oracle(std::size_t n) {
  if (n > 8) return skip("oracle", "materialized oracle limited to n <= 8");
  const auto expected = oracle_generate(n);
  std::size_t i = 0;
  for (const auto& rp : generate_all(n)) {
    if (i >= expected.size() || rp.perm != expected[i]) throw Fail{"mismatch at rank " + std::to_string(i)};
    ++i;
  }
  if (i != expected.size()) throw Fail{"stream length " + std::to_string(i)};
  return {"oracle", CheckStatus::pass, std::to_string(i) + " permutations match"};
}

inline CheckResult check_mirror(std::size_t n) {
  if (n < 2) return skip("mirror", "needs n >= 2");
  if (n > 8) return skip("mirror", "exhaustive check limited to n <= 8");
  for (const auto& rp : generate_all(n)) {
    const Rank m = mirror_rank(n, rp.rank);
    if (rank_to_perm(n, m) != mirror(rp.perm)) throw Fail{"mirror of rank " + rp.rank.str()};
    if (encode(n, m) != complement(rp.code)) throw Fail{"code of mirror of rank " + rp.rank.str()};
  }
  return {"mirror", CheckStatus::pass, "all ranks"};
}

inline CheckResult check_orbits(std::size_t n) {
  if (n < 2) return skip("orbits", "needs n >= 2");
  if (n > 7) return skip("orbits", "exhaustive check limited to n <= 7");
  const auto total = to_u64(factorial(n));
  for (std::size_t k = 0; k + 2 <= n; ++k) {
    std::vector<char> hit(total, 0);
    const auto bases = to_u64(factorial(n - k));
    for (std::uint64_t beta = 0; beta < bases; ++beta) {
      OrbitRef o(n, k, beta);
      for (std::uint64_t r = to_u64(o.first()); r <= to_u64(o.last()); ++r) {
        if (hit[r]++) throw Fail{"rank " + std::to_string(r) + " in two " + std::to_string(k) + "-orbits"};
      }
    }
    for (char h : hit)
      if (!h) throw Fail{std::to_string(k) + "-orbits do not cover S_n"};
  }
  for (std::uint64_t a = 0; a + 1 < total; ++a) {
    const auto s = split_ab(n, a);
    if (max_terminal_level(a, n).level + 1 != s.a.size()) throw Fail{"terminal level vs |A| at rank " + std::to_string(a)};
  }
  return {"orbits", CheckStatus::pass, "k-orbit partition and terminal levels"};
}

inline CheckResult check_ruler(std::size_t n) {
  if (n < 2) return skip("ruler", "needs n >= 2");
  if (n > kDefaultRulerCap) return skip("ruler", "ruler sequence limited to n <= " + std::to_string(kDefaultRulerCap));
  RulerSequence e;
  try {
    e = ruler_sequence(n);
  } catch (const invariant_error& ex) {
    throw Fail{ex.what()};
  }
  const auto formula = weight_histogram(n);
  const auto counted = e.histogram();
  for (const auto& [k, c] : formula.counts) {
    auto it = counted.find(k);
    if (it == counted.end() || Rank(it->second) != c) throw Fail{"histogram differs at weight " + std::to_string(k)};
  }
  if (formula.total != total_weight(n) || Rank(e.sum()) != total_weight(n)) throw Fail{"sum differs from W_n"};
  return {"ruler", CheckStatus::pass, "palindrome, histogram, W_" + std::to_string(n) + " = " + total_weight(n).str()};
}

inline CheckResult check_palindrome(std::size_t n, const VerifyCaps& caps) {
  if (n > caps.word) return skip("palindrome", "word cap " + std::to_string(caps.word));
  std::size_t length = 0;
  try {
    length = palindrome_word(n, caps.word).size();
  } catch (const invariant_error& ex) {
    throw Fail{ex.what()};
  }
  return {"palindrome", CheckStatus::pass, "length " + std::to_string(length)};
}

inline CheckResult check_degrees(std::size_t n, const VerifyCaps& caps) {
  if (n < 2) return skip("degrees", "needs n >= 2");
  if (n > caps.graph) return skip("degrees", "graph cap " + std::to_string(caps.graph));
  const auto g = build(n, caps.graph);
  const auto d = degree_profile(g);
  if (!d.holds()) throw Fail{d.first_violation};
  // Overlap uniqueness by plain scan of every f.
  if (n <= 6) {
    for (Vertex u = 0; u < g.vertex_count(); ++u)
      for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (u == v) continue;
        const auto& p = g.vertex(u);
        const auto& q = g.vertex(v);
        std::size_t matches = 0;
        for (std::size_t f = 1; f < n; ++f)
          if (std::equal(p.begin() + static_cast<std::ptrdiff_t>(f), p.end(), q.begin())) ++matches;
        if (matches > 1) throw Fail{"two overlaps between " + std::to_string(u) + " and " + std::to_string(v)};
      }
  }
  return {"degrees", CheckStatus::pass, "L = " + std::to_string(d.expected_degree) + " regular"};
}

inline CheckResult check_canonical(std::size_t n) {
  if (n < 2) return skip("canonical", "needs n >= 2");
  if (n > 9) return skip("canonical", "canonical path check limited to n <= 9");
  PathCertificate c;
  try {
    c = canonical_path(n);
  } catch (const invariant_error& ex) {
    throw Fail{ex.what()};
  }
  if (Rank(c.total) != total_weight(n)) throw Fail{"path weight " + std::to_string(c.total)};
  const auto cycle = close_cycle(c);
  if (cycle.total != c.total + n - 1) throw Fail{"cycle weight " + std::to_string(cycle.total)};
  return {"canonical", CheckStatus::pass, "path " + std::to_string(c.total) + ", cycle " + std::to_string(cycle.total)};
}

inline CheckResult check_minpath(std::size_t n, const VerifyCaps& caps) {
  if (n < 2) return skip("minpath", "needs n >= 2");
  if (n > 4) {
    std::string note = "n=" + std::to_string(n) + " is outside exact-search scope";
    if (n <= 9) note += "; canonical path weight " + std::to_string(canonical_path(n).total) + " validated";
    return skip("minpath", note);
  }
  const auto c = min_hamiltonian_path(build(n), caps.budget);
  if (!c.optimal) throw Fail{"search budget exceeded"};
  if (Rank(c.total) != total_weight(n)) throw Fail{"minimal weight " + std::to_string(c.total) + " != W_n"};
  return {"minpath", CheckStatus::pass,
          "optimal " + std::to_string(c.total) + " = W_" + std::to_string(n) + " (" +
              std::to_string(c.stats.nodes_expanded) + " nodes)"};
}

inline CheckResult check_superperm(std::size_t n) {
  if (n > 7) return skip("superperm", "window coverage check limited to n <= 7");
  const auto word = compressed_word(n);
  if (Rank(word.size()) != total_weight(n) + n) throw Fail{"length " + std::to_string(word.size())};
  std::set<std::vector<Symbol>> windows;
  for (std::size_t i = 0; i + n <= word.size(); ++i) {
    std::vector<Symbol> w(word.begin() + static_cast<std::ptrdiff_t>(i), word.begin() + static_cast<std::ptrdiff_t>(i + n));
    std::vector<Symbol> sorted = w;
    std::sort(sorted.begin(), sorted.end());
    bool is_perm = true;
    for (std::size_t j = 0; j < n; ++j) is_perm &= sorted[j] == j + 1;
    if (is_perm) windows.insert(std::move(w));
  }
  if (Rank(windows.size()) != factorial(n)) throw Fail{"covers " + std::to_string(windows.size()) + " permutations"};
  return {"superperm", CheckStatus::pass, "length " + std::to_string(word.size()) + ", all permutations covered"};
}

}  // namespace detail

/// Runs the selected checks ("all" or a list of check_names()).
inline VerifyReport verify_suite(std::size_t n, const std::vector<std::string>& selection, const VerifyCaps& caps = {}) {
  if (n == 0) throw order_error("order must be >= 1");
  bool all = selection.empty();
  for (const auto& s : selection) {
    if (s == "all") {
      all = true;
    } else if (std::find(check_names().begin(), check_names().end(), s) == check_names().end()) {
      throw format_error("unknown check '" + s + "'");
    }
  }
  auto wanted = [&](const std::string& name) {
    return all || std::find(selection.begin(), selection.end(), name) != selection.end();
  };

  VerifyReport report{n, {}};
  auto run = [&](const std::string& name, auto&& fn) {
    if (!wanted(name)) return;
    try {
      report.results.push_back(fn());
    } catch (const detail::Fail& f) {
      report.results.push_back({name, CheckStatus::fail, f.why});
    } catch (const error& e) {
      report.results.push_back({name, CheckStatus::fail, e.what()});
    }
  };

  run("identities", [&] {
    if (n < 2) return detail::skip("identities", "needs n >= 2");
    const auto r = check_identities(n);
    std::string detail;
    for (const auto& c : r.checks)
      if (!c.passed) detail += c.name + ": " + c.detail + "; ";
    return CheckResult{"identities", r.all_passed() ? CheckStatus::pass : CheckStatus::fail,
                       r.all_passed() ? "4 identities hold" : detail};
  });
  run("roundtrip", [&] { return detail::check_roundtrip(n, caps); });
  run("arithmetic", [&] { return detail::check_arithmetic(n, caps); });
  run("oracle", [&] { return detail::check_oracle(n); });
  run("mirror", [&] { return detail::check_mirror(n); });
  run("orbits", [&] { return detail::check_orbits(n); });
  run("ruler", [&] { return detail::check_ruler(n); });
  run("palindrome", [&] { return detail::check_palindrome(n, caps); });
  run("degrees", [&] { return detail::check_degrees(n, caps); });
  run("canonical", [&] { return detail::check_canonical(n); });
  run("minpath", [&] { return detail::check_minpath(n, caps); });
  run("superperm", [&] { return detail::check_superperm(n); });
  return report;
}

}  // namespace varpi
