#pragma once

// The overlap digraph G_n. Vertices are S_n in rank order; there is an arc
// p -> q of weight f when the last n-f symbols of p equal the first n-f
// symbols of q. Consecutive ranks are joined by arcs of weight e_n(a), so the
// listing is a Hamiltonian path of total weight W_n.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "varpi/codec.hpp"
#include "varpi/errors.hpp"
#include "varpi/permutation.hpp"
#include "varpi/symmetry.hpp"

namespace varpi {

/// Number of symbols erased on the left of p so that its tail matches the head
/// of q, or nullopt when no tail matches. At most one f in 1..n-1 can match.
inline std::optional<std::size_t> arc_weight(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) throw order_error("arc_weight: permutations of different orders");
  if (p == q) throw invariant_error("arc_weight: G_n has no self-arcs");
  const std::size_t n = p.size();
  // The overlap must start where q's first symbol sits in p.
  const auto f = static_cast<std::size_t>(std::find(p.begin(), p.end(), q[0]) - p.begin());
  if (f == 0) return std::nullopt;
  for (std::size_t i = f; i < n; ++i)
    if (p[i] != q[i - f]) return std::nullopt;
  return f;
}

inline constexpr std::size_t kDefaultGraphCap = 7;

using Vertex = std::uint32_t;

struct Arc {
  Vertex target = 0;
  std::uint8_t weight = 0;
};

/// G_n with a dense weight matrix (0 = no arc) and per-vertex out-lists sorted
/// by (weight, target).
class OverlapDigraph {
 public:
  std::size_t order() const { return n_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  const Permutation& vertex(Vertex v) const { return vertices_[v]; }
  std::uint8_t weight(Vertex from, Vertex to) const { return matrix_[std::size_t{from} * vertices_.size() + to]; }
  const std::vector<Arc>& out_arcs(Vertex v) const { return out_[v]; }

  std::size_t arc_count() const {
    std::size_t c = 0;
    for (const auto& l : out_) c += l.size();
    return c;
  }

 private:
  friend OverlapDigraph build(std::size_t, std::size_t);
  std::size_t n_ = 0;
  std::vector<Permutation> vertices_;
  std::vector<std::uint8_t> matrix_;
  std::vector<std::vector<Arc>> out_;
};

/// Materializes G_n by testing every ordered pair with arc_weight.
inline OverlapDigraph build(std::size_t n, std::size_t cap = kDefaultGraphCap) {
  if (n == 0) throw order_error("order must be >= 1");
  if (n > cap) throw resource_error("G_" + std::to_string(n) + " exceeds the materialization cap " + std::to_string(cap));
  OverlapDigraph g;
  g.n_ = n;
  for (const auto& rp : generate_all(n)) g.vertices_.push_back(rp.perm);
  const std::size_t count = g.vertices_.size();
  g.matrix_.assign(count * count, 0);
  g.out_.resize(count);
  for (std::size_t u = 0; u < count; ++u) {
    for (std::size_t v = 0; v < count; ++v) {
      if (u == v) continue;
      if (auto f = arc_weight(g.vertices_[u], g.vertices_[v])) {
        g.matrix_[u * count + v] = static_cast<std::uint8_t>(*f);
        g.out_[u].push_back({static_cast<Vertex>(v), static_cast<std::uint8_t>(*f)});
      }
    }
    std::sort(g.out_[u].begin(), g.out_[u].end(),
              [](const Arc& a, const Arc& b) { return a.weight != b.weight ? a.weight < b.weight : a.target < b.target; });
  }
  return g;
}

// Degrees -----------------------------------------------------------------------

struct DegreeProfile {
  std::size_t n = 0;
  std::uint64_t expected_degree = 0;  ///< L = 1! + ... + (n-1)!
  /// counts[v][w] for w in 0..n-1 (index 0 unused).
  std::vector<std::vector<std::uint64_t>> out_counts;
  std::vector<std::vector<std::uint64_t>> in_counts;
  bool factorial_law = true;  ///< j! arcs of weight j in and out of every vertex
  bool regular = true;        ///< in- and out-degree L everywhere
  std::string first_violation;

  bool holds() const { return factorial_law && regular; }
};

inline DegreeProfile degree_profile(const OverlapDigraph& g) {
  const std::size_t n = g.order();
  const std::size_t count = g.vertex_count();
  DegreeProfile d;
  d.n = n;
  for (std::size_t j = 1; j < n; ++j) d.expected_degree += to_u64(factorial(j));
  d.out_counts.assign(count, std::vector<std::uint64_t>(n, 0));
  d.in_counts.assign(count, std::vector<std::uint64_t>(n, 0));
  for (Vertex u = 0; u < count; ++u) {
    for (const Arc& a : g.out_arcs(u)) {
      ++d.out_counts[u][a.weight];
      ++d.in_counts[a.target][a.weight];
    }
  }
  for (std::size_t v = 0; v < count; ++v) {
    std::uint64_t in_total = 0, out_total = 0;
    for (std::size_t j = 1; j < n; ++j) {
      const std::uint64_t expected = to_u64(factorial(j));
      if ((d.out_counts[v][j] != expected || d.in_counts[v][j] != expected) && d.factorial_law) {
        d.factorial_law = false;
        d.first_violation = "vertex " + std::to_string(v) + " weight " + std::to_string(j) + ": out " +
                            std::to_string(d.out_counts[v][j]) + ", in " + std::to_string(d.in_counts[v][j]) +
                            ", expected " + std::to_string(expected);
      }
      in_total += d.in_counts[v][j];
      out_total += d.out_counts[v][j];
    }
    if ((in_total != d.expected_degree || out_total != d.expected_degree) && d.regular) {
      d.regular = false;
      if (d.first_violation.empty()) d.first_violation = "vertex " + std::to_string(v) + " is not L-regular";
    }
  }
  return d;
}

// Paths -----------------------------------------------------------------------

struct SearchStats {
  std::uint64_t nodes_expanded = 0;
  std::uint64_t bound_cutoffs = 0;
  bool budget_exceeded = false;
};

struct PathCertificate {
  std::size_t n = 0;
  std::vector<std::uint64_t> vertices;  ///< ranks, in visiting order
  std::vector<std::uint8_t> weights;    ///< weights[i] is the arc vertices[i] -> vertices[i+1]
  std::uint64_t total = 0;
  bool optimal = false;
  bool closed = false;
  SearchStats stats;

  /// Recomputes every arc with arc_weight and compares with the recorded weights and total.
  bool consistent() const {
    if (vertices.empty() || weights.size() + 1 != vertices.size()) return false;
    std::uint64_t sum = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
      auto f = arc_weight(rank_to_perm(n, vertices[i]), rank_to_perm(n, vertices[i + 1]));
      if (!f || *f != weights[i]) return false;
      sum += weights[i];
    }
    return sum == total;
  }
};

/// The path p_0 -> p_1 -> ... -> p_{n!-1}. Each arc's weight is the carry depth
/// of the rank increment and is checked against arc_weight on the symbols.
inline PathCertificate canonical_path(std::size_t n, std::size_t cap = kDefaultRulerCap) {
  if (n < 2) throw order_error("canonical path needs n >= 2");
  if (n > cap) throw resource_error("canonical path for n=" + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  PathCertificate c;
  c.n = n;
  auto stream = generate_all(n);
  Permutation previous = stream.current().perm;
  c.vertices.push_back(0);
  for (std::uint64_t r = 1; !stream.done(); ++r) {
    const std::size_t depth = stream.advance();
    if (stream.done()) break;
    const Permutation& next = stream.current().perm;
    const auto f = arc_weight(previous, next);
    if (!f || *f != depth) {
      throw invariant_error("arc " + std::to_string(r - 1) + " -> " + std::to_string(r) + " has weight " +
                            (f ? std::to_string(*f) : "none") + ", carry depth " + std::to_string(depth));
    }
    c.vertices.push_back(r);
    c.weights.push_back(static_cast<std::uint8_t>(depth));
    c.total += depth;
    previous = next;
  }
  return c;
}

/// Appends the arc p_{n!-1} -> p_0 (weight n-1) to the canonical path.
inline PathCertificate close_cycle(PathCertificate c) {
  if (c.closed) throw invariant_error("path is already closed");
  const std::uint64_t count = to_u64(factorial(c.n));
  if (c.vertices.size() != count) throw invariant_error("close_cycle expects the canonical path");
  for (std::uint64_t r = 0; r < count; ++r)
    if (c.vertices[r] != r) throw invariant_error("close_cycle expects the canonical path");
  const auto f = arc_weight(rank_to_perm(c.n, count - 1), rank_to_perm(c.n, 0));
  if (!f || *f != c.n - 1) throw invariant_error("closing arc does not have weight n-1");
  c.vertices.push_back(0);
  c.weights.push_back(static_cast<std::uint8_t>(*f));
  c.total += *f;
  c.closed = true;
  return c;
}

/// p_0 followed, at every transition, by the last e_n(a) symbols of p_{a+1}.
/// Every permutation of 1..n occurs as a window; the length is n + W_n.
inline std::vector<Symbol> compressed_word(std::size_t n, std::size_t cap = kDefaultWordCap) {
  if (n == 0) throw order_error("order must be >= 1");
  if (n > cap) throw resource_error("compressed word for n=" + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  auto stream = generate_all(n);
  std::vector<Symbol> word(stream.current().perm.begin(), stream.current().perm.end());
  while (true) {
    const std::size_t depth = stream.advance();
    if (stream.done()) break;
    const auto& p = stream.current().perm;
    word.insert(word.end(), p.end() - static_cast<std::ptrdiff_t>(depth), p.end());
  }
  return word;
}

// Exact search ----------------------------------------------------------------

namespace detail {

class MinPathSearch {
 public:
  MinPathSearch(const OverlapDigraph& g, std::uint64_t budget, std::uint64_t incumbent)
      : g_(g), budget_(budget), best_total_(incumbent) {
    const std::size_t count = g.vertex_count();
    visited_.assign(count, 0);
    min_out_.assign(count, 0);
    all_unit_ = true;
    for (Vertex v = 0; v < count; ++v) {
      const auto& arcs = g.out_arcs(v);
      min_out_[v] = arcs.empty() ? 0 : arcs.front().weight;
      max_min_out_ = std::max<std::uint64_t>(max_min_out_, min_out_[v]);
      if (min_out_[v] != 1) all_unit_ = false;
    }
    // Components of the weight-1 arcs. An arc between two components weighs
    // at least 2, so each component not yet touched costs one extra unit to
    // enter when every vertex has a weight-1 out-arc.
    component_.resize(count);
    std::iota(component_.begin(), component_.end(), 0u);
    for (Vertex v = 0; v < count; ++v)
      for (const Arc& a : g.out_arcs(v))
        if (a.weight == 1) unite(v, a.target);
    for (Vertex v = 0; v < count; ++v) component_[v] = find(v);
    component_size_.assign(count, 0);
    for (Vertex v = 0; v < count; ++v) ++component_size_[component_[v]];
    component_unvisited_ = component_size_;
    for (Vertex v = 0; v < count; ++v)
      if (component_[v] == v) ++fresh_components_;
    for (Vertex v = 0; v < count; ++v) unvisited_min_out_sum_ += min_out_[v];
  }

  void run() {
    const std::size_t count = g_.vertex_count();
    path_.reserve(count);
    for (Vertex s = 0; s < count && !stats_.budget_exceeded; ++s) {
      visit(s);
      dfs(s, 0);
      unvisit(s);
    }
  }

  bool found() const { return !best_path_.empty(); }
  const std::vector<Vertex>& best_path() const { return best_path_; }
  std::uint64_t best_total() const { return best_total_; }
  const SearchStats& stats() const { return stats_; }

 private:
  Vertex find(Vertex v) {
    while (component_[v] != v) v = component_[v] = component_[component_[v]];
    return v;
  }
  void unite(Vertex a, Vertex b) {
    a = find(a);
    b = find(b);
    if (a != b) component_[std::max(a, b)] = std::min(a, b);
  }

  void visit(Vertex v) {
    visited_[v] = 1;
    path_.push_back(v);
    unvisited_min_out_sum_ -= min_out_[v];
    const Vertex c = component_[v];
    if (component_unvisited_[c]-- == component_size_[c]) --fresh_components_;
  }
  void unvisit(Vertex v) {
    visited_[v] = 0;
    path_.pop_back();
    unvisited_min_out_sum_ += min_out_[v];
    const Vertex c = component_[v];
    if (++component_unvisited_[c] == component_size_[c]) ++fresh_components_;
  }

  std::uint64_t lower_bound(Vertex current, std::uint64_t weight) const {
    const std::size_t remaining = g_.vertex_count() - path_.size();
    if (remaining == 0) return weight;
    std::uint64_t lb = weight + min_out_[current] + unvisited_min_out_sum_;
    lb = lb > max_min_out_ ? lb - max_min_out_ : 0;
    if (all_unit_) lb += fresh_components_;
    return std::max<std::uint64_t>(lb, weight + remaining);
  }

  void dfs(Vertex current, std::uint64_t weight) {
    if (stats_.budget_exceeded) return;
    if (++stats_.nodes_expanded > budget_) {
      stats_.budget_exceeded = true;
      return;
    }
    if (path_.size() == g_.vertex_count()) {
      if (weight < best_total_) {
        best_total_ = weight;
        best_path_ = path_;
      }
      return;
    }
    for (const Arc& a : g_.out_arcs(current)) {
      if (visited_[a.target]) continue;
      const std::uint64_t w = weight + a.weight;
      visit(a.target);
      if (lower_bound(a.target, w) >= best_total_) {
        ++stats_.bound_cutoffs;
      } else {
        dfs(a.target, w);
      }
      unvisit(a.target);
      if (stats_.budget_exceeded) return;
    }
  }

  const OverlapDigraph& g_;
  std::uint64_t budget_;
  std::uint64_t best_total_;
  std::vector<Vertex> best_path_;
  std::vector<Vertex> path_;
  std::vector<char> visited_;
  std::vector<std::uint64_t> min_out_;
  std::uint64_t max_min_out_ = 0;
  std::uint64_t unvisited_min_out_sum_ = 0;
  bool all_unit_ = true;
  std::vector<Vertex> component_;
  std::vector<std::size_t> component_unvisited_;
  std::vector<std::size_t> component_size_;
  std::uint64_t fresh_components_ = 0;
  SearchStats stats_;
};

}  // namespace detail

inline constexpr std::uint64_t kDefaultSearchBudget = 2'000'000'000;

/// Minimal-weight Hamiltonian path over all start and end vertices, by
/// depth-first branch and bound. The incumbent starts at W_n + 1, so a
/// returned path of weight W_n is found by the search, not assumed.
///
/// Children are tried in (weight, target) order and start vertices in rank
/// order, which fixes the witness. If the node budget runs out the best path
/// seen so far is returned with optimal = false (possibly empty).
inline PathCertificate min_hamiltonian_path(const OverlapDigraph& g, std::uint64_t budget = kDefaultSearchBudget) {
  const std::size_t n = g.order();
  PathCertificate c;
  c.n = n;
  if (g.vertex_count() == 1) {
    c.vertices = {0};
    c.optimal = true;
    return c;
  }
  detail::MinPathSearch search(g, budget, to_u64(total_weight(n)) + 1);
  search.run();
  c.stats = search.stats();
  if (!search.found()) {
    if (!c.stats.budget_exceeded) throw structural_error("G_" + std::to_string(n) + " has no Hamiltonian path of weight <= W_n");
    return c;
  }
  const auto& path = search.best_path();
  c.vertices.assign(path.begin(), path.end());
  for (std::size_t i = 0; i + 1 < path.size(); ++i) c.weights.push_back(g.weight(path[i], path[i + 1]));
  c.total = search.best_total();
  c.optimal = !c.stats.budget_exceeded;
  return c;
}

// Export ------------------------------------------------------------------------

enum class ExportFormat { dot, csv, json };

inline ExportFormat parse_export_format(std::string_view name) {
  if (name == "dot") return ExportFormat::dot;
  if (name == "csv") return ExportFormat::csv;
  if (name == "json") return ExportFormat::json;
  throw format_error("unknown graph format '" + std::string(name) + "' (expected dot, csv or json)");
}

/// Byte-stable rendering in rank-major order.
inline std::string export_graph(const OverlapDigraph& g, ExportFormat format) {
  const std::size_t count = g.vertex_count();
  std::string out;
  switch (format) {
    case ExportFormat::dot:
      out += "digraph G" + std::to_string(g.order()) + " {\n";
      for (Vertex v = 0; v < count; ++v)
        out += "  " + std::to_string(v) + " [label=\"" + std::to_string(v) + ":" + to_text(g.vertex(v)) + "\"];\n";
      for (Vertex u = 0; u < count; ++u)
        for (Vertex v = 0; v < count; ++v)
          if (auto w = g.weight(u, v))
            out += "  " + std::to_string(u) + " -> " + std::to_string(v) + " [label=\"" + std::to_string(w) + "\"];\n";
      out += "}\n";
      break;
    case ExportFormat::csv:
      for (Vertex u = 0; u < count; ++u) {
        for (Vertex v = 0; v < count; ++v) {
          if (v) out += ',';
          out += std::to_string(g.weight(u, v));
        }
        out += '\n';
      }
      break;
    case ExportFormat::json: {
      out += '[';
      bool first = true;
      for (Vertex u = 0; u < count; ++u)
        for (Vertex v = 0; v < count; ++v)
          if (auto w = g.weight(u, v)) {
            if (!first) out += ',';
            first = false;
            out += "{\"from\":" + std::to_string(u) + ",\"to\":" + std::to_string(v) + ",\"w\":" + std::to_string(w) + "}";
          }
      out += "]\n";
      break;
    }
  }
  return out;
}

}  // namespace varpi
