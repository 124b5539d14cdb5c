#pragma once

// Command-line front end. Data goes to the output stream only; diagnostics go
// to the error stream. Exit codes: 0 ok, 1 domain or usage error, 2 resource
// cap, 3 verification failure.

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "varpi/json.hpp"
#include "varpi/varpi.hpp"
#include "varpi/verify.hpp"

namespace varpi::cli {

enum class Command { rank, unrank, list, code, orbits, ruler, mirror, palindrome, graph, minpath, superperm, verify };
enum class Format { text, tsv, json, csv, dot, runlength };

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitResource = 2;
inline constexpr int kExitVerify = 3;

inline const std::map<std::string, Command>& command_names() {
  static const std::map<std::string, Command> m{
      {"rank", Command::rank},       {"unrank", Command::unrank},   {"list", Command::list},
      {"code", Command::code},       {"orbits", Command::orbits},   {"ruler", Command::ruler},
      {"mirror", Command::mirror},   {"palindrome", Command::palindrome}, {"graph", Command::graph},
      {"minpath", Command::minpath}, {"superperm", Command::superperm},   {"verify", Command::verify}};
  return m;
}

inline const std::map<std::string, Format>& format_names() {
  static const std::map<std::string, Format> m{{"text", Format::text}, {"tsv", Format::tsv},
                                               {"json", Format::json}, {"csv", Format::csv},
                                               {"dot", Format::dot},   {"runlength", Format::runlength}};
  return m;
}

struct RankInterval {
  Rank first;
  Rank last;  // inclusive
};

struct CliConfig {
  Command command = Command::verify;
  std::optional<std::size_t> n;
  std::optional<Format> format;
  std::optional<RankInterval> range;
  std::string output;  // empty: the output stream
  std::size_t cap_word = kDefaultWordCap;
  std::size_t cap_graph = kDefaultGraphCap;
  std::optional<std::uint64_t> budget;
  std::vector<std::string> suite{"all"};
  std::vector<std::string> args;
};

class usage_error : public error {
 public:
  using error::error;
};

/// Formats accepted by each command; the first is the default.
inline std::vector<Format> allowed_formats(Command c) {
  switch (c) {
    case Command::rank:
    case Command::unrank:
    case Command::code:
    case Command::mirror:
    case Command::list: return {Format::text, Format::tsv, Format::json};
    case Command::ruler: return {Format::text, Format::runlength, Format::json};
    case Command::graph: return {Format::dot, Format::csv, Format::json};
    case Command::orbits:
    case Command::palindrome:
    case Command::minpath:
    case Command::superperm:
    case Command::verify: return {Format::text, Format::json};
  }
  return {Format::text};
}

inline RankInterval parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw usage_error("range must be written a..b, got '" + text + "'");
  RankInterval r{parse_rank(text.substr(0, dots)), parse_rank(text.substr(dots + 2))};
  if (r.last < r.first) throw usage_error("empty range '" + text + "'");
  return r;
}

/// Rejects missing arguments and command/format mismatches before anything runs.
inline void validate(CliConfig& config) {
  const auto allowed = allowed_formats(config.command);
  if (!config.format) config.format = allowed.front();
  if (std::find(allowed.begin(), allowed.end(), *config.format) == allowed.end()) {
    throw usage_error("format not supported by this command");
  }
  const bool needs_arg = config.command == Command::rank || config.command == Command::unrank ||
                         config.command == Command::code || config.command == Command::mirror;
  if (needs_arg && config.args.size() != 1) throw usage_error("expected exactly one positional argument");
  if (!needs_arg && !config.args.empty()) throw usage_error("unexpected positional argument '" + config.args.front() + "'");
  if (config.command != Command::rank && !config.n) throw usage_error("--n is required");
  if (config.n && *config.n == 0) throw usage_error("--n must be >= 1");
  if (config.range && config.command != Command::list) throw usage_error("--range applies to list only");
}

namespace detail {

inline std::size_t order_of(const CliConfig& c) { return *c.n; }

inline void emit_rank(std::ostream& out, Format f, const RankedPermutation& rp) {
  switch (f) {
    case Format::tsv: out << rp.rank << '\t' << to_text(rp.code, true) << '\t' << to_text(rp.perm) << '\n'; break;
    case Format::json: out << to_json(rp).dump() << '\n'; break;
    default: out << rp.rank << '\t' << to_text(rp.code) << '\n'; break;
  }
}

inline RankedPermutation ranked(std::size_t n, const Rank& a) { return perm_to_rank(rank_to_perm(n, a)); }

inline int run_list(const CliConfig& c, std::ostream& out) {
  const std::size_t n = order_of(c);
  const Rank total = factorial(n);
  Rank first = 0, stop = total;
  if (c.range) {
    if (c.range->last >= total) throw range_error("range end " + c.range->last.str() + " is outside Z_" + std::to_string(n) + "!");
    first = c.range->first;
    stop = c.range->last + 1;
  }
  CyclicShiftStream stream(n, first, stop);
  const Format f = *c.format;
  if (f == Format::json) out << '[';
  bool leading = true;
  for (const auto& rp : stream) {
    switch (f) {
      case Format::text: out << to_text(rp.perm) << '\n'; break;
      case Format::tsv: out << rp.rank << '\t' << to_text(rp.code, true) << '\t' << to_text(rp.perm) << '\n'; break;
      default:
        if (!leading) out << ',';
        out << to_json(rp).dump();
        break;
    }
    leading = false;
  }
  if (f == Format::json) out << "]\n";
  return kExitOk;
}

inline nlohmann::json orbit_json(std::size_t n, std::size_t k, const Rank& beta) {
  const OrbitRef o(n, k, beta);
  nlohmann::json node{{"k", k}, {"beta", beta.str()}, {"first", o.first().str()}, {"last", o.last().str()},
                      {"base", to_text(o.base())}};
  if (k == 1) {
    nlohmann::json perms = nlohmann::json::array();
    for (Rank r = o.first(); r <= o.last(); ++r) perms.push_back(to_text(rank_to_perm(n, r)));
    node["perms"] = perms;
  } else if (k > 1) {
    nlohmann::json children = nlohmann::json::array();
    for (std::size_t j = 0; j <= n - k; ++j) children.push_back(orbit_json(n, k - 1, beta * (n - k + 1) + j));
    node["children"] = children;
  }
  return node;
}

inline void orbit_text(std::ostream& out, std::size_t n, std::size_t k, const Rank& beta, std::size_t indent) {
  const OrbitRef o(n, k, beta);
  const std::string pad(indent * 2, ' ');
  if (k == 0) {
    const auto rp = ranked(n, o.first());
    out << pad << rp.rank << ' ' << to_text(rp.code) << ' ' << to_text(rp.perm) << '\n';
    return;
  }
  out << pad << k << "-orbit beta=" << beta << " ranks " << o.first() << ".." << o.last() << " base " << to_text(o.base())
      << '\n';
  for (std::size_t j = 0; j <= n - k; ++j) orbit_text(out, n, k - 1, beta * (n - k + 1) + j, indent + 1);
}

inline int run_orbits(const CliConfig& c, std::ostream& out) {
  const std::size_t n = order_of(c);
  if (n > c.cap_graph) throw resource_error("orbit tree for n=" + std::to_string(n) + " exceeds cap " + std::to_string(c.cap_graph));
  if (*c.format == Format::json) {
    out << orbit_json(n, n - 1, 0).dump() << '\n';
  } else {
    orbit_text(out, n, n - 1, 0, 0);
  }
  return kExitOk;
}

inline int run_ruler(const CliConfig& c, std::ostream& out) {
  const std::size_t n = order_of(c);
  const auto e = ruler_sequence(n, std::max(c.cap_word, kDefaultRulerCap));
  switch (*c.format) {
    case Format::runlength: out << to_run_length(e.weights) << '\n'; break;
    case Format::json: {
      if (n < 2) throw order_error("weight histogram needs n >= 2");
      out << to_json(weight_histogram(n)).dump() << '\n';
      break;
    }
    default:
      for (auto w : e.weights) out << static_cast<unsigned>(w) << '\n';
      break;
  }
  return kExitOk;
}

inline int run_minpath(const CliConfig& c, std::ostream& out, std::ostream& err) {
  const std::size_t n = order_of(c);
  if (n < 2) throw order_error("minpath needs n >= 2");
  const bool json = *c.format == Format::json;
  if (n > 4 && !c.budget) {
    const auto path = canonical_path(n, std::max<std::size_t>(c.cap_graph, 9));
    const auto cycle = close_cycle(path);
    if (json) {
      out << nlohmann::json{{"n", n},
                            {"exact_search", false},
                            {"reason", "outside exact-search scope"},
                            {"canonical_path_weight", path.total},
                            {"canonical_cycle_weight", cycle.total},
                            {"W", total_weight(n).str()}}
                 .dump()
          << '\n';
    } else {
      out << "n=" << n << ": exact search outside scope (n > 4); property checks only\n";
      out << "canonical path weight " << path.total << " (W_" << n << " = " << total_weight(n) << ") validated\n";
      out << "canonical cycle weight " << cycle.total << " (not claimed minimal)\n";
    }
    return kExitOk;
  }
  const auto g = build(n, c.cap_graph);
  const auto cert = min_hamiltonian_path(g, c.budget.value_or(kDefaultSearchBudget));
  const auto cycle = close_cycle(canonical_path(n));
  if (json) {
    auto j = to_json(cert);
    j["W"] = total_weight(n).str();
    j["canonical_cycle_weight"] = cycle.total;
    out << j.dump() << '\n';
  } else {
    if (cert.vertices.empty()) {
      out << "n=" << n << ": no Hamiltonian path found within budget (non-optimal)\n";
    } else {
      out << "n=" << n << ": minimal Hamiltonian path weight " << cert.total << (cert.optimal ? " (optimal)" : " (budget exceeded, not proven optimal)")
          << '\n';
      out << "W_" << n << " = " << total_weight(n) << '\n';
      out << "path:";
      for (auto v : cert.vertices) out << ' ' << v;
      out << '\n';
    }
    out << "canonical cycle weight " << cycle.total << " (not claimed minimal)\n";
    out << "nodes expanded " << cert.stats.nodes_expanded << ", bound cutoffs " << cert.stats.bound_cutoffs << '\n';
  }
  if (!cert.optimal) err << "warning: search budget exceeded\n";
  return kExitOk;
}

inline int run_verify(const CliConfig& c, std::ostream& out) {
  VerifyCaps caps;
  caps.word = c.cap_word;
  caps.graph = c.cap_graph;
  if (c.budget) caps.budget = *c.budget;
  const auto report = verify_suite(order_of(c), c.suite, caps);
  if (*c.format == Format::json) {
    out << to_json(report).dump() << '\n';
  } else {
    for (const auto& r : report.results) out << to_string(r.status) << ' ' << r.name << ": " << r.detail << '\n';
  }
  return report.any_failed() ? kExitVerify : kExitOk;
}

inline int dispatch(const CliConfig& c, std::ostream& out, std::ostream& err) {
  const Format f = *c.format;
  switch (c.command) {
    case Command::rank: {
      const Permutation p = parse_permutation(c.args.front());
      if (c.n && *c.n != p.size()) throw order_error("permutation has " + std::to_string(p.size()) + " symbols, --n is " + std::to_string(*c.n));
      emit_rank(out, f, perm_to_rank(p));
      return kExitOk;
    }
    case Command::unrank: {
      const auto rp = ranked(order_of(c), parse_rank(c.args.front()));
      if (f == Format::text) {
        out << to_text(rp.perm) << '\n';
      } else {
        emit_rank(out, f, rp);
      }
      return kExitOk;
    }
    case Command::code: {
      const std::size_t n = order_of(c);
      const Rank a = parse_rank(c.args.front());
      const PiNumber code = n == 1 ? ranked(1, a).code : encode(n, a);
      if (f == Format::json) {
        out << to_json(code).dump() << '\n';
      } else if (f == Format::tsv) {
        out << a << '\t' << to_text(code, true) << '\n';
      } else {
        out << to_text(code) << '\n';
      }
      return kExitOk;
    }
    case Command::mirror: {
      const std::size_t n = order_of(c);
      const auto rp = ranked(n, parse_rank(c.args.front()));
      const auto mp = ranked(n, mirror_rank(n, rp.rank));
      if (f == Format::json) {
        out << nlohmann::json{{"rank", rp.rank.str()}, {"perm", to_text(rp.perm)}, {"mirror_rank", mp.rank.str()},
                              {"mirror_perm", to_text(mp.perm)}}
                   .dump()
            << '\n';
      } else if (f == Format::tsv) {
        out << rp.rank << '\t' << to_text(rp.perm) << '\t' << mp.rank << '\t' << to_text(mp.perm) << '\n';
      } else {
        out << mp.rank << '\t' << to_text(mp.perm) << '\n';
      }
      return kExitOk;
    }
    case Command::list: return run_list(c, out);
    case Command::orbits: return run_orbits(c, out);
    case Command::ruler: return run_ruler(c, out);
    case Command::palindrome: {
      const std::size_t n = order_of(c);
      const auto word = palindrome_word(n, c.cap_word);
      const std::string text = word_to_text(word, n > 9);
      if (f == Format::json) {
        out << nlohmann::json{{"n", n}, {"length", word.size()}, {"palindrome", true}, {"word", text}}.dump() << '\n';
      } else {
        out << text << '\n';
      }
      return kExitOk;
    }
    case Command::graph: {
      const auto g = build(order_of(c), c.cap_graph);
      const ExportFormat ef = f == Format::csv ? ExportFormat::csv : f == Format::json ? ExportFormat::json : ExportFormat::dot;
      out << export_graph(g, ef);
      return kExitOk;
    }
    case Command::minpath: return run_minpath(c, out, err);
    case Command::superperm: {
      const std::size_t n = order_of(c);
      const auto word = compressed_word(n, c.cap_word);
      const std::string text = word_to_text(word, n > 9);
      if (f == Format::json) {
        out << nlohmann::json{{"n", n}, {"length", word.size()}, {"word", text}}.dump() << '\n';
      } else {
        out << text << '\n';
      }
      return kExitOk;
    }
    case Command::verify: return run_verify(c, out);
  }
  return kExitDomain;
}

}  // namespace detail

/// Executes a parsed configuration.
inline int run(CliConfig config, std::ostream& out, std::ostream& err) {
  try {
    validate(config);
    if (!config.output.empty()) {
      std::ostringstream buffer;
      const int status = detail::dispatch(config, buffer, err);
      std::ofstream file(config.output, std::ios::binary);
      if (!file) {
        err << "error: cannot open " << config.output << '\n';
        return kExitDomain;
      }
      file << buffer.str();
      return status;
    }
    return detail::dispatch(config, out, err);
  } catch (const resource_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitResource;
  } catch (const error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
}

/// Parses argv into a configuration. Returns an exit code when the program
/// should stop (help requested or bad usage).
inline std::optional<int> parse(int argc, const char* const* argv, CliConfig& config, std::ostream& out,
                                std::ostream& err) {
  CLI::App app{"Ranking, unranking and structure of permutations generated by cyclic shift", "varpi"};
  std::string command, format, range;
  std::size_t n = 0;
  std::uint64_t budget = 0;
  std::string suite = "all";
  std::vector<std::string> command_list;
  for (const auto& [name, _] : command_names()) command_list.push_back(name);

  app.add_option("command", command, "Command to run")->required()->check(CLI::IsMember(command_list));
  app.add_option("args", config.args, "Rank or permutation argument");
  auto* n_opt = app.add_option("--n", n, "Order (number of symbols)");
  auto* format_opt = app.add_option("--format", format, "text, tsv, json, csv, dot or runlength");
  auto* range_opt = app.add_option("--range", range, "Inclusive rank interval a..b (list)");
  app.add_option("--output", config.output, "Write data to this file instead of standard output");
  app.add_option("--cap-word", config.cap_word, "Largest n for word outputs")->capture_default_str();
  app.add_option("--cap-graph", config.cap_graph, "Largest n for materialized graphs")->capture_default_str();
  auto* budget_opt = app.add_option("--budget", budget, "Node budget for exact path search");
  app.add_option("--suite", suite, "Comma-separated checks or 'all'")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }

  config.command = command_names().at(command);
  if (*n_opt) config.n = n;
  if (*format_opt) {
    auto it = format_names().find(format);
    if (it == format_names().end()) {
      err << "error: unknown format '" << format << "'\n";
      return kExitDomain;
    }
    config.format = it->second;
  }
  try {
    if (*range_opt) config.range = parse_range(range);
  } catch (const error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
  if (*budget_opt) config.budget = budget;
  config.suite.clear();
  std::stringstream ss(suite);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) config.suite.push_back(item);
  return std::nullopt;
}

}  // namespace varpi::cli
