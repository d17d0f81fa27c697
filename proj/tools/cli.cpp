#include "cli.hpp"

#include <charconv>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "cliquelist/bounds.hpp"
#include "cliquelist/clique_sum.hpp"
#include "cliquelist/edge_list.hpp"
#include "cliquelist/enumeration.hpp"
#include "cliquelist/generators.hpp"
#include "cliquelist/ordering.hpp"

namespace cliquelist::cli {
namespace {

// Leaves of the `sumtree` family: triangle-free, 2..20 vertices, joined by
// sums of size <= 2 and checked against the k = 3 composite bound with f_3 = 2.
constexpr std::size_t kSumTreeMaxSide = 10;
constexpr std::size_t kSumTreeMaxJoin = 2;
constexpr std::size_t kSumTreeK = 3;
constexpr unsigned kSumTreeFk = 2;

std::size_t parse_count(const std::string& s, const char* what) {
  std::size_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size()) {
    throw std::invalid_argument(std::string("parameter ") + what + " must be a non-negative integer, got '" + s + "'");
  }
  return v;
}

double parse_probability(const std::string& s, const char* what) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty() || !(v >= 0.0 && v <= 1.0)) {
    throw std::invalid_argument(std::string("parameter ") + what + " must be a probability in [0, 1], got '" + s + "'");
  }
  return v;
}

void expect_params(const std::vector<std::string>& family, std::size_t count, const char* usage) {
  if (family.size() != count + 1) {
    throw std::invalid_argument("family '" + family[0] + "' expects: " + usage);
  }
}

CliqueSumTree make_sum_tree(std::size_t leaves, std::uint64_t seed) {
  if (leaves == 0) throw std::invalid_argument("sumtree needs at least one leaf");
  return random_clique_sum_tree(random_bipartite_leaves(leaves, kSumTreeMaxSide, 0.5, seed),
                                kSumTreeMaxJoin, seed + 1);
}

std::string render_clique(std::span<const Vertex> c) {
  std::string s;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i > 0) s += ' ';
    s += std::to_string(c[i]);
  }
  return s;
}

// Buffers clique lines and hands them to the stream in large blocks.
class CliqueWriter {
 public:
  CliqueWriter(std::ostream& out, bool include_empty) : out_(out), include_empty_(include_empty) {}
  ~CliqueWriter() { flush(); }

  void operator()(std::span<const Vertex> c) {
    if (c.empty() && !include_empty_) return;
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i > 0) buffer_ += ' ';
      char digits[16];
      auto [p, ec] = std::to_chars(digits, digits + sizeof(digits), c[i]);
      buffer_.append(digits, p);
    }
    buffer_ += '\n';
    if (buffer_.size() > (1u << 16)) flush();
  }

  void flush() {
    out_ << buffer_;
    buffer_.clear();
  }

 private:
  std::ostream& out_;
  bool include_empty_;
  std::string buffer_;
};

Graph load_input(const RunConfig& cfg, std::istream& in) {
  if (cfg.input_path && !cfg.family.empty()) {
    throw std::invalid_argument("give either an input path or --gen, not both");
  }
  if (!cfg.family.empty()) return make_family_graph(cfg.family, cfg.seed);
  if (!cfg.input_path) throw std::invalid_argument("missing input: give a path, '-' or --gen");
  if (*cfg.input_path == "-") return read_edge_list(in);
  return read_edge_list_file(*cfg.input_path);
}

int cmd_generate(const RunConfig& cfg, std::ostream& out) {
  write_edge_list(out, make_family_graph(cfg.family, cfg.seed));
  return kOk;
}

int cmd_enumerate(const Graph& g, const RunConfig& cfg, std::ostream& out) {
  CliqueWriter writer(out, cfg.include_empty);
  all_cliques(g, [&](std::span<const Vertex> c) { writer(c); });
  return kOk;
}

int cmd_count(const Graph& g, std::ostream& out) {
  out << count_cliques(g).str() << '\n';
  return kOk;
}

int cmd_degeneracy(const Graph& g, const RunConfig& cfg, std::ostream& out) {
  const DegenerateOrdering o = degeneracy_ordering(g);
  out << o.degeneracy << '\n';
  if (cfg.ordering_dump) out << render_clique(o.order) << '\n';
  return kOk;
}

int cmd_bench(const Graph& g, std::ostream& out) {
  const DelayStats s = measure_delay(g);
  out << "n\tclique_count\ttotal_steps\tmax_gap\tmax_gap_per_n\n";
  out << s.n << '\t' << s.clique_count << '\t' << s.total_steps << '\t' << s.max_gap << '\t'
      << std::fixed << std::setprecision(4) << s.gap_per_vertex() << '\n';
  return kOk;
}

int cmd_oracle_check(const Graph& g, const RunConfig& cfg, std::ostream& out) {
  const CliqueSet oracle = brute_force_cliques(g);

  CliqueSet streamed;
  all_cliques(g, [&](std::span<const Vertex> c) { streamed.emplace(c.begin(), c.end()); });
  CliqueSet degenerate;
  degenerate_cliques(g, [&](std::span<const Vertex> c) { degenerate.emplace(c.begin(), c.end()); });

  const std::pair<const char*, CliqueSet> candidates[] = {
      {"cliques_recursive", cliques_recursive(g)},
      {"all_cliques", std::move(streamed)},
      {"degenerate_cliques", std::move(degenerate)},
  };
  for (const auto& [name, found] : candidates) {
    if (found == oracle) continue;
    // First clique, in set order, present on one side only.
    auto a = oracle.begin();
    auto b = found.begin();
    while (a != oracle.end() && b != found.end() && *a == *b) {
      ++a;
      ++b;
    }
    const bool missing = b == found.end() || (a != oracle.end() && *a < *b);
    const Clique& diverging = missing ? *a : *b;
    out << "FAIL " << name << (missing ? " missing clique: {" : " extra clique: {")
        << render_clique(diverging) << "}\n";
    return kVerificationFailure;
  }

  if (cfg.list) {
    CliqueWriter writer(out, cfg.include_empty);
    for (const auto& c : oracle) writer(c);
  }
  out << "PASS " << oracle.size() << " cliques\n";
  return kOk;
}

std::vector<BoundReport> family_reports(const RunConfig& cfg, std::istream& in) {
  std::vector<BoundReport> reports;
  const std::string& family = cfg.family.at(0);

  if (family == "sumtree") {
    expect_params(cfg.family, 1, "sumtree LEAVES");
    const CliqueSumTree tree = make_sum_tree(parse_count(cfg.family[1], "LEAVES"), cfg.seed);
    TreeBoundReport tr = verify_clique_sum_tree_bound(tree, kSumTreeK, BigCount(kSumTreeFk));
    tr.report.label = "sumtree:clique-sum-tree";
    reports.push_back(tr.report);
    return reports;
  }

  Graph g;
  if (family == "file") {
    expect_params(cfg.family, 1, "file PATH");
    RunConfig file_cfg = cfg;
    file_cfg.family.clear();
    file_cfg.input_path = cfg.family[1];
    g = load_input(file_cfg, in);
  } else {
    g = make_family_graph(cfg.family, cfg.seed);
  }
  const std::size_t n = g.num_vertices();
  const std::string params = [&] {
    std::string s;
    for (std::size_t i = 1; i < cfg.family.size(); ++i) s += (i > 1 ? " " : "") + cfg.family[i];
    return s;
  }();
  auto add = [&](const auto& bound, const std::string& name) {
    reports.push_back(verify_family_bound(g, bound, family + ":" + name, params));
  };

  if (family == "ktree") {
    add(degenerate_clique_bound(parse_count(cfg.family[1], "K"), n), "degenerate");
  } else if (family == "apollonian") {
    add(planar_clique_bound(n), "planar");
    add(degenerate_clique_bound(3, n), "degenerate");
  } else if (family == "almost-bipartite") {
    const std::size_t h = parse_count(cfg.family[3], "H");
    add(almost_bipartite_clique_bound(h, n), "almost-bipartite");
    add(exact_almost_bipartite_count_bound(h, n), "almost-bipartite-exact");
  } else {
    add(degenerate_clique_bound(degeneracy_ordering(g).degeneracy, n), "degenerate");
    if (is_bipartite(g)) {
      add(almost_bipartite_clique_bound(0, n), "almost-bipartite");
      add(exact_almost_bipartite_count_bound(0, n), "almost-bipartite-exact");
    }
  }
  return reports;
}

int cmd_verify(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  const auto reports = family_reports(cfg, in);
  bool all_hold = true;
  for (const auto& r : reports) {
    all_hold = all_hold && r.holds;
    if (cfg.json) {
      nlohmann::ordered_json j;
      j["label"] = r.label;
      j["n"] = r.n;
      j["bound"] = r.bound.str();
      j["actual"] = r.actual.str();
      j["holds"] = r.holds;
      j["tight"] = r.tight;
      out << j.dump() << '\n';
    } else {
      out << to_tsv(r) << '\n';
    }
  }
  return all_hold ? kOk : kVerificationFailure;
}

int dispatch(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  if (cfg.subcommand == "generate") return cmd_generate(cfg, out);
  if (cfg.subcommand == "verify") return cmd_verify(cfg, in, out);

  const Graph g = load_input(cfg, in);
  if (cfg.subcommand == "enumerate") return cmd_enumerate(g, cfg, out);
  if (cfg.subcommand == "count") return cmd_count(g, out);
  if (cfg.subcommand == "degeneracy") return cmd_degeneracy(g, cfg, out);
  if (cfg.subcommand == "bench") return cmd_bench(g, out);
  if (cfg.subcommand == "oracle-check") return cmd_oracle_check(g, cfg, out);
  throw std::invalid_argument("unknown subcommand '" + cfg.subcommand + "'");
}

}  // namespace

std::string family_usage() {
  return "  complete N\n"
         "  bipartite A B\n"
         "  ktree K N\n"
         "  apollonian N\n"
         "  almost-bipartite A B H P\n"
         "  random N P\n"
         "  path N\n"
         "  cycle N\n"
         "  empty N\n"
         "  sumtree LEAVES   (generate, verify)\n"
         "  file PATH        (verify only)\n";
}

Graph make_family_graph(const std::vector<std::string>& family, std::uint64_t seed) {
  if (family.empty()) throw std::invalid_argument("missing graph family");
  const std::string& name = family[0];
  if (name == "complete") {
    expect_params(family, 1, "complete N");
    return complete_graph(parse_count(family[1], "N"));
  }
  if (name == "bipartite") {
    expect_params(family, 2, "bipartite A B");
    return complete_bipartite(parse_count(family[1], "A"), parse_count(family[2], "B"));
  }
  if (name == "ktree") {
    expect_params(family, 2, "ktree K N");
    return k_tree(parse_count(family[1], "K"), parse_count(family[2], "N"), seed);
  }
  if (name == "apollonian") {
    expect_params(family, 1, "apollonian N");
    return apollonian(parse_count(family[1], "N"), seed);
  }
  if (name == "almost-bipartite") {
    expect_params(family, 4, "almost-bipartite A B H P");
    return almost_bipartite_graph(parse_count(family[1], "A"), parse_count(family[2], "B"),
                                  parse_count(family[3], "H"), parse_probability(family[4], "P"),
                                  seed);
  }
  if (name == "random") {
    expect_params(family, 2, "random N P");
    return random_graph(parse_count(family[1], "N"), parse_probability(family[2], "P"), seed);
  }
  if (name == "path") {
    expect_params(family, 1, "path N");
    return path_graph(parse_count(family[1], "N"));
  }
  if (name == "cycle") {
    expect_params(family, 1, "cycle N");
    return cycle_graph(parse_count(family[1], "N"));
  }
  if (name == "empty") {
    expect_params(family, 1, "empty N");
    return empty_graph(parse_count(family[1], "N"));
  }
  if (name == "sumtree") {
    expect_params(family, 1, "sumtree LEAVES");
    return compose_clique_sum_tree(make_sum_tree(parse_count(family[1], "LEAVES"), seed)).graph;
  }
  throw std::invalid_argument("unknown graph family '" + name + "'; known families:\n" +
                              family_usage());
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"List and count all cliques of a graph; check clique-count bounds."};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string input;

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", input, "Edge-list file, or '-' for standard input");
    sub->add_option("--gen", cfg.family, "Generate the input instead: FAMILY PARAMS...")
        ->expected(1, -1);
  };
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", cfg.seed, "Seed for randomised families (default 0)");
    sub->add_option("-o,--output", cfg.output_path, "Write output to this path");
  };

  auto* generate = app.add_subcommand("generate", "Write a generated graph as an edge list");
  generate->add_option("family", cfg.family, "FAMILY PARAMS...")->required()->expected(1, -1);
  add_common(generate);

  auto* enumerate = app.add_subcommand("enumerate", "Print every clique, one per line");
  add_input(enumerate);
  add_common(enumerate);
  enumerate->add_flag("--include-empty", cfg.include_empty, "Also print the empty clique");

  auto* count = app.add_subcommand("count", "Print the exact number of cliques (empty one included)");
  add_input(count);
  add_common(count);

  auto* degeneracy = app.add_subcommand("degeneracy", "Print the degeneracy");
  add_input(degeneracy);
  add_common(degeneracy);
  degeneracy->add_flag("--ordering-dump", cfg.ordering_dump, "Also print the peeling order");

  auto* verify = app.add_subcommand("verify", "Check clique-count bounds for a family");
  verify->add_option("family", cfg.family, "FAMILY PARAMS...")->required()->expected(1, -1);
  add_common(verify);
  verify->add_flag("--json", cfg.json, "Line-delimited JSON instead of tab-separated fields");

  auto* bench = app.add_subcommand("bench", "Report enumeration work and maximum delay");
  add_input(bench);
  add_common(bench);

  auto* oracle = app.add_subcommand("oracle-check", "Cross-check all listers against brute force");
  add_input(oracle);
  add_common(oracle);
  oracle->add_flag("--list", cfg.list, "Print the brute-force clique list before the verdict");
  oracle->add_flag("--include-empty", cfg.include_empty, "Include the empty clique in --list");

  app.footer("Families:\n" + family_usage());

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kValidationError;
  }

  cfg.subcommand = app.get_subcommands().front()->get_name();
  if (!input.empty()) cfg.input_path = input;

  try {
    if (cfg.output_path) {
      std::ostringstream buffer;
      const int code = dispatch(cfg, in, buffer);
      std::ofstream file(*cfg.output_path, std::ios::binary);
      if (!file) throw std::invalid_argument("cannot write '" + *cfg.output_path + "'");
      file << buffer.str();
      return code;
    }
    return dispatch(cfg, in, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kValidationError;
  }
}

}  // namespace cliquelist::cli
