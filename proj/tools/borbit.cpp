// borbit: exact enumeration of B-orbit parameters in abelian nilradicals
// and Hermitian symmetric varieties, their dimensions and closure orders.
//
// Numbering follows the Bourbaki convention for each Cartan type; --node is
// 1-based. Exit codes: 0 ok, 1 verification failure, 2 invalid input.

#include "borbit/checks.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using namespace borbit;

struct ContextArgs {
  std::string type;
  int rank = 0;
  int node = 0;  // 1-based; 0 = pick the unique cominuscule node
  int threads = 1;
  bool force = false;
};

void add_context_options(CLI::App* cmd, ContextArgs& args, bool need_node) {
  cmd->add_option("--type", args.type, "Cartan type (A..G)")->required();
  cmd->add_option("--rank", args.rank, "rank")->required();
  auto* node = cmd->add_option("--node", args.node,
                               "cominuscule node, 1-based Bourbaki numbering");
  if (need_node)
    node->description(node->get_description() +
                      " (defaults to the unique cominuscule node)");
  cmd->add_option("--threads", args.threads, "worker threads")
      ->check(CLI::PositiveNumber);
  cmd->add_flag("--force", args.force,
                "allow enumeration of E6/E7-scale contexts");
}

RootSystem build_rs(const ContextArgs& args) {
  if (args.type.size() != 1)
    throw input_error("--type must be a single letter A..G");
  return build_root_system(args.type[0], args.rank);
}

int resolve_node(const RootSystem& rs, const ContextArgs& args) {
  std::vector<int> nodes = cominuscule_nodes(rs);
  if (args.node > 0) return args.node - 1;
  if (nodes.size() == 1) return nodes[0];
  std::string list;
  for (int n : nodes) list += (list.empty() ? "" : ", ") + std::to_string(n + 1);
  if (nodes.empty())
    throw input_error("type has no cominuscule node");
  throw input_error("--node is required; cominuscule nodes are: " + list);
}

void guard_scale(const RootSystem& rs, const ContextArgs& args) {
  if (!args.force && weyl_group_order(rs) > 50000)
    throw input_error(
        "context at this scale requires --force (E6/E7-scale enumeration)");
}

struct Space {
  enum Kind { pu, gl, fiber } kind = pu;
  std::vector<int> word;  // 0-based, for fiber
};

Space parse_space(const std::string& text, int rank) {
  Space s;
  if (text == "pu") {
    s.kind = Space::pu;
  } else if (text == "gl") {
    s.kind = Space::gl;
  } else if (text.rfind("fiber:", 0) == 0) {
    s.kind = Space::fiber;
    std::string word = text.substr(6);
    auto push = [&](int gen) {
      if (gen < 1 || gen > rank)
        throw input_error("bad reflection index in fiber word: " + word);
      s.word.push_back(gen - 1);
    };
    if (word != "e") {
      if (word.find(',') != std::string::npos) {  // ranks above 9
        std::size_t pos = 0;
        while (pos < word.size()) {
          std::size_t next = word.find(',', pos);
          if (next == std::string::npos) next = word.size();
          push(std::stoi(word.substr(pos, next - pos)));
          pos = next + 1;
        }
      } else {
        for (char ch : word) push(ch - '0');
      }
    }
  } else {
    throw input_error("bad --space (expected pu, gl or fiber:<word>): " + text);
  }
  return s;
}

WeylElement fiber_element(const ParabolicQuotient& q, const Space& space) {
  WeylElement v = from_word(q.ctx.rs, space.word);
  if (q.id_of(v) < 0)
    throw input_error("fiber word is not a minimal coset representative");
  return v;
}

int cmd_enum(const ContextArgs& args, const std::string& space_text) {
  RootSystem rs = build_rs(args);
  guard_scale(rs, args);
  HermitianContext ctx = build_hermitian_context(rs, resolve_node(rs, args));
  Space space = parse_space(space_text, rs.rank);
  ParabolicQuotient q = enumerate_WP(ctx);

  auto one_based = [](const std::vector<int>& w) {
    std::vector<int> out;
    for (int i : w) out.push_back(i + 1);
    return out;
  };
  auto coeffs = [&](const OrthogonalSet& s) {
    std::vector<Vec> out;
    for (int r : s.roots) out.push_back(rs.roots[r]);
    return out;
  };

  std::cout << "context " << rs.cartan_type << rs.rank << " node "
            << ctx.node + 1 << " space " << space_text << "\n";
  if (space.kind == Space::pu) {
    std::vector<OrthogonalSet> sets = enumerate_nilradical(ctx);
    std::cout << "count " << sets.size() << "\n";
    for (std::size_t i = 0; i < sets.size(); ++i)
      std::cout << i << "  S=" << roots_str(coeffs(sets[i]))
                << "  dim=" << nilradical_dim(q, sets[i]) << "\n";
  } else if (space.kind == Space::gl) {
    HermitianOrbits orb = enumerate_hermitian(q);
    std::cout << "count " << orb.size() << "\n";
    for (int i = 0; i < orb.size(); ++i) {
      const AdmissiblePair& p = orb.pairs[i];
      std::cout << i << "  v=" << word_str(one_based(q.elements[p.v].word))
                << "  S=" << roots_str(coeffs(p.S)) << "  dim=" << p.dim
                << "  L=" << p.L
                << "  sigma=" << word_str(one_based(p.sigma.element.word))
                << "  nu=" << word_str(one_based(q.elements[p.nu].word)) << "\n";
    }
  } else {
    WeylElement v = fiber_element(q, space);
    std::vector<OrthogonalSet> sets = enumerate_fiber_inductive(q, v);
    std::cout << "count " << sets.size() << "\n";
    for (std::size_t i = 0; i < sets.size(); ++i)
      std::cout << i << "  S=" << roots_str(coeffs(sets[i])) << "\n";
  }
  return 0;
}

int cmd_hasse(const ContextArgs& args, const std::string& space_text,
              const std::string& format, const std::string& out_path) {
  RootSystem rs = build_rs(args);
  guard_scale(rs, args);
  HermitianContext ctx = build_hermitian_context(rs, resolve_node(rs, args));
  Space space = parse_space(space_text, rs.rank);
  if (format != "json" && format != "dot")
    throw input_error("bad --format (expected json or dot): " + format);

  BruhatCache cache(rs);
  ParabolicQuotient q = enumerate_WP(ctx);
  PosetDocument doc;
  if (space.kind == Space::pu) {
    doc = build_nilradical_document(q, cache);
  } else if (space.kind == Space::gl) {
    HermitianOrbits orb = enumerate_hermitian(q);
    // Large contexts skip comparisons ruled out by the length grading;
    // the restricted and full computations agree (tested).
    bool large = weyl_group_order(rs) > 50000;
    doc = build_hermitian_document(orb, cache, args.threads, large);
  } else {
    doc = build_fiber_document(q, fiber_element(q, space), cache);
  }
  std::string text = format == "json" ? to_json(doc) : to_dot(doc);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "cannot open output file: " << out_path << "\n";
      return 3;
    }
    out << text;
    if (!out.good()) {
      std::cerr << "write failed: " << out_path << "\n";
      return 3;
    }
  }
  return 0;
}

int cmd_verify(const ContextArgs& args, const std::string& suite) {
  RootSystem rs = build_rs(args);
  if (suite != "golden") guard_scale(rs, args);
  HermitianContext ctx = build_hermitian_context(rs, resolve_node(rs, args));
  SuiteOptions opts;
  opts.threads = args.threads;
  opts.force = args.force;

  std::cout << "suite " << suite << " on " << rs.cartan_type << rs.rank
            << " node " << ctx.node + 1 << "\n";
  bool failed = false;
  for (const Check& c : run_suite(suite, ctx, opts)) {
    if (!c.skipped_reason.empty()) {
      std::cout << "skip  " << c.name << ": " << c.skipped_reason << "\n";
      continue;
    }
    if (c.ok()) {
      std::cout << "ok    " << c.name << " (" << c.cases << " cases)\n";
    } else {
      failed = true;
      std::cout << "FAIL  " << c.name << " (" << c.cases << " cases)\n";
      for (const std::string& f : c.failures) std::cout << "      " << f << "\n";
    }
  }
  std::cout << (failed ? "FAIL" : "PASS") << "\n";
  return failed ? 1 : 0;
}

int cmd_info(const ContextArgs& args) {
  RootSystem rs = build_rs(args);
  int node = resolve_node(rs, args);
  HermitianContext ctx = build_hermitian_context(rs, node);

  std::uint64_t w = weyl_group_order(rs);
  std::uint64_t wp = levi_weyl_group_order(rs, node);
  std::cout << "type " << rs.cartan_type << rs.rank << " node " << node + 1
            << "\n";
  std::cout << "|W|       " << w << "\n";
  std::cout << "|W_P|     " << wp << "\n";
  std::cout << "|W^P|     " << w / wp << "\n";
  std::cout << "|Psi|     " << ctx.psi.size() << "\n";
  std::cout << "dim G/L   " << 2 * ctx.psi.size() << "\n";
  if (ctx.psi.size() <= 32) {
    std::size_t orth = enumerate_nilradical(ctx).size();
    std::cout << "orthogonal subsets of Psi: " << orth << "\n";
    std::cout << "admissible pairs: <= " << (w / wp) * orth
              << " (enumeration needs --force beyond |W| = 50000)\n";
  } else {
    std::cout << "orthogonal subsets of Psi: n/a (Psi too large to count here)\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "borbit: exact B-orbit combinatorics for abelian nilradicals and "
      "Hermitian symmetric varieties"};
  app.require_subcommand(1);

  ContextArgs args;
  std::string space = "pu";
  std::string format = "json";
  std::string out_path;
  std::string suite = "all";

  CLI::App* c_enum = app.add_subcommand("enum", "enumerate orbit parameters");
  add_context_options(c_enum, args, true);
  c_enum->add_option("--space", space, "pu | gl | fiber:<word>");

  CLI::App* c_hasse =
      app.add_subcommand("hasse", "emit the closure order with covers");
  add_context_options(c_hasse, args, true);
  c_hasse->add_option("--space", space, "pu | gl | fiber:<word>");
  c_hasse->add_option("--format", format, "json | dot");
  c_hasse->add_option("--out", out_path, "output file (default: stdout)");

  CLI::App* c_verify =
      app.add_subcommand("verify", "run an invariant suite, exit 1 on violation");
  add_context_options(c_verify, args, true);
  c_verify->add_option("--suite", suite,
                       "all | gp1 | inv | dim | malpha | order-eq | golden");

  CLI::App* c_info = app.add_subcommand("info", "context summary, no enumeration");
  add_context_options(c_info, args, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (c_enum->parsed()) return cmd_enum(args, space);
    if (c_hasse->parsed()) return cmd_hasse(args, space, format, out_path);
    if (c_verify->parsed()) return cmd_verify(args, suite);
    return cmd_info(args);
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
