#include "cobweb/cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"

#include "cobweb/error.hpp"
#include "cobweb/io.hpp"
#include "cobweb/njoin.hpp"
#include "cobweb/poset.hpp"

namespace cobweb::cli {

namespace {

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") return {std::istreambuf_iterator<char>(in), {}};
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ParseError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(f), {}};
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ParseError("cannot write '" + path + "'");
  f << text;
}

std::vector<std::size_t> parse_size_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      throw ParseError("'" + item + "' is not an integer");
    }
    if (used != item.size()) throw ParseError("'" + item + "' is not an integer");
    if (v <= 0) throw InvalidSequenceError("sizes must be positive, got " + item);
    out.push_back(static_cast<std::size_t>(v));
  }
  if (out.empty()) throw InvalidSequenceError("empty size list");
  return out;
}

std::string dump(const io::json& j) { return j.dump() + "\n"; }

// --- gen ---------------------------------------------------------------------

struct GenOptions {
  std::string preset;
  std::string sizes;
  std::size_t levels = 0;
  std::size_t value = 1;
  std::size_t width = 2;
  std::string deletions;
  bool strict = false;
  std::string output;
};

GradedDigraph generate(const GenOptions& o) {
  if (!o.sizes.empty()) {
    if (!o.preset.empty()) throw PreconditionError("--sizes and --preset are exclusive");
    FSequence f(parse_size_list(o.sizes));
    return cobweb(f, o.levels ? o.levels : f.size());
  }
  if (o.preset.empty()) throw PreconditionError("gen needs --sizes or --preset");
  if (o.levels == 0) throw PreconditionError("--preset needs --levels >= 1");
  if (o.preset == "naturals") return cobweb(FSequence::naturals(o.levels), o.levels);
  if (o.preset == "fibonacci") return cobweb(FSequence::fibonacci(o.levels), o.levels);
  if (o.preset == "constant") return cobweb(FSequence::constant(o.value, o.levels), o.levels);
  if (o.preset == "young") return young_lattice(o.levels - 1);
  if (o.preset == "binary-tree") return binary_tree(o.levels - 1);
  if (o.levels < 2) throw PreconditionError("--preset " + o.preset + " needs --levels >= 2");
  if (o.preset == "fan") return fan(o.width, o.levels - 1);
  if (o.preset == "complete") return complete_graded(o.width, o.levels - 1);
  throw PreconditionError("unknown preset '" + o.preset + "'");
}

int cmd_gen(const GenOptions& o, Streams s) {
  GradedDigraph g = generate(o);
  if (!o.deletions.empty()) {
    const auto dels = parse_deletions(read_input(o.deletions, s.in));
    auto result = apply_deletions(g, dels);
    for (std::size_t n : result.already_zero) {
      s.err << "warning: deletion " << n + 1 << " (" << dels[n].block << " " << dels[n].row << " "
            << dels[n].col << ") clears an absent arc\n";
    }
    g = std::move(result.digraph);
  }
  if (o.strict) {
    std::vector<std::size_t> sizes = g.partition().sizes();
    g = from_blocks(sizes, g.blocks(), true);
  }
  write_output(o.output, dump(io::to_json(g)), s.out);
  return kOk;
}

// --- zeta --------------------------------------------------------------------

struct ZetaOptions {
  std::string input;
  std::string method = "closure";
  std::string format = "text";
  std::string output;
};

std::string format_matrix(const BoolMatrix& m, const std::string& format) {
  return format == "json" ? dump(io::to_json(m)) : io::to_text(m);
}

int cmd_zeta(const ZetaOptions& o, Streams s) {
  const GradedDigraph g = io::graded_digraph_from_json(io::parse_json(read_input(o.input, s.in)));
  BoolMatrix z;
  if (o.method == "closure")
    z = reflexive_transitive_closure(adjacency(g));
  else if (o.method == "geometric")
    z = zeta_geometric(adjacency(g));
  else
    z = zeta_closed_form(g);
  write_output(o.output, format_matrix(z, o.format), s.out);
  return kOk;
}

// --- join --------------------------------------------------------------------

struct JoinOptions {
  std::string lhs;
  std::string rhs;
  std::string op = "njoin";
  std::string format = "text";
  std::string output;
};

EmbeddedAdjacency read_bipartite(const std::string& path, std::istream& in) {
  const std::string text = read_input(path, in);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    const io::json j = io::parse_json(text);
    if (j.contains("sizes")) {
      const GradedDigraph g = io::graded_digraph_from_json(j);
      if (g.levels() != 2) {
        throw PreconditionError("'" + path + "' has " + std::to_string(g.levels()) +
                                " levels; join operands are single bipartite digraphs");
      }
      return embed_bipartite(g.block(0));
    }
    return embed_bipartite(BipartiteBlock(io::bool_matrix_from_json(j)));
  }
  return embed_bipartite(BipartiteBlock(io::bool_matrix_from_text(text)));
}

int cmd_join(const JoinOptions& o, Streams s) {
  const EmbeddedAdjacency a = read_bipartite(o.lhs, s.in);
  const EmbeddedAdjacency b = read_bipartite(o.rhs, s.in);
  const BoolMatrix result = o.op == "cjoin" ? cjoin(a, b).matrix() : njoin(a, b);
  write_output(o.output, format_matrix(result, o.format), s.out);
  return kOk;
}

// --- check -------------------------------------------------------------------

struct CheckOptions {
  std::string name;
  std::string input;
  std::string r = "1";
  std::string fseq;
  std::size_t n_max = 3;
  bool weighted = false;
  std::string output;
};

int cmd_check(const CheckOptions& o, Streams s) {
  static const std::vector<std::string> known{"ferrers", "ghw", "delta", "fomin", "fdiff", "power"};
  if (std::find(known.begin(), known.end(), o.name) == known.end()) {
    throw PreconditionError("unknown check '" + o.name + "'");
  }
  const GradedDigraph g = io::graded_digraph_from_json(io::parse_json(read_input(o.input, s.in)));
  const FSequence f = o.fseq.empty() ? FSequence(g.partition().sizes()) : FSequence(parse_size_list(o.fseq));

  io::json report;
  bool holds = false;
  if (o.name == "ferrers") {
    const auto r = is_ferrers_dim_one(g);
    holds = r.dim_one;
    report = io::to_json(r);
  } else if (o.name == "ghw") {
    const auto r = is_r_differential(g, parse_rational(o.r));
    holds = r.holds_elementwise;
    report = io::to_json(r);
  } else if (o.name == "delta") {
    const auto r = check_delta_relation(g, f);
    holds = r.holds_elementwise;
    report = io::to_json(r);
  } else if (o.name == "fomin") {
    const auto r = fomin_relation_check(g, f);
    holds = r.holds();
    report = io::to_json(r);
  } else if (o.name == "fdiff") {
    const auto r = f_differential_check(g, f);
    holds = r.holds();
    report = io::to_json(r);
  } else {
    const auto r = check_power_identity(g, o.n_max, o.weighted, f);
    holds = r.holds();
    report = io::to_json(r);
  }
  write_output(o.output, report.dump(2) + "\n", s.out);
  return holds ? kOk : kPropertyFails;
}

// --- render ------------------------------------------------------------------

struct RenderOptions {
  std::string input;
  std::string window;
  std::string output;
};

int cmd_render(const RenderOptions& o, Streams s) {
  const BoolMatrix z = io::parse_bool_matrix(read_input(o.input, s.in));
  std::size_t rows = z.rows(), cols = z.cols();
  if (!o.window.empty()) {
    const auto x = o.window.find('x');
    if (x == std::string::npos) throw ParseError("--window must look like RxC, got '" + o.window + "'");
    const auto dims = parse_size_list(o.window.substr(0, x) + "," + o.window.substr(x + 1));
    if (dims.size() != 2) throw ParseError("--window must look like RxC, got '" + o.window + "'");
    rows = dims[0];
    cols = dims[1];
  }
  if (rows > z.rows() || cols > z.cols()) {
    throw RangeError("window " + std::to_string(rows) + "x" + std::to_string(cols) + " exceeds " +
                     std::to_string(z.rows()) + "x" + std::to_string(z.cols()) + " matrix");
  }
  write_output(o.output, io::to_text(z.slice(0, 0, rows, cols)), s.out);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graded posets as natural-join chains of bipartite digraphs", "cobweb"};
  app.require_subcommand(1);

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a graded digraph as block-chain JSON");
  gen_cmd->add_option("--preset", gen.preset, "naturals|fibonacci|constant|young|fan|complete|binary-tree");
  gen_cmd->add_option("--sizes", gen.sizes, "Explicit level sizes, e.g. 1,2,3");
  gen_cmd->add_option("--levels", gen.levels, "Number of levels");
  gen_cmd->add_option("--value", gen.value, "Level size for --preset constant");
  gen_cmd->add_option("--width", gen.width, "Chain count for fan / complete");
  gen_cmd->add_option("--delete", gen.deletions, "Deletion list: lines 'k i j'");
  gen_cmd->add_flag("--strict", gen.strict, "Reject vertices left without covers");
  gen_cmd->add_option("-o,--output", gen.output);

  ZetaOptions zeta;
  auto* zeta_cmd = app.add_subcommand("zeta", "Compute the zeta matrix of a block-chain file");
  zeta_cmd->add_option("input", zeta.input)->required();
  zeta_cmd->add_option("--method", zeta.method)
      ->check(CLI::IsMember({"closure", "geometric", "closed-form"}));
  zeta_cmd->add_option("--format", zeta.format)->check(CLI::IsMember({"text", "json"}));
  zeta_cmd->add_option("-o,--output", zeta.output);

  JoinOptions join;
  auto* join_cmd = app.add_subcommand("join", "Natural join or composition of two bipartite digraphs");
  join_cmd->add_option("lhs", join.lhs)->required();
  join_cmd->add_option("rhs", join.rhs)->required();
  join_cmd->add_option("--op", join.op)->check(CLI::IsMember({"njoin", "cjoin"}));
  join_cmd->add_option("--format", join.format)->check(CLI::IsMember({"text", "json"}));
  join_cmd->add_option("-o,--output", join.output);

  CheckOptions check;
  auto* check_cmd = app.add_subcommand("check", "Property check; exit 0 holds, 1 fails, 2 usage");
  check_cmd->add_option("name", check.name, "ferrers|ghw|delta|fomin|fdiff|power")->required();
  check_cmd->add_option("input", check.input)->required();
  check_cmd->add_option("--r", check.r, "Commutator constant for ghw");
  check_cmd->add_option("--fseq", check.fseq, "F-sequence, defaults to the level sizes");
  check_cmd->add_option("--n-max", check.n_max, "Highest power for the power check");
  check_cmd->add_flag("--weighted", check.weighted, "Power check with delta_F weights");
  check_cmd->add_option("-o,--output", check.output);

  RenderOptions render;
  auto* render_cmd = app.add_subcommand("render", "Print the upper-left window of a 0/1 matrix");
  render_cmd->add_option("input", render.input)->required();
  render_cmd->add_option("--window", render.window, "RxC, e.g. 16x16");
  render_cmd->add_option("-o,--output", render.output);

  std::vector<std::string> argv_store{"cobweb"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  Streams s{in, out, err};
  try {
    if (*gen_cmd) return cmd_gen(gen, s);
    if (*zeta_cmd) return cmd_zeta(zeta, s);
    if (*join_cmd) return cmd_join(join, s);
    if (*check_cmd) return cmd_check(check, s);
    if (*render_cmd) return cmd_render(render, s);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace cobweb::cli
