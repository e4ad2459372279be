#include "semilab/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "semilab/constructions.hpp"
#include "semilab/enumeration.hpp"
#include "semilab/indecomposable.hpp"
#include "semilab/report.hpp"
#include "semilab/sg_io.hpp"

namespace semilab::cli {

namespace {

void cmd_validate(const std::string& path, std::ostream& out) {
  const Semigroup s = read_sg_file(path);
  out << "ok: n=" << s.size();
  if (s.zero()) out << " zero=" << *s.zero();
  out << " digest=" << sg_digest(s) << "\n";
}

void cmd_analyze(const std::string& path, bool as_json, std::uint64_t seed,
                 std::ostream& out) {
  const AnalysisReport r = analyze(read_sg_file(path), seed);
  out << (as_json ? report_to_json(r) : report_to_text(r));
}

void cmd_algebra(const std::string& path, bool contracted, bool blocks,
                 std::uint64_t seed, std::ostream& out) {
  const Semigroup s = read_sg_file(path);
  const RationalAlgebra a = contracted ? contracted_algebra(s) : semigroup_algebra(s);
  const AlgebraSummary sum = summary(a);
  out << (contracted ? "contracted " : "") << "algebra: dim " << sum.dim << ", radical "
      << sum.radical_dim << ", blocks " << sum.num_blocks << ", 1-dim blocks "
      << sum.one_dim_blocks << "\n";
  if (blocks) {
    out << "block sizes: {";
    const std::vector<int> bs = numerical_block_sizes(a, seed);
    for (std::size_t i = 0; i < bs.size(); ++i) out << (i ? " " : "") << bs[i];
    out << "}\n";
  }
}

void cmd_construct(const std::vector<std::string>& args, std::ostream& out) {
  if (args.empty()) throw CLI::ValidationError("construct", "missing construction kind");
  const std::string& kind = args[0];
  auto file_arg = [&](std::size_t i) -> Semigroup {
    if (args.size() <= i)
      throw CLI::ValidationError("construct", kind + " needs a file argument");
    return read_sg_file(args[i]);
  };
  auto with_param = [&](const std::string& prefix) -> std::optional<int> {
    if (kind.rfind(prefix + ":", 0) != 0) return std::nullopt;
    try {
      return std::stoi(kind.substr(prefix.size() + 1));
    } catch (const std::exception&) {
      throw FormatError("bad parameter in construction: " + kind);
    }
  };

  if (kind == "b2") {
    out << write_sg(b2());
  } else if (auto n = with_param("brandt")) {
    out << write_sg(brandt(*n));
  } else if (auto n = with_param("chain")) {
    out << write_sg(chain(*n).sg);
  } else if (kind.rfind("semilattice:", 0) == 0) {
    out << write_sg(named_semilattice(kind.substr(12)).sg);
  } else if (kind == "times0") {
    out << write_sg(times0(file_arg(1), file_arg(2)));
  } else if (kind == "adjoin-zero") {
    out << write_sg(adjoin_zero(file_arg(1)));
  } else if (kind == "zprime") {
    out << write_sg(adjoin_zprime(file_arg(1)));
  } else if (kind == "embed") {
    const Embedding e = embed_indecomposable(file_arg(1));
    out << "# embedding: s -> image\n";
    for (int x = 0; x < e.map.source_size; ++x)
      out << "# " << x << " -> " << e.map.map[x] << "\n";
    out << write_sg(e.target);
  } else if (kind == "munn") {
    out << write_sg(munn(as_semilattice(file_arg(1))));
  } else {
    throw CLI::ValidationError("construct", "unknown construction: " + kind);
  }
}

void cmd_iso(const std::string& a_path, const std::string& b_path, std::ostream& out) {
  const Semigroup a = read_sg_file(a_path);
  const Semigroup b = read_sg_file(b_path);
  const IsoResult r = find_isomorphism(a, b);
  if (r) {
    out << "isomorphic\n";
    for (int x = 0; x < r.iso->source_size; ++x)
      out << x << " -> " << r.iso->map[x] << "\n";
  } else {
    out << "none (" << r.obstruction << ")\n";
  }
}

void cmd_enumerate(int order, const std::string& filter, bool count_only,
                   std::ostream& out) {
  std::function<bool(const Semigroup&)> keep;
  if (filter == "s-indec") {
    keep = [](const Semigroup& s) { return is_s_indecomposable_graph(s); };
  } else if (filter == "b2c") {
    keep = [](const Semigroup& s) { return is_b2_combinatorial(s); };
  } else if (filter == "zero") {
    keep = [](const Semigroup& s) { return s.zero().has_value(); };
  } else if (!filter.empty()) {
    throw CLI::ValidationError("enumerate", "unknown filter: " + filter);
  }
  const std::vector<Semigroup> classes = enumerate_semigroups(order, keep);
  out << "# order " << order;
  if (!filter.empty()) out << ", filter " << filter;
  out << ": " << classes.size() << " classes\n";
  if (count_only) return;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    out << "# class " << i << "\n" << write_sg(classes[i]);
  }
}

void cmd_classify_b2c(int order, std::ostream& out) {
  if (order != 9) {
    const std::vector<Semigroup> classes = classify_b2c(order);
    out << "# " << classes.size() << " B2-combinatorial class(es) of order " << order
        << "\n";
    for (std::size_t i = 0; i < classes.size(); ++i)
      out << "# class " << i << "\n" << write_sg(classes[i]);
    return;
  }
  const B2cOrder9Evidence ev = classify_b2c_order9_evidence();
  out << "# " << ev.classes.size() << " B2-combinatorial classes of order 9\n";
  out << "# evidence: every 9-element B2-combinatorial semigroup is a\n"
         "# fundamental inverse semigroup with a 5-element idempotent\n"
         "# semilattice, hence a full inverse subsemigroup of the Munn\n"
         "# semigroup of that semilattice (Munn's embedding theorem, cited,\n"
         "# not re-proved); the sweep below is exhaustive over those.\n";
  out << "# 5-element semilattices swept: " << ev.semilattices_swept << "\n";
  out << "# 9-element B2-combinatorial Munn subsemigroups found: " << ev.munn_candidates
      << " (of munn(X): " << ev.munn_x_subsemigroups << ")\n";
  for (std::size_t i = 0; i < ev.classes.size(); ++i) {
    const Semigroup& s = ev.classes[i];
    std::string tag = "munn(F)";
    if (bool(find_isomorphism(s, times0(named_semilattice("C3").sg, b2()))))
      tag = "times0(C3, b2) ~ munn(U)";
    else if (bool(find_isomorphism(s, times0(named_semilattice("V").sg, b2()))))
      tag = "times0(V, b2)";
    out << "# class " << i << ": " << tag << "\n" << write_sg(s);
  }
}

void cmd_verify_b2c(const std::string& path, bool as_json, std::uint64_t seed,
                    std::ostream& out) {
  const Semigroup s = read_sg_file(path);
  if (!is_b2_combinatorial(s))
    throw FormatError("input is not B2-combinatorial; nothing to verify");
  const B2cReport r = verify_b2c(s, seed);
  if (as_json) {
    std::ostringstream blocks;
    blocks << "[";
    for (std::size_t i = 0; i < r.blocks.size(); ++i)
      blocks << (i ? "," : "") << r.blocks[i];
    blocks << "]";
    out << "{\n  \"schema\": 1,\n  \"k\": " << r.k << ",\n  \"has_zero\": "
        << (r.has_zero ? "true" : "false") << ",\n  \"algebra_ok\": "
        << (r.algebra_ok ? "true" : "false") << ",\n  \"blocks\": " << blocks.str()
        << ",\n  \"blocks_ok\": " << (r.blocks_ok ? "true" : "false")
        << ",\n  \"ideals_checked\": " << r.ideals_checked << ",\n  \"ideals_ok\": "
        << (r.ideals_ok ? "true" : "false") << ",\n  \"quotients_checked\": "
        << r.quotients_checked << ",\n  \"quotients_ok\": "
        << (r.quotients_ok ? "true" : "false") << ",\n  \"all_ok\": "
        << (r.all_ok() ? "true" : "false") << "\n}\n";
    return;
  }
  out << "k = " << r.k << "\n";
  out << "(i)   zero exists:            " << (r.has_zero ? "yes" : "NO") << "\n";
  out << "(ii)  algebra (4k+1,0,k+1,1): " << (r.algebra_ok ? "yes" : "NO")
      << ", blocks {1, 2 x k}: " << (r.blocks_ok ? "yes" : "NO") << "\n";
  out << "(iii) all " << r.ideals_checked
      << " ideals B2-combinatorial:     " << (r.ideals_ok ? "yes" : "NO") << "\n";
  out << "(iv)  all " << r.quotients_checked
      << " quotients B2-combinatorial:  " << (r.quotients_ok ? "yes" : "NO") << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"semilab - finite semigroup analysis"};
  app.require_subcommand(1);

  std::string file_a, file_b, filter;
  bool as_json = false, contracted = false, blocks = false, count_only = false;
  std::uint64_t seed = 0;
  int order = 0;
  std::vector<std::string> construct_args;

  CLI::App* validate = app.add_subcommand("validate", "check a .sg file");
  validate->add_option("file", file_a)->required();

  CLI::App* analyze_cmd = app.add_subcommand("analyze", "full analysis report");
  analyze_cmd->add_option("file", file_a)->required();
  analyze_cmd->add_flag("--json", as_json);
  analyze_cmd->add_option("--seed", seed);

  CLI::App* algebra_cmd = app.add_subcommand("algebra", "algebra summary");
  algebra_cmd->add_option("file", file_a)->required();
  algebra_cmd->add_flag("--contracted", contracted);
  algebra_cmd->add_flag("--blocks", blocks);
  algebra_cmd->add_option("--seed", seed);

  CLI::App* construct = app.add_subcommand("construct", "write a construction to stdout");
  construct->add_option("args", construct_args)->expected(-1);

  CLI::App* iso = app.add_subcommand("iso", "search for an isomorphism");
  iso->add_option("a", file_a)->required();
  iso->add_option("b", file_b)->required();

  CLI::App* enumerate = app.add_subcommand("enumerate", "classes of a given order");
  enumerate->add_option("--order", order)->required();
  enumerate->add_option("--filter", filter);
  enumerate->add_flag("--count-only", count_only);

  CLI::App* classify = app.add_subcommand("classify-b2c", "B2-combinatorial classes");
  classify->add_option("--order", order)->required();

  CLI::App* verify = app.add_subcommand("verify-prop8", "hereditary B2c properties");
  verify->add_option("file", file_a)->required();
  verify->add_flag("--json", as_json);
  verify->add_option("--seed", seed);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (validate->parsed()) cmd_validate(file_a, out);
    if (analyze_cmd->parsed()) cmd_analyze(file_a, as_json, seed, out);
    if (algebra_cmd->parsed()) cmd_algebra(file_a, contracted, blocks, seed, out);
    if (construct->parsed()) cmd_construct(construct_args, out);
    if (iso->parsed()) cmd_iso(file_a, file_b, out);
    if (enumerate->parsed()) cmd_enumerate(order, filter, count_only, out);
    if (classify->parsed()) cmd_classify_b2c(order, out);
    if (verify->parsed()) cmd_verify_b2c(file_a, as_json, seed, out);
  } catch (const CLI::Error& e) {
    err << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const InternalError& e) {
    err << "internal invariant violated: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace semilab::cli
