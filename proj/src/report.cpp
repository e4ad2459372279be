#include "semilab/report.hpp"

#include <sstream>

#include <json.hpp>

#include "semilab/indecomposable.hpp"
#include "semilab/sg_io.hpp"

namespace semilab {

AnalysisReport analyze(const Semigroup& s, std::uint64_t seed) {
  AnalysisReport r;
  r.seed = seed;
  r.digest = sg_digest(s);
  r.size = s.size();
  r.zero = s.zero();
  r.idempotent_set = idempotents(s);
  r.kernel_set = kernel(s);

  r.s_indec_graph = is_s_indecomposable_graph(s);
  r.witness_prime_ideal = separating_prime_ideal(s);
  r.quotient_summary = s_indecomposability_summary(s);
  r.s_indec_algebra = r.quotient_summary.one_dim_blocks == 1;
  constexpr int kIdealGuard = 20;
  if (s.size() <= kIdealGuard)
    r.s_indec_prime_ideal = completely_prime_ideals(s).empty();

  const RationalAlgebra a = semigroup_algebra(s);
  r.algebra = summary(a);
  r.blocks = numerical_block_sizes(a, seed);

  const MaxSubsemilattice m = max_subsemilattice(s);
  r.max_subsemilattice_size = m.size;
  r.max_subsemilattice_witness = m.witness;
  r.bound = check_bound(s);

  r.b2c_definition = is_b2_combinatorial(s);
  r.b2c_via_factors = is_b2_combinatorial_via_factors(s);
  for (int x = 0; x < s.size(); ++x)
    r.principal_factor_kinds.push_back(to_string(principal_factor(s, x).kind));

  if (r.s_indec_graph != r.s_indec_algebra ||
      (r.s_indec_prime_ideal && *r.s_indec_prime_ideal != r.s_indec_graph))
    throw InternalError("s-indecomposability verdicts disagree");
  if (r.b2c_definition != r.b2c_via_factors)
    throw InternalError("B2-combinatorial verdicts disagree");
  return r;
}

namespace {

using nlohmann::json;

json summary_json(const AlgebraSummary& a) {
  return json{{"dim", a.dim},
              {"radical_dim", a.radical_dim},
              {"num_blocks", a.num_blocks},
              {"one_dim_blocks", a.one_dim_blocks}};
}

AlgebraSummary summary_from(const json& j) {
  return AlgebraSummary{j.at("dim"), j.at("radical_dim"), j.at("num_blocks"),
                        j.at("one_dim_blocks")};
}

json bound_json(const BoundReport& b) {
  json j{{"max_size", b.max_size}, {"witness", b.witness},
         {"bound", b.bound},       {"holds", b.holds},
         {"tight", b.tight},       {"completely_zero_simple", b.completely_zero_simple},
         {"sqrt", nullptr}};
  if (b.sqrt_bound) {
    json sq{{"holds", b.sqrt_bound->holds}, {"tight", b.sqrt_bound->tight}};
    sq["isomorphic_to_brandt"] = b.sqrt_bound->isomorphic_to_brandt
                                     ? json(*b.sqrt_bound->isomorphic_to_brandt)
                                     : json(nullptr);
    j["sqrt"] = sq;
  }
  return j;
}

BoundReport bound_from(const json& j) {
  BoundReport b;
  b.max_size = j.at("max_size");
  b.witness = j.at("witness").get<Subset>();
  b.bound = j.at("bound");
  b.holds = j.at("holds");
  b.tight = j.at("tight");
  b.completely_zero_simple = j.at("completely_zero_simple");
  if (!j.at("sqrt").is_null()) {
    SqrtBound sq;
    sq.holds = j.at("sqrt").at("holds");
    sq.tight = j.at("sqrt").at("tight");
    if (!j.at("sqrt").at("isomorphic_to_brandt").is_null())
      sq.isomorphic_to_brandt = j.at("sqrt").at("isomorphic_to_brandt").get<bool>();
    b.sqrt_bound = sq;
  }
  return b;
}

}  // namespace

std::string report_to_json(const AnalysisReport& r) {
  json j;
  j["schema"] = 1;
  j["digest"] = r.digest;
  j["size"] = r.size;
  j["zero"] = r.zero ? json(*r.zero) : json(nullptr);
  j["idempotents"] = r.idempotent_set;
  j["kernel"] = r.kernel_set;
  j["s_indecomposable"] = {
      {"graph", r.s_indec_graph},
      {"algebra", r.s_indec_algebra},
      {"prime_ideal", r.s_indec_prime_ideal ? json(*r.s_indec_prime_ideal) : json(nullptr)},
      {"witness_prime_ideal",
       r.witness_prime_ideal ? json(*r.witness_prime_ideal) : json(nullptr)},
      {"quotient_algebra_summary", summary_json(r.quotient_summary)},
  };
  j["algebra_summary"] = summary_json(r.algebra);
  j["blocks"] = r.blocks;
  j["max_subsemilattice"] = {{"size", r.max_subsemilattice_size},
                             {"witness", r.max_subsemilattice_witness}};
  j["bound"] = bound_json(r.bound);
  j["b2_combinatorial"] = {{"definition", r.b2c_definition},
                           {"principal_factors", r.b2c_via_factors}};
  j["principal_factor_kinds"] = r.principal_factor_kinds;
  j["seed"] = r.seed;
  return j.dump(2) + "\n";
}

AnalysisReport report_from_json(const std::string& text) {
  const json j = json::parse(text);
  if (j.at("schema") != 1) throw FormatError("unknown report schema");
  AnalysisReport r;
  r.digest = j.at("digest");
  r.size = j.at("size");
  if (!j.at("zero").is_null()) r.zero = j.at("zero").get<int>();
  r.idempotent_set = j.at("idempotents").get<Subset>();
  r.kernel_set = j.at("kernel").get<Subset>();
  const json& si = j.at("s_indecomposable");
  r.s_indec_graph = si.at("graph");
  r.s_indec_algebra = si.at("algebra");
  if (!si.at("prime_ideal").is_null())
    r.s_indec_prime_ideal = si.at("prime_ideal").get<bool>();
  if (!si.at("witness_prime_ideal").is_null())
    r.witness_prime_ideal = si.at("witness_prime_ideal").get<Subset>();
  r.quotient_summary = summary_from(si.at("quotient_algebra_summary"));
  r.algebra = summary_from(j.at("algebra_summary"));
  r.blocks = j.at("blocks").get<std::vector<int>>();
  r.max_subsemilattice_size = j.at("max_subsemilattice").at("size");
  r.max_subsemilattice_witness = j.at("max_subsemilattice").at("witness").get<Subset>();
  r.bound = bound_from(j.at("bound"));
  r.b2c_definition = j.at("b2_combinatorial").at("definition");
  r.b2c_via_factors = j.at("b2_combinatorial").at("principal_factors");
  r.principal_factor_kinds =
      j.at("principal_factor_kinds").get<std::vector<std::string>>();
  r.seed = j.at("seed").get<std::uint64_t>();
  return r;
}

namespace {

std::string subset_str(const Subset& s) {
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < s.size(); ++i) out << (i ? " " : "") << s[i];
  out << "}";
  return out.str();
}

}  // namespace

std::string report_to_text(const AnalysisReport& r) {
  std::ostringstream out;
  out << "input digest      " << r.digest << "\n";
  out << "size              " << r.size << "\n";
  out << "zero              ";
  if (r.zero)
    out << *r.zero << "\n";
  else
    out << "none\n";
  out << "idempotents       " << subset_str(r.idempotent_set) << "\n";
  out << "kernel            " << subset_str(r.kernel_set) << "\n";
  out << "s-indecomposable  graph=" << (r.s_indec_graph ? "yes" : "no")
      << " algebra=" << (r.s_indec_algebra ? "yes" : "no") << " prime-ideal=";
  if (r.s_indec_prime_ideal)
    out << (*r.s_indec_prime_ideal ? "yes" : "no");
  else
    out << "skipped";
  out << "\n";
  if (r.witness_prime_ideal)
    out << "  separating completely prime ideal " << subset_str(*r.witness_prime_ideal)
        << "\n";
  out << "  algebra of S/K_S: dim " << r.quotient_summary.dim << ", radical "
      << r.quotient_summary.radical_dim << ", blocks " << r.quotient_summary.num_blocks
      << ", 1-dim blocks " << r.quotient_summary.one_dim_blocks << "\n";
  out << "algebra summary   dim " << r.algebra.dim << ", radical " << r.algebra.radical_dim
      << ", blocks " << r.algebra.num_blocks << ", 1-dim blocks "
      << r.algebra.one_dim_blocks << "\n";
  out << "block sizes       {";
  for (std::size_t i = 0; i < r.blocks.size(); ++i) out << (i ? " " : "") << r.blocks[i];
  out << "}\n";
  out << "max subsemilattice " << r.max_subsemilattice_size << " "
      << subset_str(r.max_subsemilattice_witness) << "\n";
  out << "bound             " << r.bound.bound
      << (r.bound.holds ? " (holds" : " (VIOLATED") << (r.bound.tight ? ", tight)" : ")")
      << "\n";
  if (r.bound.sqrt_bound) {
    out << "  completely 0-simple; sqrt bound "
        << (r.bound.sqrt_bound->holds ? "holds" : "VIOLATED")
        << (r.bound.sqrt_bound->tight ? ", tight" : "");
    if (r.bound.sqrt_bound->isomorphic_to_brandt)
      out << (*r.bound.sqrt_bound->isomorphic_to_brandt ? "; isomorphic to brandt(n)"
                                                        : "; NOT brandt(n)");
    out << "\n";
  }
  out << "B2-combinatorial  definition=" << (r.b2c_definition ? "yes" : "no")
      << " principal-factors=" << (r.b2c_via_factors ? "yes" : "no") << "\n";
  out << "principal factor kinds:";
  for (const auto& k : r.principal_factor_kinds) out << " " << k;
  out << "\n";
  return out.str();
}

}  // namespace semilab
