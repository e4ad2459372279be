#ifndef SEMILAB_REPORT_HPP_
#define SEMILAB_REPORT_HPP_

#include <optional>
#include <string>
#include <vector>

#include "semilab/lattice.hpp"
#include "semilab/semigroup.hpp"

namespace semilab {

// Everything `analyze` knows about one semigroup.  The three
// s-indecomposability verdicts must agree, as must the two B2-combinatorial
// verdicts; a disagreement is a library bug and raises InternalError.
// The prime-ideal verdict is omitted above the ideal-enumeration guard.
struct AnalysisReport {
  std::string digest;
  int size = 0;
  std::optional<int> zero;
  Subset idempotent_set;
  Subset kernel_set;

  bool s_indec_graph = false;
  bool s_indec_algebra = false;
  std::optional<bool> s_indec_prime_ideal;
  std::optional<Subset> witness_prime_ideal;  // a separating completely prime ideal
  AlgebraSummary quotient_summary;            // of the algebra of S/K_S

  AlgebraSummary algebra;  // of the full semigroup algebra
  std::vector<int> blocks;

  int max_subsemilattice_size = 0;
  Subset max_subsemilattice_witness;
  BoundReport bound;

  bool b2c_definition = false;
  bool b2c_via_factors = false;
  std::vector<std::string> principal_factor_kinds;

  std::uint64_t seed = 0;

  bool operator==(const AnalysisReport&) const = default;
};

AnalysisReport analyze(const Semigroup& s, std::uint64_t seed = 0);

std::string report_to_json(const AnalysisReport& r);
AnalysisReport report_from_json(const std::string& text);
std::string report_to_text(const AnalysisReport& r);

}  // namespace semilab

#endif  // SEMILAB_REPORT_HPP_
