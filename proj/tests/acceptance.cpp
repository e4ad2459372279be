// Acceptance suite: twelve cross-validation criteria, one pass/fail line
// each.  Exits nonzero if any criterion fails or overruns its time budget.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <vector>

#include "semilab/algebra.hpp"
#include "semilab/constructions.hpp"
#include "semilab/enumeration.hpp"
#include "semilab/indecomposable.hpp"
#include "semilab/lattice.hpp"
#include "semilab/semigroup.hpp"

using namespace semilab;

namespace {

Semigroup null_semigroup(int n) {
  return Semigroup::validate(std::vector<std::vector<int>>(n, std::vector<int>(n, 0)));
}

// The exhaustive corpus, one representative per isomorphism class.
const std::vector<Semigroup>& classes_up_to(int n) {
  static std::vector<std::vector<Semigroup>> cache(6);
  auto& slot = cache[n];
  if (slot.empty()) slot = enumerate_semigroups(n);
  return slot;
}

bool three_way_agree(const Semigroup& s) {
  const bool graph = is_s_indecomposable_graph(s);
  return graph == is_s_indecomposable_algebra(s) &&
         graph == completely_prime_ideals(s).empty();
}

// ---------------------------------------------------------------------------

bool criterion_1(std::ostream& log) {
  int checked = 0;
  for (int n = 1; n <= 4; ++n)
    for (const Semigroup& s : classes_up_to(n)) {
      if (!three_way_agree(s)) return false;
      ++checked;
    }
  const std::vector<Semigroup> sampled = sample_semigroups(5, 200, 1);
  if (sampled.size() < 200) return false;
  for (const Semigroup& s : sampled) {
    if (!three_way_agree(s)) return false;
    ++checked;
  }
  log << checked << " semigroups, verdicts unanimous";
  return true;
}

bool criterion_2(std::ostream& log) {
  const auto keep = [](const Semigroup& s) {
    const Subset idem = idempotents(s);
    bool commuting_pair = false;
    for (std::size_t i = 0; i < idem.size() && !commuting_pair; ++i)
      for (std::size_t j = i + 1; j < idem.size() && !commuting_pair; ++j)
        commuting_pair = s.at(idem[i], idem[j]) == s.at(idem[j], idem[i]);
    return commuting_pair && is_s_indecomposable_graph(s);
  };
  std::vector<Semigroup> hits;
  for (const Semigroup& s : classes_up_to(5))
    if (keep(s)) hits.push_back(s);
  if (hits.size() != 2) {
    log << "expected 2 classes, found " << hits.size();
    return false;
  }
  const std::vector<int> b2_canon = canonicalize(b2()).flat();
  const std::vector<int> companion_canon = canonicalize(b2_companion()).flat();
  std::set<std::vector<int>> got{hits[0].flat(), hits[1].flat()};
  if (got != std::set<std::vector<int>>{b2_canon, companion_canon}) {
    log << "classes differ from B2 and M0(1;2,2;P)";
    return false;
  }
  log << "exactly B2 and M0(1;2,2;[[1,1],[0,1]])";
  return true;
}

bool criterion_3(std::ostream& log) {
  int indecomposable = 0;
  for (int n = 1; n <= 5; ++n)
    for (const Semigroup& s : classes_up_to(n)) {
      if (!is_s_indecomposable_graph(s)) continue;
      ++indecomposable;
      if (max_subsemilattice(s).size > 2 * ((s.size() - 1) / 4) + 1) return false;
    }
  log << indecomposable << " s-indecomposable classes within the bound";
  return true;
}

bool criterion_4(std::ostream& log) {
  for (int n = 1; n <= 13; ++n) {
    const ExtremalWitness w = extremal_witness(n);
    if (w.s.size() != n) return false;
    if (!three_way_agree(w.s) || !is_s_indecomposable_graph(w.s)) return false;
    if (static_cast<int>(w.y.size()) != 2 * ((n - 1) / 4) + 1) return false;
    for (int a : w.y) {
      if (w.s.at(a, a) != a) return false;
      for (int b : w.y) {
        const int p = w.s.at(a, b);
        if (p != w.s.at(b, a) || !std::binary_search(w.y.begin(), w.y.end(), p))
          return false;
      }
    }
  }
  log << "witnesses for n = 1..13 check out";
  return true;
}

bool criterion_5(std::ostream& log) {
  std::vector<Semigroup> with_zero;
  for (int n = 1; n <= 3; ++n)
    for (const Semigroup& s : classes_up_to(n))
      if (s.zero()) with_zero.push_back(s);
  int pairs = 0;
  for (const Semigroup& a : with_zero)
    for (const Semigroup& b : with_zero) {
      const bool expected =
          is_s_indecomposable_graph(a) || is_s_indecomposable_graph(b);
      if (is_s_indecomposable_graph(times0(a, b)) != expected) return false;
      ++pairs;
    }
  log << pairs << " ordered pairs, equivalence holds";
  return true;
}

bool criterion_6(std::ostream& log) {
  std::vector<Semigroup> inputs{b2(), b2_companion()};
  for (int n = 2; n <= 6; ++n) inputs.push_back(null_semigroup(n));
  for (int n = 1; n <= 9; ++n) inputs.push_back(extremal_witness(n).s);
  inputs.push_back(times0(named_semilattice("V").sg, b2()));
  inputs.push_back(munn(named_semilattice("U")));
  inputs.push_back(munn(named_semilattice("F")));
  inputs.push_back(adjoin_zprime(b2()));
  if (inputs.size() < 20) return false;
  for (const Semigroup& s : inputs) {
    if (!is_s_indecomposable_graph(s) || !s.zero()) return false;  // bad pick
    const Semigroup bigger = adjoin_zprime(s);
    if (!is_s_indecomposable_graph(bigger)) return false;
    const AlgebraSummary before = summary(semigroup_algebra(s));
    const AlgebraSummary after = summary(semigroup_algebra(bigger));
    if (after.dim != before.dim + 1) return false;
    if (after.radical_dim != before.radical_dim + 1) return false;
    if (after.num_blocks != before.num_blocks) return false;
    if (after.one_dim_blocks != before.one_dim_blocks) return false;
  }
  log << inputs.size() << " inputs, summary shifts by one radical dimension";
  return true;
}

bool criterion_7(std::ostream& log) {
  if (!verify_b2c(b2()).all_ok()) return false;
  for (const char* name : {"V", "C3"}) {
    const Semigroup s = times0(named_semilattice(name).sg, b2());
    const B2cReport r = verify_b2c(s);
    if (!r.all_ok()) return false;
    if (!(r.algebra == AlgebraSummary{9, 0, 3, 1})) return false;
    if (r.blocks != std::vector<int>{1, 2, 2}) return false;
  }
  log << "B2 and both 9-element times0 pass (i)-(iv)";
  return true;
}

bool criterion_8(std::ostream& log) {
  const Semigroup trivial = Semigroup::validate({{0}});
  int regular = 0;
  for (int n : {2, 3}) {
    const int cells = n * n;
    for (int mask = 0; mask < (1 << cells); ++mask) {
      std::vector<std::vector<int>> p(n, std::vector<int>(n, -1));
      for (int c = 0; c < cells; ++c)
        if (mask & (1 << c)) p[c / n][c % n] = 0;
      bool is_regular = true;
      for (int r = 0; r < n && is_regular; ++r) {
        bool row = false, col = false;
        for (int c = 0; c < n; ++c) {
          row = row || p[r][c] >= 0;
          col = col || p[c][r] >= 0;
        }
        is_regular = row && col;
      }
      if (!is_regular) continue;
      ++regular;
      const Semigroup s = rees_matrix({trivial, 0, p});
      const int max = max_subsemilattice(s).size;
      const long long side = max - 1;
      if (side * side > s.size() - 1) return false;  // sqrt bound
      const bool tight = side * side == s.size() - 1 && max == n + 1;
      if (tight != bool(find_isomorphism(s, brandt(n)))) return false;
    }
  }
  // The only 0-simple B2-combinatorial class at order 5 is B2.
  int zero_simple_b2c = 0;
  for (const Semigroup& s : classes_up_to(5))
    if (is_zero_simple(s) && is_b2_combinatorial(s)) {
      ++zero_simple_b2c;
      if (!find_isomorphism(s, b2())) return false;
    }
  if (zero_simple_b2c != 1) return false;
  log << regular << " regular sandwiches checked; order-5 0-simple B2c class is B2";
  return true;
}

bool criterion_9(std::ostream& log) {
  int checked = 0;
  for (int n = 1; n <= 5; ++n)
    for (const Semigroup& s : classes_up_to(n)) {
      if (is_b2_combinatorial(s) != is_b2_combinatorial_via_factors(s)) return false;
      ++checked;
    }
  // The constructed order-9 candidates, including every 9-element
  // subsemigroup of munn(X).
  std::vector<Semigroup> candidates{
      times0(named_semilattice("C3").sg, b2()),
      times0(named_semilattice("V").sg, b2()),
      munn(named_semilattice("U")),
      munn(named_semilattice("F")),
  };
  const Semigroup tx = munn(named_semilattice("X"));
  for (const Subset& members : subsemigroups_of_size(tx, 9))
    candidates.push_back(subsemigroup(tx, members));
  for (const Semigroup& s : candidates) {
    if (is_b2_combinatorial(s) != is_b2_combinatorial_via_factors(s)) return false;
    ++checked;
  }
  log << checked << " semigroups, both characterizations agree";
  return true;
}

bool criterion_10(std::ostream& log) {
  const B2cOrder9Evidence ev = classify_b2c_order9_evidence();
  if (ev.classes.size() != 3) {
    log << "expected 3 classes, got " << ev.classes.size();
    return false;
  }
  const Semigroup c3xb2 = times0(named_semilattice("C3").sg, b2());
  const Semigroup vxb2 = times0(named_semilattice("V").sg, b2());
  const Semigroup tf = munn(named_semilattice("F"));
  if (!find_isomorphism(munn(named_semilattice("U")), c3xb2)) return false;

  const Semigroup tx = munn(named_semilattice("X"));
  int tx_b2c = 0;
  for (const Subset& members : subsemigroups_of_size(tx, 9)) {
    const Semigroup sub = subsemigroup(tx, members);
    if (!is_b2_combinatorial(sub)) continue;
    ++tx_b2c;
    if (!find_isomorphism(sub, vxb2)) return false;
  }
  if (tx_b2c != 3) return false;

  auto e_of = [](const Semigroup& s) { return subsemigroup(s, idempotents(s)); };
  if (!find_isomorphism(e_of(c3xb2), named_semilattice("U").sg)) return false;
  if (!find_isomorphism(e_of(vxb2), named_semilattice("X").sg)) return false;
  if (!find_isomorphism(e_of(tf), named_semilattice("F").sg)) return false;

  for (const Semigroup& y : enumerate_semilattices(3))
    if (find_isomorphism(times0(y, b2()), tf)) return false;

  log << "3 classes; munn(X) holds 3 copies of V x0 B2; E-types U/X/F";
  return true;
}

bool criterion_11(std::ostream& log) {
  const Semigroup c2 = Semigroup::validate({{0, 1}, {1, 0}});
  const Semigroup two_chain = chain(2).sg;
  const AlgebraSummary group = summary(semigroup_algebra(c2));
  const AlgebraSummary lattice = summary(semigroup_algebra(two_chain));
  if (!(group == AlgebraSummary{2, 0, 2, 2})) return false;
  if (!(lattice == AlgebraSummary{2, 0, 2, 2})) return false;
  if (!is_s_indecomposable_graph(c2) || !is_s_indecomposable_algebra(c2)) return false;
  if (is_s_indecomposable_graph(two_chain) || is_s_indecomposable_algebra(two_chain))
    return false;
  log << "equal full-algebra summaries, opposite verdicts";
  return true;
}

bool criterion_12(std::ostream& log) {
  for (int n = 2; n <= 6; ++n)
    if (radical(semigroup_algebra(null_semigroup(n))).dim() != n - 1) return false;
  std::vector<Semigroup> lattices;
  for (const char* name : {"C3", "V", "U", "F", "X"})
    lattices.push_back(named_semilattice(name).sg);
  for (int n = 1; n <= 5; ++n) lattices.push_back(chain(n).sg);
  for (const Semigroup& y : lattices) {
    const RationalAlgebra a = semigroup_algebra(y);
    if (radical(a).dim() != 0) return false;
    if (numerical_block_sizes(a) != std::vector<int>(y.size(), 1)) return false;
  }
  log << "null radicals n-1; semilattice algebras split into lines";
  return true;
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<bool(std::ostream&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "graph/algebra/prime-ideal verdicts agree (orders <= 4 + sampled order 5)", 60,
       criterion_1},
      {2, "order-5 s-indecomposable classes with commuting idempotents", 600, criterion_2},
      {3, "subsemilattice bound over the order <= 5 corpus", 600, criterion_3},
      {4, "extremal witnesses for n = 1..13", 10, criterion_4},
      {5, "times0 s-indecomposability equivalence on pairs of order <= 3", 120,
       criterion_5},
      {6, "z' extension preserves verdict, adds one radical dimension", 120, criterion_6},
      {7, "hereditary B2c properties on B2 and the 9-element constructions", 120,
       criterion_7},
      {8, "square-root bound with Brandt equality; 0-simple B2c order 5", 600, criterion_8},
      {9, "definitional and principal-factor B2c verdicts agree", 300, criterion_9},
      {10, "order-9 classification: 3 classes with the right fingerprints", 300,
       criterion_10},
      {11, "C2 vs 2-chain negative control", 60, criterion_11},
      {12, "null-semigroup radicals and semilattice block multisets", 120, criterion_12},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    std::ostringstream detail;
    bool ok = false;
    const auto start = std::chrono::steady_clock::now();
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail << "exception: " << e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (elapsed > c.limit_seconds) {
      ok = false;
      detail << " [over the " << c.limit_seconds << " s budget]";
    }
    if (!ok) ++failures;
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << std::setw(2) << c.id
              << "  " << std::fixed << std::setprecision(2) << std::setw(7) << elapsed
              << "s  " << c.name;
    if (!detail.str().empty()) std::cout << "  -- " << detail.str();
    std::cout << "\n";
  }
  if (failures) std::cout << failures << " criterion(s) failed\n";
  return failures == 0 ? 0 : 1;
}
