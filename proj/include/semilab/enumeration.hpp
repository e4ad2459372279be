#ifndef SEMILAB_ENUMERATION_HPP_
#define SEMILAB_ENUMERATION_HPP_

#include <cstdint>
#include <functional>
#include <vector>

#include "semilab/constructions.hpp"
#include "semilab/semigroup.hpp"

namespace semilab {

// The lexicographically least Cayley table among all relabelings of s
// (flat row-major comparison).  Exact branch-and-bound; canonical(a) ==
// canonical(b) iff a and b are isomorphic.
Semigroup canonicalize(const Semigroup& s);

// Every associative table on n elements, one representative per isomorphism
// class, in sorted canonical order.  `keep` (if given) filters classes and
// must be isomorphism-invariant.  Cell-by-cell backtracking over the table
// with incremental associativity checks; hard-capped at n <= 5.
std::vector<Semigroup> enumerate_semigroups(
    int n, const std::function<bool(const Semigroup&)>& keep = nullptr);

// At most `count` distinct isomorphism classes of order n, found by
// backtracking with seeded-random value order.  Deterministic per seed.
std::vector<Semigroup> sample_semigroups(int n, int count, std::uint64_t seed);

// All semilattices on n elements up to isomorphism (canonical forms).
std::vector<Semigroup> enumerate_semilattices(int n);

// All subsemigroups of s with exactly k elements, as sorted member sets.
std::vector<Subset> subsemigroups_of_size(const Semigroup& s, int k);

// The B2-combinatorial isomorphism classes of a given order.
//
// Orders 1 and 5 are settled by exhaustive enumeration.  Order 9 follows
// the Munn route: a 9-element B2-combinatorial semigroup is a combinatorial
// (hence fundamental) inverse semigroup with a 5-element idempotent
// semilattice E, so it embeds as a full inverse subsemigroup of the Munn
// semigroup of E.  Sweeping the Munn semigroups of all 5-element
// semilattices for 9-element B2-combinatorial subsemigroups is therefore
// exhaustive; the directly constructed candidates times0(Y, b2()) and the
// named Munn semigroups are folded in as a cross-check.
std::vector<Semigroup> classify_b2c(int order);

// Evidence gathered by the order-9 classification, for reporting.
struct B2cOrder9Evidence {
  int semilattices_swept = 0;       // 5-element semilattices, up to iso
  int munn_candidates = 0;          // 9-element B2c subsemigroups found, total
  int munn_x_subsemigroups = 0;     // of munn(X) specifically
  std::vector<Semigroup> classes;
};

B2cOrder9Evidence classify_b2c_order9_evidence();

}  // namespace semilab

#endif  // SEMILAB_ENUMERATION_HPP_
