#ifndef SEMILAB_LATTICE_HPP_
#define SEMILAB_LATTICE_HPP_

#include <optional>
#include <vector>

#include "semilab/algebra.hpp"
#include "semilab/semigroup.hpp"

namespace semilab {

// Classification of a principal factor.
enum class FactorKind { ZeroSimple, Simple, Null };

const char* to_string(FactorKind k);

// The principal factor of an element: J(a)/I(a), or J(a) itself when I(a)
// is empty.
struct PrincipalFactor {
  int element = 0;
  Semigroup factor;
  FactorKind kind = FactorKind::Null;
};

// Kind tests on whole semigroups (finite, so 0-simple and simple coincide
// with completely 0-simple and completely simple).
bool is_null_semigroup(const Semigroup& s);
bool is_zero_simple(const Semigroup& s);
bool is_simple_semigroup(const Semigroup& s);

PrincipalFactor principal_factor(const Semigroup& s, int a);

// Maximum subsemilattice: a maximum-cardinality set of pairwise commuting
// idempotents closed under products.  Exact branch-and-bound; the witness is
// the lexicographically least one of maximum size.
struct MaxSubsemilattice {
  int size = 0;
  Subset witness;
};

MaxSubsemilattice max_subsemilattice(const Semigroup& s);

// The subsemilattice cardinality bound report.  `bound` is
// 2*floor((|S|-1)/4) + 1; the square-root refinement applies to completely
// 0-simple semigroups only: |Y| <= sqrt(|S|-1) + 1 with equality exactly for
// the Brandt semigroups M^0(1; n, n; I).
struct SqrtBound {
  bool holds = false;
  bool tight = false;
  // Set when the equality case was reached: did S turn out to be brandt(n)?
  std::optional<bool> isomorphic_to_brandt;

  bool operator==(const SqrtBound&) const = default;
};

struct BoundReport {
  int max_size = 0;
  Subset witness;
  int bound = 0;
  bool holds = false;
  bool tight = false;
  bool completely_zero_simple = false;
  std::optional<SqrtBound> sqrt_bound;  // present iff completely 0-simple

  bool operator==(const BoundReport&) const = default;
};

BoundReport check_bound(const Semigroup& s);

// Definition: s-indecomposable, |S| = 4k + 1, and a subsemilattice of size
// 2k + 1 exists.
bool is_b2_combinatorial(const Semigroup& s);

// Principal-factor characterization: S has a zero and every nonzero
// principal factor is isomorphic to B2.
bool is_b2_combinatorial_via_factors(const Semigroup& s);

// An n-element s-indecomposable semigroup meeting the subsemilattice bound:
// with n = 4k + 1 + l (0 <= l < 4), l applications of the z' extension to
// times0(chain(k+1), b2()).  Y is the surviving copy of chain x {a, d} plus
// the zero, of size 2*floor((n-1)/4) + 1.
struct ExtremalWitness {
  Semigroup s;
  Subset y;
};

ExtremalWitness extremal_witness(int n);

// Hereditary properties of a B2-combinatorial semigroup: (i) a zero exists;
// (ii) the algebra summary is (4k+1, 0, k+1, 1) with numerical blocks
// {1, 2 x k}; (iii) every ideal, as a semigroup, is B2-combinatorial;
// (iv) every congruence quotient is B2-combinatorial (|S| <= 10).
struct B2cReport {
  int k = 0;
  bool has_zero = false;
  AlgebraSummary algebra;
  bool algebra_ok = false;
  std::vector<int> blocks;
  bool blocks_ok = false;
  int ideals_checked = 0;
  bool ideals_ok = false;
  int quotients_checked = 0;
  bool quotients_ok = false;

  bool all_ok() const { return has_zero && algebra_ok && blocks_ok && ideals_ok && quotients_ok; }
};

B2cReport verify_b2c(const Semigroup& s, std::uint64_t seed = 0);

// Does every element x have a unique y with xyx = x and yxy = y?
bool is_inverse_semigroup(const Semigroup& s);

}  // namespace semilab

#endif  // SEMILAB_LATTICE_HPP_
