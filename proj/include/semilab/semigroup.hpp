#ifndef SEMILAB_SEMIGROUP_HPP_
#define SEMILAB_SEMIGROUP_HPP_

#include <optional>
#include <string>
#include <vector>

#include "semilab/errors.hpp"

namespace semilab {

// Sorted set of element indices of some semigroup.
using Subset = std::vector<int>;

// A finite semigroup given by its Cayley table.  Instances are validated on
// construction (associativity, zero consistency) and immutable afterwards,
// so they can be shared freely between threads.
//
// Elements are the indices 0..n-1; entry (x, y) of the table is the product
// x*y.  The zero, if the semigroup has one, is detected automatically.
class Semigroup {
 public:
  // Throws AssociativityError / ZeroError / FormatError on bad input.  A
  // declared zero is checked against the table, never trusted.
  static Semigroup validate(const std::vector<std::vector<int>>& table,
                            std::optional<int> declared_zero = std::nullopt);

  int size() const { return n_; }
  int at(int x, int y) const { return t_[static_cast<std::size_t>(x) * n_ + y]; }
  const std::optional<int>& zero() const { return zero_; }

  std::vector<std::vector<int>> table() const;
  // Row-major table as a flat vector; doubles as a comparison key.
  const std::vector<int>& flat() const { return t_; }

  bool operator==(const Semigroup&) const = default;

 private:
  Semigroup(int n, std::vector<int> t, std::optional<int> z)
      : n_(n), t_(std::move(t)), zero_(z) {}

  int n_ = 0;
  std::vector<int> t_;
  std::optional<int> zero_;
};

// A homomorphism between two concrete semigroups: map[x] is the image of x.
struct Morphism {
  int source_size = 0;
  int target_size = 0;
  std::vector<int> map;
};

bool is_morphism(const Morphism& f, const Semigroup& source, const Semigroup& target);
bool is_injective(const Morphism& f);
bool is_bijective(const Morphism& f);

// A congruence as a partition of 0..n-1: cls[x] is the class of x, class ids
// numbered 0..num_classes-1 in order of first occurrence.
struct Congruence {
  std::vector<int> cls;
  int num_classes = 0;

  bool operator==(const Congruence&) const = default;
};

// Does the partition respect products?  (x ~ x' implies xy ~ x'y and yx ~ yx'.)
bool is_congruence(const Semigroup& s, const Congruence& c);

// Result of a quotient construction: the quotient semigroup together with the
// canonical surjection.
struct QuotientResult {
  Semigroup quotient;
  Morphism map;
};

// Result of an isomorphism search.  When no isomorphism exists, `obstruction`
// names the first distinguishing invariant that separated the two inputs
// ("exhausted search" if none did).
struct IsoResult {
  std::optional<Morphism> iso;
  std::string obstruction;

  explicit operator bool() const { return iso.has_value(); }
};

// --- core operations -------------------------------------------------------

// Elements x with x*x = x.
Subset idempotents(const Semigroup& s);

// Least ideal containing `seed` (i.e. S^1 A S^1).  Throws EmptyInput.
Subset ideal_generated(const Semigroup& s, const Subset& seed);

// Is `i` a two-sided ideal?  (Nonempty and absorbing on both sides.)
bool is_ideal(const Semigroup& s, const Subset& i);

// The unique minimal ideal.
Subset kernel(const Semigroup& s);

// Collapse the ideal `ideal` to a single zero.  Surviving elements keep
// their relative order, the new zero sits at index 0.  Throws NotAnIdeal.
QuotientResult rees_quotient(const Semigroup& s, const Subset& ideal);

// Componentwise product on pairs, pair (i, j) at index i*|B| + j.
Semigroup direct_product(const Semigroup& a, const Semigroup& b);

// Restrict the table to a subsemigroup (caller guarantees closure; checked).
// Elements are renumbered in the order they appear in `members`.
Semigroup subsemigroup(const Semigroup& s, const Subset& members);

bool is_subsemigroup(const Semigroup& s, const Subset& members);

// Backtracking isomorphism search over invariant-refined candidate classes.
IsoResult find_isomorphism(const Semigroup& a, const Semigroup& b);

// All congruences of s, deterministically ordered (restricted-growth-string
// order of their partitions).  Guarded at |S| <= 10; throws SizeLimitExceeded.
std::vector<Congruence> congruences(const Semigroup& s);

// Factor semigroup S/alpha plus the canonical surjection.
QuotientResult quotient(const Semigroup& s, const Congruence& alpha);

// The congruence induced by a surjective-onto-its-image map.
Congruence kernel_partition(const Morphism& f);

// All ideals of s, as sorted subsets in deterministic order.  Every ideal is
// a union of principal ideals, so the family is generated by closing the
// principal ideals under union.  Guarded at |S| <= 20.
std::vector<Subset> all_ideals(const Semigroup& s);

}  // namespace semilab

#endif  // SEMILAB_SEMIGROUP_HPP_
