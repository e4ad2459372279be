#ifndef SEMILAB_CONSTRUCTIONS_HPP_
#define SEMILAB_CONSTRUCTIONS_HPP_

#include <string>
#include <vector>

#include "semilab/semigroup.hpp"

namespace semilab {

// A semigroup that is commutative and idempotent, with the derived meet
// order x <= y iff xy = x.
struct Semilattice {
  Semigroup sg;

  int size() const { return sg.size(); }
  int meet(int x, int y) const { return sg.at(x, y); }
  bool leq(int x, int y) const { return sg.at(x, y) == x; }
  // The least element (every finite semilattice has one).
  int bottom() const;
};

bool is_semilattice(const Semigroup& s);
// Throws FormatError when the table is not a semilattice.
Semilattice as_semilattice(const Semigroup& s);

// Rees matrix semigroup data M^0(G; n, m; P) over a group with a zero
// adjoined.  Elements are (g; i, lambda) with i in 0..m-1 and lambda in
// 0..n-1, plus a zero; P is the n x m sandwich matrix (rows indexed by
// lambda, columns by i) with entries group elements or -1 for zero, and
//   (g; i, lambda) (h; j, mu) = (g p[lambda][j] h; i, mu)   if p != 0,
// zero otherwise.  Regularity: every row and column of P has a nonzero
// entry.
struct ReesMatrixSpec {
  Semigroup group;
  int identity = 0;                    // identity element of the group
  std::vector<std::vector<int>> sandwich;  // n rows, m columns, -1 = zero
};

// Throws NotAGroup / IrregularSandwich.
Semigroup rees_matrix(const ReesMatrixSpec& spec);

// The 5-element Brandt semigroup B2 = M^0(1; 2, 2; I) in its reference
// numbering: 0 = zero, 1 = a, 2 = b, 3 = c, 4 = d, idempotents {0, 1, 4}.
Semigroup b2();

// M^0(1; n, n; I): the Brandt semigroup over the trivial group, n^2 + 1
// elements, n + 1 idempotents.
Semigroup brandt(int n);

// The only 5-element s-indecomposable semigroup with two commuting
// idempotents besides B2: M^0(1; 2, 2; P) with P = [[1, 1], [0, 1]].
Semigroup b2_companion();

// Rees quotient of A x B by the cross ideal ({z_A} x B) u (A x {z_B}).
// Both factors must have zeros; size (|A|-1)(|B|-1) + 1.
Semigroup times0(const Semigroup& a, const Semigroup& b);

// S with a fresh absorbing element appended (always appended, even when S
// already has a zero).
Semigroup adjoin_zero(const Semigroup& s);

// S with an extra element z' satisfying z'x = xz' = (z')^2 = z.  Preserves
// s-indecomposability and adds exactly one radical dimension.
Semigroup adjoin_zprime(const Semigroup& s);

// Embedding of an arbitrary finite S into the s-indecomposable semigroup
// times0(adjoin_zero(S), b2()) of size 4|S| + 1, via s -> class of (s, a)
// with a the first nonzero idempotent of b2().
struct Embedding {
  Semigroup target;
  Morphism map;
};
Embedding embed_indecomposable(const Semigroup& s);

// Meet chain 0 < 1 < ... < n-1.
Semilattice chain(int n);

// The five named semilattices: C3 (3-chain), V (bottom + 2 atoms),
// U (bottom, atoms 1 and 2, 3 above 1, 4 above 2),
// F (bottom, atoms 1 and 2, 3 and 4 both above 2),
// X (bottom + 4 atoms).  Bottom is element 0 throughout.
Semilattice named_semilattice(const std::string& name);

// An isomorphism between two principal ideals of a semilattice: map[x] is
// defined (>= 0) exactly on the ideal of dom_root and carries it onto the
// ideal of ran_root.
struct PartialIso {
  int dom_root = 0;
  int ran_root = 0;
  std::vector<int> map;

  auto operator<=>(const PartialIso&) const = default;
};

// The Munn semigroup T_E: all isomorphisms between principal ideals of E
// under composition of partial maps.  Composition acts on the right: (ab)
// means "apply a, then b", restricted to the principal ideal where the
// composite is defined; the opposite convention yields the anti-isomorphic
// semigroup.  Elements are ordered by (dom_root, ran_root, map graph), so
// the identity on the bottom ideal -- the zero -- is element 0.
// Guarded at |E| <= 8.
Semigroup munn(const Semilattice& e);

// The elements of munn(e) in table order, for tests and diagnostics.
std::vector<PartialIso> munn_elements(const Semilattice& e);

}  // namespace semilab

#endif  // SEMILAB_CONSTRUCTIONS_HPP_
