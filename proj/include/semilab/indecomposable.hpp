#ifndef SEMILAB_INDECOMPOSABLE_HPP_
#define SEMILAB_INDECOMPOSABLE_HPP_

#include <optional>
#include <vector>

#include "semilab/algebra.hpp"
#include "semilab/semigroup.hpp"

namespace semilab {

// Divisibility graph: edge x -> y iff some power y^k (k >= 1) lies in the
// principal ideal S^1 x S^1.  A semigroup is semilattice-indecomposable
// exactly when this graph is strongly connected (Tamura's chain condition).
struct DivisibilityGraph {
  int n = 0;
  std::vector<bool> adjacency;  // row-major n*n

  bool edge(int x, int y) const { return adjacency[static_cast<std::size_t>(x) * n + y]; }
};

DivisibilityGraph divisibility_graph(const Semigroup& s);

// Strongly connected components of the divisibility graph, component ids
// numbered so that id(x) is determined by the smallest element per component;
// also the condensation's component order.
struct SccDecomposition {
  std::vector<int> component;  // component id per element
  int num_components = 1;
};

SccDecomposition divisibility_scc(const Semigroup& s);

bool is_s_indecomposable_graph(const Semigroup& s);

// When the graph test says "decomposable", a separating witness: a completely
// prime ideal (complement of a source component of the condensation).
std::optional<Subset> separating_prime_ideal(const Semigroup& s);

// All proper nonempty ideals whose complement is a subsemigroup.
// Guarded at |S| <= 20.
std::vector<Subset> completely_prime_ideals(const Semigroup& s);

// The algebraic criterion: S is s-indecomposable iff the semisimple quotient
// of the rational algebra of S/K_S has exactly one 1-dimensional block.
bool is_s_indecomposable_algebra(const Semigroup& s);

// The summary the algebra criterion decides on (of the algebra of S/K_S).
AlgebraSummary s_indecomposability_summary(const Semigroup& s);

}  // namespace semilab

#endif  // SEMILAB_INDECOMPOSABLE_HPP_
