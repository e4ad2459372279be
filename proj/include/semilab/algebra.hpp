#ifndef SEMILAB_ALGEBRA_HPP_
#define SEMILAB_ALGEBRA_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "semilab/linalg.hpp"
#include "semilab/semigroup.hpp"

namespace semilab {

// A finite-dimensional associative algebra over the rationals, given by
// structure constants: e_i * e_j = sum_k sc(i, j, k) e_k.
//
// All computation here is exact.  Block counts of the semisimple quotient
// are computed over the rationals; both quantities exposed in AlgebraSummary
// (dimension of the center, dimension modulo the commutator ideal) are
// invariant under scalar extension, so they equal the complex block counts.
// Individual complex block sizes need not be rational-visible, which is why
// numerical_block_sizes is a separate, floating-point operation.
class RationalAlgebra {
 public:
  RationalAlgebra(int dim, std::vector<Rat> sc, std::vector<std::string> labels);

  int dim() const { return dim_; }
  const Rat& sc(int i, int j, int k) const {
    return sc_[(static_cast<std::size_t>(i) * dim_ + j) * dim_ + k];
  }
  const std::vector<std::string>& basis_labels() const { return labels_; }

  // Matrix of left multiplication by the coordinate vector x.
  QMat left_mul(const std::vector<Rat>& x) const;
  QMat right_mul(const std::vector<Rat>& x) const;
  QMat left_mul_basis(int i) const;
  QMat right_mul_basis(int i) const;
  std::vector<Rat> product(const std::vector<Rat>& x, const std::vector<Rat>& y) const;

  // Associativity of the induced product on basis triples.
  bool associative() const;

 private:
  int dim_;
  std::vector<Rat> sc_;
  std::vector<std::string> labels_;
};

// A subspace of an algebra, stored as reduced-row-echelon basis rows.
struct Subspace {
  int ambient_dim = 0;
  QMat basis;  // basis.cols == ambient_dim, rows linearly independent

  int dim() const { return basis.rows; }
  bool contains(const std::vector<Rat>& v) const;
};

// Block statistics of A modulo its radical.
struct AlgebraSummary {
  int dim = 0;
  int radical_dim = 0;
  int num_blocks = 0;      // simple summands of A/J(A) over the complex field
  int one_dim_blocks = 0;  // those of dimension 1

  bool operator==(const AlgebraSummary&) const = default;
};

// Structure constants c(i, j, k) = [i*j = k]; dimension |S|.
RationalAlgebra semigroup_algebra(const Semigroup& s);

// Basis = nonzero elements of S, products landing on the zero of S map to
// the zero vector; dimension |S| - 1.  Throws NoZeroElement.
RationalAlgebra contracted_algebra(const Semigroup& s);

// Jacobson radical J(A) = { x : trace(L_x L_y) = 0 for all y }, the kernel
// of the trace form of the left regular representation (valid in
// characteristic zero whether or not A is unital).
Subspace radical(const RationalAlgebra& a);

// Quotient of `a` by a (two-sided ideal) subspace, in the basis of
// non-pivot coordinates.
RationalAlgebra quotient_algebra(const RationalAlgebra& a, const Subspace& ideal);

// Reduce v modulo the subspace (zero out its pivot coordinates).
std::vector<Rat> reduce_mod(const Subspace& sub, std::vector<Rat> v);

AlgebraSummary summary(const RationalAlgebra& a);

// Basis of the center {x : xy = yx for all y}.
Subspace center(const RationalAlgebra& a);

// The two-sided ideal generated by all commutators ab - ba.
Subspace commutator_ideal(const RationalAlgebra& a);

// Complex Wedderburn block sizes {n_i} of A/J(A), recovered numerically:
// a random rational central element acts with eigenvalue multiplicity n_i^2
// on block i.  Eigenvalues are the roots of the exact characteristic
// polynomial's square-free factors; approximations closer than 1e-6
// (relative) are clustered together.  Inconsistent clusterings trigger a
// retry with a fresh central element; after 8 failures NumericalAmbiguity
// is thrown.  Deterministic for a fixed seed.
std::vector<int> numerical_block_sizes(const RationalAlgebra& a, std::uint64_t seed = 0);

// Test helpers: is the subspace a two-sided ideal / nilpotent as an ideal?
bool is_two_sided_ideal(const RationalAlgebra& a, const Subspace& sub);
bool is_nilpotent_ideal(const RationalAlgebra& a, const Subspace& sub);

}  // namespace semilab

#endif  // SEMILAB_ALGEBRA_HPP_
