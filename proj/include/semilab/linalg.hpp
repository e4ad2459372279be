#ifndef SEMILAB_LINALG_HPP_
#define SEMILAB_LINALG_HPP_

#include <complex>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace semilab {

using Int = mpz_class;
using Rat = mpq_class;

// Dense matrix over the exact rationals.
struct QMat {
  int rows = 0, cols = 0;
  std::vector<Rat> a;

  QMat() = default;
  QMat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, Rat(0)) {}

  Rat& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  const Rat& at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }

  static QMat identity(int n);
  bool operator==(const QMat&) const = default;
};

QMat mat_mul(const QMat& x, const QMat& y);
QMat mat_add(const QMat& x, const QMat& y);
QMat mat_sub(const QMat& x, const QMat& y);
Rat mat_trace(const QMat& x);

// Vertically stack two matrices with equal column counts.
QMat mat_stack(const QMat& top, const QMat& bottom);

// Fraction-free Gauss-Jordan elimination (one-step Bareiss) on an integer
// matrix.  On return `m` has zeros everywhere in the pivot columns except the
// pivot entries, which all equal `denom`; dividing by `denom` gives the
// rational reduced row echelon form.  Returns the pivot columns in row order.
std::vector<int> bareiss_jordan(std::vector<std::vector<Int>>& m, Int& denom);

// Reduced row echelon form; zero rows are dropped.
QMat rref(const QMat& m);
int rank(const QMat& m);

// Basis of the right nullspace {x : m x = 0}, one vector per row, in reduced
// row echelon form.  Returns a 0 x cols matrix for a trivial kernel.
QMat kernel_basis(const QMat& m);

// Is v in the row space of `basis`?
bool in_row_space(const QMat& basis, const std::vector<Rat>& v);

// Coefficients of det(x I - m), index i holding the coefficient of x^i
// (monic, degree = m.rows).  Faddeev-LeVerrier over the rationals.
std::vector<Rat> char_poly(const QMat& m);

// Polynomials over the rationals: coeff[i] is the coefficient of x^i, no
// trailing zeros (the zero polynomial is the empty vector).
using QPoly = std::vector<Rat>;

int poly_deg(const QPoly& p);  // -1 for the zero polynomial
QPoly poly_trim(QPoly p);
QPoly poly_derivative(const QPoly& p);
QPoly poly_monic(const QPoly& p);
QPoly poly_mul(const QPoly& p, const QPoly& q);
// Euclidean division p = q * quot + rem; both returned.
std::pair<QPoly, QPoly> poly_divmod(const QPoly& p, const QPoly& q);
// Monic gcd.
QPoly poly_gcd(QPoly p, QPoly q);

// Yun's square-free decomposition: returns pairs (factor, multiplicity) with
// the factors monic, square-free and pairwise coprime, and
// p ~ prod factor^multiplicity up to a constant.
std::vector<std::pair<QPoly, int>> squarefree_decomposition(const QPoly& p);

// All complex roots (with multiplicity deg p) by Durand-Kerner iteration.
// Intended for square-free inputs, where the roots are well separated.
std::vector<std::complex<double>> poly_roots(const QPoly& p);

}  // namespace semilab

#endif  // SEMILAB_LINALG_HPP_
