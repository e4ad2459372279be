#include "semilab/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "semilab/errors.hpp"
#include "semilab/util.hpp"

namespace semilab {

RationalAlgebra::RationalAlgebra(int dim, std::vector<Rat> sc,
                                 std::vector<std::string> labels)
    : dim_(dim), sc_(std::move(sc)), labels_(std::move(labels)) {
  if (sc_.size() != static_cast<std::size_t>(dim) * dim * dim)
    throw InternalError("structure constant array has wrong size");
  if (labels_.empty()) {
    for (int i = 0; i < dim; ++i) labels_.push_back("e" + std::to_string(i));
  }
}

QMat RationalAlgebra::left_mul_basis(int i) const {
  QMat m(dim_, dim_);
  for (int j = 0; j < dim_; ++j)
    for (int k = 0; k < dim_; ++k) m.at(k, j) = sc(i, j, k);
  return m;
}

QMat RationalAlgebra::right_mul_basis(int i) const {
  QMat m(dim_, dim_);
  for (int j = 0; j < dim_; ++j)
    for (int k = 0; k < dim_; ++k) m.at(k, j) = sc(j, i, k);
  return m;
}

QMat RationalAlgebra::left_mul(const std::vector<Rat>& x) const {
  QMat m(dim_, dim_);
  for (int i = 0; i < dim_; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < dim_; ++j)
      for (int k = 0; k < dim_; ++k) m.at(k, j) += x[i] * sc(i, j, k);
  }
  return m;
}

QMat RationalAlgebra::right_mul(const std::vector<Rat>& x) const {
  QMat m(dim_, dim_);
  for (int i = 0; i < dim_; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < dim_; ++j)
      for (int k = 0; k < dim_; ++k) m.at(k, j) += x[i] * sc(j, i, k);
  }
  return m;
}

std::vector<Rat> RationalAlgebra::product(const std::vector<Rat>& x,
                                          const std::vector<Rat>& y) const {
  std::vector<Rat> out(dim_, Rat(0));
  for (int i = 0; i < dim_; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < dim_; ++j) {
      if (y[j] == 0) continue;
      const Rat f = x[i] * y[j];
      for (int k = 0; k < dim_; ++k) out[k] += f * sc(i, j, k);
    }
  }
  return out;
}

bool RationalAlgebra::associative() const {
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      for (int l = 0; l < dim_; ++l) {
        // (e_i e_j) e_l vs e_i (e_j e_l), coordinate by coordinate
        for (int m = 0; m < dim_; ++m) {
          Rat lhs = 0, rhs = 0;
          for (int k = 0; k < dim_; ++k) {
            lhs += sc(i, j, k) * sc(k, l, m);
            rhs += sc(j, l, k) * sc(i, k, m);
          }
          if (lhs != rhs) return false;
        }
      }
  return true;
}

bool Subspace::contains(const std::vector<Rat>& v) const {
  return in_row_space(basis, v);
}

RationalAlgebra semigroup_algebra(const Semigroup& s) {
  const int d = s.size();
  std::vector<Rat> sc(static_cast<std::size_t>(d) * d * d, Rat(0));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      sc[(static_cast<std::size_t>(i) * d + j) * d + s.at(i, j)] = 1;
  std::vector<std::string> labels;
  for (int i = 0; i < d; ++i) labels.push_back("s" + std::to_string(i));
  return RationalAlgebra(d, std::move(sc), std::move(labels));
}

RationalAlgebra contracted_algebra(const Semigroup& s) {
  if (!s.zero()) throw NoZeroElement("contracted_algebra input");
  const int z = *s.zero();
  const int d = s.size() - 1;  // zero-dimensional for the trivial semigroup
  std::vector<int> idx(s.size(), -1);
  std::vector<std::string> labels;
  int next = 0;
  for (int x = 0; x < s.size(); ++x)
    if (x != z) {
      idx[x] = next++;
      labels.push_back("s" + std::to_string(x));
    }
  std::vector<Rat> sc(static_cast<std::size_t>(d) * d * d, Rat(0));
  for (int x = 0; x < s.size(); ++x) {
    if (x == z) continue;
    for (int y = 0; y < s.size(); ++y) {
      if (y == z) continue;
      const int p = s.at(x, y);
      if (p != z)
        sc[(static_cast<std::size_t>(idx[x]) * d + idx[y]) * d + idx[p]] = 1;
    }
  }
  return RationalAlgebra(d, std::move(sc), std::move(labels));
}

Subspace radical(const RationalAlgebra& a) {
  const int d = a.dim();
  // Gram matrix of the trace form: g[i][j] = trace(L_{e_i} L_{e_j})
  //                                        = trace(L_{e_i e_j}).
  std::vector<Rat> trace_l(d, Rat(0));
  for (int k = 0; k < d; ++k)
    for (int j = 0; j < d; ++j) trace_l[k] += a.sc(k, j, j);
  QMat gram(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Rat t = 0;
      for (int k = 0; k < d; ++k) {
        const Rat& c = a.sc(i, j, k);
        if (c != 0) t += c * trace_l[k];
      }
      gram.at(i, j) = t;
    }
  return Subspace{d, kernel_basis(gram)};
}

std::vector<Rat> reduce_mod(const Subspace& sub, std::vector<Rat> v) {
  for (int r = 0; r < sub.basis.rows; ++r) {
    int pivot = -1;
    for (int c = 0; c < sub.basis.cols; ++c)
      if (sub.basis.at(r, c) != 0) {
        pivot = c;
        break;
      }
    if (pivot < 0) continue;
    const Rat f = v[pivot] / sub.basis.at(r, pivot);
    if (f == 0) continue;
    for (int c = 0; c < sub.basis.cols; ++c) v[c] -= f * sub.basis.at(r, c);
  }
  return v;
}

RationalAlgebra quotient_algebra(const RationalAlgebra& a, const Subspace& ideal) {
  const int d = a.dim();
  std::vector<bool> is_pivot(d, false);
  for (int r = 0; r < ideal.basis.rows; ++r)
    for (int c = 0; c < d; ++c)
      if (ideal.basis.at(r, c) != 0) {
        is_pivot[c] = true;
        break;
      }
  std::vector<int> free_cols;
  std::vector<std::string> labels;
  for (int c = 0; c < d; ++c)
    if (!is_pivot[c]) {
      free_cols.push_back(c);
      labels.push_back(a.basis_labels()[c]);
    }
  const int q = static_cast<int>(free_cols.size());
  std::vector<Rat> sc(static_cast<std::size_t>(q) * q * q, Rat(0));
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) {
      std::vector<Rat> prod(d, Rat(0));
      for (int k = 0; k < d; ++k) prod[k] = a.sc(free_cols[i], free_cols[j], k);
      prod = reduce_mod(ideal, std::move(prod));
      for (int k = 0; k < q; ++k)
        sc[(static_cast<std::size_t>(i) * q + j) * q + k] = prod[free_cols[k]];
    }
  return RationalAlgebra(q, std::move(sc), std::move(labels));
}

Subspace center(const RationalAlgebra& a) {
  const int d = a.dim();
  if (d == 0) return Subspace{0, QMat(0, 0)};
  QMat sys(0, d);
  for (int j = 0; j < d; ++j)
    sys = mat_stack(sys, mat_sub(a.right_mul_basis(j), a.left_mul_basis(j)));
  return Subspace{d, kernel_basis(sys)};
}

Subspace commutator_ideal(const RationalAlgebra& a) {
  const int d = a.dim();
  QMat span(0, d);
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      QMat row(1, d);
      for (int k = 0; k < d; ++k) row.at(0, k) = a.sc(i, j, k) - a.sc(j, i, k);
      span = mat_stack(span, row);
    }
  span = rref(span);
  // Close under multiplication by basis elements on both sides.
  for (;;) {
    QMat bigger = span;
    for (int r = 0; r < span.rows; ++r) {
      std::vector<Rat> v(d);
      for (int c = 0; c < d; ++c) v[c] = span.at(r, c);
      for (int i = 0; i < d; ++i) {
        std::vector<Rat> basis_vec(d, Rat(0));
        basis_vec[i] = 1;
        for (const auto& w : {a.product(basis_vec, v), a.product(v, basis_vec)}) {
          QMat row(1, d);
          for (int c = 0; c < d; ++c) row.at(0, c) = w[c];
          bigger = mat_stack(bigger, row);
        }
      }
    }
    bigger = rref(bigger);
    if (bigger.rows == span.rows) break;
    span = std::move(bigger);
  }
  return Subspace{d, span};
}

AlgebraSummary summary(const RationalAlgebra& a) {
  AlgebraSummary s;
  s.dim = a.dim();
  const Subspace j = radical(a);
  s.radical_dim = j.dim();
  const RationalAlgebra q = quotient_algebra(a, j);
  s.num_blocks = center(q).dim();
  s.one_dim_blocks = q.dim() - commutator_ideal(q).dim();
  return s;
}

bool is_two_sided_ideal(const RationalAlgebra& a, const Subspace& sub) {
  const int d = a.dim();
  for (int r = 0; r < sub.basis.rows; ++r) {
    std::vector<Rat> v(d);
    for (int c = 0; c < d; ++c) v[c] = sub.basis.at(r, c);
    for (int i = 0; i < d; ++i) {
      std::vector<Rat> e(d, Rat(0));
      e[i] = 1;
      if (!sub.contains(a.product(e, v))) return false;
      if (!sub.contains(a.product(v, e))) return false;
    }
  }
  return true;
}

bool is_nilpotent_ideal(const RationalAlgebra& a, const Subspace& sub) {
  if (!is_two_sided_ideal(a, sub)) return false;
  QMat power = sub.basis;
  for (int step = 0; step < a.dim() + 1; ++step) {
    if (power.rows == 0) return true;
    QMat next(0, a.dim());
    for (int r = 0; r < power.rows; ++r)
      for (int t = 0; t < sub.basis.rows; ++t) {
        std::vector<Rat> x(a.dim()), y(a.dim());
        for (int c = 0; c < a.dim(); ++c) {
          x[c] = power.at(r, c);
          y[c] = sub.basis.at(t, c);
        }
        const std::vector<Rat> p = a.product(x, y);
        QMat row(1, a.dim());
        for (int c = 0; c < a.dim(); ++c) row.at(0, c) = p[c];
        next = mat_stack(next, row);
      }
    power = rref(next);
  }
  return power.rows == 0;
}

std::vector<int> numerical_block_sizes(const RationalAlgebra& a, std::uint64_t seed) {
  const Subspace j = radical(a);
  const RationalAlgebra q = quotient_algebra(a, j);
  const Subspace z = center(q);
  const int expected_blocks = z.dim();
  const int expected_ones = q.dim() - commutator_ideal(q).dim();
  if (q.dim() == 0) return {};

  SplitMix64 rng(seed);
  constexpr int kMaxRetries = 8;
  constexpr double kTol = 1e-6;
  for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
    std::vector<Rat> c(q.dim(), Rat(0));
    for (int r = 0; r < z.dim(); ++r) {
      const long coeff = static_cast<long>(rng.range(-100, 100));
      for (int k = 0; k < q.dim(); ++k) c[k] += Rat(coeff) * z.basis.at(r, k);
    }
    const QPoly chi = char_poly(q.left_mul(c));
    // Exact multiplicities via square-free decomposition; numerics only
    // locate the distinct eigenvalues.
    std::vector<std::pair<std::complex<double>, int>> eigs;
    for (const auto& [factor, mult] : squarefree_decomposition(chi))
      for (const auto& root : poly_roots(factor)) eigs.emplace_back(root, mult);
    if (eigs.empty()) continue;

    // Cluster eigenvalues within relative tolerance.
    std::sort(eigs.begin(), eigs.end(), [](const auto& x, const auto& y) {
      if (x.first.real() != y.first.real()) return x.first.real() < y.first.real();
      return x.first.imag() < y.first.imag();
    });
    std::vector<int> cluster_mult;
    std::vector<std::complex<double>> cluster_rep;
    for (const auto& [val, mult] : eigs) {
      bool merged = false;
      for (std::size_t i = 0; i < cluster_rep.size() && !merged; ++i) {
        const double scale =
            std::max({1.0, std::abs(val), std::abs(cluster_rep[i])});
        if (std::abs(val - cluster_rep[i]) <= kTol * scale) {
          cluster_mult[i] += mult;
          merged = true;
        }
      }
      if (!merged) {
        cluster_rep.push_back(val);
        cluster_mult.push_back(mult);
      }
    }

    std::vector<int> sizes;
    bool ok = true;
    int total = 0;
    for (int m : cluster_mult) {
      const int n = static_cast<int>(std::lround(std::sqrt(double(m))));
      if (n * n != m) {
        ok = false;
        break;
      }
      sizes.push_back(n);
      total += m;
    }
    if (!ok || total != q.dim()) continue;
    if (static_cast<int>(sizes.size()) != expected_blocks) continue;
    if (std::count(sizes.begin(), sizes.end(), 1) != expected_ones) continue;
    std::sort(sizes.begin(), sizes.end());
    return sizes;
  }
  throw NumericalAmbiguity();
}

}  // namespace semilab
