#include "semilab/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "semilab/errors.hpp"

namespace semilab {

QMat QMat::identity(int n) {
  QMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

QMat mat_mul(const QMat& x, const QMat& y) {
  QMat r(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const Rat& v = x.at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < y.cols; ++j) r.at(i, j) += v * y.at(k, j);
    }
  return r;
}

QMat mat_add(const QMat& x, const QMat& y) {
  QMat r = x;
  for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] += y.a[i];
  return r;
}

QMat mat_sub(const QMat& x, const QMat& y) {
  QMat r = x;
  for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] -= y.a[i];
  return r;
}

Rat mat_trace(const QMat& x) {
  Rat t = 0;
  for (int i = 0; i < x.rows; ++i) t += x.at(i, i);
  return t;
}

QMat mat_stack(const QMat& top, const QMat& bottom) {
  QMat r(top.rows + bottom.rows, top.cols);
  std::copy(top.a.begin(), top.a.end(), r.a.begin());
  std::copy(bottom.a.begin(), bottom.a.end(), r.a.begin() + top.a.size());
  return r;
}

std::vector<int> bareiss_jordan(std::vector<std::vector<Int>>& m, Int& denom) {
  denom = 1;
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  int prow = 0;
  Int prev = 1;
  for (int c = 0; c < cols && prow < rows; ++c) {
    int r = prow;
    while (r < rows && m[r][c] == 0) ++r;
    if (r == rows) continue;
    std::swap(m[r], m[prow]);
    const Int piv = m[prow][c];
    for (int i = 0; i < rows; ++i) {
      if (i == prow) continue;
      for (int j = 0; j < cols; ++j) {
        if (j == c) continue;
        Int t = piv * m[i][j] - m[i][c] * m[prow][j];
        // Exact by the Sylvester identity: t is prev times a minor.
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][c] = 0;
    }
    prev = piv;
    pivots.push_back(c);
    ++prow;
  }
  denom = prev;
  return pivots;
}

namespace {

// Clear denominators row by row and run the fraction-free elimination.
// Returns pivot columns; writes the rational RREF rows into `out`.
std::vector<int> rref_impl(const QMat& m, QMat& out) {
  std::vector<std::vector<Int>> z(m.rows, std::vector<Int>(m.cols));
  for (int i = 0; i < m.rows; ++i) {
    Int lcm = 1;
    for (int j = 0; j < m.cols; ++j)
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m.at(i, j).get_den().get_mpz_t());
    for (int j = 0; j < m.cols; ++j) {
      Rat v = m.at(i, j) * Rat(lcm);
      z[i][j] = v.get_num();  // v has denominator 1
    }
  }
  Int denom;
  std::vector<int> pivots = bareiss_jordan(z, denom);
  const int r = static_cast<int>(pivots.size());
  out = QMat(r, m.cols);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < m.cols; ++j) {
      Rat v(z[i][j], denom);
      v.canonicalize();
      out.at(i, j) = v;
    }
  return pivots;
}

}  // namespace

QMat rref(const QMat& m) {
  QMat out;
  rref_impl(m, out);
  return out;
}

int rank(const QMat& m) {
  QMat out;
  return static_cast<int>(rref_impl(m, out).size());
}

QMat kernel_basis(const QMat& m) {
  QMat r;
  std::vector<int> pivots = rref_impl(m, r);
  std::vector<bool> is_pivot(m.cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < m.cols; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  QMat k(static_cast<int>(free_cols.size()), m.cols);
  for (int v = 0; v < k.rows; ++v) {
    const int f = free_cols[v];
    k.at(v, f) = 1;
    for (int i = 0; i < r.rows; ++i) k.at(v, pivots[i]) = -r.at(i, f);
  }
  return rref(k);
}

bool in_row_space(const QMat& basis, const std::vector<Rat>& v) {
  QMat row(1, basis.cols);
  for (int j = 0; j < basis.cols; ++j) row.at(0, j) = v[j];
  return rank(mat_stack(basis, row)) == rank(basis);
}

std::vector<Rat> char_poly(const QMat& m) {
  const int n = m.rows;
  std::vector<Rat> c(n + 1, Rat(0));
  c[n] = 1;
  QMat mk = QMat::identity(n);  // M_0 = I
  for (int k = 1; k <= n; ++k) {
    mk = mat_mul(m, mk);
    Rat ck = -mat_trace(mk) / k;
    c[n - k] = ck;
    for (int i = 0; i < n; ++i) mk.at(i, i) += ck;
  }
  return c;
}

int poly_deg(const QPoly& p) { return static_cast<int>(p.size()) - 1; }

QPoly poly_trim(QPoly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

QPoly poly_derivative(const QPoly& p) {
  QPoly d;
  for (int i = 1; i < static_cast<int>(p.size()); ++i) d.push_back(p[i] * i);
  return poly_trim(std::move(d));
}

QPoly poly_monic(const QPoly& p) {
  QPoly q = poly_trim(p);
  if (q.empty()) return q;
  const Rat lead = q.back();
  for (Rat& c : q) c /= lead;
  return q;
}

QPoly poly_mul(const QPoly& p, const QPoly& q) {
  if (p.empty() || q.empty()) return {};
  QPoly r(p.size() + q.size() - 1, Rat(0));
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j) r[i + j] += p[i] * q[j];
  return poly_trim(std::move(r));
}

std::pair<QPoly, QPoly> poly_divmod(const QPoly& p, const QPoly& q) {
  QPoly rem = poly_trim(p), quot;
  const QPoly d = poly_trim(q);
  if (d.empty()) throw InternalError("polynomial division by zero");
  if (rem.size() < d.size()) return {QPoly{}, rem};
  quot.assign(rem.size() - d.size() + 1, Rat(0));
  while (!rem.empty() && rem.size() >= d.size()) {
    Rat f = rem.back() / d.back();
    const std::size_t shift = rem.size() - d.size();
    quot[shift] = f;
    for (std::size_t i = 0; i < d.size(); ++i) rem[shift + i] -= f * d[i];
    rem = poly_trim(std::move(rem));  // leading term cancels exactly
  }
  return {poly_trim(std::move(quot)), rem};
}

QPoly poly_gcd(QPoly p, QPoly q) {
  p = poly_trim(std::move(p));
  q = poly_trim(std::move(q));
  while (!q.empty()) {
    QPoly r = poly_divmod(p, q).second;
    p = std::move(q);
    q = poly_monic(r);  // normalize each step to keep coefficients tame
  }
  return poly_monic(p);
}

std::vector<std::pair<QPoly, int>> squarefree_decomposition(const QPoly& p0) {
  std::vector<std::pair<QPoly, int>> out;
  QPoly p = poly_monic(p0);
  if (poly_deg(p) < 1) return out;
  // Yun's algorithm.
  QPoly dp = poly_derivative(p);
  QPoly u = poly_gcd(p, dp);
  QPoly v = poly_divmod(p, u).first;
  QPoly w = poly_divmod(dp, u).first;
  int mult = 1;
  while (poly_deg(v) >= 1) {
    QPoly wv = poly_trim([&] {
      QPoly d = w;
      QPoly vv = poly_derivative(v);
      d.resize(std::max(d.size(), vv.size()), Rat(0));
      for (std::size_t i = 0; i < vv.size(); ++i) d[i] -= vv[i];
      return d;
    }());
    QPoly g = poly_gcd(v, wv);
    if (poly_deg(g) >= 1) out.emplace_back(g, mult);
    v = poly_divmod(v, g).first;
    w = poly_divmod(wv, g).first;
    ++mult;
  }
  return out;
}

std::vector<std::complex<double>> poly_roots(const QPoly& p0) {
  const QPoly p = poly_monic(p0);
  const int n = poly_deg(p);
  std::vector<std::complex<double>> roots;
  if (n <= 0) return roots;
  std::vector<std::complex<double>> c(n + 1);
  for (int i = 0; i <= n; ++i) c[i] = p[i].get_d();
  double radius = 0.0;
  for (int i = 0; i < n; ++i) radius = std::max(radius, std::abs(c[i]));
  radius = 1.0 + radius;
  roots.resize(n);
  const std::complex<double> seed(0.4, 0.9);
  std::complex<double> acc(1.0, 0.0);
  for (int i = 0; i < n; ++i) {
    acc *= seed;
    roots[i] = radius * acc;
  }
  auto eval = [&](std::complex<double> x) {
    std::complex<double> v = 0.0;
    for (int i = n; i >= 0; --i) v = v * x + c[i];
    return v;
  };
  for (int iter = 0; iter < 1000; ++iter) {
    double moved = 0.0;
    for (int i = 0; i < n; ++i) {
      std::complex<double> den(1.0, 0.0);
      for (int j = 0; j < n; ++j)
        if (j != i) den *= roots[i] - roots[j];
      if (std::abs(den) == 0.0) den = 1e-30;
      std::complex<double> delta = eval(roots[i]) / den;
      roots[i] -= delta;
      moved = std::max(moved, std::abs(delta));
    }
    if (moved < 1e-14 * radius) break;
  }
  return roots;
}

}  // namespace semilab
