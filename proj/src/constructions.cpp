#include "semilab/constructions.hpp"

#include <algorithm>
#include <map>

#include "semilab/indecomposable.hpp"

namespace semilab {

int Semilattice::bottom() const {
  int b = 0;
  for (int x = 1; x < size(); ++x) b = meet(b, x);
  return b;
}

bool is_semilattice(const Semigroup& s) {
  for (int x = 0; x < s.size(); ++x) {
    if (s.at(x, x) != x) return false;
    for (int y = x + 1; y < s.size(); ++y)
      if (s.at(x, y) != s.at(y, x)) return false;
  }
  return true;
}

Semilattice as_semilattice(const Semigroup& s) {
  if (!is_semilattice(s))
    throw FormatError("table is not commutative and idempotent");
  return Semilattice{s};
}

namespace {

// Locate the identity of a candidate group and check the group axioms.
int check_group(const Semigroup& g, int declared_identity) {
  int e = -1;
  for (int x = 0; x < g.size() && e < 0; ++x) {
    bool ident = true;
    for (int y = 0; y < g.size() && ident; ++y)
      ident = g.at(x, y) == y && g.at(y, x) == y;
    if (ident) e = x;
  }
  if (e < 0) throw NotAGroup("no identity element");
  if (e != declared_identity) throw NotAGroup("declared identity is wrong");
  for (int x = 0; x < g.size(); ++x) {
    bool invertible = false;
    for (int y = 0; y < g.size() && !invertible; ++y)
      invertible = g.at(x, y) == e && g.at(y, x) == e;
    if (!invertible)
      throw NotAGroup("element " + std::to_string(x) + " has no inverse");
  }
  return e;
}

}  // namespace

Semigroup rees_matrix(const ReesMatrixSpec& spec) {
  check_group(spec.group, spec.identity);
  const int n = static_cast<int>(spec.sandwich.size());  // |Lambda|
  if (n == 0) throw FormatError("empty sandwich matrix");
  const int m = static_cast<int>(spec.sandwich[0].size());  // |I|
  for (const auto& row : spec.sandwich)
    if (static_cast<int>(row.size()) != m)
      throw FormatError("ragged sandwich matrix");
  for (int l = 0; l < n; ++l) {
    bool nonzero = false;
    for (int i = 0; i < m; ++i) nonzero = nonzero || spec.sandwich[l][i] >= 0;
    if (!nonzero) throw IrregularSandwich(true, l);
  }
  for (int i = 0; i < m; ++i) {
    bool nonzero = false;
    for (int l = 0; l < n; ++l) nonzero = nonzero || spec.sandwich[l][i] >= 0;
    if (!nonzero) throw IrregularSandwich(false, i);
  }
  const int gs = spec.group.size();
  const int size = gs * n * m + 1;
  // (g; i, lambda) at index 1 + (i*n + lambda)*|G| + g; 0 is the zero.
  auto id_of = [&](int g, int i, int lambda) {
    return 1 + (i * n + lambda) * gs + g;
  };
  std::vector<std::vector<int>> table(size, std::vector<int>(size, 0));
  for (int g = 0; g < gs; ++g)
    for (int i = 0; i < m; ++i)
      for (int l = 0; l < n; ++l)
        for (int h = 0; h < gs; ++h)
          for (int j = 0; j < m; ++j)
            for (int mu = 0; mu < n; ++mu) {
              const int p = spec.sandwich[l][j];
              if (p < 0) continue;
              table[id_of(g, i, l)][id_of(h, j, mu)] =
                  id_of(spec.group.at(spec.group.at(g, p), h), i, mu);
            }
  return Semigroup::validate(table);
}

Semigroup b2() {
  return Semigroup::validate({{0, 0, 0, 0, 0},
                              {0, 1, 2, 0, 0},
                              {0, 0, 0, 1, 2},
                              {0, 3, 4, 0, 0},
                              {0, 0, 0, 3, 4}});
}

Semigroup brandt(int n) {
  if (n < 1) throw FormatError("brandt(n) needs n >= 1");
  const Semigroup trivial = Semigroup::validate({{0}});
  std::vector<std::vector<int>> p(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i) p[i][i] = 0;
  return rees_matrix({trivial, 0, p});
}

Semigroup b2_companion() {
  const Semigroup trivial = Semigroup::validate({{0}});
  return rees_matrix({trivial, 0, {{0, 0}, {-1, 0}}});
}

Semigroup times0(const Semigroup& a, const Semigroup& b) {
  if (!a.zero()) throw NoZeroElement("left factor of times0");
  if (!b.zero()) throw NoZeroElement("right factor of times0");
  const Semigroup prod = direct_product(a, b);
  Subset cross;
  for (int j = 0; j < b.size(); ++j) cross.push_back(*a.zero() * b.size() + j);
  for (int i = 0; i < a.size(); ++i) cross.push_back(i * b.size() + *b.zero());
  std::sort(cross.begin(), cross.end());
  cross.erase(std::unique(cross.begin(), cross.end()), cross.end());
  return rees_quotient(prod, cross).quotient;
}

Semigroup adjoin_zero(const Semigroup& s) {
  const int n = s.size();
  std::vector<std::vector<int>> table(n + 1, std::vector<int>(n + 1, n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) table[x][y] = s.at(x, y);
  return Semigroup::validate(table);
}

Semigroup adjoin_zprime(const Semigroup& s) {
  if (!s.zero()) throw NoZeroElement("adjoin_zprime input");
  const int n = s.size(), z = *s.zero();
  std::vector<std::vector<int>> table(n + 1, std::vector<int>(n + 1, z));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) table[x][y] = s.at(x, y);
  // row and column n (the new z') are already all z, including (z')^2
  return Semigroup::validate(table);
}

Embedding embed_indecomposable(const Semigroup& s) {
  const Semigroup s0 = adjoin_zero(s);
  const Semigroup t = b2();
  const Semigroup prod = direct_product(s0, t);
  Subset cross;
  for (int j = 0; j < t.size(); ++j) cross.push_back(*s0.zero() * t.size() + j);
  for (int i = 0; i < s0.size(); ++i) cross.push_back(i * t.size() + *t.zero());
  std::sort(cross.begin(), cross.end());
  cross.erase(std::unique(cross.begin(), cross.end()), cross.end());
  QuotientResult q = rees_quotient(prod, cross);

  Morphism embed{s.size(), q.quotient.size(), std::vector<int>(s.size())};
  for (int x = 0; x < s.size(); ++x)
    embed.map[x] = q.map.map[x * t.size() + 1];  // (x, a), a = idempotent 1
  if (!is_morphism(embed, s, q.quotient) || !is_injective(embed))
    throw InternalError("embedding into times0(S^0, B2) failed verification");
  if (!is_s_indecomposable_graph(q.quotient))
    throw InternalError("times0(S^0, B2) is not s-indecomposable");
  return {std::move(q.quotient), std::move(embed)};
}

Semilattice chain(int n) {
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) table[x][y] = std::min(x, y);
  return Semilattice{Semigroup::validate(table)};
}

namespace {

// Meet table of a forest order given by parent links (bottom = 0).
Semilattice from_parents(const std::vector<int>& parent) {
  const int n = static_cast<int>(parent.size());
  std::vector<std::vector<bool>> below(n, std::vector<bool>(n, false));
  for (int x = 0; x < n; ++x) {
    int cur = x;
    below[x][x] = true;
    while (parent[cur] != cur) {
      cur = parent[cur];
      below[x][cur] = true;  // cur <= ... well, cur is an ancestor: cur <= x
    }
  }
  // below[x][y] now means y <= x; meets exist because down-sets are chains.
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int best = -1, best_depth = -1;
      for (int c = 0; c < n; ++c) {
        if (!below[x][c] || !below[y][c]) continue;
        int depth = 0;
        for (int d = 0; d < n; ++d) depth += below[c][d];
        if (depth > best_depth) {
          best = c;
          best_depth = depth;
        }
      }
      table[x][y] = best;
    }
  return Semilattice{Semigroup::validate(table)};
}

}  // namespace

Semilattice named_semilattice(const std::string& name) {
  if (name == "C3") return chain(3);
  if (name == "V") return from_parents({0, 0, 0});
  if (name == "U") return from_parents({0, 0, 0, 1, 2});
  if (name == "F") return from_parents({0, 0, 0, 2, 2});
  if (name == "X") return from_parents({0, 0, 0, 0, 0});
  throw FormatError("unknown semilattice name: " + name);
}

namespace {

Subset principal_ideal_of(const Semilattice& e, int root) {
  Subset down;
  for (int x = 0; x < e.size(); ++x)
    if (e.leq(x, root)) down.push_back(x);
  return down;
}

// All meet-preserving bijections from the ideal of `dom` onto the ideal of
// `ran`, by backtracking over the ideal's elements.
void collect_isos(const Semilattice& e, int dom, int ran,
                  std::vector<PartialIso>& out) {
  const Subset d = principal_ideal_of(e, dom);
  const Subset r = principal_ideal_of(e, ran);
  if (d.size() != r.size()) return;
  const int k = static_cast<int>(d.size());
  std::vector<int> down_size(e.size(), 0);
  for (int x = 0; x < e.size(); ++x)
    down_size[x] = static_cast<int>(principal_ideal_of(e, x).size());

  std::vector<int> map(e.size(), -1);
  std::vector<bool> used(e.size(), false);
  auto rec = [&](auto&& self, int at) -> void {
    if (at == k) {
      // Full preservation check: map(x ^ y) = map(x) ^ map(y).
      for (int x : d)
        for (int y : d)
          if (map[e.meet(x, y)] != e.meet(map[x], map[y])) return;
      out.push_back(PartialIso{dom, ran, map});
      return;
    }
    const int x = d[at];
    for (int y : r) {
      if (used[y] || down_size[x] != down_size[y]) continue;
      map[x] = y;
      used[y] = true;
      bool ok = true;
      for (int i = 0; i < at && ok; ++i) {
        const int w = d[i];
        const int mxw = map[e.meet(x, w)];
        ok = mxw < 0 || mxw == e.meet(y, map[w]);
      }
      if (ok) self(self, at + 1);
      map[x] = -1;
      used[y] = false;
    }
  };
  rec(rec, 0);
}

}  // namespace

std::vector<PartialIso> munn_elements(const Semilattice& e) {
  constexpr int kLimit = 8;
  if (e.size() > kLimit)
    throw SizeLimitExceeded("Munn semigroup construction", e.size(), kLimit);
  std::vector<PartialIso> elems;
  for (int dom = 0; dom < e.size(); ++dom)
    for (int ran = 0; ran < e.size(); ++ran) collect_isos(e, dom, ran, elems);
  std::sort(elems.begin(), elems.end());
  return elems;
}

Semigroup munn(const Semilattice& e) {
  const std::vector<PartialIso> elems = munn_elements(e);
  std::map<PartialIso, int> index;
  for (int i = 0; i < static_cast<int>(elems.size()); ++i) index[elems[i]] = i;

  const int n = static_cast<int>(elems.size());
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const PartialIso& alpha = elems[i];
      const PartialIso& beta = elems[j];
      // Apply alpha, then beta, through the ideal of w = ran(alpha) ^ dom(beta).
      const int w = e.meet(alpha.ran_root, beta.dom_root);
      int dom = -1;
      for (int x = 0; x < e.size(); ++x)
        if (alpha.map[x] == w) dom = x;
      PartialIso comp{dom, beta.map[w], std::vector<int>(e.size(), -1)};
      for (int x = 0; x < e.size(); ++x)
        if (e.leq(x, dom)) comp.map[x] = beta.map[alpha.map[x]];
      table[i][j] = index.at(comp);
    }
  return Semigroup::validate(table);
}

}  // namespace semilab
