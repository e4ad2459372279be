#include "semilab/semigroup.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>

namespace semilab {

Semigroup Semigroup::validate(const std::vector<std::vector<int>>& table,
                              std::optional<int> declared_zero) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw FormatError("empty Cayley table");
  std::vector<int> t;
  t.reserve(static_cast<std::size_t>(n) * n);
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n)
      throw FormatError("Cayley table is not square");
    for (int v : row) {
      if (v < 0 || v >= n)
        throw FormatError("table entry " + std::to_string(v) + " out of range");
      t.push_back(v);
    }
  }
  auto prod = [&](int x, int y) { return t[static_cast<std::size_t>(x) * n + y]; };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int xy = prod(x, y);
      for (int z = 0; z < n; ++z)
        if (prod(xy, z) != prod(x, prod(y, z))) throw AssociativityError(x, y, z);
    }

  std::optional<int> zero;
  for (int z = 0; z < n; ++z) {
    bool absorbing = true;
    for (int x = 0; x < n && absorbing; ++x)
      absorbing = prod(z, x) == z && prod(x, z) == z;
    if (absorbing) {
      zero = z;
      break;  // a semigroup has at most one absorbing element
    }
  }
  if (declared_zero) {
    if (!zero || *zero != *declared_zero) {
      int witness = 0;
      for (int x = 0; x < n; ++x)
        if (prod(*declared_zero, x) != *declared_zero ||
            prod(x, *declared_zero) != *declared_zero) {
          witness = x;
          break;
        }
      throw ZeroError(*declared_zero, witness);
    }
  }
  return Semigroup(n, std::move(t), zero);
}

std::vector<std::vector<int>> Semigroup::table() const {
  std::vector<std::vector<int>> rows(n_, std::vector<int>(n_));
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y) rows[x][y] = at(x, y);
  return rows;
}

bool is_morphism(const Morphism& f, const Semigroup& source, const Semigroup& target) {
  if (f.source_size != source.size() || f.target_size != target.size() ||
      static_cast<int>(f.map.size()) != source.size())
    return false;
  for (int v : f.map)
    if (v < 0 || v >= target.size()) return false;
  for (int x = 0; x < source.size(); ++x)
    for (int y = 0; y < source.size(); ++y)
      if (f.map[source.at(x, y)] != target.at(f.map[x], f.map[y])) return false;
  return true;
}

bool is_injective(const Morphism& f) {
  std::vector<bool> seen(f.target_size, false);
  for (int v : f.map) {
    if (seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

bool is_bijective(const Morphism& f) {
  return f.source_size == f.target_size && is_injective(f);
}

bool is_congruence(const Semigroup& s, const Congruence& c) {
  const int n = s.size();
  if (static_cast<int>(c.cls.size()) != n) return false;
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      if (c.cls[x] != c.cls[y]) continue;
      for (int t = 0; t < n; ++t) {
        if (c.cls[s.at(x, t)] != c.cls[s.at(y, t)]) return false;
        if (c.cls[s.at(t, x)] != c.cls[s.at(t, y)]) return false;
      }
    }
  return true;
}

Subset idempotents(const Semigroup& s) {
  Subset e;
  for (int x = 0; x < s.size(); ++x)
    if (s.at(x, x) == x) e.push_back(x);
  return e;
}

Subset ideal_generated(const Semigroup& s, const Subset& seed) {
  if (seed.empty()) throw EmptyInput();
  std::vector<bool> in(s.size(), false);
  std::vector<int> stack;
  for (int x : seed)
    if (!in[x]) {
      in[x] = true;
      stack.push_back(x);
    }
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    for (int y = 0; y < s.size(); ++y)
      for (int p : {s.at(x, y), s.at(y, x)})
        if (!in[p]) {
          in[p] = true;
          stack.push_back(p);
        }
  }
  Subset out;
  for (int x = 0; x < s.size(); ++x)
    if (in[x]) out.push_back(x);
  return out;
}

bool is_ideal(const Semigroup& s, const Subset& i) {
  if (i.empty()) return false;
  std::vector<bool> in(s.size(), false);
  for (int x : i) in[x] = true;
  for (int x : i)
    for (int y = 0; y < s.size(); ++y)
      if (!in[s.at(x, y)] || !in[s.at(y, x)]) return false;
  return true;
}

Subset kernel(const Semigroup& s) {
  // The minimal ideal is the principal ideal of least size; it is contained
  // in every other principal ideal.
  Subset best;
  for (int x = 0; x < s.size(); ++x) {
    Subset j = ideal_generated(s, {x});
    if (best.empty() || j.size() < best.size()) best = std::move(j);
  }
  return best;
}

QuotientResult rees_quotient(const Semigroup& s, const Subset& ideal) {
  if (ideal.empty()) throw EmptyInput();
  std::vector<bool> in(s.size(), false);
  for (int x : ideal) in[x] = true;
  for (int x : ideal)
    for (int y = 0; y < s.size(); ++y) {
      if (!in[s.at(x, y)]) throw NotAnIdeal(x, y);
      if (!in[s.at(y, x)]) throw NotAnIdeal(y, x);
    }

  Morphism f{s.size(), 0, std::vector<int>(s.size(), 0)};
  int next = 1;
  for (int x = 0; x < s.size(); ++x)
    if (!in[x]) f.map[x] = next++;
  const int m = next;
  f.target_size = m;
  std::vector<int> rep(m, ideal.front());
  for (int x = 0; x < s.size(); ++x)
    if (!in[x]) rep[f.map[x]] = x;
  std::vector<std::vector<int>> table(m, std::vector<int>(m, 0));
  for (int a = 1; a < m; ++a)
    for (int b = 1; b < m; ++b) table[a][b] = f.map[s.at(rep[a], rep[b])];
  return {Semigroup::validate(table), std::move(f)};
}

Semigroup direct_product(const Semigroup& a, const Semigroup& b) {
  const int n = a.size() * b.size();
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < b.size(); ++j)
      for (int k = 0; k < a.size(); ++k)
        for (int l = 0; l < b.size(); ++l)
          table[i * b.size() + j][k * b.size() + l] =
              a.at(i, k) * b.size() + b.at(j, l);
  return Semigroup::validate(table);
}

bool is_subsemigroup(const Semigroup& s, const Subset& members) {
  if (members.empty()) return false;
  std::vector<bool> in(s.size(), false);
  for (int x : members) in[x] = true;
  for (int x : members)
    for (int y : members)
      if (!in[s.at(x, y)]) return false;
  return true;
}

Semigroup subsemigroup(const Semigroup& s, const Subset& members) {
  std::vector<int> idx(s.size(), -1);
  for (int i = 0; i < static_cast<int>(members.size()); ++i) idx[members[i]] = i;
  const int m = static_cast<int>(members.size());
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const int p = s.at(members[i], members[j]);
      if (idx[p] < 0) throw NotAnIdeal(members[i], members[j]);
      table[i][j] = idx[p];
    }
  return Semigroup::validate(table);
}

namespace {

// Iterated invariant refinement of element colors, shared by the
// isomorphism search and (as a quick reject) by canonicalization.
std::vector<int> refine_colors(const Semigroup& s) {
  const int n = s.size();
  std::vector<int> color(n, 0);
  for (int x = 0; x < n; ++x) color[x] = s.at(x, x) == x ? 1 : 0;
  for (int round = 0; round < n; ++round) {
    // Signature: own color plus the sorted multiset of (color(y), color(xy),
    // color(yx)) over all y.
    std::vector<std::vector<int>> sig(n);
    for (int x = 0; x < n; ++x) {
      std::vector<int> parts;
      parts.reserve(3 * n + 1);
      std::vector<std::array<int, 3>> rows;
      rows.reserve(n);
      for (int y = 0; y < n; ++y)
        rows.push_back({color[y], color[s.at(x, y)], color[s.at(y, x)]});
      std::sort(rows.begin(), rows.end());
      parts.push_back(color[x]);
      for (auto& r : rows) {
        parts.push_back(r[0]);
        parts.push_back(r[1]);
        parts.push_back(r[2]);
      }
      sig[x] = std::move(parts);
    }
    std::map<std::vector<int>, int> ids;
    for (int x = 0; x < n; ++x) ids.emplace(sig[x], 0);
    int next = 0;
    for (auto& kv : ids) kv.second = next++;
    std::vector<int> fresh(n);
    for (int x = 0; x < n; ++x) fresh[x] = ids[sig[x]];
    if (fresh == color) break;
    color = std::move(fresh);
  }
  return color;
}

// Index and period of the cyclic subsemigroup generated by x.
std::pair<int, int> index_period(const Semigroup& s, int x) {
  std::vector<int> seen_at(s.size(), -1);
  int cur = x, step = 1;
  while (seen_at[cur] < 0) {
    seen_at[cur] = step;
    cur = s.at(cur, x);
    ++step;
  }
  const int first = seen_at[cur];
  return {first, step - first};
}

}  // namespace

IsoResult find_isomorphism(const Semigroup& a, const Semigroup& b) {
  if (a.size() != b.size())
    return {std::nullopt, "size " + std::to_string(a.size()) + " vs " +
                              std::to_string(b.size())};
  const int n = a.size();
  if (idempotents(a).size() != idempotents(b).size())
    return {std::nullopt, "idempotent count " +
                              std::to_string(idempotents(a).size()) + " vs " +
                              std::to_string(idempotents(b).size())};
  {
    auto profile = [&](const Semigroup& s) {
      std::vector<std::pair<int, int>> p(s.size());
      for (int x = 0; x < s.size(); ++x) p[x] = index_period(s, x);
      std::sort(p.begin(), p.end());
      return p;
    };
    if (profile(a) != profile(b))
      return {std::nullopt, "diagonal multiset (index/period profiles)"};
  }
  const std::vector<int> ca = refine_colors(a);
  const std::vector<int> cb = refine_colors(b);
  {
    std::vector<int> ha = ca, hb = cb;
    std::sort(ha.begin(), ha.end());
    std::sort(hb.begin(), hb.end());
    if (ha != hb) return {std::nullopt, "ordered row/column profiles"};
  }

  // Backtracking over color-respecting assignments, tightest classes first.
  std::vector<std::vector<int>> b_by_color;
  {
    const int k = 1 + *std::max_element(cb.begin(), cb.end());
    b_by_color.assign(k, {});
    for (int y = 0; y < n; ++y) b_by_color[cb[y]].push_back(y);
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    const auto sx = b_by_color[ca[x]].size(), sy = b_by_color[ca[y]].size();
    if (sx != sy) return sx < sy;
    return x < y;
  });

  std::vector<int> map(n, -1), used(n, 0);
  auto consistent = [&](int x, int y) {
    // Check all products against already-mapped elements.
    for (int t = 0; t < n; ++t) {
      if (map[t] < 0 && t != x) continue;
      const int ty = t == x ? y : map[t];
      const int p1 = a.at(x, t), p2 = a.at(t, x);
      if (map[p1] >= 0 && map[p1] != b.at(y, ty)) return false;
      if (map[p2] >= 0 && map[p2] != b.at(ty, y)) return false;
    }
    return true;
  };
  auto dfs = [&](auto&& self, int depth) -> bool {
    if (depth == n) {
      Morphism f{n, n, map};
      return is_morphism(f, a, b);  // full check at the leaf
    }
    const int x = order[depth];
    for (int y : b_by_color[ca[x]]) {
      if (used[y]) continue;
      if (!consistent(x, y)) continue;
      map[x] = y;
      used[y] = 1;
      if (self(self, depth + 1)) return true;
      map[x] = -1;
      used[y] = 0;
    }
    return false;
  };
  if (dfs(dfs, 0)) return {Morphism{n, n, map}, ""};
  return {std::nullopt, "exhausted search"};
}

std::vector<Congruence> congruences(const Semigroup& s) {
  const int n = s.size();
  constexpr int kLimit = 10;
  if (n > kLimit) throw SizeLimitExceeded("congruence enumeration", n, kLimit);

  std::vector<Congruence> out;
  std::vector<int> cls(n, 0);
  // Restricted growth strings with partial compatibility pruning: products
  // of assigned elements that land in the assigned prefix must respect the
  // partial partition.
  auto compatible_prefix = [&](int k) {
    for (int x = 0; x <= k; ++x)
      for (int y = x + 1; y <= k; ++y) {
        if (cls[x] != cls[y]) continue;
        for (int t = 0; t <= k; ++t) {
          const int xt = s.at(x, t), yt = s.at(y, t);
          if (xt <= k && yt <= k && cls[xt] != cls[yt]) return false;
          const int tx = s.at(t, x), ty = s.at(t, y);
          if (tx <= k && ty <= k && cls[tx] != cls[ty]) return false;
        }
      }
    return true;
  };
  auto rec = [&](auto&& self, int k, int max_used) -> void {
    if (k == n) {
      Congruence c{cls, max_used + 1};
      if (is_congruence(s, c)) out.push_back(std::move(c));
      return;
    }
    for (int v = 0; v <= max_used + 1 && v < n; ++v) {
      cls[k] = v;
      if (compatible_prefix(k)) self(self, k + 1, std::max(max_used, v));
    }
  };
  rec(rec, 1, 0);  // element 0 is always in class 0
  return out;
}

QuotientResult quotient(const Semigroup& s, const Congruence& alpha) {
  const int m = alpha.num_classes;
  std::vector<int> rep(m, -1);
  for (int x = 0; x < s.size(); ++x)
    if (rep[alpha.cls[x]] < 0) rep[alpha.cls[x]] = x;
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) table[i][j] = alpha.cls[s.at(rep[i], rep[j])];
  return {Semigroup::validate(table), Morphism{s.size(), m, alpha.cls}};
}

Congruence kernel_partition(const Morphism& f) {
  std::vector<int> relabel(f.target_size, -1);
  Congruence c;
  c.cls.resize(f.source_size);
  int next = 0;
  for (int x = 0; x < f.source_size; ++x) {
    int& id = relabel[f.map[x]];
    if (id < 0) id = next++;
    c.cls[x] = id;
  }
  c.num_classes = next;
  return c;
}

std::vector<Subset> all_ideals(const Semigroup& s) {
  const int n = s.size();
  constexpr int kLimit = 20;
  if (n > kLimit) throw SizeLimitExceeded("ideal enumeration", n, kLimit);

  auto to_mask = [&](const Subset& sub) {
    std::uint32_t m = 0;
    for (int x : sub) m |= 1u << x;
    return m;
  };
  std::set<std::uint32_t> family;
  std::vector<std::uint32_t> fresh;
  for (int x = 0; x < n; ++x) {
    const std::uint32_t m = to_mask(ideal_generated(s, {x}));
    if (family.insert(m).second) fresh.push_back(m);
  }
  // Unions of principal ideals exhaust all ideals.
  while (!fresh.empty()) {
    std::vector<std::uint32_t> next;
    std::vector<std::uint32_t> known(family.begin(), family.end());
    for (std::uint32_t f : fresh)
      for (std::uint32_t k : known) {
        const std::uint32_t u = f | k;
        if (family.insert(u).second) next.push_back(u);
      }
    fresh = std::move(next);
  }
  std::vector<Subset> out;
  for (std::uint32_t m : family) {
    Subset sub;
    for (int x = 0; x < n; ++x)
      if (m & (1u << x)) sub.push_back(x);
    out.push_back(std::move(sub));
  }
  std::sort(out.begin(), out.end(), [](const Subset& a, const Subset& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

}  // namespace semilab
