#include "semilab/enumeration.hpp"

#include <algorithm>
#include <set>

#include "semilab/lattice.hpp"
#include "semilab/util.hpp"

namespace semilab {

namespace {

// Minimum relabeled table over all permutations, all n! of them, with an
// early-exit comparison.  Fast enough up to n = 7.
std::vector<int> min_table_factorial(const Semigroup& s) {
  const int n = s.size();
  std::vector<int> best = s.flat();
  std::vector<int> pi(n);  // pi[new] = old
  for (int x = 0; x < n; ++x) pi[x] = x;
  std::vector<int> sigma(n);
  do {
    for (int d = 0; d < n; ++d) sigma[pi[d]] = d;
    bool smaller = false;
    for (int idx = 0; idx < n * n; ++idx) {
      const int v = sigma[s.at(pi[idx / n], pi[idx % n])];
      if (v != best[idx]) {
        smaller = v < best[idx];
        break;
      }
    }
    if (smaller)
      for (int idx = 0; idx < n * n; ++idx)
        best[idx] = sigma[s.at(pi[idx / n], pi[idx % n])];
  } while (std::next_permutation(pi.begin(), pi.end()));
  return best;
}

// Branch-and-bound for larger inputs: assign new labels one at a time and
// prune a branch as soon as its computable row-major prefix exceeds the
// best table found so far.  pi[d] = original element with new label d.
class Canonicalizer {
 public:
  explicit Canonicalizer(const Semigroup& s) : s_(s), n_(s.size()) {
    best_ = s.flat();  // identity relabeling seeds the bound
    pi_.assign(n_, -1);
    sigma_.assign(n_, -1);
    all_.resize(n_);
    for (int x = 0; x < n_; ++x) all_[x] = x;
    // Cell (0,0) of the minimum equals 0 iff new label 0 goes to an
    // idempotent, and every finite semigroup has one.
    for (int x = 0; x < n_; ++x)
      if (s_.at(x, x) == x) first_candidates_.push_back(x);
    dfs(0);
  }

  std::vector<int> flat() && { return std::move(best_); }

 private:
  // Compare the computable row-major prefix of the current partial
  // relabeling against best_: -1 smaller, 0 undecided/equal, +1 larger.
  int compare_prefix() const {
    for (int idx = 0; idx < n_ * n_; ++idx) {
      const int r = idx / n_, c = idx % n_;
      if (pi_[r] < 0 || pi_[c] < 0) return 0;
      const int v = sigma_[s_.at(pi_[r], pi_[c])];
      if (v < 0) return 0;
      if (v != best_[idx]) return v < best_[idx] ? -1 : 1;
    }
    return 0;
  }

  void dfs(int depth) {
    if (depth == n_) {
      std::vector<int> flat(n_ * n_);
      for (int idx = 0; idx < n_ * n_; ++idx)
        flat[idx] = sigma_[s_.at(pi_[idx / n_], pi_[idx % n_])];
      if (flat < best_) best_ = std::move(flat);
      return;
    }
    const std::vector<int>& pool =
        depth == 0 && !first_candidates_.empty() ? first_candidates_ : all_;
    for (int x : pool) {
      if (sigma_[x] >= 0) continue;
      pi_[depth] = x;
      sigma_[x] = depth;
      if (compare_prefix() <= 0) dfs(depth + 1);
      pi_[depth] = -1;
      sigma_[x] = -1;
    }
  }

  const Semigroup& s_;
  int n_;
  std::vector<int> best_, pi_, sigma_, first_candidates_, all_;
};

// Backtracking generator of associative tables, cell by cell in row-major
// order with incremental associativity checks.  `value_order(cell)` gives
// the order in which to try entries; `on_complete` receives each finished
// table and returns false to stop the search.
class TableSearch {
 public:
  TableSearch(int n, bool symmetric_idempotent)
      : n_(n), diag_(symmetric_idempotent), t_(n * n, -1) {}

  template <typename ValueOrder, typename OnComplete>
  void run(ValueOrder&& value_order, OnComplete&& on_complete) {
    stop_ = false;
    if (diag_)
      for (int i = 0; i < n_; ++i) t_[i * n_ + i] = i;
    rec(0, value_order, on_complete);
    if (diag_)
      for (int i = 0; i < n_; ++i) t_[i * n_ + i] = -1;
  }

 private:
  int at(int x, int y) const { return t_[x * n_ + y]; }

  // All associativity triples that become fully evaluable once (a, b) is
  // set must already agree.
  bool consistent(int a, int b) {
    const int v = at(a, b);
    for (int z = 0; z < n_; ++z) {
      // (a, b, z): (ab)z = a(bz)
      const int bz = at(b, z);
      if (at(v, z) >= 0 && bz >= 0 && at(a, bz) >= 0 && at(v, z) != at(a, bz))
        return false;
      // (z, a, b): (za)b = z(ab)
      const int za = at(z, a);
      if (za >= 0 && at(za, b) >= 0 && at(z, v) >= 0 && at(za, b) != at(z, v))
        return false;
    }
    for (int x = 0; x < n_; ++x)
      for (int y = 0; y < n_; ++y) {
        // (x, y, b) with xy = a: (xy)b = x(yb)
        if (at(x, y) == a) {
          const int yb = at(y, b);
          if (yb >= 0 && at(x, yb) >= 0 && v != at(x, yb)) return false;
        }
        // (a, x, y) with xy = b: (ax)y = a(xy)
        if (at(x, y) == b) {
          const int ax = at(a, x);
          if (ax >= 0 && at(ax, y) >= 0 && at(ax, y) != v) return false;
        }
      }
    return true;
  }

  template <typename ValueOrder, typename OnComplete>
  void rec(int cell, ValueOrder& value_order, OnComplete& on_complete) {
    if (stop_) return;
    while (cell < n_ * n_ && t_[cell] >= 0) ++cell;  // skip preset diagonal
    if (cell == n_ * n_) {
      std::vector<std::vector<int>> table(n_, std::vector<int>(n_));
      for (int x = 0; x < n_; ++x)
        for (int y = 0; y < n_; ++y) table[x][y] = at(x, y);
      if (!on_complete(Semigroup::validate(table))) stop_ = true;
      return;
    }
    // In diag mode the skip above guarantees a != b: the diagonal is preset.
    const int a = cell / n_, b = cell % n_;
    for (int v : value_order(cell)) {
      t_[cell] = v;
      if (diag_) t_[b * n_ + a] = v;  // commutative fill
      bool ok = consistent(a, b);
      if (ok && diag_) ok = consistent(b, a);
      if (ok) rec(cell + 1, value_order, on_complete);
      t_[cell] = -1;
      if (diag_) t_[b * n_ + a] = -1;
    }
  }

  int n_;
  bool diag_;
  std::vector<int> t_;
  bool stop_ = false;
};

}  // namespace

Semigroup canonicalize(const Semigroup& s) {
  const int n = s.size();
  const std::vector<int> flat =
      n <= 7 ? min_table_factorial(s) : Canonicalizer(s).flat();
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) table[x][y] = flat[x * n + y];
  return Semigroup::validate(table);
}

std::vector<Semigroup> enumerate_semigroups(
    int n, const std::function<bool(const Semigroup&)>& keep) {
  constexpr int kLimit = 5;
  if (n > kLimit) throw SizeLimitExceeded("semigroup enumeration", n, kLimit);
  if (n < 1) throw FormatError("order must be positive");

  std::set<std::vector<int>> canon;
  TableSearch search(n, false);
  std::vector<int> values(n);
  for (int v = 0; v < n; ++v) values[v] = v;
  search.run([&](int) -> const std::vector<int>& { return values; },
             [&](const Semigroup& s) {
               if (!keep || keep(s)) canon.insert(canonicalize(s).flat());
               return true;
             });

  std::vector<Semigroup> out;
  for (const auto& flat : canon) {
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) table[x][y] = flat[x * n + y];
    out.push_back(Semigroup::validate(table));
  }
  return out;
}

std::vector<Semigroup> sample_semigroups(int n, int count, std::uint64_t seed) {
  std::set<std::vector<int>> canon;
  std::vector<Semigroup> out;
  SplitMix64 rng(seed);
  const int max_attempts = 60 * count;
  for (int attempt = 0; attempt < max_attempts && static_cast<int>(out.size()) < count;
       ++attempt) {
    // Fresh random value order per cell, one completion per attempt.
    std::vector<std::vector<int>> orders(n * n);
    for (auto& ord : orders) {
      ord.resize(n);
      for (int v = 0; v < n; ++v) ord[v] = v;
      for (int i = n - 1; i > 0; --i)
        std::swap(ord[i], ord[rng.below(static_cast<std::uint64_t>(i) + 1)]);
    }
    TableSearch search(n, false);
    search.run([&](int cell) -> const std::vector<int>& { return orders[cell]; },
               [&](const Semigroup& s) {
                 if (canon.insert(canonicalize(s).flat()).second) out.push_back(s);
                 return false;  // one table per attempt
               });
  }
  return out;
}

std::vector<Semigroup> enumerate_semilattices(int n) {
  constexpr int kLimit = 6;
  if (n > kLimit) throw SizeLimitExceeded("semilattice enumeration", n, kLimit);
  std::set<std::vector<int>> canon;
  TableSearch search(n, true);
  std::vector<int> values(n);
  for (int v = 0; v < n; ++v) values[v] = v;
  search.run([&](int) -> const std::vector<int>& { return values; },
             [&](const Semigroup& s) {
               if (is_semilattice(s)) canon.insert(canonicalize(s).flat());
               return true;
             });
  std::vector<Semigroup> out;
  for (const auto& flat : canon) {
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) table[x][y] = flat[x * n + y];
    out.push_back(Semigroup::validate(table));
  }
  return out;
}

std::vector<Subset> subsemigroups_of_size(const Semigroup& s, int k) {
  const int n = s.size();
  std::vector<Subset> out;
  Subset pick;
  auto rec = [&](auto&& self, int from) -> void {
    if (static_cast<int>(pick.size()) == k) {
      if (is_subsemigroup(s, pick)) out.push_back(pick);
      return;
    }
    if (n - from < k - static_cast<int>(pick.size())) return;
    for (int x = from; x < n; ++x) {
      pick.push_back(x);
      self(self, x + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<Semigroup> classify_b2c(int order) {
  if (order == 1) return {Semigroup::validate({{0}})};
  if (order == 5)
    return enumerate_semigroups(5, [](const Semigroup& s) { return is_b2_combinatorial(s); });
  if (order == 9) return classify_b2c_order9_evidence().classes;
  throw UnsupportedOrder(order);
}

B2cOrder9Evidence classify_b2c_order9_evidence() {
  B2cOrder9Evidence ev;
  std::set<std::vector<int>> canon;

  // Directly constructed candidates.
  std::vector<Semigroup> pool{
      times0(named_semilattice("C3").sg, b2()),
      times0(named_semilattice("V").sg, b2()),
      munn(named_semilattice("U")),
      munn(named_semilattice("F")),
  };

  // Exhaustive side: every 9-element B2-combinatorial semigroup is a full
  // inverse subsemigroup of the Munn semigroup of its own 5-element
  // idempotent semilattice.
  const Semigroup munn_x = munn(named_semilattice("X"));
  for (const Semigroup& lattice_sg : enumerate_semilattices(5)) {
    ++ev.semilattices_swept;
    const Semigroup t = munn(as_semilattice(lattice_sg));
    if (t.size() < 9) continue;
    for (const Subset& members : subsemigroups_of_size(t, 9)) {
      Semigroup sub = subsemigroup(t, members);
      if (!is_b2_combinatorial(sub)) continue;
      ++ev.munn_candidates;
      if (bool(find_isomorphism(t, munn_x))) ++ev.munn_x_subsemigroups;
      pool.push_back(std::move(sub));
    }
  }

  for (const Semigroup& s : pool) {
    if (s.size() != 9 || !is_b2_combinatorial(s)) continue;
    canon.insert(canonicalize(s).flat());
  }
  for (const auto& flat : canon) {
    std::vector<std::vector<int>> table(9, std::vector<int>(9));
    for (int x = 0; x < 9; ++x)
      for (int y = 0; y < 9; ++y) table[x][y] = flat[x * 9 + y];
    ev.classes.push_back(Semigroup::validate(table));
  }
  return ev;
}

}  // namespace semilab
