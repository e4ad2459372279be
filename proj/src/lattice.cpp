#include "semilab/lattice.hpp"

#include <algorithm>
#include <cmath>

#include "semilab/constructions.hpp"
#include "semilab/indecomposable.hpp"

namespace semilab {

const char* to_string(FactorKind k) {
  switch (k) {
    case FactorKind::ZeroSimple: return "zero-simple";
    case FactorKind::Simple: return "simple";
    case FactorKind::Null: return "null";
  }
  return "?";
}

bool is_null_semigroup(const Semigroup& s) {
  if (!s.zero()) return false;
  const int z = *s.zero();
  for (int x = 0; x < s.size(); ++x)
    for (int y = 0; y < s.size(); ++y)
      if (s.at(x, y) != z) return false;
  return true;
}

bool is_zero_simple(const Semigroup& s) {
  if (!s.zero() || s.size() < 2) return false;
  const int z = *s.zero();
  bool square_nonzero = false;
  for (int x = 0; x < s.size() && !square_nonzero; ++x)
    for (int y = 0; y < s.size() && !square_nonzero; ++y)
      square_nonzero = s.at(x, y) != z;
  if (!square_nonzero) return false;
  for (int x = 0; x < s.size(); ++x) {
    if (x == z) continue;
    if (static_cast<int>(ideal_generated(s, {x}).size()) != s.size()) return false;
  }
  return true;
}

bool is_simple_semigroup(const Semigroup& s) {
  for (int x = 0; x < s.size(); ++x)
    if (static_cast<int>(ideal_generated(s, {x}).size()) != s.size()) return false;
  return true;
}

PrincipalFactor principal_factor(const Semigroup& s, int a) {
  const Subset j = ideal_generated(s, {a});
  Subset i_of_a;
  for (int b : j)
    if (ideal_generated(s, {b}) != j) i_of_a.push_back(b);

  const Semigroup jsub = subsemigroup(s, j);
  Semigroup factor = jsub;
  if (!i_of_a.empty()) {
    // Renumber I(a) into the coordinates of J(a).
    std::vector<int> idx(s.size(), -1);
    for (int t = 0; t < static_cast<int>(j.size()); ++t) idx[j[t]] = t;
    Subset local;
    for (int b : i_of_a) local.push_back(idx[b]);
    factor = rees_quotient(jsub, local).quotient;
  }

  FactorKind kind;
  if (is_null_semigroup(factor)) {
    kind = FactorKind::Null;
  } else if (is_zero_simple(factor)) {
    kind = FactorKind::ZeroSimple;
  } else if (is_simple_semigroup(factor)) {
    kind = FactorKind::Simple;
  } else {
    throw InternalError("principal factor is neither 0-simple, simple nor null");
  }
  return {a, std::move(factor), kind};
}

MaxSubsemilattice max_subsemilattice(const Semigroup& s) {
  const Subset idem = idempotents(s);
  MaxSubsemilattice best;

  // Maximum clique in the commuting graph on the idempotents, by branch and
  // bound in index order.  Every subsemilattice is such a clique, and a
  // maximum clique is closed under products: the product of two commuting
  // idempotents is an idempotent commuting with the whole set, so a missing
  // product would extend the clique.  The witness is therefore a maximum
  // subsemilattice, and the first one found is the lexicographically least.
  Subset cur;
  auto commutes = [&](int v) {
    for (int c : cur)
      if (s.at(c, v) != s.at(v, c)) return false;
    return true;
  };
  auto rec = [&](auto&& self, const Subset& pool) -> void {
    if (static_cast<int>(cur.size()) > best.size) {
      best.size = static_cast<int>(cur.size());
      best.witness = cur;
    }
    for (std::size_t t = 0; t < pool.size(); ++t) {
      if (static_cast<int>(cur.size() + pool.size() - t) <= best.size) return;
      const int v = pool[t];
      if (!commutes(v)) continue;
      cur.push_back(v);
      Subset next;
      for (std::size_t u = t + 1; u < pool.size(); ++u)
        if (commutes(pool[u])) next.push_back(pool[u]);
      self(self, next);
      cur.pop_back();
    }
  };
  rec(rec, idem);

  // The maximality argument above guarantees closure; keep it checked.
  for (int a : best.witness)
    for (int b : best.witness) {
      const int p = s.at(a, b);
      if (p != s.at(b, a) ||
          !std::binary_search(best.witness.begin(), best.witness.end(), p))
        throw InternalError("maximum commuting idempotent set is not closed");
    }
  return best;
}

BoundReport check_bound(const Semigroup& s) {
  BoundReport r;
  const MaxSubsemilattice m = max_subsemilattice(s);
  r.max_size = m.size;
  r.witness = m.witness;
  r.bound = 2 * ((s.size() - 1) / 4) + 1;
  r.holds = r.max_size <= r.bound;
  r.tight = r.max_size == r.bound;
  r.completely_zero_simple = is_zero_simple(s);
  if (r.completely_zero_simple) {
    SqrtBound sq;
    // |Y| <= sqrt(|S|-1) + 1, compared exactly: (|Y|-1)^2 <= |S|-1.
    const long long side = r.max_size - 1;
    sq.holds = side * side <= s.size() - 1;
    sq.tight = side * side == s.size() - 1;
    if (sq.tight) {
      const int n = static_cast<int>(side);
      sq.isomorphic_to_brandt = n >= 1 && bool(find_isomorphism(s, brandt(n)));
    }
    r.sqrt_bound = sq;
  }
  return r;
}

bool is_b2_combinatorial(const Semigroup& s) {
  if (s.size() % 4 != 1) return false;
  const int k = (s.size() - 1) / 4;
  if (!is_s_indecomposable_graph(s)) return false;
  return max_subsemilattice(s).size == 2 * k + 1;
}

bool is_b2_combinatorial_via_factors(const Semigroup& s) {
  if (!s.zero()) return false;
  const Semigroup reference = b2();
  for (int a = 0; a < s.size(); ++a) {
    if (a == *s.zero()) continue;
    if (!find_isomorphism(principal_factor(s, a).factor, reference)) return false;
  }
  return true;
}

ExtremalWitness extremal_witness(int n) {
  if (n < 1) throw FormatError("extremal_witness needs n >= 1");
  const int k = (n - 1) / 4;
  const int l = (n - 1) % 4;

  Semigroup s = times0(chain(k + 1).sg, b2());
  // Surviving pairs (y, b), y in 1..k, b in {1..4}, sit at 1 + (y-1)*4 + (b-1);
  // Y is the copy of chain x {a, d} plus the zero.
  Subset y{0};
  for (int c = 1; c <= k; ++c) {
    y.push_back(1 + (c - 1) * 4 + 0);  // (c, a)
    y.push_back(1 + (c - 1) * 4 + 3);  // (c, d)
  }
  std::sort(y.begin(), y.end());
  for (int step = 0; step < l; ++step) s = adjoin_zprime(s);

  if (s.size() != n) throw InternalError("extremal witness has the wrong size");
  if (!is_s_indecomposable_graph(s))
    throw InternalError("extremal witness is not s-indecomposable");
  if (static_cast<int>(y.size()) != 2 * ((n - 1) / 4) + 1)
    throw InternalError("extremal witness subsemilattice has the wrong size");
  for (int a : y) {
    if (s.at(a, a) != a) throw InternalError("extremal witness set not idempotent");
    for (int b : y) {
      if (s.at(a, b) != s.at(b, a) ||
          !std::binary_search(y.begin(), y.end(), s.at(a, b)))
        throw InternalError("extremal witness set not a subsemilattice");
    }
  }
  return {std::move(s), std::move(y)};
}

B2cReport verify_b2c(const Semigroup& s, std::uint64_t seed) {
  B2cReport r;
  r.k = (s.size() - 1) / 4;
  r.has_zero = s.zero().has_value();

  const RationalAlgebra a = semigroup_algebra(s);
  r.algebra = summary(a);
  r.algebra_ok = r.algebra == AlgebraSummary{4 * r.k + 1, 0, r.k + 1, 1};
  r.blocks = numerical_block_sizes(a, seed);
  std::vector<int> expected{1};
  expected.insert(expected.end(), r.k, 2);
  r.blocks_ok = r.blocks == expected;

  r.ideals_ok = true;
  for (const Subset& ideal : all_ideals(s)) {
    ++r.ideals_checked;
    if (!is_b2_combinatorial(subsemigroup(s, ideal))) r.ideals_ok = false;
  }

  constexpr int kQuotientLimit = 10;
  if (s.size() > kQuotientLimit)
    throw SizeLimitExceeded("quotient sweep of verify_b2c", s.size(), kQuotientLimit);
  r.quotients_ok = true;
  for (const Congruence& alpha : congruences(s)) {
    ++r.quotients_checked;
    if (!is_b2_combinatorial(quotient(s, alpha).quotient)) r.quotients_ok = false;
  }
  return r;
}

bool is_inverse_semigroup(const Semigroup& s) {
  for (int x = 0; x < s.size(); ++x) {
    int count = 0;
    for (int y = 0; y < s.size(); ++y) {
      if (s.at(s.at(x, y), x) == x && s.at(s.at(y, x), y) == y) ++count;
    }
    if (count != 1) return false;
  }
  return true;
}

}  // namespace semilab
