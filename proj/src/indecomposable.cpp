#include "semilab/indecomposable.hpp"

#include <algorithm>

namespace semilab {

DivisibilityGraph divisibility_graph(const Semigroup& s) {
  const int n = s.size();
  DivisibilityGraph g{n, std::vector<bool>(static_cast<std::size_t>(n) * n, false)};
  // powers[y]: the set {y, y^2, ...}; the visited-set walk stops at
  // index + period, so no unbounded iteration.
  std::vector<std::vector<bool>> powers(n, std::vector<bool>(n, false));
  for (int y = 0; y < n; ++y) {
    int cur = y;
    while (!powers[y][cur]) {
      powers[y][cur] = true;
      cur = s.at(cur, y);
    }
  }
  for (int x = 0; x < n; ++x) {
    const Subset ideal = ideal_generated(s, {x});
    for (int y = 0; y < n; ++y) {
      bool hit = false;
      for (int p : ideal)
        if (powers[y][p]) {
          hit = true;
          break;
        }
      g.adjacency[static_cast<std::size_t>(x) * n + y] = hit;
    }
  }
  return g;
}

namespace {

// Iterative Tarjan on the divisibility graph.
SccDecomposition tarjan(const DivisibilityGraph& g) {
  const int n = g.n;
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
  std::vector<bool> on_stack(n, false);
  std::vector<int> stack;
  int next_index = 0, next_comp = 0;

  struct Frame {
    int v;
    int next_child;
  };
  for (int root = 0; root < n; ++root) {
    if (index[root] >= 0) continue;
    std::vector<Frame> frames{{root, 0}};
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      Frame& f = frames.back();
      bool descended = false;
      while (f.next_child < n) {
        const int w = f.next_child++;
        if (!g.edge(f.v, w)) continue;
        if (index[w] < 0) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.push_back({w, 0});
          descended = true;
          break;
        }
        if (on_stack[w]) low[f.v] = std::min(low[f.v], index[w]);
      }
      if (descended) continue;
      if (low[f.v] == index[f.v]) {
        for (;;) {
          const int w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = next_comp;
          if (w == f.v) break;
        }
        ++next_comp;
      }
      const int v = f.v;
      frames.pop_back();
      if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[v]);
    }
  }
  // Renumber components by their smallest element for determinism.
  std::vector<int> first(next_comp, n);
  for (int x = 0; x < n; ++x) first[comp[x]] = std::min(first[comp[x]], x);
  std::vector<int> order(next_comp);
  for (int c = 0; c < next_comp; ++c) order[c] = c;
  std::sort(order.begin(), order.end(), [&](int a, int b) { return first[a] < first[b]; });
  std::vector<int> rename(next_comp);
  for (int i = 0; i < next_comp; ++i) rename[order[i]] = i;
  for (int x = 0; x < n; ++x) comp[x] = rename[comp[x]];
  return {comp, next_comp};
}

}  // namespace

SccDecomposition divisibility_scc(const Semigroup& s) {
  return tarjan(divisibility_graph(s));
}

bool is_s_indecomposable_graph(const Semigroup& s) {
  return divisibility_scc(s).num_components == 1;
}

std::optional<Subset> separating_prime_ideal(const Semigroup& s) {
  const DivisibilityGraph g = divisibility_graph(s);
  const SccDecomposition scc = tarjan(g);
  if (scc.num_components == 1) return std::nullopt;
  // A source component of the condensation is a maximal class of the
  // greatest semilattice image; its complement is a completely prime ideal.
  std::vector<bool> has_incoming(scc.num_components, false);
  for (int x = 0; x < g.n; ++x)
    for (int y = 0; y < g.n; ++y)
      if (g.edge(x, y) && scc.component[x] != scc.component[y])
        has_incoming[scc.component[y]] = true;
  for (int c = 0; c < scc.num_components; ++c) {
    if (has_incoming[c]) continue;
    Subset ideal;
    for (int x = 0; x < g.n; ++x)
      if (scc.component[x] != c) ideal.push_back(x);
    Subset complement;
    for (int x = 0; x < g.n; ++x)
      if (scc.component[x] == c) complement.push_back(x);
    if (is_ideal(s, ideal) && is_subsemigroup(s, complement)) return ideal;
  }
  throw InternalError("no source component yielded a completely prime ideal");
}

std::vector<Subset> completely_prime_ideals(const Semigroup& s) {
  const int n = s.size();
  std::vector<Subset> out;
  for (const Subset& ideal : all_ideals(s)) {
    if (static_cast<int>(ideal.size()) == n) continue;  // proper only
    std::vector<bool> in(n, false);
    for (int x : ideal) in[x] = true;
    Subset complement;
    for (int x = 0; x < n; ++x)
      if (!in[x]) complement.push_back(x);
    if (is_subsemigroup(s, complement)) out.push_back(ideal);
  }
  return out;
}

AlgebraSummary s_indecomposability_summary(const Semigroup& s) {
  // S/K_S; the Rees quotient degenerates to the trivial semigroup when S is
  // its own kernel.
  return summary(semigroup_algebra(rees_quotient(s, kernel(s)).quotient));
}

bool is_s_indecomposable_algebra(const Semigroup& s) {
  return s_indecomposability_summary(s).one_dim_blocks == 1;
}

}  // namespace semilab
