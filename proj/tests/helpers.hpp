#ifndef SEMILAB_TESTS_HELPERS_HPP_
#define SEMILAB_TESTS_HELPERS_HPP_

#include <algorithm>
#include <numeric>
#include <vector>

#include "semilab/constructions.hpp"
#include "semilab/semigroup.hpp"

namespace semilab::testing {

// Isomorphism by raw enumeration of all n! bijections; the oracle the
// backtracking search is checked against.
inline bool brute_isomorphic(const Semigroup& a, const Semigroup& b) {
  if (a.size() != b.size()) return false;
  std::vector<int> perm(a.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int x = 0; x < a.size() && ok; ++x)
      for (int y = 0; y < a.size() && ok; ++y)
        ok = perm[a.at(x, y)] == b.at(perm[x], perm[y]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// All products equal element 0.
inline Semigroup null_semigroup(int n) {
  return Semigroup::validate(std::vector<std::vector<int>>(n, std::vector<int>(n, 0)));
}

// Cyclic group of order n on {0..n-1} under addition.
inline Semigroup cyclic_group(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t[x][y] = (x + y) % n;
  return Semigroup::validate(t);
}

inline Semigroup left_zero(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t[x][y] = x;
  return Semigroup::validate(t);
}

inline Semigroup right_zero(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t[x][y] = y;
  return Semigroup::validate(t);
}

// A small mixed corpus exercising every kind the library cares about.
inline std::vector<Semigroup> mixed_corpus() {
  std::vector<Semigroup> out;
  out.push_back(Semigroup::validate({{0}}));
  for (int n = 2; n <= 4; ++n) out.push_back(null_semigroup(n));
  for (int n = 2; n <= 4; ++n) out.push_back(cyclic_group(n));
  out.push_back(left_zero(2));
  out.push_back(right_zero(3));
  for (int n = 2; n <= 4; ++n) out.push_back(chain(n).sg);
  out.push_back(named_semilattice("V").sg);
  out.push_back(named_semilattice("U").sg);
  out.push_back(b2());
  out.push_back(b2_companion());
  out.push_back(adjoin_zero(b2()));
  return out;
}

}  // namespace semilab::testing

#endif  // SEMILAB_TESTS_HELPERS_HPP_
