#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "semilab/algebra.hpp"
#include "semilab/enumeration.hpp"
#include "semilab/indecomposable.hpp"
#include "semilab/lattice.hpp"
#include "semilab/util.hpp"

using namespace semilab;
using namespace semilab::testing;

namespace {

// Count the meet-preserving bijections between principal ideals of e by raw
// enumeration over all bijections of all ideal pairs.
int brute_munn_size(const Semilattice& e) {
  auto ideal_of = [&](int root) {
    Subset down;
    for (int x = 0; x < e.size(); ++x)
      if (e.leq(x, root)) down.push_back(x);
    return down;
  };
  int count = 0;
  for (int dom = 0; dom < e.size(); ++dom)
    for (int ran = 0; ran < e.size(); ++ran) {
      const Subset d = ideal_of(dom), r = ideal_of(ran);
      if (d.size() != r.size()) continue;
      Subset image = r;
      std::sort(image.begin(), image.end());
      do {
        std::vector<int> map(e.size(), -1);
        for (std::size_t i = 0; i < d.size(); ++i) map[d[i]] = image[i];
        bool ok = map[dom] == ran;
        for (std::size_t i = 0; i < d.size() && ok; ++i)
          for (std::size_t j = 0; j < d.size() && ok; ++j)
            ok = map[e.meet(d[i], d[j])] == e.meet(map[d[i]], map[d[j]]);
        if (ok) ++count;
      } while (std::next_permutation(image.begin(), image.end()));
    }
  return count;
}

}  // namespace

TEST_CASE("b2 reference table") {
  const Semigroup s = b2();
  CHECK(s.flat() == brandt(2).flat());  // same numbering, not just isomorphic
  CHECK(idempotents(s).size() == 3);
  CHECK(is_s_indecomposable_graph(s));
}

TEST_CASE("rees_matrix") {
  SUBCASE("identity sandwich gives B2") {
    CHECK(bool(find_isomorphism(rees_matrix({Semigroup::validate({{0}}), 0,
                                             {{0, -1}, {-1, 0}}}),
                                b2())));
  }
  SUBCASE("the companion matrix semigroup") {
    const Semigroup s = b2_companion();
    CHECK(s.size() == 5);
    CHECK(idempotents(s).size() == 4);
    CHECK(is_s_indecomposable_graph(s));
    CHECK(!brute_isomorphic(s, b2()));
  }
  SUBCASE("size law over a nontrivial group") {
    // |M^0(C2; 2, 3; P)| = 2*2*3 + 1 = 13
    const Semigroup c2 = cyclic_group(2);
    const Semigroup s = rees_matrix({c2, 0, {{0, -1}, {1, 0}, {-1, 0}}});
    CHECK(s.size() == 13);
  }
  SUBCASE("irregular sandwich and non-group inputs are rejected") {
    CHECK_THROWS_AS(rees_matrix({Semigroup::validate({{0}}), 0, {{0, 0}, {-1, -1}}}),
                    IrregularSandwich);
    CHECK_THROWS_AS(rees_matrix({Semigroup::validate({{0}}), 0, {{0, -1}, {0, -1}}}),
                    IrregularSandwich);
    CHECK_THROWS_AS(rees_matrix({chain(2).sg, 0, {{0}}}), NotAGroup);
  }
}

TEST_CASE("brandt") {
  CHECK(bool(find_isomorphism(brandt(1), chain(2).sg)));
  for (int n = 1; n <= 4; ++n) {
    const Semigroup s = brandt(n);
    CHECK(s.size() == n * n + 1);
    CHECK(static_cast<int>(idempotents(s).size()) == n + 1);
  }
}

TEST_CASE("times0") {
  SUBCASE("size law") {
    for (int k = 0; k <= 3; ++k)
      CHECK(times0(chain(k + 1).sg, b2()).size() == 4 * k + 1);
  }
  SUBCASE("the 2-chain acts as the identity") {
    CHECK(bool(find_isomorphism(times0(chain(2).sg, b2()), b2())));
  }
  SUBCASE("symmetric up to isomorphism") {
    const std::vector<Semigroup> pool{chain(3).sg, adjoin_zero(cyclic_group(2)),
                                      null_semigroup(3), b2()};
    for (const Semigroup& a : pool)
      for (const Semigroup& b : pool)
        CHECK(bool(find_isomorphism(times0(a, b), times0(b, a))));
  }
  SUBCASE("factors need zeros") {
    CHECK_THROWS_AS(times0(cyclic_group(2), b2()), NoZeroElement);
    CHECK_THROWS_AS(times0(b2(), left_zero(2)), NoZeroElement);
  }
  SUBCASE("s-indecomposability passes to the product iff a factor has it") {
    for (const Semigroup& a : {null_semigroup(2), chain(2).sg, null_semigroup(3)})
      for (const Semigroup& b : {null_semigroup(2), chain(2).sg, b2()}) {
        const bool expected =
            is_s_indecomposable_graph(a) || is_s_indecomposable_graph(b);
        CHECK(is_s_indecomposable_graph(times0(a, b)) == expected);
      }
  }
}

TEST_CASE("adjoin_zero") {
  CHECK(bool(find_isomorphism(adjoin_zero(Semigroup::validate({{0}})), chain(2).sg)));
  const Semigroup s = adjoin_zero(b2());
  CHECK(s.size() == 6);
  CHECK(s.zero() == 5);
  CHECK(kernel(s) == Subset{5});
  // adjoined even when a zero is already present
  CHECK(adjoin_zero(adjoin_zero(b2())).size() == 7);
}

TEST_CASE("adjoin_zprime") {
  const Semigroup s = adjoin_zprime(b2());
  CHECK(s.size() == 6);
  CHECK(is_s_indecomposable_graph(s));
  const int zp = 5;
  CHECK(s.at(zp, zp) == 0);  // (z')^2 = z, so z' is not idempotent
  CHECK(s.zero() == 0);

  SUBCASE("the summary changes by exactly one radical dimension") {
    for (const Semigroup& base :
         {b2(), b2_companion(), null_semigroup(3),
          times0(chain(2).sg, b2()), adjoin_zprime(b2())}) {
      const AlgebraSummary before = summary(semigroup_algebra(base));
      const AlgebraSummary after = summary(semigroup_algebra(adjoin_zprime(base)));
      CHECK(after.dim == before.dim + 1);
      CHECK(after.radical_dim == before.radical_dim + 1);
      CHECK(after.num_blocks == before.num_blocks);
      CHECK(after.one_dim_blocks == before.one_dim_blocks);
    }
  }
  CHECK_THROWS_AS(adjoin_zprime(cyclic_group(2)), NoZeroElement);
}

TEST_CASE("embed_indecomposable") {
  SUBCASE("size and morphism checks") {
    for (const Semigroup& s : {chain(3).sg, cyclic_group(3), null_semigroup(2)}) {
      const Embedding e = embed_indecomposable(s);
      CHECK(e.target.size() == 4 * s.size() + 1);
      CHECK(is_morphism(e.map, s, e.target));
      CHECK(is_injective(e.map));
      CHECK(is_s_indecomposable_graph(e.target));
    }
  }
  SUBCASE("the trivial semigroup lands on an idempotent of B2") {
    const Embedding e = embed_indecomposable(Semigroup::validate({{0}}));
    CHECK(bool(find_isomorphism(e.target, b2())));
    const int image = e.map.map[0];
    CHECK(e.target.at(image, image) == image);
    CHECK(image != *e.target.zero());
  }
}

TEST_CASE("named semilattices") {
  CHECK(named_semilattice("C3").size() == 3);
  CHECK(named_semilattice("V").size() == 3);
  for (const char* name : {"U", "F", "X"}) CHECK(named_semilattice(name).size() == 5);
  CHECK_THROWS_AS(named_semilattice("W"), FormatError);

  SUBCASE("V: the two atoms meet in the bottom") {
    const Semilattice v = named_semilattice("V");
    CHECK(v.meet(1, 2) == 0);
    CHECK(v.bottom() == 0);
  }
  SUBCASE("U, F, X are pairwise non-isomorphic") {
    CHECK(!brute_isomorphic(named_semilattice("U").sg, named_semilattice("F").sg));
    CHECK(!brute_isomorphic(named_semilattice("U").sg, named_semilattice("X").sg));
    CHECK(!brute_isomorphic(named_semilattice("F").sg, named_semilattice("X").sg));
  }
  SUBCASE("chains") {
    const Semilattice c = chain(4);
    CHECK(c.size() == 4);
    CHECK(is_semilattice(c.sg));
    CHECK(c.bottom() == 0);
    CHECK(c.meet(1, 3) == 1);
  }
}

TEST_CASE("munn semigroups") {
  SUBCASE("sizes against raw enumeration") {
    for (const char* name : {"C3", "V", "U", "F", "X"}) {
      const Semilattice e = named_semilattice(name);
      CHECK(munn(e).size() == brute_munn_size(e));
    }
    CHECK(munn(named_semilattice("U")).size() == 9);
    CHECK(munn(named_semilattice("F")).size() == 9);
    CHECK(munn(named_semilattice("X")).size() == 17);
  }
  SUBCASE("the named isomorphisms") {
    CHECK(bool(find_isomorphism(munn(named_semilattice("U")),
                                times0(named_semilattice("C3").sg, b2()))));
    CHECK(bool(find_isomorphism(munn(named_semilattice("X")), brandt(4))));
    CHECK(bool(find_isomorphism(munn(named_semilattice("V")), b2())));
    // The Munn semigroup of a chain is the chain itself.
    CHECK(bool(find_isomorphism(munn(chain(4)), chain(4).sg)));
  }
  SUBCASE("outputs are inverse semigroups with idempotent semilattice E") {
    for (const char* name : {"V", "U", "F", "X"}) {
      const Semilattice e = named_semilattice(name);
      const Semigroup t = munn(e);
      CHECK(is_inverse_semigroup(t));
      CHECK(t.zero().has_value());
      const Subset idem = idempotents(t);
      CHECK(idem.size() == static_cast<std::size_t>(e.size()));
      CHECK(bool(find_isomorphism(subsemigroup(t, idem), e.sg)));
    }
  }
  SUBCASE("composition applies the left factor first") {
    // In munn(V) take a: E1 -> E2 and b: E2 -> E1.  Acting on the right,
    // ab restricts to the identity on E1 and ba to the identity on E2.
    const Semilattice v = named_semilattice("V");
    const std::vector<PartialIso> elems = munn_elements(v);
    const Semigroup t = munn(v);
    auto index_of = [&](int dom, int ran) {
      for (int i = 0; i < static_cast<int>(elems.size()); ++i)
        if (elems[i].dom_root == dom && elems[i].ran_root == ran) return i;
      return -1;
    };
    const int a = index_of(1, 2), b = index_of(2, 1);
    const int id1 = index_of(1, 1), id2 = index_of(2, 2);
    REQUIRE(a >= 0);
    REQUIRE(b >= 0);
    CHECK(t.at(a, b) == id1);
    CHECK(t.at(b, a) == id2);
  }
  SUBCASE("size guard") {
    std::vector<std::vector<int>> t(9, std::vector<int>(9));
    for (int x = 0; x < 9; ++x)
      for (int y = 0; y < 9; ++y) t[x][y] = std::min(x, y);
    CHECK_THROWS_AS(munn(as_semilattice(Semigroup::validate(t))), SizeLimitExceeded);
  }
}

TEST_CASE("square-root equality never happens over a nontrivial group") {
  // |S| - 1 = 2nm is not a perfect square for n, m <= 3, so neither the
  // equality case nor an isomorphism with a Brandt semigroup can occur.
  const Semigroup c2 = cyclic_group(2);
  SplitMix64 rng(5);
  int tried = 0;
  for (int trial = 0; trial < 200 && tried < 40; ++trial) {
    const int n = 2 + static_cast<int>(rng.below(2));
    const int m = 2 + static_cast<int>(rng.below(2));
    std::vector<std::vector<int>> p(n, std::vector<int>(m));
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < m; ++c) p[r][c] = static_cast<int>(rng.below(3)) - 1;
    bool regular = true;
    for (int r = 0; r < n && regular; ++r) {
      bool any = false;
      for (int c = 0; c < m; ++c) any = any || p[r][c] >= 0;
      regular = any;
    }
    for (int c = 0; c < m && regular; ++c) {
      bool any = false;
      for (int r = 0; r < n; ++r) any = any || p[r][c] >= 0;
      regular = any;
    }
    if (!regular) continue;
    ++tried;
    const Semigroup s = rees_matrix({c2, 0, p});
    const long long side = max_subsemilattice(s).size - 1;
    CHECK(side * side < s.size() - 1);
    for (int k = 1; k * k + 1 <= s.size(); ++k)
      if (k * k + 1 == s.size()) CHECK(!bool(find_isomorphism(s, brandt(k))));
  }
  CHECK(tried >= 40);
}
