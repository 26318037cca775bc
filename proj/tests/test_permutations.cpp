#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "positroid/permutation.hpp"
#include "positroid/rng.hpp"
#include "positroid/separable.hpp"
#include "positroid/wperm.hpp"

using namespace positroid;

namespace {

// All decorated permutations of [n] with every fixed point a coloop (the
// unique loopless decoration of a given word).
std::vector<DecoratedPermutation> loopless_perms(int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  std::vector<DecoratedPermutation> out;
  do {
    std::vector<int> coloops;
    for (int i = 1; i <= n; ++i)
      if (img[i - 1] == i) coloops.push_back(i);
    out.emplace_back(img, std::vector<int>{}, coloops);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

DecoratedPermutation random_decorated(int n, Rng& rng) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  std::shuffle(img.begin(), img.end(), rng.raw());
  std::vector<int> loops, coloops;
  for (int i = 1; i <= n; ++i)
    if (img[i - 1] == i) (rng.uniform(0, 1) ? loops : coloops).push_back(i);
  return DecoratedPermutation(img, loops, coloops);
}

}  // namespace

TEST_CASE("decorated permutation basics and wire format") {
  DecoratedPermutation pi({3, 2, 5, 1, 6, 8, 7, 4}, {2}, {7});
  CHECK(pi.str() == "3 2_ 5 1 6 8 7^ 4");
  CHECK(DecoratedPermutation::parse("3 2_ 5 1 6 8 7^ 4") == pi);
  CHECK(anti_excedances(pi) == 3);

  std::vector<int> id = {1, 2, 3, 4};
  CHECK(anti_excedances(DecoratedPermutation(id, {1, 2, 3, 4}, {})) == 0);
  CHECK(anti_excedances(DecoratedPermutation(id, {}, {1, 2, 3, 4})) == 4);

  CHECK_THROWS_AS(DecoratedPermutation({1, 2}, {}, {}), std::invalid_argument);   // bare fixed points
  CHECK_THROWS_AS(DecoratedPermutation({2, 1}, {1}, {}), std::invalid_argument);  // loop off fixed point
  CHECK_THROWS_AS(DecoratedPermutation({1, 1}, {1}, {}), std::invalid_argument);  // not a bijection
}

TEST_CASE("affine lift") {
  DecoratedPermutation pi({3, 2, 5, 1, 6, 8, 7, 4}, {2}, {7});
  AffinePermutation a = to_affine(pi);
  CHECK(a.window == std::vector<long>{3, 2, 5, 9, 6, 8, 15, 12});
  CHECK(a.bounded());
  CHECK(a.k() == 3);
  CHECK(to_decorated(a) == pi);

  DecoratedPermutation loops({1, 2, 3}, {1, 2, 3}, {});
  CHECK(to_affine(loops).window == std::vector<long>{1, 2, 3});

  Rng rng(20240815);
  for (int t = 0; t < 500; ++t) {
    DecoratedPermutation p = random_decorated(static_cast<int>(rng.uniform(1, 8)), rng);
    CHECK(to_decorated(to_affine(p)) == p);
  }
}

TEST_CASE("cell dimension") {
  // Top cell pi(i) = i+k has no inversions.
  for (int n = 3; n <= 7; ++n)
    for (int k = 0; k <= n; ++k) {
      AffinePermutation top;
      top.n = n;
      for (int i = 1; i <= n; ++i) top.window.push_back(i + k);
      if (!top.bounded()) continue;
      CHECK(top.inversions() == 0);
      CHECK(top.cell_dimension() == k * (n - k));
    }

  // Zero-dimensional cells are exactly those with inv = k(n-k); brute check
  // that the minimum dimension over a small type is 0 and is attained.
  int min_dim = 1 << 20;
  for (const auto& pi : loopless_perms(4)) {
    AffinePermutation a = to_affine(pi);
    if (a.k() != 2) continue;
    min_dim = std::min(min_dim, a.cell_dimension());
  }
  // Loopless cells of type (2,4) bottom out above 0; include decorations.
  std::vector<int> id4 = {1, 2, 3, 4};
  AffinePermutation frozen = to_affine(DecoratedPermutation(id4, {3, 4}, {1, 2}));
  CHECK(frozen.k() == 2);
  CHECK(frozen.cell_dimension() == 0);

  // Tree-type cells (from the separable bijection) all have dimension n-1.
  for (int m = 2; m <= 6; ++m)
    for (const auto& w : enumerate_separable(m)) {
      AffinePermutation a = to_affine(beta(w));
      CHECK(a.cell_dimension() == m);  // n = m+1
    }
}

TEST_CASE("t-duality on decorated permutations") {
  DecoratedPermutation pi({2, 4, 7, 1, 8, 5, 3, 6});
  CHECK(anti_excedances(pi) == 4);
  DecoratedPermutation hat = t_dual(pi);
  CHECK(hat.img == std::vector<int>{6, 2, 4, 7, 1, 8, 5, 3});
  CHECK(hat.is_loop(2));
  CHECK(hat.coloopless());
  CHECK(anti_excedances(hat) == 3);

  // Long cycle pi(i) = i+1 mod n dualizes to all loops.
  DecoratedPermutation cyc({2, 3, 4, 5, 1});
  DecoratedPermutation chat = t_dual(cyc);
  CHECK(chat.img == std::vector<int>{1, 2, 3, 4, 5});
  for (int i = 1; i <= 5; ++i) CHECK(chat.is_loop(i));

  CHECK_THROWS_AS(t_dual(DecoratedPermutation({1, 3, 2}, {1}, {})), std::invalid_argument);

  Rng rng(99);
  int done = 0;
  while (done < 500) {
    DecoratedPermutation p = random_decorated(static_cast<int>(rng.uniform(2, 8)), rng);
    if (!p.loopless()) continue;
    ++done;
    CHECK(t_dual_inverse(t_dual(p)) == p);
  }
}

TEST_CASE("bruhat covers drop dimension by one") {
  DecoratedPermutation frozen({1, 2, 3, 4}, {3, 4}, {1, 2});
  CHECK(bruhat_covers(to_affine(frozen)).empty());

  for (const auto& pi : loopless_perms(5)) {
    AffinePermutation a = to_affine(pi);
    for (const auto& nu : bruhat_covers(a)) {
      CHECK(nu.bounded());
      CHECK(nu.k() == a.k());
      CHECK(nu.cell_dimension() == a.cell_dimension() - 1);
    }
  }
}

TEST_CASE("t-duality is a poset isomorphism on loopless covers (small n)") {
  for (int n = 4; n <= 6; ++n) {
    for (const auto& pi : loopless_perms(n)) {
      if (anti_excedances(pi) < 1) continue;
      DecoratedPermutation hat = t_dual(pi);
      std::set<DecoratedPermutation> lhs;
      for (const auto& nu : bruhat_covers(to_affine(pi))) {
        DecoratedPermutation d = to_decorated(nu);
        if (d.loopless()) lhs.insert(t_dual(d));
      }
      std::set<DecoratedPermutation> rhs;
      for (const auto& nu : bruhat_covers(to_affine(hat))) {
        DecoratedPermutation d = to_decorated(nu);
        if (d.coloopless()) rhs.insert(d);
      }
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("cyclic descents") {
  CHECK(cyclic_descents({3, 2, 4, 1, 5, 6}) == std::vector<int>{1, 2, 3});
  CHECK(cyclic_descents({5, 6, 3, 2, 4, 1}) == std::vector<int>{2, 3, 5});
  CHECK(cyclic_descents({1, 2, 3, 4, 5}) == std::vector<int>{1});
}

TEST_CASE("w-simplex vertex sets") {
  WPermutation w({3, 2, 4, 1, 5, 6});
  CHECK(w.k == 2);
  auto I = w_vertex_sets(w);
  CHECK(I[0] == std::vector<int>{1, 2, 3});
  CHECK(I[1] == std::vector<int>{2, 3, 5});
  CHECK(I[2] == std::vector<int>{1, 3, 4});
  CHECK(I[3] == std::vector<int>{1, 2, 4});
  CHECK(I[4] == std::vector<int>{1, 3, 5});
  CHECK(I[5] == std::vector<int>{2, 3, 6});

  WPermutation w2({2, 6, 1, 4, 5, 3, 7});
  CHECK(w_vertex_sets(w2)[0] == std::vector<int>{1, 2, 4, 6});

  // r in I_r, r-1 not in I_r; circuit relation links consecutive sets.
  for (int n = 4; n <= 7; ++n)
    for (int k = 0; k <= n - 2; ++k)
      for (const auto& ww : enumerate_D(k, n)) {
        auto sets = w_vertex_sets(ww);
        for (int r = 1; r <= n; ++r) {
          const auto& S = sets[r - 1];
          CHECK(std::count(S.begin(), S.end(), r) == 1);
          int prev = r == 1 ? n : r - 1;
          CHECK(std::count(S.begin(), S.end(), prev) == 0);
        }
        // I_{w_i + 1} = (I_{w_{i-1} + 1} minus {w_i}) union {w_i + 1}, w_0 = n.
        int wprev = n;
        for (int i = 0; i + 1 < n; ++i) {
          int wi = ww.word[i];
          std::vector<int> expect = sets[(wprev % n + 1) - 1];
          expect.erase(std::remove(expect.begin(), expect.end(), wi), expect.end());
          expect.push_back(wi + 1);
          std::sort(expect.begin(), expect.end());
          CHECK(sets[(wi % n + 1) - 1] == expect);
          wprev = wi;
        }
      }

  CHECK_THROWS_AS(WPermutation({2, 1, 3, 4, 6, 5}), std::invalid_argument);
}

TEST_CASE("sorted pairs") {
  CHECK(is_sorted_pair({1, 3}, {2, 4}));
  CHECK(!is_sorted_pair({2, 4}, {1, 3}));
  CHECK(is_sorted_pair({1, 3}, {1, 3}));

  // Vertex sets of any w-simplex are pairwise comparable.
  for (int k = 0; k <= 4; ++k)
    for (const auto& w : enumerate_D(k, 6)) {
      auto sets = w_vertex_sets(w);
      for (size_t a = 0; a < sets.size(); ++a)
        for (size_t b = a + 1; b < sets.size(); ++b)
          CHECK((is_sorted_pair(sets[a], sets[b]) || is_sorted_pair(sets[b], sets[a])));
    }
}

TEST_CASE("enumerate_D matches Eulerian numbers") {
  CHECK(enumerate_D(1, 6).size() == 26);
  CHECK(enumerate_D(1, 7).size() == 57);
  for (int n = 2; n <= 9; ++n) {
    long total = 0;
    for (int k = 0; k <= n - 2; ++k) {
      long cnt = static_cast<long>(enumerate_D(k, n).size());
      CHECK(cnt == eulerian_number(k, n - 1));
      total += cnt;
    }
    long fact = 1;
    for (int i = 2; i <= n - 1; ++i) fact *= i;
    CHECK(total == fact);
  }
}

TEST_CASE("separable decomposition") {
  SepResult r = separable_decompose({2, 3, 1, 6, 5, 4});
  REQUIRE(r.separable);
  CHECK(r.tree->str() == "(((1+1)-1)+((1-1)-1))");

  SepResult bad = separable_decompose({3, 1, 4, 2});
  CHECK(!bad.separable);
  CHECK(bad.witness == std::vector<int>{1, 2, 3, 4});
  CHECK(!separable_decompose({2, 4, 1, 3}).separable);

  SepResult mono = separable_decompose({1, 2, 3, 4});
  REQUIRE(mono.separable);
  CHECK(mono.tree->str() == "(((1+1)+1)+1)");

  // Schroeder refinement: separable words on [m] with k descents.
  long expect[7][6] = {{1, 0, 0, 0, 0, 0},   {1, 1, 0, 0, 0, 0},    {1, 4, 1, 0, 0, 0},
                       {1, 10, 10, 1, 0, 0}, {1, 20, 48, 20, 1, 0}, {1, 35, 161, 161, 35, 1}};
  for (int m = 1; m <= 6; ++m) {
    std::vector<long> byk(m, 0);
    for (const auto& w : enumerate_separable(m)) ++byk[descents(w)];
    for (int k = 0; k < m; ++k) CHECK(byk[k] == expect[m - 1][k]);
  }
}

TEST_CASE("beta bijection to tree permutations") {
  CHECK_THROWS_AS(beta({3, 1, 4, 2}), std::invalid_argument);

  // beta(w) is an n-cycle whose type tracks descents.
  for (int m = 2; m <= 6; ++m) {
    std::set<DecoratedPermutation> images;
    for (const auto& w : enumerate_separable(m)) {
      DecoratedPermutation pi = beta(w);
      CHECK(pi.n == m + 1);
      CHECK(anti_excedances(pi) == descents(w) + 1);
      CHECK(pi.loopless());
      images.insert(pi);
    }
    CHECK(images.size() == enumerate_separable(m).size());  // injective
  }
}
