// Cross-checks against brute force that shares no code path with the library routine.
#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "stacky/cohomology.hpp"
#include "stacky/coset_enum.hpp"
#include "stacky/group_algorithms.hpp"
#include "stacky/hom_count.hpp"
#include "stacky/int_matrix.hpp"
#include "stacky/presentation.hpp"
#include "stacky/small_groups.hpp"

using namespace stacky;

namespace {

int eval(const FiniteGroup& G, const Word& w, const std::vector<int>& img) {
  int x = 0;
  for (int l : w) x = G.mul(x, l > 0 ? img[l - 1] : G.inv(img[-l - 1]));
  return x;
}

long brute_hom_count(const GroupPresentation& P, const FiniteGroup& G) {
  const int k = static_cast<int>(P.num_gens());
  std::vector<int> img(k, 0);
  long count = 0;
  for (;;) {
    bool ok = true;
    for (const Word& r : P.relators()) ok = ok && eval(G, r, img) == 0;
    count += ok;
    int i = 0;
    while (i < k && ++img[i] == G.order()) img[i++] = 0;
    if (i == k) return count;
  }
}

Word random_word(std::mt19937& rng, int gens, int len) {
  Word w;
  for (int i = 0; i < len; ++i) {
    const int g = 1 + static_cast<int>(rng() % gens);
    w.push_back(rng() % 2 ? g : -g);
  }
  return w;
}

// |H^2(Gamma, Z_m)| with trivial action, by listing all normalized cochains
long brute_h2(const FiniteGroup& G, int m) {
  const int n = G.order();
  const int cells = (n - 1) * (n - 1);
  long total = 1;
  for (int i = 0; i < cells; ++i) total *= m;
  std::vector<int> c(n * n, 0);
  long cocycles = 0;
  for (long code = 0; code < total; ++code) {
    long x = code;
    for (int i = 0; i < cells; ++i, x /= m) c[(1 + i / (n - 1)) * n + 1 + i % (n - 1)] = static_cast<int>(x % m);
    bool ok = true;
    for (int g = 1; g < n && ok; ++g)
      for (int h = 1; h < n && ok; ++h)
        for (int k = 1; k < n && ok; ++k)
          ok = (c[h * n + k] + c[g * n + G.mul(h, k)]) % m == (c[G.mul(g, h) * n + k] + c[g * n + h]) % m;
    cocycles += ok;
  }
  std::set<std::vector<int>> B;
  long f_total = 1;
  for (int i = 1; i < n; ++i) f_total *= m;
  for (long code = 0; code < f_total; ++code) {
    std::vector<int> f(n, 0), b(n * n);
    long x = code;
    for (int i = 1; i < n; ++i, x /= m) f[i] = static_cast<int>(x % m);
    for (int g = 0; g < n; ++g)
      for (int h = 0; h < n; ++h) b[g * n + h] = ((f[g] + f[h] - f[G.mul(g, h)]) % m + m) % m;
    B.insert(b);
  }
  return cocycles / static_cast<long>(B.size());
}

}  // namespace

TEST_CASE("hom_count against exhaustive generator images") {
  std::mt19937 rng(11);
  const std::vector<FiniteGroup> targets{cyclic_group(4), symmetric_group(3), quaternion_group(), dihedral_group(5),
                                         alternating_group(4)};
  for (int t = 0; t < 60; ++t) {
    const int gens = 1 + static_cast<int>(rng() % 3);
    std::vector<std::string> names;
    for (int i = 0; i < gens; ++i) names.push_back("g" + std::to_string(i));
    std::vector<Word> rels;
    const int nrel = static_cast<int>(rng() % 4);
    for (int i = 0; i < nrel; ++i) rels.push_back(random_word(rng, gens, 1 + static_cast<int>(rng() % 6)));
    const GroupPresentation P(names, rels);
    for (const FiniteGroup& G : targets) CHECK(hom_count(P, G) == brute_hom_count(P, G));
  }
}

TEST_CASE("abelianization against homomorphisms into cyclic groups") {
  std::mt19937 rng(5);
  for (int t = 0; t < 40; ++t) {
    const int gens = 1 + static_cast<int>(rng() % 3);
    std::vector<std::string> names;
    for (int i = 0; i < gens; ++i) names.push_back("g" + std::to_string(i));
    std::vector<Word> rels;
    for (int i = 0; i < 3; ++i) rels.push_back(random_word(rng, gens, 2 + static_cast<int>(rng() % 8)));
    const GroupPresentation P(names, rels);
    const Abelianization ab = abelianization(P);
    for (int q = 2; q <= 7; ++q) {
      long want = 1;
      for (std::size_t i = 0; i < ab.free_rank; ++i) want *= q;
      for (auto d : ab.torsion.invariant_factors()) want *= std::gcd<long>(d, q);
      CHECK(brute_hom_count(P, cyclic_group(q)) == want);
    }
  }
}

TEST_CASE("coset enumeration against known orders") {
  for (int n = 2; n <= 20; ++n) {
    const auto ce = todd_coxeter(parse_presentation("<r,s | r^" + std::to_string(n) + ", s^2, (r*s)^2>"), {});
    REQUIRE(ce.finite);
    CHECK(ce.index == 2 * n);
  }
  for (const FiniteGroup& G : {symmetric_group(4), quaternion_group(), alternating_group(5)}) {
    const auto ce = todd_coxeter(table_presentation(G, "g"), {});
    REQUIRE(ce.finite);
    CHECK(ce.index == G.order());
  }
  // index of a subgroup matches the coset count of its closure
  const FiniteGroup S4 = symmetric_group(4);
  const GroupPresentation P = table_presentation(S4, "g");
  for (int x = 1; x < S4.order(); ++x) {
    const auto ce = todd_coxeter(P, {element_word(S4, x)});
    REQUIRE(ce.finite);
    CHECK(ce.index * static_cast<long>(closure(S4, {x}).size()) == S4.order());
  }
}

TEST_CASE("Smith normal form on random matrices") {
  std::mt19937 rng(3);
  for (int t = 0; t < 200; ++t) {
    const int r = 1 + static_cast<int>(rng() % 4), c = 1 + static_cast<int>(rng() % 4);
    IntMatrix M(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) M(i, j) = static_cast<long long>(rng() % 41) - 20;
    const SmithForm s = smith_normal_form(M);
    CHECK(s.U * M * s.V == s.D);
    CHECK(s.V * s.Vinv == IntMatrix::identity(c));
    const auto d = s.diagonal();
    for (std::size_t i = 0; i + 1 < d.size(); ++i)
      if (d[i + 1] != 0) CHECK(d[i + 1] % d[i] == 0);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j)
        if (i != j) CHECK(s.D(i, j) == 0);
    CHECK(d.size() == M.rank());
  }
}

TEST_CASE("automorphism counts against exhaustive bijections") {
  for (int n = 1; n <= 12; ++n)
    for (const FiniteGroup& G : groups_of_order(n)) {
      // a map is fixed by the images of the generators; try every tuple
      const auto& gens = G.generators();
      std::vector<int> img(gens.size(), 0);
      long count = 0;
      for (;;) {
        const auto full = G.extend_along_tree(img, [&G](int a, int b) { return G.mul(a, b); });
        if (G.is_hom(full, [&G](int a, int b) { return G.mul(a, b); }) &&
            static_cast<int>(std::set<int>(full.begin(), full.end()).size()) == n)
          ++count;
        std::size_t i = 0;
        while (i < img.size() && ++img[i] == n) img[i++] = 0;
        if (i == img.size()) break;
      }
      CHECK(automorphisms(G).aut.order() == count);
    }
}

TEST_CASE("centers against a commutation scan") {
  for (int n = 1; n <= 24; ++n)
    for (const FiniteGroup& G : groups_of_order(n)) {
      int central = 0;
      for (int x = 0; x < n; ++x) {
        bool c = true;
        for (int y = 0; y < n && c; ++y) c = G.mul(x, y) == G.mul(y, x);
        central += c;
      }
      CHECK(center(G).group().order() == central);
    }
}

TEST_CASE("small groups are pairwise non-isomorphic") {
  for (int n : {8, 12, 16, 18, 24}) {
    const auto& gs = groups_of_order(n);
    for (std::size_t i = 0; i < gs.size(); ++i)
      for (std::size_t j = i + 1; j < gs.size(); ++j) CHECK_FALSE(is_isomorphic(gs[i], gs[j]));
  }
}

TEST_CASE("H2 with trivial coefficients against cochain enumeration") {
  const FiniteGroup V4 = direct_product(cyclic_group(2), cyclic_group(2));
  CHECK(h2(V4, FinAbGroup({2})).size() == brute_h2(V4, 2));
  CHECK(h2(V4, FinAbGroup({3})).size() == brute_h2(V4, 3));
  CHECK(h2(cyclic_group(3), FinAbGroup({3})).size() == brute_h2(cyclic_group(3), 3));
  CHECK(h2(cyclic_group(4), FinAbGroup({6})).size() == brute_h2(cyclic_group(4), 6));
  CHECK(h2(symmetric_group(3), FinAbGroup({3})).size() == 1);
}
