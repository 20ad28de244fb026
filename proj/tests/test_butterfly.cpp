#include <doctest.h>

#include <set>

#include "stacky/butterfly.hpp"
#include "stacky/butterfly_oracle.hpp"
#include "stacky/errors.hpp"
#include "stacky/hom_count.hpp"
#include "stacky/presentation.hpp"

using namespace stacky;

namespace {

struct Split {
  CrossedModule X;
  HomotopyGroups hg;
  std::vector<int> sigma;
};

Split make_split(CrossedModule X) {
  Split s{std::move(X), {}, {}};
  s.hg = homotopy_groups(s.X);
  const auto sigma = find_section(s.X, s.hg);
  REQUIRE(sigma);
  s.sigma = *sigma;
  return s;
}

// [Z2 -0-> Z2]: pi1 = pi2 = Z2
Split zero_z2() {
  const FiniteGroup Z2 = cyclic_group(2);
  return make_split(new_crossed_module(Z2, Z2, {0, 0}, trivial_action(Z2, Z2)));
}

}  // namespace

TEST_CASE("class counts") {
  const Split s = zero_z2();
  const FiniteGroup Z2 = cyclic_group(2);
  CHECK(hom_classes_split(Z2, s.X, s.sigma).size() == 4);
  CHECK(hom_classes_split(FiniteGroup(), s.X, s.sigma).size() == 1);

  // pi2 trivial: classes are Hom(Gamma, pi1)
  const FiniteGroup S3 = symmetric_group(3), T;
  const Split g = make_split(new_crossed_module(T, S3, {0}, trivial_action(T, S3)));
  CHECK(hom_classes_split(Z2, g.X, g.sigma).size() == 4);
  CHECK(hom_classes_split(S3, g.X, g.sigma).size() ==
        static_cast<std::size_t>(hom_count(table_presentation(S3, "g"), S3)));

  // Z2 included as the first factor of Z2 x Z2: pi2 is trivial, pi1 = Z2
  const FiniteGroup V4 = direct_product(Z2, Z2);
  const Split inc = make_split(new_crossed_module(Z2, V4, {0, 1}, trivial_action(Z2, V4)));
  CHECK(inc.hg.pi2.is_trivial());
  CHECK(hom_classes_split(Z2, inc.X, inc.sigma).size() == 2);
}

TEST_CASE("classes validate and carry their cocycle") {
  const Split s = zero_z2();
  const FiniteGroup Z2 = cyclic_group(2);
  for (const HomClass& h : hom_classes_split(Z2, s.X, s.sigma)) {
    const ButterflyCheck ck = butterfly_validate(h.butterfly, s.X);
    CHECK(ck.ok);
    CHECK(butterfly_chi(h.butterfly, s.hg) == h.chi);
    const H2 H = h2(Z2, s.hg.pi2, h.cocycle.action);
    CHECK(H.class_of(butterfly_cocycle(h.butterfly, s.X, s.hg, s.sigma)) == h.class_index);
  }
}

TEST_CASE("trivial butterfly") {
  const Split s = zero_z2();
  const FiniteGroup Z2 = cyclic_group(2);
  ButterflyDiagram b;
  b.Gamma = Z2;
  b.E = direct_product(Z2, Z2);  // (gamma, a)
  b.inj = {0, 2};
  b.proj = {0, 1, 0, 1};
  b.rho = {0, 0, 0, 0};
  CHECK(butterfly_validate(b, s.X).ok);
}

TEST_CASE("corrupted butterflies are rejected by name") {
  const FiniteGroup Z2 = cyclic_group(2), V4 = direct_product(Z2, Z2);
  const Split s = make_split(new_crossed_module(Z2, V4, {0, 1}, trivial_action(Z2, V4)));
  const auto classes = hom_classes_split(Z2, s.X, s.sigma);
  ButterflyDiagram b = classes.back().butterfly;
  REQUIRE(butterfly_validate(b, s.X).ok);
  // shifting rho at a single element by im(phi) breaks multiplicativity
  b.rho[1] = s.X.G1.mul(b.rho[1], s.X.phi[1]);
  const ButterflyCheck ck = butterfly_validate(b, s.X);
  CHECK_FALSE(ck.ok);
  CHECK(ck.failure.find("rho") != std::string::npos);

  ButterflyDiagram c = classes.back().butterfly;
  c.proj[c.inj[1]] = 1;
  CHECK_FALSE(butterfly_validate(c, s.X).ok);
}

TEST_CASE("compatibility is checked") {
  // [Z3 -0-> Z2] with Z2 inverting Z3; rho = 0 on a product E breaks the
  // Peiffer-type condition once the inverting action is visible in E
  const FiniteGroup Z3 = cyclic_group(3), Z2 = cyclic_group(2);
  std::vector<std::vector<int>> act{{0, 1, 2}, {0, 2, 1}};
  const Split s = make_split(new_crossed_module(Z3, Z2, {0, 0, 0}, act));
  const auto classes = hom_classes_split(Z2, s.X, s.sigma);
  bool saw = false;
  for (const HomClass& h : classes) {
    if (h.chi[1] == 0) continue;
    ButterflyDiagram b = h.butterfly;
    std::fill(b.rho.begin(), b.rho.end(), 0);
    const ButterflyCheck ck = butterfly_validate(b, s.X);
    CHECK_FALSE(ck.ok);
    CHECK(ck.failure.find("compatib") != std::string::npos);
    saw = true;
  }
  CHECK(saw);
}

TEST_CASE("torsor action") {
  const Split s = zero_z2();
  const FiniteGroup Z2 = cyclic_group(2);
  const auto cl = hom_classes_split(Z2, s.X, s.sigma);
  for (const HomClass& h : cl) {
    const H2 H = h2(Z2, s.hg.pi2, h.cocycle.action);
    const CocycleClass zero = H.representative(0), one = H.representative(1);
    CHECK(butterflies_isomorphic(torsor_act(h.butterfly, zero, s.X, s.hg), h.butterfly));
    const ButterflyDiagram moved = torsor_act(h.butterfly, one, s.X, s.hg);
    CHECK(butterfly_validate(moved, s.X).ok);
    CHECK_FALSE(butterflies_isomorphic(moved, h.butterfly));
    // order two: twice is back
    CHECK(butterflies_isomorphic(torsor_act(moved, one, s.X, s.hg), h.butterfly));
  }
  CocycleClass bad = h2(Z2, s.hg.pi2).representative(1);
  bad.cocycle[1 * 2 + 0] = 1;
  CHECK_THROWS_AS(torsor_act(cl[0].butterfly, bad, s.X, s.hg), InvalidArgument);
}

TEST_CASE("conjugation by G1") {
  const Split s = zero_z2();
  const FiniteGroup Z2 = cyclic_group(2);
  for (const HomClass& h : hom_classes_split(Z2, s.X, s.sigma)) {
    CHECK(butterflies_isomorphic(conjugate_class(0, h.butterfly, s.X), h.butterfly));
    // G1 = Z2 is central and acts trivially on G2
    CHECK(is_fixed(1, h.butterfly, s.X));
  }
}

TEST_CASE("conjugation fixing one class fixes all over the same chi") {
  for (const CrossedModule& X : enumerate_crossed_modules(16)) {
    const HomotopyGroups hg = homotopy_groups(X);
    const auto sig = find_section(X, hg);
    if (!sig) continue;
    const FiniteGroup Z2 = cyclic_group(2);
    const auto cl = hom_classes_split(Z2, X, *sig);
    for (int a = 0; a < X.G1.order(); ++a) {
      bool trivial_on_pi2 = true;
      for (int g : hg.kernel) trivial_on_pi2 &= X.act(g, a) == g;
      if (!trivial_on_pi2) continue;
      for (std::size_t i = 0; i < cl.size(); ++i) {
        if (butterfly_chi(conjugate_class(a, cl[i].butterfly, X), hg) != cl[i].chi) continue;
        if (!is_fixed(a, cl[i].butterfly, X)) continue;
        for (std::size_t j = 0; j < cl.size(); ++j)
          if (cl[j].chi == cl[i].chi) CHECK(is_fixed(a, cl[j].butterfly, X));
      }
    }
  }
}

TEST_CASE("split butterfly agrees with the semidirect construction") {
  const FiniteGroup Gammas[] = {cyclic_group(2), cyclic_group(3), direct_product(cyclic_group(2), cyclic_group(2))};
  int compared = 0;
  for (const CrossedModule& X : enumerate_crossed_modules(12)) {
    const HomotopyGroups hg = homotopy_groups(X);
    const auto sig = find_section(X, hg);
    if (!sig) continue;
    for (const FiniteGroup& Gamma : Gammas)
      for (const HomClass& h : hom_classes_split(Gamma, X, *sig)) {
        const CocycleClass& c = h.cocycle;
        const FinAbGroup& A = hg.pi2;
        const FiniteGroup K = extension_group(c.Gamma, A, c.action, c.cocycle);
        const FiniteGroup P = A.as_finite_group();
        const int nA = static_cast<int>(A.order());
        std::vector<int> l(nA), p(nA);
        for (int i = 0; i < nA; ++i) {
          l[i] = i;
          p[i] = hg.pi2_in.label_of(A.element(i));
        }
        std::vector<std::vector<int>> on_H(K.order(), std::vector<int>(nA)), on_G(K.order(), std::vector<int>(X.G2.order()));
        for (int k = 0; k < K.order(); ++k) {
          const int u = (*sig)[h.chi[k / nA]];
          for (int g = 0; g < X.G2.order(); ++g) on_G[k][g] = X.act(g, u);
          for (int i = 0; i < nA; ++i) on_H[k][i] = static_cast<int>(A.index_of(hg.pi2_in.coords_of(X.act(p[i], u))));
        }
        const Quotient E = semidirect_along(K, X.G2, P, l, p, on_H, on_G);
        CHECK(E.group.order() == h.butterfly.E.order());
        CHECK(is_isomorphic(E.group, h.butterfly.E));
        ++compared;
      }
  }
  CHECK(compared > 20);
}

TEST_CASE("oracle agrees on a small module") {
  const Split s = zero_z2();
  const ButterflyOracle O(2, 2, s.X);
  const auto cl = hom_classes_split(O.Gamma(), s.X, s.sigma);
  CHECK(static_cast<std::int64_t>(cl.size()) == O.orbit_count());
  std::set<std::int64_t> ids;
  for (const HomClass& h : cl) ids.insert(O.classify(h.butterfly));
  CHECK(ids.size() == cl.size());
  CHECK_FALSE(ids.count(-1));
}
