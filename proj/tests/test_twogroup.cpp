#include <doctest.h>

#include "stacky/cohomology.hpp"
#include "stacky/crossed_module.hpp"
#include "stacky/errors.hpp"
#include "stacky/group_algorithms.hpp"

using namespace stacky;

namespace {

CrossedModule inclusion_z2_z4() {
  const FiniteGroup Z2 = cyclic_group(2), Z4 = cyclic_group(4);
  return new_crossed_module(Z2, Z4, {0, 2}, trivial_action(Z2, Z4));
}

}  // namespace

TEST_CASE("crossed module validation") {
  const FiniteGroup S3 = symmetric_group(3), Z2 = cyclic_group(2), T;
  const CrossedModule g = new_crossed_module(T, S3, {0}, trivial_action(T, S3));
  HomotopyGroups hg = homotopy_groups(g);
  CHECK(is_isomorphic(hg.pi1, S3));
  CHECK(hg.pi2.is_trivial());

  const CrossedModule a = new_crossed_module(Z2, T, {0, 0}, trivial_action(Z2, T));
  CHECK(homotopy_groups(a).pi2 == FinAbGroup({2}));

  hg = homotopy_groups(inclusion_z2_z4());
  CHECK(hg.pi1.order() == 2);
  CHECK(hg.pi2.is_trivial());

  // not a homomorphism
  CHECK_THROWS_AS(new_crossed_module(Z2, cyclic_group(4), {0, 1}, trivial_action(Z2, cyclic_group(4))),
                  NotHomomorphism);
  // S3 -> 1 fails Peiffer
  CHECK_THROWS_AS(new_crossed_module(S3, T, std::vector<int>(6, 0), trivial_action(S3, T)), PeifferFailure);
  // Z3 -> S3 onto rotations with trivial action is not equivariant
  const FiniteGroup Z3 = cyclic_group(3);
  const int r = S3.find_perm({1, 2, 0});
  std::vector<int> phi{0, r, S3.mul(r, r)};
  CHECK_THROWS_AS(new_crossed_module(Z3, S3, phi, trivial_action(Z3, S3)), EquivarianceFailure);
}

TEST_CASE("homotopy groups of Z4 -> Z8") {
  const FiniteGroup Z4 = cyclic_group(4), Z8 = cyclic_group(8);
  const CrossedModule X = new_crossed_module(Z4, Z8, {0, 2, 4, 6}, trivial_action(Z4, Z8));
  const HomotopyGroups hg = homotopy_groups(X);
  CHECK(hg.pi1.order() == 2);
  CHECK(hg.pi2.is_trivial());
}

TEST_CASE("2-groups") {
  const FiniteGroup S3 = symmetric_group(3), Z2 = cyclic_group(2), T;
  const CrossedModule g = new_crossed_module(T, S3, {0}, trivial_action(T, S3));
  const TwoGroup tg = to_2group(g);
  CHECK(tg.arrows.order() == 6);
  CHECK(roundtrip_check(g));

  const TwoGroup t = to_2group(inclusion_z2_z4());
  CHECK(t.arrows.order() == 8);
  CHECK(two_group_laws_hold(t));
  CHECK(roundtrip_check(inclusion_z2_z4()));

  const CrossedModule a = new_crossed_module(Z2, T, {0, 0}, trivial_action(Z2, T));
  const TwoGroup ta = to_2group(a);
  CHECK(ta.objects.order() == 1);
  CHECK(ta.arrows.order() == 2);
  CHECK(roundtrip_check(a));
  CHECK(crossed_modules_isomorphic(a, from_2group(ta).module));
}

TEST_CASE("composition of arrows") {
  const CrossedModule X = inclusion_z2_z4();
  const TwoGroup t = to_2group(X);
  for (int f = 0; f < t.arrows.order(); ++f) {
    CHECK(t.compose(t.unit[t.source[f]], f) == f);
    CHECK(t.compose(f, t.unit[t.target[f]]) == f);
  }
}

TEST_CASE("semidirect along a diagram") {
  const FiniteGroup Z2 = cyclic_group(2), Z4 = cyclic_group(4), T;
  // H trivial gives K x| G
  const Quotient plain = semidirect_along(Z2, Z4, T, {0}, {0}, trivial_action(T, Z2), trivial_action(Z4, Z2));
  CHECK(plain.group.order() == 8);
  const Quotient diag =
      semidirect_along(Z2, Z2, Z2, {0, 1}, {0, 1}, trivial_action(Z2, Z2), trivial_action(Z2, Z2));
  CHECK(diag.group.order() == 2);
  const Quotient q = semidirect_along(Z4, Z2, Z2, {0, 2}, {0, 1}, trivial_action(Z2, Z4), trivial_action(Z2, Z4));
  CHECK(q.group.order() == 4);
  CHECK_THROWS_AS(semidirect_along(Z4, Z2, Z2, {0, 1}, {0, 1}, trivial_action(Z2, Z4), trivial_action(Z2, Z4)),
                  ValidationError);
}

TEST_CASE("second cohomology") {
  CHECK(h2(FiniteGroup(), FinAbGroup({5})).size() == 1);
  CHECK(h2(cyclic_group(2), FinAbGroup({2})).group() == FinAbGroup({2}));
  const FiniteGroup V4 = direct_product(cyclic_group(2), cyclic_group(2));
  CHECK(h2(V4, FinAbGroup({2})).group() == FinAbGroup({2, 2, 2}));
  CHECK(h2(symmetric_group(3), FinAbGroup({2})).group() == FinAbGroup({2}));
  CHECK(h2(quaternion_group(), FinAbGroup({2})).group() == FinAbGroup({2, 2}));
  // Z2 acting on Z3 by inversion
  ModuleAction act(2, std::vector<int>(3));
  for (int x = 0; x < 3; ++x) {
    act[0][x] = x;
    act[1][x] = (3 - x) % 3;
  }
  CHECK(h2(cyclic_group(2), FinAbGroup({3}), act).size() == 1);
  CHECK_THROWS_AS(h2(cyclic_group(30), FinAbGroup({2})), OrderBoundExceeded);
}

TEST_CASE("extension groups from cocycles") {
  const H2 H = h2(cyclic_group(2), FinAbGroup({2}));
  const CocycleClass c0 = H.representative(0), c1 = H.representative(1);
  CHECK(is_isomorphic(extension_group(c0.Gamma, c0.A, c0.action, c0.cocycle),
                      direct_product(cyclic_group(2), cyclic_group(2))));
  CHECK(is_isomorphic(extension_group(c1.Gamma, c1.A, c1.action, c1.cocycle), cyclic_group(4)));
  CHECK(H.class_of(c1.cocycle) == 1);
  CHECK_THROWS_AS(H.class_of({0, 0, 0, 1, 0}), InvalidArgument);
}

TEST_CASE("split modules have a section") {
  const auto all = enumerate_crossed_modules(16);
  int split = 0;
  for (const CrossedModule& X : all) {
    const HomotopyGroups hg = homotopy_groups(X);
    if (const auto s = find_section(X, hg)) {
      ++split;
      CHECK_NOTHROW(check_section(X, hg, *s));
    }
  }
  CHECK(split > 0);
  CHECK(all.size() > static_cast<std::size_t>(split));
}

TEST_CASE("enumeration is duplicate free on a slice") {
  const auto all = enumerate_crossed_modules(8);
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j)
      if (all[i].G1.order() == all[j].G1.order() && all[i].G2.order() == all[j].G2.order())
        CHECK_FALSE(crossed_modules_isomorphic(all[i], all[j]));
}
