#include <doctest.h>

#include "stacky/cohomology.hpp"
#include "stacky/errors.hpp"
#include "stacky/gerbe.hpp"
#include "stacky/group_algorithms.hpp"
#include "stacky/group_io.hpp"

using namespace stacky;

TEST_CASE("classes of trivial band gerbes") {
  CHECK(dn_trivial_band_classes(symmetric_group(3), 4).size() == 1);
  CHECK(dn_trivial_band_classes(cyclic_group(4), 2).size() == 2);
  CHECK(dn_trivial_band_classes(cyclic_group(2), 3).size() == 1);
  CHECK(dn_class_representative(cyclic_group(4), 2, 3) == 1);
}

TEST_CASE("gerbe groups") {
  const FiniteGroup Z2 = cyclic_group(2), Z4 = cyclic_group(4);
  const GerbeGroup split = gerbe_group(Z4, 3, 0);
  CHECK(is_isomorphic(split.G, direct_product(Z4, cyclic_group(3))));
  CHECK(is_isomorphic(gerbe_group(Z2, 2, 1).G, Z4));
  const GerbeGroup g = gerbe_group(Z4, 2, 2);
  CHECK(g.G.order() == 8);
  std::vector<int> image(g.inclusion.begin(), g.inclusion.end());
  CHECK(is_normal(g.G, image));
  // 2 lies in 2Z(Z4), so this class is the trivial one
  CHECK(recover_gerbe_class(Z4, g, 2) == 0);
  CHECK(recover_gerbe_class(Z4, gerbe_group(Z4, 2, 3), 2) == 1);
  const FiniteGroup S3 = symmetric_group(3);
  CHECK_THROWS_AS(gerbe_group(S3, 2, S3.find_perm({1, 0, 2})), NotCentral);
}

TEST_CASE("extensions over the infinite dihedral group") {
  const FiniteGroup S3 = symmetric_group(3);
  const DinftyExtension s = dinfty_extension(S3, perm_identity(6), 3);
  CHECK(s.extends);
  CHECK(s.count == 1);
  const DinftyExtension z2 = dinfty_extension(cyclic_group(2), perm_identity(2), 2);
  CHECK(z2.extends);
  CHECK(z2.count == 2);
  const FiniteGroup Z3 = cyclic_group(3);
  Perm inv(3);
  for (int i = 0; i < 3; ++i) inv[i] = Z3.inv(i);
  ModuleAction act(2, std::vector<int>(3));
  for (int x = 0; x < 3; ++x) {
    act[0][x] = x;
    act[1][x] = (3 - x) % 3;
  }
  const DinftyExtension z3 = dinfty_extension(Z3, inv, 2);
  CHECK(z3.extends);
  CHECK(z3.count == h2(cyclic_group(2), FinAbGroup({3}), act).size());
}

TEST_CASE("classification over P(m,n)") {
  const auto z2 = classify_over_P(cyclic_group(2), 1, 1);
  REQUIRE(z2.size() == 2);
  CHECK(z2[0].pi1.order() == 2);
  CHECK(z2[1].pi1.order() == 1);
  const auto z4 = classify_over_P(cyclic_group(4), 2, 3);
  REQUIRE(z4.size() == 3);
  CHECK(z4[0].orbit == std::vector<int>{0});
  CHECK(z4[1].orbit == std::vector<int>{1, 3});
  CHECK(z4[2].orbit == std::vector<int>{2});
  CHECK(z4[1].pi1.order() == 1);
  CHECK(z4[2].pi1.order() == 2);
  CHECK_THROWS_AS(classify_over_P(cyclic_group(4), 2, 4), NotCoprime);
}

TEST_CASE("Bezout coefficients") {
  const Bezout b = bezout(2, 3);
  CHECK(b.s * 2 + b.r * 3 == 1);
  const Bezout c = bezout(4, 6);
  CHECK(c.d == 2);
  CHECK(c.s * 4 + c.r * 6 == 2);
  const Bezout e = bezout(2, 4);
  CHECK(e.s == 1);
  CHECK(e.r == 0);
}

TEST_CASE("gamma construction") {
  const GammaConstruction id = gamma_construct(cyclic_group(4), 2, 3, 0);
  CHECK(id.isomorphic);
  CHECK(id.pushout_group.order() == 4);
  const GammaConstruction z2 = gamma_construct(cyclic_group(2), 1, 2, 1);
  CHECK(z2.pushout_group.order() == 1);
  CHECK(z2.round_trip);
  const GammaConstruction z6 = gamma_construct(cyclic_group(6), 2, 3, 3);
  CHECK(z6.isomorphic);
  CHECK(is_isomorphic(z6.pushout_group, cyclic_group(3)));
  CHECK(z6.alpha == 3);
}

TEST_CASE("Mayer-Vietoris") {
  CHECK(mayer_vietoris_check(FinAbGroup(), 2, 3));
  CHECK(mayer_vietoris_check(FinAbGroup({6}), 2, 3));
  CHECK(mayer_vietoris_check(FinAbGroup({2, 4}), 3, 5));
}
