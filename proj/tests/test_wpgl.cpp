#include <doctest.h>

#include <numeric>

#include "stacky/errors.hpp"
#include "stacky/small_groups.hpp"
#include "stacky/wpgl.hpp"

using namespace stacky;

TEST_CASE("PGL descriptors") {
  const PglDescriptor a = pgl_descriptor(2, 3);
  CHECK(a.case_tag == PglCase::NonDividing);
  CHECK(a.pi1_tag == Pi1Tag::Cstar);
  CHECK(a.pi2_order == 1);
  CHECK(a.split);
  CHECK(a.rs.s * 2 + a.rs.r * 3 == 1);
  const PglDescriptor b = pgl_descriptor(2, 4);
  CHECK(b.case_tag == PglCase::Dividing);
  CHECK(b.pi1_tag == Pi1Tag::CstarLtimesC);
  CHECK(b.pi2_order == 2);
  CHECK(b.section == "sigma(lambda, a) = (1, lambda, a)");
  const PglDescriptor c = pgl_descriptor(3, 3);
  CHECK(c.case_tag == PglCase::Equal);
  CHECK(c.pi1_tag == Pi1Tag::PGL2);
  CHECK(c.pi2_order == 3);
  CHECK_FALSE(c.split);
  CHECK(c.section.empty());
  CHECK(to_string(Pi1Tag::CstarLtimesC) == "CstarLtimesC");
}

TEST_CASE("pi1 depends on (m,n) only through (m/d, n/d)") {
  CHECK(pgl_descriptor(2, 4).pi1_tag == pgl_descriptor(1, 2).pi1_tag);
  CHECK(pgl_descriptor(4, 6).pi1_tag == pgl_descriptor(2, 3).pi1_tag);
  CHECK(pgl_descriptor(7, 7).pi1_tag == pgl_descriptor(1, 1).pi1_tag);
  for (int m = 1; m <= 12; ++m)
    for (int n = 1; n <= 12; ++n) CHECK(pgl_pi1_reduction_check(m, n));
}

TEST_CASE("spherical classification") {
  CHECK(classify_spherical_mn(FiniteGroup(), 2, 3).count == 1);
  for (int k = 1; k <= 6; ++k) CHECK(classify_spherical_mn(cyclic_group(k), 4, 6).count == k * std::gcd(k, 2));
  CHECK(classify_spherical_mn(cyclic_group(2), 2, 4).count == 4);
  CHECK_THROWS_AS(classify_spherical_mn(cyclic_group(2), 3, 3), InvalidArgument);
  // S3 with d = 2: two characters, H2(S3, Z2) = Z2
  CHECK(classify_spherical_mn(symmetric_group(3), 2, 4).count == 4);
}

TEST_CASE("pairs (K, chi)") {
  const auto cl = classify_spherical_mn(cyclic_group(2), 2, 4);
  const FiniteGroup V4 = direct_product(cyclic_group(2), cyclic_group(2));
  for (const SphericalClassMN& c : cl.classes) {
    const KChiPair p = to_pair_K_chi(c);
    CHECK(p.K.order() == 4);
    CHECK(p.K.elem_order(p.mu_generator) == 2);
    if (c.class_index == 0) CHECK(is_isomorphic(p.K, V4));
    if (c.class_index == 1) CHECK(is_isomorphic(p.K, cyclic_group(4)));
    if (c.class_index == 0 && c.chi_index == 0)
      for (const QmodZ& v : p.chi) CHECK(v.is_zero());
    CHECK(pair_class(p) == std::make_pair(c.chi_index, c.class_index));
  }
}

TEST_CASE("reconstruction") {
  // K = mu_d, chi trivial: the curve itself
  const auto triv = classify_spherical_mn(FiniteGroup(), 2, 4);
  const Reconstruction r0 = reconstruct(to_pair_K_chi(triv.classes[0]), 2, 4);
  CHECK(r0.pi1.order() == 1);
  CHECK(r0.orbifold == "P(2,4)");

  // mu_d x Z_k with chi faithful on Z_k
  const auto cl = classify_spherical_mn(cyclic_group(3), 2, 4);
  bool found = false;
  for (const auto& c : cl.classes) {
    if (c.class_index != 0 || c.chi_index == 0) continue;
    const KChiPair p = to_pair_K_chi(c);
    const Reconstruction r = reconstruct(p, 2, 4);
    CHECK(r.pi1.order() == 3);
    CHECK(r.orbifold == "[P(1,2)/Z3]");
    CHECK(reconstruct_identity_check(r, p.K, 12));
    found = true;
  }
  CHECK(found);

  const KChiPair p = to_pair_K_chi(classify_spherical_mn(cyclic_group(2), 2, 3).classes[1]);
  const Reconstruction r = reconstruct(p, 2, 3);
  for (int N = 1; N <= 10; ++N) {
    const auto e = r.exponents(QmodZ(1, N), 0);
    CHECK(e.first == QmodZ(2, N));
    CHECK(e.second == QmodZ(3, N));
  }
}

TEST_CASE("platonic types") {
  CHECK(platonic_type(cyclic_group(5)) == ImageType{ImageType::Kind::Cyclic, 5});
  CHECK(platonic_type(symmetric_group(4)).kind == ImageType::Kind::Octahedral);
  CHECK(platonic_type(alternating_group(4)).kind == ImageType::Kind::Tetrahedral);
  CHECK(platonic_type(alternating_group(5)).kind == ImageType::Kind::Icosahedral);
  CHECK(platonic_type(dihedral_group(4)) == ImageType{ImageType::Kind::Dihedral, 4});
  CHECK(platonic_type(direct_product(cyclic_group(2), cyclic_group(2))) == ImageType{ImageType::Kind::Dihedral, 2});
  CHECK(platonic_type(symmetric_group(3)) == ImageType{ImageType::Kind::Dihedral, 3});
  CHECK_THROWS_AS(platonic_type(quaternion_group()), NotAPgl2Subgroup);
  CHECK_THROWS_AS(platonic_type(direct_product(cyclic_group(4), cyclic_group(2))), NotAPgl2Subgroup);
}

TEST_CASE("centralizers in PGL2") {
  CHECK(pgl2_centralizer({ImageType::Kind::Dihedral, 5}).kind == CentralizerKind::Trivial);
  CHECK(pgl2_centralizer({ImageType::Kind::Dihedral, 4}).kind == CentralizerKind::Mu2InRotations);
  const CentralizerInfo d2 = pgl2_centralizer({ImageType::Kind::Dihedral, 2});
  CHECK(d2.kind == CentralizerKind::AllOfD2);
  CHECK(d2.order == 4);
  CHECK(pgl2_centralizer({ImageType::Kind::Icosahedral, 0}).kind == CentralizerKind::Trivial);
}

namespace {

std::vector<int> identity_map(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

}  // namespace

TEST_CASE("the characters a*") {
  const FiniteGroup D5 = dihedral_group(5);
  CHECK(a_star_characters(D5, D5, identity_map(10)).Cstar.group.is_trivial());
  const FiniteGroup D4 = dihedral_group(4);
  CHECK(a_star_characters(D4, D4, identity_map(8)).Cstar.group.order() == 2);
  const FiniteGroup V4 = direct_product(cyclic_group(2), cyclic_group(2));
  const AStar v = a_star_characters(V4, dihedral_group(2), identity_map(4));
  CHECK(v.Cstar.group.order() == 4);
}

TEST_CASE("size of the D_d class") {
  const FiniteGroup A4 = alternating_group(4);
  CHECK(class_size_dd(A4, A4, identity_map(12), 2).D_order == 1);
  const FiniteGroup D4 = dihedral_group(4);
  const DdConjugacyReport r = class_size_dd(D4, D4, identity_map(8), 2);
  CHECK(r.D_order == 2);
  CHECK(r.power_image_order == 1);
  const FiniteGroup V4 = direct_product(cyclic_group(2), cyclic_group(2));
  CHECK(class_size_dd(V4, dihedral_group(2), identity_map(4), 2).D_order == 4);
  CHECK(class_size_dd(V4, dihedral_group(2), identity_map(4), 3).D_order == 1);
  // the tag form gives the same answer
  const AStar s = a_star_characters(D4, D4, identity_map(8));
  CHECK(class_size_dd(D4, ImageType{ImageType::Kind::Dihedral, 4}, s.characters, 2).D_order == 2);
}
