#include <doctest.h>

#include "stacky/coset_enum.hpp"
#include "stacky/errors.hpp"
#include "stacky/group_algorithms.hpp"
#include "stacky/hom_count.hpp"
#include "stacky/orbifold.hpp"
#include "stacky/small_groups.hpp"

using namespace stacky;
using Kind = UniformizationType::Kind;

TEST_CASE("Euler weight") {
  CHECK(euler_weight({0, {3, 3, 3}, 0}, true) == Rational(0));
  CHECK(euler_weight({0, {2, 3, 5}, 0}, true) == Rational(-1, 30));
  CHECK(euler_weight({1, {}, 0}, true) == Rational(0));
  CHECK_THROWS_AS(euler_weight({0, {2}, 1}, true), InvalidArgument);
}

TEST_CASE("orders are validated and sorted") {
  CHECK(OrbifoldCurveData(0, {5, 2, 3}, 0).orders() == std::vector<int>{2, 3, 5});
  CHECK_THROWS_AS(OrbifoldCurveData(0, {1}, 0), InvalidArgument);
  CHECK_THROWS_AS(OrbifoldCurveData(-1, {}, 0), InvalidArgument);
}

TEST_CASE("uniformization") {
  CHECK(uniformization_type({0, {2, 4, 4}, 0}, true).kind == Kind::Euclidean);
  CHECK(uniformization_type({0, {2, 2}, 1}, false).kind == Kind::Euclidean);
  const UniformizationType f = uniformization_type({0, {4, 6}, 0}, true);
  CHECK(f.kind == Kind::Spherical);
  CHECK(f.m == 2);
  CHECK(f.n == 3);
  CHECK(f.str() == "spherical(2,3)");
  CHECK(uniformization_type({2, {}, 0}, true).kind == Kind::Hyperbolic);
  CHECK(uniformization_type({0, {}, 0}, true).kind == Kind::Spherical);
}

TEST_CASE("orbifold fundamental groups") {
  // a drop is simply connected
  const auto drop = finite_group_of(pi1_presentation({0, {5}, 0}));
  REQUIRE(drop);
  CHECK(drop->group.order() == 1);
  const Abelianization ab = abelianization(pi1_presentation({0, {4, 6}, 0}));
  CHECK(ab.free_rank == 0);
  CHECK(ab.torsion == FinAbGroup({2}));
  // one puncture: free product of the cyclic groups
  const auto panel = group_panel("minimal");
  const GroupPresentation fp = parse_presentation("<a,b | a^2, b^3>");
  CHECK(hom_profile(pi1_presentation({0, {2, 3}, 1}), panel) == hom_profile(fp, panel));
  const Abelianization torus = abelianization(pi1_presentation({1, {}, 0}));
  CHECK(torus.free_rank == 2);
}

TEST_CASE("simply connected") {
  CHECK(is_simply_connected({0, {2, 3}, 0}, true));
  CHECK_FALSE(is_simply_connected({0, {2, 2}, 0}, true));
  CHECK(is_simply_connected({0, {}, 1}, false));
  CHECK_FALSE(is_simply_connected({0, {}, 2}, false));
}

TEST_CASE("triangle groups") {
  const TriangleGroup ico = triangle_group(2, 3, 5);
  CHECK(ico.kind == Kind::Spherical);
  CHECK(ico.name == "icosahedral");
  CHECK(ico.order == 60);
  CHECK(triangle_group(2, 3, 6).kind == Kind::Euclidean);
  CHECK(triangle_group(2, 3, 7).kind == Kind::Hyperbolic);
  CHECK(triangle_group(2, 2, 7).name == "dihedral");
  CHECK(triangle_group(2, 2, 7).order == 14);
  CHECK(triangle_group(2, 3, 3).name == "tetrahedral");
  CHECK(triangle_group(2, 3, 4).order == 24);
  CHECK(triangle_group(5, 3, 2).order == 60);
  CHECK_THROWS_AS(triangle_group(1, 2, 3), InvalidArgument);
}

TEST_CASE("footballs") {
  const Football f = football(4, 6);
  CHECK(f.pi1 == FinAbGroup({2}));
  CHECK(f.cover_m == 2);
  CHECK(f.cover_n == 3);
  CHECK(football(5, 5).pi1 == FinAbGroup({5}));
  CHECK(football(5, 5).cover_m == 1);
  CHECK(football(1, 1).pi1.is_trivial());
}

TEST_CASE("graph of groups") {
  const auto panel = group_panel("minimal");
  const OrbifoldCurveData c(0, {2, 3, 4}, 1);
  CHECK(hom_profile(graph_of_groups_pi1(plain_dm_curve(c)), panel) == hom_profile(pi1_presentation(c), panel));
  // Z2-gerbe over a disc
  const auto disc = finite_group_of(graph_of_groups_pi1(trivial_band_gerbe({0, {}, 1}, cyclic_group(2))));
  REQUIRE(disc);
  CHECK(disc->group.order() == 2);
  const GroupPresentation zz = parse_presentation("<h,t | h^2, [h,t]>");
  CHECK(hom_profile(graph_of_groups_pi1(trivial_band_gerbe({0, {}, 2}, cyclic_group(2))), panel) ==
        hom_profile(zz, panel));
  CHECK_THROWS_AS(graph_of_groups_pi1(plain_dm_curve({0, {2}, 0})), RequiresOpenCurve);
}

TEST_CASE("Heisenberg witness") {
  CHECK(heisenberg_witness(1).group.order() == 1);
  for (int n : {2, 3}) {
    const HeisenbergWitness h = heisenberg_witness(n);
    CHECK(h.group.order() == n * n * n);
    CHECK(h.group.elem_order(h.z) == n);
    CHECK(is_central(h.group, h.z));
    CHECK(h.group.commutator(h.group.inv(h.x), h.group.inv(h.y)) == h.z);
  }
}

TEST_CASE("PSL2 witness") {
  const auto w = psl2_witness(2, 3, 5, 11);
  REQUIRE(w);
  CHECK(w->q == 5);
  const FiniteGroup G = group_from_permutations(w->q + 1, {w->x_perm, w->y_perm});
  const int x = G.find_perm(w->x_perm), y = G.find_perm(w->y_perm);
  CHECK(G.elem_order(x) == 2);
  CHECK(G.elem_order(y) == 3);
  CHECK(G.elem_order(G.mul(x, y)) == 5);

  const auto w7 = psl2_witness(2, 3, 7, 13);
  REQUIRE(w7);
  CHECK((w7->q == 7 || w7->q == 13));
  const auto k = psl2_witness(2, 2, 2, 5);
  REQUIRE(k);
  const FiniteGroup V = group_from_permutations(k->q + 1, {k->x_perm, k->y_perm});
  CHECK(V.order() == 4);
}
