#include <doctest.h>

#include "stacky/coset_enum.hpp"
#include "stacky/errors.hpp"
#include "stacky/group_algorithms.hpp"
#include "stacky/hom_count.hpp"
#include "stacky/orbifold.hpp"
#include "stacky/presentation.hpp"
#include "stacky/small_groups.hpp"

using namespace stacky;

TEST_CASE("parse presentations") {
  const GroupPresentation a = parse_presentation("<a | a^5>");
  CHECK(a.num_gens() == 1);
  REQUIRE(a.relators().size() == 1);
  CHECK(a.relators()[0] == Word{1, 1, 1, 1, 1});

  const GroupPresentation t = parse_presentation("<x,y | x^2, y^3, (x*y)^5>");
  CHECK(t == triangle_presentation(2, 3, 5));

  const GroupPresentation c = parse_presentation("<a,b | [a,b]>");
  CHECK(c.relators()[0] == Word{-1, -2, 1, 2});
  CHECK(parse_presentation("<a,b | a b = b a>").relators().size() == 1);
  CHECK(parse_presentation("<a | a^-2 a^2>").relators().empty());
  CHECK(parse_presentation(format_presentation(t)) == t);
}

TEST_CASE("parse errors carry a position") {
  CHECK_THROWS_AS(parse_presentation("<a | b>"), ParseError);
  try {
    parse_presentation("<a, | a>");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
  CHECK_THROWS_AS(parse_presentation("<a | a^>"), ParseError);
  CHECK_THROWS_AS(parse_presentation("a | a"), ParseError);
}

TEST_CASE("abelianization") {
  const Abelianization z2 = abelianization(parse_presentation("<a,b | [a,b]>"));
  CHECK(z2.free_rank == 2);
  CHECK(z2.torsion.is_trivial());
  const Abelianization f = abelianization(parse_presentation("<r,s | r^4, s^6, r s>"));
  CHECK(f.free_rank == 0);
  CHECK(f.torsion == FinAbGroup({2}));
  const Abelianization g2 = abelianization(parse_presentation("<a,b,c,d | [a,b][c,d]>"));
  CHECK(g2.free_rank == 4);
  CHECK(g2.torsion.is_trivial());
}

TEST_CASE("homomorphism counts") {
  CHECK(hom_count(parse_presentation("<a | a^2>"), cyclic_group(2)) == 2);
  CHECK(hom_count(parse_presentation("<a | a^3>"), symmetric_group(3)) == 3);
  CHECK(hom_count(triangle_presentation(2, 3, 5), alternating_group(5)) > 0);
  // free group of rank 2 into S3
  CHECK(hom_count(parse_presentation("<a,b>"), symmetric_group(3)) == 36);
  CHECK_THROWS_AS(hom_count(parse_presentation("<a,b,c | [a,b], [b,c], a^5 b^3>"), symmetric_group(5), 10), BudgetExceeded);
}

TEST_CASE("budget from the environment") {
  CHECK(resolve_budget(7) == 7);
  CHECK(resolve_budget(std::nullopt) > 0);
}

TEST_CASE("coset enumeration") {
  const CosetEnumeration z5 = todd_coxeter(parse_presentation("<a | a^5>"), {});
  CHECK(z5.finite);
  CHECK(z5.index == 5);
  CHECK(todd_coxeter(triangle_presentation(2, 3, 3), {}).index == 12);
  CHECK(todd_coxeter(triangle_presentation(2, 3, 5), {}).index == 60);
  CHECK_FALSE(todd_coxeter(triangle_presentation(2, 3, 7), {}, 100000).finite);
  // index of <x> in the (2,3,5) group
  CHECK(todd_coxeter(triangle_presentation(2, 3, 5), {{1}}).index == 30);
  const auto q = finite_group_of(triangle_presentation(2, 3, 4));
  REQUIRE(q);
  CHECK(is_isomorphic(q->group, symmetric_group(4)));
}

TEST_CASE("coset table is consistent") {
  const CosetEnumeration ce = todd_coxeter(triangle_presentation(2, 2, 5), {});
  REQUIRE(ce.finite);
  for (std::size_t c = 0; c < ce.table.size(); ++c)
    for (int g = 0; g < 2; ++g) CHECK(ce.table[ce.table[c][2 * g]][2 * g + 1] == static_cast<int>(c));
}

TEST_CASE("hom profiles") {
  const auto panel = group_panel("minimal");
  const HomCountProfile triv = hom_profile(GroupPresentation({}, {}), panel);
  for (const auto& [name, n] : triv.counts) CHECK(n == 1);
  const HomCountProfile free1 = hom_profile(GroupPresentation({"a"}, {}), panel);
  for (std::size_t i = 0; i < panel.size(); ++i) CHECK(free1.counts[i].second == panel[i].order());
  const auto z6a = hom_profile(parse_presentation("<a | a^6>"), panel);
  const auto z6b = hom_profile(parse_presentation("<a,b | a^2, b^3, [a,b]>"), panel);
  CHECK(z6a == z6b);
}

TEST_CASE("table presentations define the group") {
  for (const FiniteGroup& G : {symmetric_group(3), quaternion_group(), dihedral_group(5)}) {
    const auto q = finite_group_of(table_presentation(G, "g"));
    REQUIRE(q);
    CHECK(is_isomorphic(q->group, G));
  }
}
