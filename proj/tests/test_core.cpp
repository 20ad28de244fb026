#include <doctest.h>

#include <numeric>

#include "stacky/abelian.hpp"
#include "stacky/errors.hpp"
#include "stacky/group_algorithms.hpp"
#include "stacky/group_io.hpp"
#include "stacky/int_matrix.hpp"
#include "stacky/small_groups.hpp"

using namespace stacky;

TEST_CASE("permutation closure") {
  CHECK(group_from_permutations(3, {parse_cycles("(0 1 2)", 3), parse_cycles("(0 1)", 3)}).order() == 6);
  CHECK(group_from_permutations(1, {perm_identity(1)}).order() == 1);
  CHECK(group_from_permutations(5, {parse_cycles("(0 1 2 3 4)", 5), parse_cycles("(0 1 2)", 5)}).order() == 60);
  CHECK_THROWS_AS(group_from_permutations(8, {parse_cycles("(0 1 2 3 4 5 6 7)", 8), parse_cycles("(0 1)", 8)}, 1000),
                  OrderBoundExceeded);
}

TEST_CASE("composition runs left to right") {
  const Perm p = parse_cycles("(0 1)", 3), q = parse_cycles("(1 2)", 3);
  const Perm pq = perm_compose(p, q);
  CHECK(pq[0] == q[p[0]]);
  CHECK(perm_compose(pq, perm_inverse(pq)) == perm_identity(3));
}

TEST_CASE("center") {
  CHECK(center(symmetric_group(3)).group().is_trivial());
  CHECK(center(cyclic_group(4)).group() == FinAbGroup({4}));
  CHECK(center(quaternion_group()).group() == FinAbGroup({2}));
  for (int x : center(dihedral_group(4)).sub.embedding) CHECK(is_central(dihedral_group(4), x));
}

TEST_CASE("centralizer") {
  const FiniteGroup S3 = symmetric_group(3);
  CHECK(centralizer(S3, {0}).group.order() == 6);
  const int three = S3.find_perm(parse_cycles("(0 1 2)", 3));
  const Subgroup C = centralizer(S3, {three});
  CHECK(C.group.order() == 3);
  CHECK(C.group.is_abelian());
  const FiniteGroup D4 = dihedral_group(4);
  std::vector<int> all(8);
  std::iota(all.begin(), all.end(), 0);
  CHECK(centralizer(D4, all).group.order() == 2);
}

TEST_CASE("automorphisms") {
  const AutomorphismData z4 = automorphisms(cyclic_group(4));
  CHECK(z4.aut.order() == 2);
  CHECK(z4.out.group.order() == 2);
  const AutomorphismData s3 = automorphisms(symmetric_group(3));
  CHECK(s3.aut.order() == 6);
  CHECK(s3.out.group.order() == 1);
  CHECK(automorphisms(FiniteGroup()).aut.order() == 1);
  CHECK(automorphisms(quaternion_group()).aut.order() == 24);
}

TEST_CASE("quotient") {
  const Quotient q = quotient(cyclic_group(6), {2});
  CHECK(q.group.order() == 2);
  CHECK(quotient(cyclic_group(6), {}).group.order() == 6);
  const FiniteGroup S3 = symmetric_group(3);
  CHECK(quotient(S3, {S3.find_perm(parse_cycles("(0 1 2)", 3))}).group.order() == 2);
  // normal closure of a transposition is everything
  CHECK(quotient(S3, {S3.find_perm(parse_cycles("(0 1)", 3))}).group.order() == 1);
  for (int x = 0; x < 6; ++x) CHECK(q.projection[q.section[q.projection[x]]] == q.projection[x]);
}

TEST_CASE("Smith normal form") {
  const IntMatrix M{{2, 0}, {0, 3}};
  const SmithForm s = smith_normal_form(M);
  CHECK(s.D == (IntMatrix{{1, 0}, {0, 6}}));
  CHECK(s.U * M * s.V == s.D);
  CHECK(s.V * s.Vinv == IntMatrix::identity(2));
  CHECK(smith_normal_form(IntMatrix(2, 3)).D == IntMatrix(2, 3));
  CHECK(smith_normal_form(IntMatrix{{1}}).D == IntMatrix{{1}});
  const IntMatrix N{{4, 0}, {0, 6}, {1, 1}};
  const SmithForm t = smith_normal_form(N);
  CHECK(t.U * N * t.V == t.D);
  const auto inv = cokernel_invariants(N);
  REQUIRE(inv.size() == 1);
  CHECK(inv[0] == 2);
  CHECK(cokernel_invariants(IntMatrix{{0, 0}}) == std::vector<BigInt>{0, 0});
}

TEST_CASE("Smith normal form keeps big entries exact") {
  const IntMatrix M{{1000000007, 0}, {0, 998244353}};
  const SmithForm s = smith_normal_form(M);
  CHECK(s.D(1, 1) == BigInt(1000000007) * 998244353);
}

TEST_CASE("finite abelian groups") {
  const FinAbGroup A = FinAbGroup::from_cyclic_factors({2, 3, 4});
  CHECK(A.invariant_factors() == std::vector<std::int64_t>{2, 12});
  CHECK(A.order() == 24);
  CHECK(A.str() == "Z2+Z12");
  for (std::int64_t i = 0; i < A.order(); ++i) CHECK(A.index_of(A.element(i)) == i);
  CHECK(FinAbGroup().str() == "0");
  CHECK(decompose_abelian_group(direct_product(cyclic_group(2), cyclic_group(2))).group == FinAbGroup({2, 2}));
}

TEST_CASE("character group") {
  CHECK(character_group(symmetric_group(3)).dual() == FinAbGroup({2}));
  const CharacterGroup v4 = character_group(direct_product(cyclic_group(2), cyclic_group(2)));
  CHECK(v4.power_image(2).group.is_trivial());
  const CharacterGroup z6 = character_group(cyclic_group(6));
  CHECK(z6.power_image(2).group == FinAbGroup({3}));
  // every dual element extends to a homomorphism
  const FiniteGroup Z6 = cyclic_group(6);
  for (const AbElem& c : z6.dual().elements()) {
    const auto vals = character_values(Z6, z6.as_character(Z6, c));
    REQUIRE(vals);
    CHECK(z6.from_values(*vals) == c);
  }
}

TEST_CASE("isomorphism") {
  CHECK_FALSE(is_isomorphic(cyclic_group(4), direct_product(cyclic_group(2), cyclic_group(2))));
  const auto w = find_isomorphism(dihedral_group(6), direct_product(cyclic_group(2), symmetric_group(3)));
  REQUIRE(w);
  const FiniteGroup A = dihedral_group(6), B = direct_product(cyclic_group(2), symmetric_group(3));
  for (int x = 0; x < 12; ++x)
    for (int y = 0; y < 12; ++y) CHECK((*w)[A.mul(x, y)] == B.mul((*w)[x], (*w)[y]));
  const FiniteGroup Q = quaternion_group();
  const auto id = find_isomorphism(Q, Q);
  REQUIRE(id);
  CHECK_FALSE(is_isomorphic(Q, dihedral_group(4)));
}

TEST_CASE("group text formats") {
  CHECK(parse_group_spec("Z2xS3").order() == 12);
  CHECK(parse_group_spec("D4").order() == 8);
  CHECK(parse_group_spec("A4").order() == 12);
  CHECK(parse_group_text("perm 3; (0 1 2); (0 1)").order() == 6);
  const FiniteGroup T = parse_group_text("table 2; 0 1; 1 0");
  CHECK(T.order() == 2);
  CHECK_THROWS_AS(parse_group_text("table 2; 0 1; 0 1"), ValidationError);
  CHECK_THROWS_AS(parse_group_spec("Q9x"), ValidationError);
  CHECK_THROWS_AS(parse_cycles("(0 1", 3), ParseError);
  const FiniteGroup D = dihedral_group(5);
  CHECK(is_isomorphic(parse_group_text(format_group_text(D)), D));
}

TEST_CASE("small group library") {
  const int counts[] = {1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1, 14};
  for (int n = 1; n <= 16; ++n) CHECK(groups_of_order(n).size() == static_cast<std::size_t>(counts[n - 1]));
  CHECK(groups_of_order(24).size() == 15);
  CHECK(group_panel("small24").size() == 75);
}
