#pragma once

#include <optional>
#include <vector>

#include "stacky/abelian.hpp"
#include "stacky/finite_group.hpp"
#include "stacky/group_algorithms.hpp"

namespace stacky {

/// [phi: G2 -> G1] with a right action of G1 on G2, written g^x.
struct CrossedModule {
  FiniteGroup G2, G1;
  std::vector<int> phi;                  // G2 element -> G1 element
  std::vector<std::vector<int>> action;  // action[x][g] = g^x

  int act(int g, int x) const { return action[x][g]; }
};

/// Validates every axiom exhaustively.  Throws NotHomomorphism, EquivarianceFailure
/// or PeifferFailure naming the offending pair.
CrossedModule new_crossed_module(FiniteGroup G2, FiniteGroup G1, std::vector<int> phi,
                                 std::vector<std::vector<int>> action);
void validate_crossed_module(const CrossedModule& X);

/// Action table from the automorphisms attached to G1.generators() (g^x for each generator x).
/// Throws NotHomomorphism when they do not define a right action.
std::vector<std::vector<int>> action_from_generators(const FiniteGroup& G2, const FiniteGroup& G1,
                                                     const std::vector<std::vector<int>>& gen_images);
std::vector<std::vector<int>> trivial_action(const FiniteGroup& G2, const FiniteGroup& G1);
/// Right conjugation action of G on a normal subgroup N (given by embedding).
std::vector<std::vector<int>> conjugation_action(const FiniteGroup& G, const Subgroup& N);

struct HomotopyGroups {
  FiniteGroup pi1;
  FinAbGroup pi2;
  Quotient to_pi1;             // G1 -> pi1
  AbelianDecomposition pi2_in; // labels are G2 elements
  std::vector<int> kernel;     // sorted G2 elements of ker phi
};
HomotopyGroups homotopy_groups(const CrossedModule& X);

/// The strict 2-group: objects G1, arrows G1 x G2 indexed g + |G1| a.
struct TwoGroup {
  FiniteGroup objects;
  FiniteGroup arrows;             // (g,a)(h,b) = (gh, a^h b)
  FiniteGroup arrow_labels;       // the G2 factor, used for composition
  std::vector<int> source, target;
  std::vector<int> unit;          // object -> identity arrow

  /// f then g, for target(f) == source(g): (g, a) then (g phi(a), b) is (g, ab).
  int compose(int f, int g) const;
  int arrow_index(int g, int a) const { return g + objects.order() * a; }
};
TwoGroup to_2group(const CrossedModule& X);

/// Arrows starting at the identity form G2; phi is the target map and G1 acts by
/// conjugation with identity arrows.  g2_embedding maps the result's G2 into arrows.
struct FromTwoGroup {
  CrossedModule module;
  std::vector<int> g2_embedding;
};
FromTwoGroup from_2group(const TwoGroup& T);

/// Exhaustive groupoid-in-groups laws: source/target/unit are homs and the
/// interchange law holds.
bool two_group_laws_hold(const TwoGroup& T);

/// Certifies X and from_2group(to_2group(X)) are isomorphic crossed modules
/// (identity on G1) with equal homotopy groups.
bool roundtrip_check(const CrossedModule& X);

/// Isomorphism of crossed modules (alpha on G2, beta on G1), found by search.
bool crossed_modules_isomorphic(const CrossedModule& X, const CrossedModule& Y);

/// Homomorphic section of G1 -> pi1, or nullopt when X is not split.
std::optional<std::vector<int>> find_section(const CrossedModule& X, const HomotopyGroups& hg);
/// Throws NotASection unless sigma is a homomorphism with proj o sigma = id.
void check_section(const CrossedModule& X, const HomotopyGroups& hg, const std::vector<int>& sigma);

/// (K x| G) / {(l(h)^-1, p(h))}.  Actions are right actions of K:
/// on_H[k][h] = h^k, on_G[k][g] = g^k.  Throws CompatibilityFailure when the
/// diagram is not K-equivariant, compatibility fails or N is not normal.
Quotient semidirect_along(const FiniteGroup& K, const FiniteGroup& G, const FiniteGroup& H,
                          const std::vector<int>& l, const std::vector<int>& p,
                          const std::vector<std::vector<int>>& on_H, const std::vector<std::vector<int>>& on_G);

/// Every crossed module up to isomorphism with |G1|*|G2| <= max_product, over the
/// small-group library.  Deterministic order.
std::vector<CrossedModule> enumerate_crossed_modules(int max_product);

}  // namespace stacky
