#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "stacky/abelian.hpp"
#include "stacky/finite_group.hpp"
#include "stacky/qmodz.hpp"

namespace stacky {

inline constexpr int kAutBound = 128;
inline constexpr int kIsoBound = 512;

/// Z(G) as a subgroup and in invariant-factor form.  The decomposition's labels
/// are element indices of G, so dec.label_of(coords) is the embedding.
struct Center {
  Subgroup sub;
  AbelianDecomposition dec;
  const FinAbGroup& group() const { return dec.group; }
  int embed(const AbElem& c) const { return dec.label_of(c); }
};

Center center(const FiniteGroup& G);
bool is_central(const FiniteGroup& G, int x);
Subgroup centralizer(const FiniteGroup& G, const std::vector<int>& S);
/// Sorted element list of the normal closure.
std::vector<int> normal_closure(const FiniteGroup& G, const std::vector<int>& elems);
bool is_normal(const FiniteGroup& G, const std::vector<int>& elems);

struct Quotient {
  FiniteGroup group;
  std::vector<int> projection;  ///< G element -> quotient element
  std::vector<int> section;     ///< quotient element -> smallest G element in the coset
};

Quotient quotient(const FiniteGroup& G, const std::vector<int>& elems);

/// Enumerates homomorphisms G -> H whose generator images are drawn from
/// candidates[i] (one list per generator of G).  visit receives the images of
/// all elements; returning false stops the search.  With injective set, only
/// injective maps are produced.
void search_homs(const FiniteGroup& G, const FiniteGroup& H, const std::vector<std::vector<int>>& candidates,
                 bool injective, const std::function<bool(const std::vector<int>&)>& visit);

struct AutomorphismData {
  FiniteGroup aut;           ///< permutation group on the elements of G; aut.perm(i) is the map
  std::vector<int> inner;    ///< indices in aut of the inner automorphisms, sorted
  std::vector<int> inner_of; ///< G element g -> index of x |-> g x g^-1
  Quotient out;              ///< Out(G) = Aut/Inn
  Center z;                  ///< Z(G)
  /// out element -> permutation of Z(G) indices (FinAbGroup index order)
  std::vector<std::vector<int>> out_on_center;
};

AutomorphismData automorphisms(const FiniteGroup& G, int bound = kAutBound);

/// Every automorphism as an element map, in search order.  Throws OrderBoundExceeded past limit.
std::vector<Perm> automorphism_maps(const FiniteGroup& G, std::size_t limit = kDefaultGroupBound);

/// Abelianization G/[G,G].
Quotient abelianization_quotient(const FiniteGroup& G);
FinAbGroup abelian_invariants(const FiniteGroup& G);

/// A character is recorded by its values on G.generators().
struct Character {
  std::vector<QmodZ> on_generators;
};

/// Values on every element, or nullopt when the data does not extend to a homomorphism.
std::optional<std::vector<QmodZ>> character_values(const FiniteGroup& G, const Character& chi);

/// Gamma* = Hom(G, Q/Z), in invariant-factor form.  Element c corresponds to the
/// character sending the i-th basis element of G^ab to c_i / d_i.
struct CharacterGroup {
  Quotient ab;                 ///< G -> G^ab
  AbelianDecomposition ab_dec; ///< decomposition of G^ab, labels are G^ab indices
  const FinAbGroup& dual() const { return ab_dec.group; }

  QmodZ eval(const AbElem& c, int g) const;
  Character as_character(const FiniteGroup& G, const AbElem& c) const;
  /// Inverse of as_character, from values on every element.
  AbElem from_values(const std::vector<QmodZ>& values) const;
  /// (Gamma*)^d as a subgroup of dual(); labels are dual() indices.
  AbelianDecomposition power_image(std::int64_t d) const;
};

CharacterGroup character_group(const FiniteGroup& G);

/// Element-order histogram: hist[k] = number of elements of order k.
std::vector<int> order_histogram(const FiniteGroup& G);

/// Isomorphism test.  Returns a witness G -> H (images of all elements) when isomorphic.
std::optional<std::vector<int>> find_isomorphism(const FiniteGroup& G, const FiniteGroup& H, int bound = kIsoBound);
inline bool is_isomorphic(const FiniteGroup& G, const FiniteGroup& H) { return find_isomorphism(G, H).has_value(); }

}  // namespace stacky
