#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace stacky {

/// A permutation of {0..deg-1}, p[i] = image of i.  Products compose left to
/// right: (p*q)(i) = q(p(i)).
using Perm = std::vector<int>;

Perm perm_compose(const Perm& p, const Perm& q);
Perm perm_inverse(const Perm& p);
Perm perm_identity(int deg);

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept;
};

inline constexpr int kDefaultGroupBound = 20160;
inline constexpr int kTableThreshold = 2048;

/// Finite group on elements 0..order-1, identity 0.  Small groups keep a full
/// Cayley table; larger ones (only reachable from permutations) multiply by
/// composing permutations and looking the result up.
class FiniteGroup {
 public:
  FiniteGroup();  // trivial group

  /// Builds from a Cayley table; validates the table (associativity for order <= 256).
  static FiniteGroup from_table(std::vector<std::vector<int>> table, std::string name = {});
  /// Builds from a multiplication rule on 0..n-1 with identity 0.  Trusted: the
  /// rule must already define a group.  Only associativity-free checks run.
  static FiniteGroup from_mul(int n, const std::function<int(int, int)>& mul, std::string name = {});
  /// Same, with a known generating set (skips the greedy search).
  static FiniteGroup from_mul(int n, const std::function<int(int, int)>& mul, std::vector<int> gens,
                              std::string name = {});

  int order() const { return order_; }
  int mul(int a, int b) const {
    if (!table_.empty()) return table_[static_cast<std::size_t>(a) * order_ + b];
    return mul_perm(a, b);
  }
  int inv(int a) const { return inverse_[a]; }
  int pow(int a, std::int64_t k) const;
  int conj(int g, int x) const { return mul(mul(inv(x), g), x); }  // x^-1 g x
  int commutator(int a, int b) const { return mul(mul(inv(a), inv(b)), mul(a, b)); }
  int elem_order(int a) const { return elem_order_[a]; }
  bool is_abelian() const;
  int exponent() const;

  /// A small generating set, chosen greedily.
  const std::vector<int>& generators() const { return gens_; }
  /// Word tree over generators(): element x equals mul(parent(x), generators()[parent_gen(x)]).
  int parent(int x) const { return parent_[x]; }
  int parent_gen(int x) const { return parent_gen_[x]; }
  /// Elements in BFS order of the word tree (identity first).
  const std::vector<int>& bfs_order() const { return bfs_; }

  /// Extends images of generators() along the word tree.  No check is made.
  std::vector<int> extend_along_tree(const std::vector<int>& gen_images,
                                     const std::function<int(int, int)>& target_mul, int target_id = 0) const;
  /// True when the map (given on all elements) respects multiplication by generators,
  /// which makes it a homomorphism.
  bool is_hom(const std::vector<int>& images, const std::function<int(int, int)>& target_mul) const;

  bool has_perms() const { return !perms_.empty(); }
  int degree() const { return degree_; }
  const Perm& perm(int x) const { return perms_[x]; }
  /// Element index of a permutation, or -1.
  int find_perm(const Perm& p) const;

  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }

  /// Full table as rows (materialized on demand for large groups).
  std::vector<std::vector<int>> table_rows() const;

 private:
  friend FiniteGroup group_from_permutations(int, const std::vector<Perm>&, int);
  int mul_perm(int a, int b) const;
  void finish(bool choose_gens);
  void set_generators(std::vector<int> gens);

  int order_ = 1;
  std::vector<int> table_;
  std::vector<int> inverse_;
  std::vector<int> elem_order_;
  std::vector<int> gens_;
  std::vector<int> parent_, parent_gen_, bfs_;
  int degree_ = 0;
  std::vector<Perm> perms_;
  std::shared_ptr<const std::unordered_map<Perm, int, PermHash>> perm_index_;
  std::string name_;
};

/// Closure of the given permutations.  Elements are indexed in BFS order over
/// words in the generators (right multiplication, generators tried in order).
FiniteGroup group_from_permutations(int deg, const std::vector<Perm>& gens, int bound = kDefaultGroupBound);

/// A subgroup together with its inclusion map (sub index -> ambient index).
struct Subgroup {
  FiniteGroup group;
  std::vector<int> embedding;
};

/// Sorted list of the elements of the subgroup generated by gens.
std::vector<int> closure(const FiniteGroup& G, const std::vector<int>& gens);
/// Subgroup generated by gens, indexed by BFS over gens.
Subgroup subgroup(const FiniteGroup& G, const std::vector<int>& gens);
/// Subgroup on an explicit element set closed under multiplication.
Subgroup subgroup_from_elements(const FiniteGroup& G, const std::vector<int>& elems);

// Standard constructions.
FiniteGroup cyclic_group(int n);
FiniteGroup dihedral_group(int n);  // order 2n, n >= 1
FiniteGroup symmetric_group(int n);
FiniteGroup alternating_group(int n);
FiniteGroup quaternion_group();
/// Pairs (g, h) indexed g + |G| * h.
FiniteGroup direct_product(const FiniteGroup& G, const FiniteGroup& H);
/// Element x of G viewed in the product: (x, 0) and (0, y) for y in H.
inline int product_index(const FiniteGroup& G, int g, int h) { return g + G.order() * h; }

}  // namespace stacky
