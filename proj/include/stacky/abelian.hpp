#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

#include "stacky/finite_group.hpp"
#include "stacky/qmodz.hpp"

namespace stacky {

using AbElem = std::vector<std::int64_t>;

/// Finite abelian group Z/d1 + ... + Z/dr with d1 | d2 | ... and every di >= 2.
class FinAbGroup {
 public:
  FinAbGroup() = default;
  explicit FinAbGroup(std::vector<std::int64_t> invariant_factors);
  /// Normalizes an arbitrary direct sum of cyclic groups (factors >= 1).
  static FinAbGroup from_cyclic_factors(const std::vector<std::int64_t>& orders);

  const std::vector<std::int64_t>& invariant_factors() const { return d_; }
  std::size_t rank() const { return d_.size(); }
  std::int64_t order() const;
  std::int64_t exponent() const { return d_.empty() ? 1 : d_.back(); }
  bool is_trivial() const { return d_.empty(); }

  AbElem zero() const { return AbElem(d_.size(), 0); }
  AbElem unit(std::size_t i) const;
  AbElem add(const AbElem& a, const AbElem& b) const;
  AbElem neg(const AbElem& a) const;
  AbElem scale(std::int64_t k, const AbElem& a) const;
  AbElem reduce(AbElem a) const;
  std::int64_t elem_order(const AbElem& a) const;

  /// Mixed radix, first coordinate fastest.
  std::int64_t index_of(const AbElem& a) const;
  AbElem element(std::int64_t index) const;
  std::vector<AbElem> elements() const;

  /// Cayley table form, indices as in index_of.
  FiniteGroup as_finite_group() const;

  std::string str() const;  // e.g. "Z2+Z4", "0"
  friend bool operator==(const FinAbGroup&, const FinAbGroup&) = default;

 private:
  std::vector<std::int64_t> d_;
};

/// Result of decomposing a finite abelian group given by a multiplication on
/// integer labels and a generating set.
struct AbelianDecomposition {
  FinAbGroup group;
  std::vector<int> basis;               ///< labels of the basis elements, one per invariant factor
  std::vector<int> elements;            ///< all labels reached, BFS order
  std::vector<AbElem> coords;           ///< coords[i] are the coordinates of elements[i]
  std::vector<std::int64_t> label_pos;  ///< label -> position in elements, or -1

  const AbElem& coords_of(int label) const { return coords[label_pos[label]]; }
  /// Label of the element with the given coordinates.
  int label_of(const AbElem& c) const;

 private:
  friend AbelianDecomposition decompose_abelian(int, int, const std::vector<int>&,
                                                const std::function<int(int, int)>&);
  std::vector<int> by_index_;  // FinAbGroup index -> label
};

/// Decomposes the abelian group generated by gens inside a structure whose
/// elements are labelled 0..label_count-1 (identity label `identity`).
AbelianDecomposition decompose_abelian(int label_count, int identity, const std::vector<int>& gens,
                                       const std::function<int(int, int)>& mul);

/// Subgroup of A generated by the given elements, decomposed.  Labels are A's indices.
AbelianDecomposition abelian_subgroup(const FinAbGroup& A, const std::vector<AbElem>& gens);

/// Decomposition of an abelian FiniteGroup using its generators.
AbelianDecomposition decompose_abelian_group(const FiniteGroup& G);

struct AbElemHash {
  std::size_t operator()(const AbElem& a) const noexcept;
};

/// Subgroup of Z/q1 + ... + Z/qk generated by gens; only the subgroup is enumerated.
struct VectorSubgroup {
  std::vector<std::int64_t> moduli;
  FinAbGroup group;
  std::vector<AbElem> basis;     ///< ambient vectors of the basis elements
  std::vector<AbElem> elements;  ///< ambient vectors, indexed by group index
  std::unordered_map<AbElem, AbElem, AbElemHash> coords;  ///< ambient vector -> group coordinates

  bool contains(const AbElem& v) const { return coords.count(v) > 0; }
};

VectorSubgroup decompose_vector_subgroup(const std::vector<std::int64_t>& moduli, const std::vector<AbElem>& gens);

}  // namespace stacky
