#pragma once

#include <cstdint>
#include <vector>

#include "stacky/abelian.hpp"
#include "stacky/finite_group.hpp"

namespace stacky {

inline constexpr int kH2GammaBound = 24;

/// Left action of Gamma on A: act[g][i] = index of g.a where i = A.index_of(a).
/// An empty table means the trivial action.
using ModuleAction = std::vector<std::vector<int>>;

/// Checks the table is an action by automorphisms; throws NotHomomorphism otherwise.
void validate_action(const FiniteGroup& Gamma, const FinAbGroup& A, const ModuleAction& act);

/// A normalized 2-cochain: cocycle[g * |Gamma| + h] = A index of c(g,h).
struct CocycleClass {
  FiniteGroup Gamma;
  FinAbGroup A;
  ModuleAction action;
  std::vector<int> cocycle;
};

/// True when c(e,.) = c(.,e) = 0 and the cocycle identity holds on all triples.
bool is_normalized_cocycle(const FiniteGroup& Gamma, const FinAbGroup& A, const ModuleAction& act,
                           const std::vector<int>& c);

/// H^2(Gamma, A) through normalized bar cochains.  Classes are indexed by the
/// elements of group(); representative(i) is sum y_j f_j with the reduced
/// coordinates y of class i in the coboundary Smith basis f.
class H2 {
 public:
  const FinAbGroup& group() const { return sub_.group; }
  std::int64_t size() const { return sub_.group.order(); }
  CocycleClass representative(std::int64_t class_index) const;
  /// Class index of a normalized cocycle; throws InvalidArgument if c is not one.
  std::int64_t class_of(const std::vector<int>& c) const;
  const FiniteGroup& Gamma() const { return gamma_; }
  const FinAbGroup& A() const { return A_; }
  const ModuleAction& action() const { return act_; }

 private:
  friend H2 h2(const FiniteGroup&, const FinAbGroup&, const ModuleAction&, int);
  FiniteGroup gamma_;
  FinAbGroup A_;
  ModuleAction act_;
  std::int64_t e_ = 1;                        // exponent of A
  std::vector<std::vector<std::int64_t>> W_;  // column transform (N x N)
  std::vector<std::vector<std::int64_t>> f_;  // basis cochains over Z/e, one per kept coordinate
  std::vector<std::size_t> kept_;             // Smith coordinates with q > 1
  VectorSubgroup sub_;                        // H^2 inside the sum of Z/q
};

/// Throws OrderBoundExceeded when |Gamma| > gamma_bound.
H2 h2(const FiniteGroup& Gamma, const FinAbGroup& A, const ModuleAction& act = {}, int gamma_bound = kH2GammaBound);

/// Elements (a, g) with index a + |A| g and product (a + g.b + c(g,h), gh).
FiniteGroup extension_group(const FiniteGroup& Gamma, const FinAbGroup& A, const ModuleAction& act,
                            const std::vector<int>& c);

}  // namespace stacky
