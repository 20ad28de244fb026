#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "stacky/cohomology.hpp"
#include "stacky/crossed_module.hpp"

namespace stacky {

/// G2 -> E -> Gamma with rho: E -> G1.
struct ButterflyDiagram {
  FiniteGroup Gamma, E;
  std::vector<int> inj;   // G2 element -> E element
  std::vector<int> proj;  // E element -> Gamma element
  std::vector<int> rho;   // E element -> G1 element
};

struct ButterflyCheck {
  bool ok = true;
  std::string failure;  // names the first condition that fails
  explicit operator bool() const { return ok; }
};
ButterflyCheck butterfly_validate(const ButterflyDiagram& b, const CrossedModule& X);

/// Isomorphism of extensions E' -> E fixing G2 and Gamma and intertwining rho.
bool butterflies_isomorphic(const ButterflyDiagram& a, const ButterflyDiagram& b);

/// The pi1-level homomorphism of a butterfly: Gamma element -> pi1 element.
std::vector<int> butterfly_chi(const ButterflyDiagram& b, const HomotopyGroups& hg);

/// Gamma-module structure on pi2 induced by chi: act[g][a] = a^{sigma(chi(g))^-1}.
ModuleAction pi2_action(const CrossedModule& X, const HomotopyGroups& hg, const std::vector<int>& sigma,
                        const FiniteGroup& Gamma, const std::vector<int>& chi);

/// E = K x|_{pi2} G2 for the extension K of the cocycle, rho(k, a) = sigma(chi(k)) phi(a).
/// The quotient is realised on pairs [g, a] (index g + |Gamma| a) through the
/// coset representatives ((0, g), a); the product is
///   [g, a][h, b] = [gh, c(g,h)^{sigma chi(gh)} a^{sigma chi(h)} b].
ButterflyDiagram split_butterfly(const FiniteGroup& Gamma, const CrossedModule& X, const HomotopyGroups& hg,
                                 const std::vector<int>& sigma, const std::vector<int>& chi,
                                 const std::vector<int>& cocycle);

struct ChiClasses {
  std::vector<int> chi;  // Gamma element -> pi1 element
  H2 h2;
};
/// Every homomorphism Gamma -> pi1 with its H^2(Gamma, pi2)_chi.  Throws NotASection.
std::vector<ChiClasses> split_classes(const FiniteGroup& Gamma, const CrossedModule& X, const std::vector<int>& sigma);

struct HomClass {
  std::vector<int> chi;
  std::int64_t class_index = 0;
  CocycleClass cocycle;
  ButterflyDiagram butterfly;
};
/// Streams the classes; visit returns false to stop.
void for_each_hom_class(const FiniteGroup& Gamma, const CrossedModule& X, const std::vector<int>& sigma,
                        const std::function<bool(const HomClass&)>& visit);
std::vector<HomClass> hom_classes_split(const FiniteGroup& Gamma, const CrossedModule& X, const std::vector<int>& sigma);

/// Normalized cocycle of b on the section gamma -> (least lift with rho = sigma(chi(gamma))).
std::vector<int> butterfly_cocycle(const ButterflyDiagram& b, const CrossedModule& X, const HomotopyGroups& hg,
                                   const std::vector<int>& sigma);

/// Twists the product of E by c: x * y = c(x̄, ȳ) x y.  c must be a normalized
/// cocycle for the action of Gamma on pi2 that b induces.
ButterflyDiagram torsor_act(const ButterflyDiagram& b, const CocycleClass& c, const CrossedModule& X,
                            const HomotopyGroups& hg);

/// rho' = a^-1 rho a and inj' = inj o (-^a)^-1.
ButterflyDiagram conjugate_class(int a, const ButterflyDiagram& b, const CrossedModule& X);
bool is_fixed(int a, const ButterflyDiagram& b, const CrossedModule& X);

}  // namespace stacky
