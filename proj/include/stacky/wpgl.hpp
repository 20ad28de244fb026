#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "stacky/abelian.hpp"
#include "stacky/cohomology.hpp"
#include "stacky/finite_group.hpp"
#include "stacky/gerbe.hpp"
#include "stacky/group_algorithms.hpp"
#include "stacky/qmodz.hpp"

namespace stacky {

// PGL(m,n) is never materialized.  C*-valued data lives in Q/Z.

enum class PglCase { NonDividing, Dividing, Equal };
enum class Pi1Tag { Cstar, CstarLtimesC, PGL2 };
std::string to_string(PglCase c);
std::string to_string(Pi1Tag t);

struct PglDescriptor {
  std::int64_t m = 1, n = 1, d = 1;
  PglCase case_tag = PglCase::Equal;
  Pi1Tag pi1_tag = Pi1Tag::PGL2;
  std::int64_t pi2_order = 1;  // pi2 = Z_d
  bool split = false;
  Bezout rs;                   // s m + r n = d
  std::string section;         // symbolic formula, empty when not split
};
PglDescriptor pgl_descriptor(std::int64_t m, std::int64_t n);
/// pi1 tag of (m,n) equals that of (m/d, n/d).
bool pgl_pi1_reduction_check(std::int64_t m, std::int64_t n);

struct SphericalClassMN {
  FiniteGroup Gamma;
  std::int64_t m = 1, n = 1, d = 1;
  std::int64_t chi_index = 0;  // index in character_group(Gamma).dual()
  std::vector<QmodZ> chi;      // values on every element of Gamma
  std::int64_t class_index = 0;
  CocycleClass h2class;        // over mu_d = Z_d, trivial action
};
struct SphericalClassification {
  std::vector<SphericalClassMN> classes;
  std::int64_t count = 0;
};
/// Gamma* x H^2(Gamma, Z_d).  Throws InvalidArgument when m == n.
SphericalClassification classify_spherical_mn(const FiniteGroup& Gamma, std::int64_t m, std::int64_t n);

/// K with a marked central mu_d and a character chi of K/mu_d = Gamma.
struct KChiPair {
  FiniteGroup K;
  std::int64_t d = 1;
  int mu_generator = 0;          // element of K of order d generating mu_d
  FiniteGroup Gamma;
  std::vector<int> projection;   // K element -> Gamma element, kernel mu_d
  std::vector<QmodZ> chi;        // values on Gamma
};
KChiPair to_pair_K_chi(const SphericalClassMN& cls);
/// Inverse of to_pair_K_chi up to isomorphism of pairs: returns (chi_index, class_index).
/// The cocycle is read off on least lifts, so any relabelling of K gives the same answer.
std::pair<std::int64_t, std::int64_t> pair_class(const KChiPair& p);

struct Reconstruction {
  std::int64_t m = 1, n = 1, d = 1, r = 0, s = 1;
  std::int64_t coarse_m = 1, coarse_n = 1;  // P(m/d, n/d)
  FiniteGroup pi1;                          // K / mu_d
  std::vector<int> H;                       // ker chi inside K, contains mu_d
  std::int64_t chi_image_order = 1;         // |chi(K)|, rotations of the coarse curve
  std::string orbifold;                     // "[P(a,b)/Z_k]" or "P(m,n)"
  /// 1 -> mu_d -> H -> pi1 X -> pi1 C -> 1, as orders.
  std::vector<std::int64_t> sequence_orders;

  /// (lambda, u) in C* x_{mu_d} K acts by the diagonal pair of exponents
  /// (-r chi(u) + m lambda, s chi(u) + n lambda).
  std::pair<QmodZ, QmodZ> exponents(const QmodZ& lambda, int u) const;

  std::vector<QmodZ> chi_on_K;
  int mu_generator = 0;
};
Reconstruction reconstruct(const KChiPair& p, std::int64_t m, std::int64_t n);
/// rho o iota is the diagonal (m,n) power map on mu_N for N <= max_n, and the
/// exponents do not depend on how mu_d is split between C* and K.
bool reconstruct_identity_check(const Reconstruction& r, const FiniteGroup& K, int max_n);

struct ImageType {
  enum class Kind { Cyclic, Dihedral, Tetrahedral, Octahedral, Icosahedral };
  Kind kind = Kind::Cyclic;
  int n = 1;  // cyclic order or dihedral parameter
  std::string str() const;
  friend bool operator==(const ImageType&, const ImageType&) = default;
};
/// Throws NotAPgl2Subgroup for groups off the list.
ImageType platonic_type(const FiniteGroup& G);

enum class CentralizerKind { Trivial, Mu2InRotations, AllOfD2, FullRotationCircle };
std::string to_string(CentralizerKind c);
struct CentralizerInfo {
  CentralizerKind kind = CentralizerKind::Trivial;
  int order = 1;  // 0 for the circle
};
CentralizerInfo pgl2_centralizer(const ImageType& t);

/// C* inside Gamma* for a surjection chi: Gamma -> T with T dihedral.
/// chi[g] is the image of g in T.  Labels of the result are dual() indices.
struct AStar {
  CharacterGroup chars;
  std::vector<std::vector<QmodZ>> characters;  // a* for each nontrivial a in C
  AbelianDecomposition Cstar;
};
AStar a_star_characters(const FiniteGroup& Gamma, const FiniteGroup& T, const std::vector<int>& chi);

struct DdConjugacyReport {
  ImageType chi_image_type;
  std::int64_t d = 1;
  CentralizerInfo centralizer;
  std::vector<AbElem> Cstar;       // elements of C* in Gamma*
  std::int64_t power_image_order = 1;
  std::int64_t D_order = 1;        // |C* / (C* cap (Gamma*)^d)|
};
DdConjugacyReport class_size_dd(const FiniteGroup& Gamma, const FiniteGroup& T, const std::vector<int>& chi,
                                std::int64_t d);
/// Same report from a type tag and the composite characters a* (values on Gamma).
DdConjugacyReport class_size_dd(const FiniteGroup& Gamma, const ImageType& type,
                                const std::vector<std::vector<QmodZ>>& a_star, std::int64_t d);

}  // namespace stacky
