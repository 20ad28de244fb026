#pragma once

#include <cstdint>
#include <vector>

#include "stacky/abelian.hpp"
#include "stacky/finite_group.hpp"
#include "stacky/presentation.hpp"

namespace stacky {

struct Bezout {
  std::int64_t s = 1, r = 0, d = 1;  // s m + r n = d
};
/// d = gcd(m,n); s = 1, r = 0 when m | n, otherwise the pair with 0 <= s < n/d.
Bezout bezout(std::int64_t m, std::int64_t n);

/// G_a = H x Z / (a, -n): elements h t^k (0 <= k < n) with t central over H and t^n = a.
struct GerbeGroup {
  FiniteGroup G;
  std::vector<int> inclusion;   // H element -> G element
  std::vector<int> projection;  // G element -> k in Z_n
  int t = 0;                    // the lift of 1
};
/// Throws NotCentral when a is not central in H.
GerbeGroup gerbe_group(const FiniteGroup& H, int n, int a);

/// Recovers the class of a from an extension: an element over 1 that centralizes H,
/// raised to the n-th power.  Returns the minimal representative mod nZ(H).
int recover_gerbe_class(const FiniteGroup& H, const GerbeGroup& g, int n);

struct DnGerbeClass {
  int a = 0;               // minimal H index in its coset of nZ(H)
  std::vector<int> coset;  // H indices, sorted
};
std::vector<DnGerbeClass> dn_trivial_band_classes(const FiniteGroup& H, int n);
/// Minimal representative of the coset a + nZ(H).
int dn_class_representative(const FiniteGroup& H, int n, int a);

struct DinftyExtension {
  bool extends = false;
  std::int64_t count = 0;
};
/// theta is an automorphism of H given as a permutation of its elements.
DinftyExtension dinfty_extension(const FiniteGroup& H, const Perm& theta, int n);

struct PClass {
  int a = 0;               // minimal H index in the orbit
  std::vector<int> orbit;  // H indices, sorted
  FiniteGroup pi1;         // H / <a>
};
/// Out(H)-orbits on Z(H).  Throws NotCoprime unless gcd(m,n) = 1.
std::vector<PClass> classify_over_P(const FiniteGroup& H, int m, int n);

struct GammaConstruction {
  GerbeGroup G;   // gerbe_group(H, n, a^s)
  GerbeGroup Gp;  // gerbe_group(H, m, a^r)
  Bezout rs;
  GroupPresentation pushout;
  FiniteGroup pushout_group;
  FiniteGroup expected;  // H / <a>
  bool isomorphic = false;
  int alpha = 0;  // m x + n y with x = t^n in G, y = t'^m in G'
  bool round_trip = false;
};
GammaConstruction gamma_construct(const FiniteGroup& H, int m, int n, int a);

/// Exactness of 0 -> A[n]+A[m] -> A -(mn)-> A -(s,r)-> A/nA + A/mA -> 0, by enumeration.
bool mayer_vietoris_check(const FinAbGroup& A, std::int64_t m, std::int64_t n);

}  // namespace stacky
