#include "stacky/wpgl.hpp"

#include <algorithm>
#include <numeric>

#include "stacky/errors.hpp"

namespace stacky {

std::string to_string(PglCase c) {
  switch (c) {
    case PglCase::NonDividing: return "NonDividing";
    case PglCase::Dividing: return "Dividing";
    case PglCase::Equal: return "Equal";
  }
  return "?";
}

std::string to_string(Pi1Tag t) {
  switch (t) {
    case Pi1Tag::Cstar: return "Cstar";
    case Pi1Tag::CstarLtimesC: return "CstarLtimesC";
    case Pi1Tag::PGL2: return "PGL2";
  }
  return "?";
}

std::string to_string(CentralizerKind c) {
  switch (c) {
    case CentralizerKind::Trivial: return "trivial";
    case CentralizerKind::Mu2InRotations: return "mu2_in_rotations";
    case CentralizerKind::AllOfD2: return "all_of_D2";
    case CentralizerKind::FullRotationCircle: return "full_rotation_circle";
  }
  return "?";
}

PglDescriptor pgl_descriptor(std::int64_t m, std::int64_t n) {
  if (m < 1 || n < 1) throw InvalidArgument("weights must be positive");
  PglDescriptor p;
  p.m = m;
  p.n = n;
  p.d = std::gcd(m, n);
  p.pi2_order = p.d;
  p.rs = bezout(m, n);
  if (m == n) {
    p.case_tag = PglCase::Equal;
    p.pi1_tag = Pi1Tag::PGL2;
    p.split = false;
  } else if (n % m == 0 || m % n == 0) {
    p.case_tag = PglCase::Dividing;
    p.pi1_tag = Pi1Tag::CstarLtimesC;
    p.split = true;
    p.section = "sigma(lambda, a) = (1, lambda, a)";
  } else {
    p.case_tag = PglCase::NonDividing;
    p.pi1_tag = Pi1Tag::Cstar;
    p.split = true;
    p.section = "sigma(lambda) = (lambda^" + std::to_string(-p.rs.r) + ", lambda^" + std::to_string(p.rs.s) + ")";
  }
  return p;
}

bool pgl_pi1_reduction_check(std::int64_t m, std::int64_t n) {
  const PglDescriptor a = pgl_descriptor(m, n);
  return a.pi1_tag == pgl_descriptor(m / a.d, n / a.d).pi1_tag;
}

namespace {

FinAbGroup mu(std::int64_t d) { return FinAbGroup::from_cyclic_factors({d}); }

std::vector<QmodZ> character_table(const CharacterGroup& cg, const FiniteGroup& G, const AbElem& c) {
  std::vector<QmodZ> v(G.order());
  for (int g = 0; g < G.order(); ++g) v[g] = cg.eval(c, g);
  return v;
}

}  // namespace

SphericalClassification classify_spherical_mn(const FiniteGroup& Gamma, std::int64_t m, std::int64_t n) {
  if (m < 1 || n < 1) throw InvalidArgument("weights must be positive");
  if (m == n) throw InvalidArgument("classify_spherical_mn needs m != n");
  const std::int64_t d = std::gcd(m, n);
  const CharacterGroup cg = character_group(Gamma);
  const H2 h = h2(Gamma, mu(d));
  SphericalClassification out;
  for (std::int64_t ci = 0; ci < cg.dual().order(); ++ci) {
    const std::vector<QmodZ> chi = character_table(cg, Gamma, cg.dual().element(ci));
    for (std::int64_t k = 0; k < h.size(); ++k) {
      SphericalClassMN c;
      c.Gamma = Gamma;
      c.m = m;
      c.n = n;
      c.d = d;
      c.chi_index = ci;
      c.chi = chi;
      c.class_index = k;
      c.h2class = h.representative(k);
      out.classes.push_back(std::move(c));
    }
  }
  out.count = static_cast<std::int64_t>(out.classes.size());
  return out;
}

KChiPair to_pair_K_chi(const SphericalClassMN& cls) {
  KChiPair p;
  const FinAbGroup A = mu(cls.d);
  p.K = extension_group(cls.Gamma, A, {}, cls.h2class.cocycle);
  p.d = cls.d;
  p.mu_generator = cls.d > 1 ? 1 : 0;
  p.Gamma = cls.Gamma;
  const int na = static_cast<int>(A.order());
  for (int x = 0; x < p.K.order(); ++x) p.projection.push_back(x / na);
  p.chi = cls.chi;
  return p;
}

std::pair<std::int64_t, std::int64_t> pair_class(const KChiPair& p) {
  const FiniteGroup& G = p.Gamma;
  const FiniteGroup& K = p.K;
  const int n = G.order();
  if (K.order() != n * p.d) throw InvalidArgument("K has the wrong order");
  std::vector<int> s(n, -1);
  for (int x = 0; x < K.order(); ++x)
    if (s[p.projection[x]] < 0) s[p.projection[x]] = x;
  // mu_d element -> exponent of the marked generator
  std::vector<int> expo(K.order(), -1);
  int z = 0;
  for (int k = 0; k < p.d; ++k, z = K.mul(z, p.mu_generator)) expo[z] = k;
  std::vector<int> c(static_cast<std::size_t>(n) * n);
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) {
      const int v = K.mul(K.mul(s[g], s[h]), K.inv(s[G.mul(g, h)]));
      if (expo[v] < 0) throw InvalidArgument("section defect does not lie in mu_d");
      c[g * n + h] = expo[v];
    }
  const CharacterGroup cg = character_group(G);
  const std::int64_t ci = cg.dual().index_of(cg.from_values(p.chi));
  return {ci, h2(G, mu(p.d)).class_of(c)};
}

std::pair<QmodZ, QmodZ> Reconstruction::exponents(const QmodZ& lambda, int u) const {
  const QmodZ& x = chi_on_K.at(u);
  return {(-r) * x + m * lambda, s * x + n * lambda};
}

Reconstruction reconstruct(const KChiPair& p, std::int64_t m, std::int64_t n) {
  if (m < 1 || n < 1 || m == n) throw InvalidArgument("reconstruct needs distinct positive weights");
  Reconstruction rec;
  rec.m = m;
  rec.n = n;
  rec.d = std::gcd(m, n);
  if (rec.d != p.d) throw InvalidArgument("marked mu_d does not match gcd(m, n)");
  const Bezout b = bezout(m, n);
  rec.r = b.r;
  rec.s = b.s;
  rec.coarse_m = m / rec.d;
  rec.coarse_n = n / rec.d;
  rec.mu_generator = p.mu_generator;
  for (int u = 0; u < p.K.order(); ++u) {
    rec.chi_on_K.push_back(p.chi.at(p.projection[u]));
    if (rec.chi_on_K.back().is_zero()) rec.H.push_back(u);
    rec.chi_image_order = std::lcm(rec.chi_image_order, rec.chi_on_K.back().den());
  }
  rec.pi1 = quotient(p.K, {p.mu_generator}).group;
  const std::int64_t k = rec.chi_image_order;
  const std::string coarse = "P(" + std::to_string(rec.coarse_m) + "," + std::to_string(rec.coarse_n) + ")";
  if (p.K.order() == rec.d)
    rec.orbifold = "P(" + std::to_string(m) + "," + std::to_string(n) + ")";
  else
    rec.orbifold = k == 1 ? coarse : "[" + coarse + "/Z" + std::to_string(k) + "]";
  rec.sequence_orders = {1, rec.d, static_cast<std::int64_t>(rec.H.size()), rec.pi1.order(), k, 1};
  return rec;
}

bool reconstruct_identity_check(const Reconstruction& r, const FiniteGroup& K, int max_n) {
  for (int N = 1; N <= max_n; ++N)
    for (int k = 0; k < N; ++k) {
      const QmodZ l(k, N);
      if (r.exponents(l, 0) != std::make_pair(r.m * l, r.n * l)) return false;
    }
  // (lambda zeta, u) and (lambda, zeta u) are the same point of the pushout
  const QmodZ step(1, r.d);
  for (int u = 0; u < K.order(); ++u)
    for (int k = 0; k < 12; ++k) {
      const QmodZ l(k, 12);
      if (r.exponents(l + step, u) != r.exponents(l, K.mul(r.mu_generator, u))) return false;
    }
  // multiplicative
  const QmodZ l1(1, 5), l2(2, 7);
  for (int u = 0; u < K.order(); ++u)
    for (int v = 0; v < K.order(); ++v) {
      const auto a = r.exponents(l1, u), b = r.exponents(l2, v), c = r.exponents(l1 + l2, K.mul(u, v));
      if (c.first != a.first + b.first || c.second != a.second + b.second) return false;
    }
  return true;
}

std::string ImageType::str() const {
  switch (kind) {
    case Kind::Cyclic: return "Cyclic(" + std::to_string(n) + ")";
    case Kind::Dihedral: return "Dihedral(" + std::to_string(n) + ")";
    case Kind::Tetrahedral: return "Tetrahedral";
    case Kind::Octahedral: return "Octahedral";
    case Kind::Icosahedral: return "Icosahedral";
  }
  return "?";
}

ImageType platonic_type(const FiniteGroup& G) {
  const int N = G.order();
  for (int x = 0; x < N; ++x)
    if (G.elem_order(x) == N) return {ImageType::Kind::Cyclic, N};
  // invariants first, then a certificate
  auto matches = [&G](const FiniteGroup& M) {
    return M.order() == G.order() && order_histogram(M) == order_histogram(G) &&
           abelian_invariants(M) == abelian_invariants(G) && is_isomorphic(G, M);
  };
  if (N % 2 == 0 && N >= 4 && matches(dihedral_group(N / 2))) return {ImageType::Kind::Dihedral, N / 2};
  if (N == 12 && matches(alternating_group(4))) return {ImageType::Kind::Tetrahedral, 12};
  if (N == 24 && matches(symmetric_group(4))) return {ImageType::Kind::Octahedral, 24};
  if (N == 60 && matches(alternating_group(5))) return {ImageType::Kind::Icosahedral, 60};
  throw NotAPgl2Subgroup((G.name().empty() ? "group" : G.name()) + " of order " + std::to_string(N) +
                         " is not cyclic, dihedral, tetrahedral, octahedral or icosahedral");
}

CentralizerInfo pgl2_centralizer(const ImageType& t) {
  switch (t.kind) {
    case ImageType::Kind::Cyclic: return {CentralizerKind::FullRotationCircle, 0};
    case ImageType::Kind::Dihedral:
      if (t.n % 2 == 1) return {CentralizerKind::Trivial, 1};
      if (t.n == 2) return {CentralizerKind::AllOfD2, 4};
      return {CentralizerKind::Mu2InRotations, 2};
    default: return {CentralizerKind::Trivial, 1};
  }
}

AStar a_star_characters(const FiniteGroup& Gamma, const FiniteGroup& T, const std::vector<int>& chi) {
  if (static_cast<int>(chi.size()) != Gamma.order() || !Gamma.is_hom(chi, [&T](int x, int y) { return T.mul(x, y); }))
    throw NotHomomorphism("chi is not a homomorphism Gamma -> T");
  {
    std::vector<char> hit(T.order(), 0);
    for (int v : chi) hit.at(v) = 1;
    if (std::count(hit.begin(), hit.end(), 0)) throw InvalidArgument("chi is not surjective");
  }
  AStar out;
  out.chars = character_group(Gamma);
  const ImageType t = platonic_type(T);
  if (t.kind == ImageType::Kind::Dihedral && t.n % 2 == 0) {
    // q kills mu_n when n > 2, and kills <a> when n = 2
    std::vector<std::vector<int>> kernels;
    if (t.n > 2) {
      int r = -1;
      for (int x = 0; x < T.order() && r < 0; ++x)
        if (T.elem_order(x) == t.n) r = x;
      kernels.push_back(closure(T, {r}));
    } else {
      for (int a = 1; a < T.order(); ++a) kernels.push_back({0, a});
    }
    for (const auto& ker : kernels) {
      std::vector<QmodZ> v(Gamma.order());
      for (int g = 0; g < Gamma.order(); ++g)
        v[g] = std::binary_search(ker.begin(), ker.end(), chi[g]) ? QmodZ() : QmodZ(1, 2);
      out.characters.push_back(std::move(v));
    }
  }
  std::vector<AbElem> gens;
  for (const auto& v : out.characters) gens.push_back(out.chars.from_values(v));
  out.Cstar = abelian_subgroup(out.chars.dual(), gens);
  return out;
}

DdConjugacyReport class_size_dd(const FiniteGroup& Gamma, const ImageType& type,
                                const std::vector<std::vector<QmodZ>>& a_star, std::int64_t d) {
  if (d < 1) throw InvalidArgument("d must be positive");
  DdConjugacyReport rep;
  rep.chi_image_type = type;
  rep.d = d;
  rep.centralizer = pgl2_centralizer(type);
  const CharacterGroup cg = character_group(Gamma);
  std::vector<AbElem> gens;
  for (const auto& v : a_star) gens.push_back(cg.from_values(v));
  const AbelianDecomposition C = abelian_subgroup(cg.dual(), gens);
  const AbelianDecomposition P = cg.power_image(d);
  rep.power_image_order = P.group.order();
  std::int64_t inter = 0;
  for (int label : C.elements) {
    rep.Cstar.push_back(cg.dual().element(label));
    if (P.label_pos[label] >= 0) ++inter;
  }
  std::sort(rep.Cstar.begin(), rep.Cstar.end());
  rep.D_order = static_cast<std::int64_t>(C.elements.size()) / inter;
  return rep;
}

DdConjugacyReport class_size_dd(const FiniteGroup& Gamma, const FiniteGroup& T, const std::vector<int>& chi,
                                std::int64_t d) {
  const AStar a = a_star_characters(Gamma, T, chi);
  return class_size_dd(Gamma, platonic_type(T), a.characters, d);
}

}  // namespace stacky
