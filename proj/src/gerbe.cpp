#include "stacky/gerbe.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "stacky/cohomology.hpp"
#include "stacky/coset_enum.hpp"
#include "stacky/errors.hpp"
#include "stacky/group_algorithms.hpp"

namespace stacky {

Bezout bezout(std::int64_t m, std::int64_t n) {
  if (m < 1 || n < 1) throw InvalidArgument("bezout needs positive integers");
  Bezout b;
  b.d = std::gcd(m, n);
  if (n % m == 0) return b;
  const std::int64_t nd = n / b.d, md = m / b.d;
  // s m/d = 1 mod n/d
  for (std::int64_t s = 0; s < nd; ++s)
    if ((s * md) % nd == 1 % nd) {
      b.s = s;
      b.r = (b.d - s * m) / n;
      return b;
    }
  throw InvalidArgument("no Bezout pair found");
}

GerbeGroup gerbe_group(const FiniteGroup& H, int n, int a) {
  if (n < 1) throw InvalidArgument("n must be positive");
  if (a < 0 || a >= H.order()) throw InvalidArgument("element index out of range");
  if (!is_central(H, a)) throw NotCentral("element " + std::to_string(a) + " is not central in H");
  const int h = H.order();
  GerbeGroup g;
  g.G = FiniteGroup::from_mul(h * n, [&](int x, int y) {
    const int hx = x % h, kx = x / h, hy = y % h, ky = y / h;
    int v = H.mul(hx, hy);
    int k = kx + ky;
    if (k >= n) {
      k -= n;
      v = H.mul(v, a);
    }
    return v + h * k;
  });
  for (int x = 0; x < h; ++x) g.inclusion.push_back(x);
  for (int x = 0; x < h * n; ++x) g.projection.push_back(x / h);
  g.t = n > 1 ? h : a;
  return g;
}

int dn_class_representative(const FiniteGroup& H, int n, int a) {
  if (!is_central(H, a)) throw NotCentral("element " + std::to_string(a) + " is not central in H");
  const Center z = center(H);
  int best = a;
  for (int c : z.sub.embedding) best = std::min(best, H.mul(a, H.pow(c, n)));
  return best;
}

int recover_gerbe_class(const FiniteGroup& H, const GerbeGroup& g, int n) {
  std::vector<int> back(g.G.order(), -1);
  for (int x = 0; x < H.order(); ++x) back[g.inclusion[x]] = x;
  for (int x = 0; x < g.G.order(); ++x) {
    if (g.projection[x] != 1 % n) continue;
    bool centralizes = true;
    for (int h : H.generators())
      if (g.G.mul(x, g.inclusion[h]) != g.G.mul(g.inclusion[h], x)) {
        centralizes = false;
        break;
      }
    if (!centralizes) continue;
    const int p = back[g.G.pow(x, n)];
    if (p < 0) throw InvalidArgument("n-th power of a lift does not lie in H");
    return dn_class_representative(H, n, p);
  }
  throw InvalidArgument("no lift of 1 centralizes H; the band is not trivial");
}

std::vector<DnGerbeClass> dn_trivial_band_classes(const FiniteGroup& H, int n) {
  if (n < 1) throw InvalidArgument("n must be positive");
  const Center z = center(H);
  std::vector<DnGerbeClass> out;
  std::set<int> done;
  std::vector<int> zel = z.sub.embedding;
  std::sort(zel.begin(), zel.end());
  for (int a : zel) {
    if (done.count(a)) continue;
    DnGerbeClass c;
    c.a = a;
    std::set<int> coset;
    for (int x : zel) coset.insert(H.mul(a, H.pow(x, n)));
    c.coset.assign(coset.begin(), coset.end());
    done.insert(coset.begin(), coset.end());
    out.push_back(std::move(c));
  }
  return out;
}

DinftyExtension dinfty_extension(const FiniteGroup& H, const Perm& theta, int n) {
  if (n < 1) throw InvalidArgument("n must be positive");
  const int h = H.order();
  if (static_cast<int>(theta.size()) != h || perm_compose(theta, perm_inverse(theta)) != perm_identity(h))
    throw InvalidArgument("theta is not a permutation of H");
  if (!H.is_hom(theta, [&H](int x, int y) { return H.mul(x, y); }))
    throw NotHomomorphism("theta is not an automorphism of H");
  Perm tn = perm_identity(h);
  for (int i = 0; i < n; ++i) tn = perm_compose(tn, theta);
  DinftyExtension out;
  for (int g = 0; g < h && !out.extends; ++g) {
    bool inner = true;
    for (int x = 0; x < h && inner; ++x) inner = tn[x] == H.mul(H.mul(g, x), H.inv(g));
    out.extends = inner;
  }
  if (!out.extends) return out;
  const Center z = center(H);
  const FinAbGroup& A = z.group();
  const FiniteGroup Zn = cyclic_group(n);
  ModuleAction act(n, std::vector<int>(static_cast<std::size_t>(A.order())));
  for (std::int64_t i = 0; i < A.order(); ++i) {
    int x = z.embed(A.element(i));
    for (int k = 0; k < n; ++k) {
      act[k][static_cast<std::size_t>(i)] = static_cast<int>(A.index_of(z.dec.coords_of(x)));
      x = theta[x];
    }
  }
  out.count = h2(Zn, A, act).size();
  return out;
}

std::vector<PClass> classify_over_P(const FiniteGroup& H, int m, int n) {
  if (m < 1 || n < 1) throw InvalidArgument("m and n must be positive");
  if (std::gcd(m, n) != 1) throw NotCoprime("m and n must be coprime");
  const AutomorphismData ad = automorphisms(H);
  const FinAbGroup& A = ad.z.group();
  std::vector<int> orbit_of(static_cast<std::size_t>(A.order()), -1);
  std::vector<PClass> out;
  // visit center elements in H order so representatives come out minimal
  std::vector<int> zel = ad.z.sub.embedding;
  std::sort(zel.begin(), zel.end());
  for (int a : zel) {
    const auto ai = static_cast<std::size_t>(A.index_of(ad.z.dec.coords_of(a)));
    if (orbit_of[ai] >= 0) continue;
    std::vector<std::size_t> stack{ai};
    orbit_of[ai] = static_cast<int>(out.size());
    PClass c;
    c.a = a;
    while (!stack.empty()) {
      const std::size_t x = stack.back();
      stack.pop_back();
      c.orbit.push_back(ad.z.embed(A.element(static_cast<std::int64_t>(x))));
      for (const auto& p : ad.out_on_center) {
        const auto y = static_cast<std::size_t>(p[x]);
        if (orbit_of[y] < 0) {
          orbit_of[y] = orbit_of[ai];
          stack.push_back(y);
        }
      }
    }
    std::sort(c.orbit.begin(), c.orbit.end());
    c.pi1 = quotient(H, {a}).group;
    out.push_back(std::move(c));
  }
  return out;
}

GammaConstruction gamma_construct(const FiniteGroup& H, int m, int n, int a) {
  if (m < 1 || n < 1) throw InvalidArgument("m and n must be positive");
  if (std::gcd(m, n) != 1) throw NotCoprime("m and n must be coprime");
  if (!is_central(H, a)) throw NotCentral("element " + std::to_string(a) + " is not central in H");
  GammaConstruction out;
  out.rs = bezout(m, n);
  const int as = H.pow(a, out.rs.s), ar = H.pow(a, out.rs.r);
  out.G = gerbe_group(H, n, as);
  out.Gp = gerbe_group(H, m, ar);

  // van Kampen: both extensions share H; t' is glued to t^-1
  const GroupPresentation hp = table_presentation(H, "h");
  const int nh = static_cast<int>(hp.num_gens());
  std::vector<std::string> names = hp.gens();
  names.push_back("t");
  names.push_back("u");
  const int t = nh + 1, u = nh + 2;
  std::vector<Word> rels = hp.relators();
  for (int j = 1; j <= nh; ++j) {
    rels.push_back(word_commutator({t}, {j}));
    rels.push_back(word_commutator({u}, {j}));
  }
  rels.push_back(word_concat(word_power({t}, n), word_inverse(element_word(H, as))));
  rels.push_back(word_concat(word_power({u}, m), word_inverse(element_word(H, ar))));
  rels.push_back({t, u});
  out.pushout = GroupPresentation(names, rels);
  const auto fq = finite_group_of(out.pushout);
  if (!fq) throw BudgetExceeded("pushout coset enumeration did not close");
  out.pushout_group = fq->group;
  out.expected = quotient(H, {a}).group;
  out.isomorphic = is_isomorphic(out.pushout_group, out.expected);

  // alpha = m x + n y
  const int x = out.G.G.pow(out.G.t, n);
  const int y = out.Gp.G.pow(out.Gp.t, m);
  if (x >= H.order() || y >= H.order()) throw InvalidArgument("power of the lift left H");
  out.alpha = H.mul(H.pow(x, m), H.pow(y, n));
  out.round_trip = out.alpha == a;
  return out;
}

bool mayer_vietoris_check(const FinAbGroup& A, std::int64_t m, std::int64_t n) {
  if (m < 1 || n < 1) throw InvalidArgument("m and n must be positive");
  if (std::gcd(m, n) != 1) throw NotCoprime("m and n must be coprime");
  const Bezout b = bezout(m, n);
  const std::int64_t N = A.order();
  const auto els = A.elements();
  auto idx = [&](const AbElem& v) { return A.index_of(v); };
  std::vector<std::int64_t> An, Am;
  for (std::int64_t i = 0; i < N; ++i) {
    if (idx(A.scale(n, els[i])) == 0) An.push_back(i);
    if (idx(A.scale(m, els[i])) == 0) Am.push_back(i);
  }
  // A/kA as coset ids: minimal index in a + kA
  auto coset_ids = [&](std::int64_t k) {
    std::vector<std::int64_t> kA;
    for (std::int64_t i = 0; i < N; ++i) kA.push_back(idx(A.scale(k, els[i])));
    std::vector<std::int64_t> id(N);
    for (std::int64_t i = 0; i < N; ++i) {
      std::int64_t best = i;
      for (std::int64_t x : kA) best = std::min(best, idx(A.add(els[i], els[x])));
      id[i] = best;
    }
    return id;
  };
  const auto cn = coset_ids(n), cm = coset_ids(m);

  // f1 injective, im f1 = ker f2
  std::set<std::int64_t> im1;
  for (std::int64_t x : An)
    for (std::int64_t y : Am) im1.insert(idx(A.add(els[x], els[y])));
  if (static_cast<std::int64_t>(im1.size()) != static_cast<std::int64_t>(An.size() * Am.size())) return false;
  std::set<std::int64_t> ker2, im2, ker3;
  std::set<std::pair<std::int64_t, std::int64_t>> im3;
  for (std::int64_t i = 0; i < N; ++i) {
    const std::int64_t v = idx(A.scale(m * n, els[i]));
    if (v == 0) ker2.insert(i);
    im2.insert(v);
    const auto f3 = std::make_pair(cn[idx(A.scale(b.s, els[i]))], cm[idx(A.scale(b.r, els[i]))]);
    if (f3.first == cn[0] && f3.second == cm[0]) ker3.insert(i);
    im3.insert(f3);
  }
  if (im1 != ker2 || im2 != ker3) return false;
  std::set<std::int64_t> qn(cn.begin(), cn.end()), qm(cm.begin(), cm.end());
  return im3.size() == qn.size() * qm.size();
}

}  // namespace stacky
