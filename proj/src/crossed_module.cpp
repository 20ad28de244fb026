#include "stacky/crossed_module.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <unordered_set>

#include "stacky/errors.hpp"
#include "stacky/small_groups.hpp"

namespace stacky {

namespace {

std::string pair_str(int a, int b) { return "(" + std::to_string(a) + ", " + std::to_string(b) + ")"; }

// First failing pair for a map between groups, or nullopt.
std::optional<std::pair<int, int>> hom_failure(const FiniteGroup& A, const FiniteGroup& B, const std::vector<int>& f) {
  for (int x = 0; x < A.order(); ++x)
    for (int y = 0; y < A.order(); ++y)
      if (f[A.mul(x, y)] != B.mul(f[x], f[y])) return std::make_pair(x, y);
  return std::nullopt;
}

bool is_bijection(const std::vector<int>& f, int n) {
  if (static_cast<int>(f.size()) != n) return false;
  std::vector<char> seen(n, 0);
  for (int v : f) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

void check_right_action(const FiniteGroup& K, const FiniteGroup& G, const std::vector<std::vector<int>>& act,
                        const std::string& what) {
  if (static_cast<int>(act.size()) != K.order()) throw NotHomomorphism(what + ": one row per acting element is required");
  for (int k = 0; k < K.order(); ++k) {
    if (!is_bijection(act[k], G.order()))
      throw NotHomomorphism(what + ": element " + std::to_string(k) + " does not act bijectively");
    if (auto bad = hom_failure(G, G, act[k]))
      throw NotHomomorphism(what + ": element " + std::to_string(k) + " is not multiplicative on " +
                            pair_str(bad->first, bad->second));
  }
  for (int g = 0; g < G.order(); ++g)
    if (act[0][g] != g) throw NotHomomorphism(what + ": the identity does not act trivially");
  for (int x = 0; x < K.order(); ++x)
    for (int y = 0; y < K.order(); ++y) {
      const auto& xy = act[K.mul(x, y)];
      for (int g = 0; g < G.order(); ++g)
        if (xy[g] != act[y][act[x][g]])
          throw NotHomomorphism(what + ": not a right action on " + pair_str(x, y));
    }
}

}  // namespace

void validate_crossed_module(const CrossedModule& X) {
  const FiniteGroup &G2 = X.G2, &G1 = X.G1;
  if (static_cast<int>(X.phi.size()) != G2.order()) throw NotHomomorphism("phi needs one image per element of G2");
  for (int v : X.phi)
    if (v < 0 || v >= G1.order()) throw NotHomomorphism("phi image out of range");
  if (auto bad = hom_failure(G2, G1, X.phi))
    throw NotHomomorphism("phi is not a homomorphism at " + pair_str(bad->first, bad->second));
  check_right_action(G1, G2, X.action, "action");
  for (int g = 0; g < G2.order(); ++g)
    for (int x = 0; x < G1.order(); ++x)
      if (X.phi[X.act(g, x)] != G1.conj(X.phi[g], x))
        throw EquivarianceFailure("phi(g^x) != x^-1 phi(g) x at (g, x) = " + pair_str(g, x));
  for (int g = 0; g < G2.order(); ++g)
    for (int h = 0; h < G2.order(); ++h)
      if (X.act(g, X.phi[h]) != G2.conj(g, h))
        throw PeifferFailure("g^phi(h) != h^-1 g h at (g, h) = " + pair_str(g, h));
}

CrossedModule new_crossed_module(FiniteGroup G2, FiniteGroup G1, std::vector<int> phi,
                                 std::vector<std::vector<int>> action) {
  CrossedModule X{std::move(G2), std::move(G1), std::move(phi), std::move(action)};
  validate_crossed_module(X);
  return X;
}

std::vector<std::vector<int>> action_from_generators(const FiniteGroup& G2, const FiniteGroup& G1,
                                                     const std::vector<std::vector<int>>& gen_images) {
  if (gen_images.size() != G1.generators().size())
    throw InvalidArgument("one automorphism per generator of G1 is required");
  std::vector<std::vector<int>> act(G1.order());
  act[0] = perm_identity(G2.order());
  for (std::size_t i = 1; i < G1.bfs_order().size(); ++i) {
    const int x = G1.bfs_order()[i];
    const auto& par = act[G1.parent(x)];
    const auto& gen = gen_images[G1.parent_gen(x)];
    std::vector<int> row(G2.order());
    for (int g = 0; g < G2.order(); ++g) row[g] = gen[par[g]];
    act[x] = std::move(row);
  }
  check_right_action(G1, G2, act, "action");
  return act;
}

std::vector<std::vector<int>> trivial_action(const FiniteGroup& G2, const FiniteGroup& G1) {
  return std::vector<std::vector<int>>(G1.order(), perm_identity(G2.order()));
}

std::vector<std::vector<int>> conjugation_action(const FiniteGroup& G, const Subgroup& N) {
  const int n = N.group.order();
  std::vector<int> back(G.order(), -1);
  for (int i = 0; i < n; ++i) back[N.embedding[i]] = i;
  std::vector<std::vector<int>> act(G.order(), std::vector<int>(n));
  for (int x = 0; x < G.order(); ++x)
    for (int i = 0; i < n; ++i) {
      const int y = back[G.conj(N.embedding[i], x)];
      if (y < 0) throw InvalidArgument("subgroup is not normal");
      act[x][i] = y;
    }
  return act;
}

HomotopyGroups homotopy_groups(const CrossedModule& X) {
  HomotopyGroups hg;
  std::vector<int> image(X.phi.begin(), X.phi.end());
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  hg.to_pi1 = quotient(X.G1, image);
  hg.pi1 = hg.to_pi1.group;
  for (int g = 0; g < X.G2.order(); ++g)
    if (X.phi[g] == 0) hg.kernel.push_back(g);
  hg.pi2_in = decompose_abelian(X.G2.order(), 0, hg.kernel, [&X](int a, int b) { return X.G2.mul(a, b); });
  hg.pi2 = hg.pi2_in.group;
  return hg;
}

int TwoGroup::compose(int f, int g) const {
  if (target[f] != source[g]) throw InvalidArgument("arrows are not composable");
  const int n1 = objects.order();
  return arrow_index(source[f], arrow_labels.mul(f / n1, g / n1));
}

TwoGroup to_2group(const CrossedModule& X) {
  TwoGroup T;
  T.objects = X.G1;
  T.arrow_labels = X.G2;
  const int n1 = X.G1.order(), n2 = X.G2.order();
  std::vector<int> gens;
  for (int g : X.G1.generators()) gens.push_back(g);
  for (int a : X.G2.generators()) gens.push_back(n1 * a);
  T.arrows = FiniteGroup::from_mul(
      n1 * n2,
      [&X, n1](int u, int v) {
        const int g = u % n1, a = u / n1, h = v % n1, b = v / n1;
        return X.G1.mul(g, h) + n1 * X.G2.mul(X.act(a, h), b);
      },
      gens, "arrows");
  T.source.resize(n1 * n2);
  T.target.resize(n1 * n2);
  for (int u = 0; u < n1 * n2; ++u) {
    T.source[u] = u % n1;
    T.target[u] = X.G1.mul(u % n1, X.phi[u / n1]);
  }
  T.unit.resize(n1);
  for (int g = 0; g < n1; ++g) T.unit[g] = T.arrow_index(g, 0);
  return T;
}

FromTwoGroup from_2group(const TwoGroup& T) {
  std::vector<int> from_identity;
  for (int u = 0; u < T.arrows.order(); ++u)
    if (T.source[u] == 0) from_identity.push_back(u);
  const Subgroup S = subgroup_from_elements(T.arrows, from_identity);
  std::vector<int> back(T.arrows.order(), -1);
  for (int i = 0; i < S.group.order(); ++i) back[S.embedding[i]] = i;
  const int n1 = T.objects.order(), n2 = S.group.order();
  std::vector<int> phi(n2);
  for (int i = 0; i < n2; ++i) phi[i] = T.target[S.embedding[i]];
  std::vector<std::vector<int>> act(n1, std::vector<int>(n2));
  for (int x = 0; x < n1; ++x) {
    const int ux = T.unit[x];
    for (int i = 0; i < n2; ++i) act[x][i] = back[T.arrows.conj(S.embedding[i], ux)];
  }
  FromTwoGroup out;
  out.module = new_crossed_module(S.group, T.objects, std::move(phi), std::move(act));
  out.g2_embedding = S.embedding;
  return out;
}

bool two_group_laws_hold(const TwoGroup& T) {
  const FiniteGroup &A = T.arrows, &O = T.objects;
  if (hom_failure(A, O, T.source) || hom_failure(A, O, T.target) || hom_failure(O, A, T.unit)) return false;
  for (int g = 0; g < O.order(); ++g)
    if (T.source[T.unit[g]] != g || T.target[T.unit[g]] != g) return false;
  const int n1 = O.order(), n2 = T.arrow_labels.order();
  for (int f = 0; f < A.order(); ++f) {
    if (T.compose(T.unit[T.source[f]], f) != f || T.compose(f, T.unit[T.target[f]]) != f) return false;
    for (int f2 = 0; f2 < A.order(); ++f2)
      for (int b = 0; b < n2; ++b)
        for (int b2 = 0; b2 < n2; ++b2) {
          const int g = T.target[f] + n1 * b, g2 = T.target[f2] + n1 * b2;
          const int lhs = A.mul(T.compose(f, g), T.compose(f2, g2));
          const int rhs = T.compose(A.mul(f, f2), A.mul(g, g2));
          if (lhs != rhs) return false;
        }
  }
  return true;
}

bool roundtrip_check(const CrossedModule& X) {
  const TwoGroup T = to_2group(X);
  if (!two_group_laws_hold(T)) return false;
  const FromTwoGroup Y = from_2group(T);
  const CrossedModule& M = Y.module;
  if (M.G1.order() != X.G1.order() || M.G2.order() != X.G2.order()) return false;
  std::vector<int> back(T.arrows.order(), -1);
  for (int i = 0; i < M.G2.order(); ++i) back[Y.g2_embedding[i]] = i;
  std::vector<int> iota(X.G2.order());
  for (int a = 0; a < X.G2.order(); ++a) iota[a] = back[T.arrow_index(0, a)];
  if (!is_bijection(iota, X.G2.order()) || hom_failure(X.G2, M.G2, iota)) return false;
  for (int a = 0; a < X.G2.order(); ++a) {
    if (M.phi[iota[a]] != X.phi[a]) return false;
    for (int x = 0; x < X.G1.order(); ++x)
      if (iota[X.act(a, x)] != M.act(iota[a], x)) return false;
  }
  const HomotopyGroups h1 = homotopy_groups(X), h2 = homotopy_groups(M);
  return h1.pi2 == h2.pi2 && is_isomorphic(h1.pi1, h2.pi1);
}

bool crossed_modules_isomorphic(const CrossedModule& X, const CrossedModule& Y) {
  if (X.G1.order() != Y.G1.order() || X.G2.order() != Y.G2.order()) return false;
  auto same_order_candidates = [](const FiniteGroup& A, const FiniteGroup& B) {
    std::vector<std::vector<int>> cand;
    for (int g : A.generators()) {
      std::vector<int> c;
      for (int y = 0; y < B.order(); ++y)
        if (B.elem_order(y) == A.elem_order(g)) c.push_back(y);
      cand.push_back(std::move(c));
    }
    return cand;
  };
  bool found = false;
  search_homs(X.G1, Y.G1, same_order_candidates(X.G1, Y.G1), true, [&](const std::vector<int>& beta) {
    search_homs(X.G2, Y.G2, same_order_candidates(X.G2, Y.G2), true, [&](const std::vector<int>& alpha) {
      for (int g = 0; g < X.G2.order(); ++g) {
        if (Y.phi[alpha[g]] != beta[X.phi[g]]) return true;
        for (int x : X.G1.generators())
          if (alpha[X.act(g, x)] != Y.act(alpha[g], beta[x])) return true;
      }
      found = true;
      return false;
    });
    return !found;
  });
  return found;
}

std::optional<std::vector<int>> find_section(const CrossedModule& X, const HomotopyGroups& hg) {
  std::vector<std::vector<int>> cand;
  for (int t : hg.pi1.generators()) {
    std::vector<int> c;
    for (int x = 0; x < X.G1.order(); ++x)
      if (hg.to_pi1.projection[x] == t) c.push_back(x);
    cand.push_back(std::move(c));
  }
  std::optional<std::vector<int>> out;
  search_homs(hg.pi1, X.G1, cand, false, [&](const std::vector<int>& img) {
    out = img;
    return false;
  });
  return out;
}

void check_section(const CrossedModule& X, const HomotopyGroups& hg, const std::vector<int>& sigma) {
  if (static_cast<int>(sigma.size()) != hg.pi1.order()) throw NotASection("section needs one image per element of pi1");
  for (int v : sigma)
    if (v < 0 || v >= X.G1.order()) throw NotASection("section image out of range");
  if (auto bad = hom_failure(hg.pi1, X.G1, sigma))
    throw NotASection("section is not a homomorphism at " + pair_str(bad->first, bad->second));
  for (int t = 0; t < hg.pi1.order(); ++t)
    if (hg.to_pi1.projection[sigma[t]] != t)
      throw NotASection("section does not lift element " + std::to_string(t) + " of pi1");
}

Quotient semidirect_along(const FiniteGroup& K, const FiniteGroup& G, const FiniteGroup& H,
                          const std::vector<int>& l, const std::vector<int>& p,
                          const std::vector<std::vector<int>>& on_H, const std::vector<std::vector<int>>& on_G) {
  const int nk = K.order(), ng = G.order(), nh = H.order();
  if (static_cast<int>(l.size()) != nh || static_cast<int>(p.size()) != nh)
    throw CompatibilityFailure("maps out of H need one image per element");
  if (auto bad = hom_failure(H, K, l)) throw CompatibilityFailure("l is not a homomorphism at " + pair_str(bad->first, bad->second));
  if (auto bad = hom_failure(H, G, p)) throw CompatibilityFailure("p is not a homomorphism at " + pair_str(bad->first, bad->second));
  try {
    check_right_action(K, H, on_H, "action on H");
    check_right_action(K, G, on_G, "action on G");
  } catch (const NotHomomorphism& e) {
    throw CompatibilityFailure(e.what());
  }
  for (int h = 0; h < nh; ++h)
    for (int k = 0; k < nk; ++k) {
      if (l[on_H[k][h]] != K.conj(l[h], k)) throw CompatibilityFailure("l is not equivariant at " + pair_str(h, k));
      if (p[on_H[k][h]] != on_G[k][p[h]]) throw CompatibilityFailure("p is not equivariant at " + pair_str(h, k));
    }
  for (int h = 0; h < nh; ++h)
    for (int g = 0; g < ng; ++g)
      if (on_G[l[h]][g] != G.conj(g, p[h]))
        throw CompatibilityFailure("g^l(h) != p(h)^-1 g p(h) at (h, g) = " + pair_str(h, g));
  std::vector<int> gens;
  for (int k : K.generators()) gens.push_back(k);
  for (int g : G.generators()) gens.push_back(nk * g);
  const FiniteGroup KG = FiniteGroup::from_mul(
      nk * ng,
      [&](int u, int v) {
        const int k = u % nk, g = u / nk, k2 = v % nk, g2 = v / nk;
        return K.mul(k, k2) + nk * G.mul(on_G[k2][g], g2);
      },
      gens);
  std::vector<int> N;
  for (int h = 0; h < nh; ++h) N.push_back(K.inv(l[h]) + nk * p[h]);
  std::sort(N.begin(), N.end());
  N.erase(std::unique(N.begin(), N.end()), N.end());
  std::vector<char> in(KG.order(), 0);
  for (int x : N) in[x] = 1;
  for (int x : N)
    for (int y : N)
      if (!in[KG.mul(x, y)]) throw CompatibilityFailure("N is not a subgroup");
  if (!is_normal(KG, N)) throw CompatibilityFailure("N is not normal");
  return quotient(KG, N);
}

namespace {

struct Structure {
  std::vector<int> phi;
  std::vector<std::vector<int>> action;
};

bool axioms_hold(const FiniteGroup& G2, const FiniteGroup& G1, const std::vector<int>& phi,
                 const std::vector<std::vector<int>>& act) {
  for (int g = 0; g < G2.order(); ++g) {
    for (int x : G1.generators())
      if (phi[act[x][g]] != G1.conj(phi[g], x)) return false;
    for (int h : G2.generators())
      if (act[phi[h]][g] != G2.conj(g, h)) return false;
  }
  return true;
}

std::vector<int> structure_key(const FiniteGroup& G1, const std::vector<int>& phi, const std::vector<std::vector<int>>& act) {
  std::vector<int> key = phi;
  for (int y : G1.generators()) key.insert(key.end(), act[y].begin(), act[y].end());
  return key;
}

std::vector<Structure> structures_on(const FiniteGroup& G2, const FiniteGroup& G1) {
  std::vector<std::vector<int>> phis;
  {
    std::vector<std::vector<int>> cand;
    for (int g : G2.generators()) {
      std::vector<int> c;
      for (int y = 0; y < G1.order(); ++y)
        if (G2.elem_order(g) % G1.elem_order(y) == 0) c.push_back(y);
      cand.push_back(std::move(c));
    }
    search_homs(G2, G1, cand, false, [&](const std::vector<int>& img) {
      phis.push_back(img);
      return true;
    });
  }
  std::vector<std::vector<std::vector<int>>> actions;
  if (G1.order() == 1 || G2.order() == 1) {
    actions.push_back(trivial_action(G2, G1));
  } else {
    const std::vector<Perm> autos = automorphism_maps(G2);
    const auto& gens = G1.generators();
    std::vector<std::vector<const Perm*>> cand(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const int o = G1.elem_order(gens[i]);
      for (const auto& a : autos) {
        Perm q = perm_identity(G2.order());
        for (int t = 0; t < o; ++t) q = perm_compose(q, a);
        if (q == perm_identity(G2.order())) cand[i].push_back(&a);
      }
    }
    std::vector<std::vector<int>> chosen(gens.size());
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == gens.size()) {
        try {
          actions.push_back(action_from_generators(G2, G1, chosen));
        } catch (const NotHomomorphism&) {
        }
        return;
      }
      for (const Perm* a : cand[i]) {
        chosen[i] = *a;
        rec(i + 1);
      }
    };
    rec(0);
  }
  std::vector<Structure> out;
  for (const auto& act : actions)
    for (const auto& phi : phis)
      if (axioms_hold(G2, G1, phi, act)) out.push_back({phi, act});
  return out;
}

}  // namespace

std::vector<CrossedModule> enumerate_crossed_modules(int max_product) {
  if (max_product < 1) throw InvalidArgument("max_product must be positive");
  if (max_product > 32) throw OrderBoundExceeded("crossed-module enumeration is limited to |G1||G2| <= 32");
  std::vector<CrossedModule> out;
  for (int prod = 1; prod <= max_product; ++prod)
    for (int o2 = 1; o2 <= prod; ++o2) {
      if (prod % o2) continue;
      const int o1 = prod / o2;
      for (const FiniteGroup& G2 : groups_of_order(o2))
        for (const FiniteGroup& G1 : groups_of_order(o1)) {
          const std::vector<Structure> all = structures_on(G2, G1);
          if (all.size() == 1) {
            out.push_back(new_crossed_module(G2, G1, all[0].phi, all[0].action));
            continue;
          }
          const std::vector<Perm> aut2 = automorphism_maps(G2), aut1 = automorphism_maps(G1);
          std::vector<Perm> aut1_inv;
          for (const auto& b : aut1) aut1_inv.push_back(perm_inverse(b));
          std::unordered_set<std::vector<int>, PermHash> seen;
          for (const Structure& s : all) {
            if (seen.count(structure_key(G1, s.phi, s.action))) continue;
            out.push_back(new_crossed_module(G2, G1, s.phi, s.action));
            for (std::size_t bi = 0; bi < aut1.size(); ++bi) {
              const Perm &beta = aut1[bi], &binv = aut1_inv[bi];
              for (const Perm& alpha : aut2) {
                std::vector<int> key(G2.order());
                for (int g = 0; g < G2.order(); ++g) key[alpha[g]] = beta[s.phi[g]];
                for (int y : G1.generators()) {
                  const auto& row = s.action[binv[y]];
                  std::vector<int> t(G2.order());
                  for (int g = 0; g < G2.order(); ++g) t[alpha[g]] = alpha[row[g]];
                  key.insert(key.end(), t.begin(), t.end());
                }
                seen.insert(std::move(key));
              }
            }
          }
        }
    }
  return out;
}

}  // namespace stacky
