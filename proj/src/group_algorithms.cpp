#include "stacky/group_algorithms.hpp"

#include <algorithm>
#include <unordered_set>

#include "stacky/errors.hpp"

namespace stacky {

bool is_central(const FiniteGroup& G, int x) {
  for (int g : G.generators())
    if (G.mul(g, x) != G.mul(x, g)) return false;
  return true;
}

Center center(const FiniteGroup& G) {
  std::vector<int> el;
  for (int x = 0; x < G.order(); ++x)
    if (is_central(G, x)) el.push_back(x);
  Center z{subgroup_from_elements(G, el), {}};
  std::vector<int> gens;
  for (int g : z.sub.group.generators()) gens.push_back(z.sub.embedding[g]);
  z.dec = decompose_abelian(G.order(), 0, gens, [&G](int a, int b) { return G.mul(a, b); });
  return z;
}

Subgroup centralizer(const FiniteGroup& G, const std::vector<int>& S) {
  std::vector<int> el;
  for (int x = 0; x < G.order(); ++x) {
    bool ok = true;
    for (int s : S)
      if (G.mul(s, x) != G.mul(x, s)) {
        ok = false;
        break;
      }
    if (ok) el.push_back(x);
  }
  return subgroup_from_elements(G, el);
}

std::vector<int> normal_closure(const FiniteGroup& G, const std::vector<int>& elems) {
  std::vector<int> S;
  std::vector<char> in(G.order(), 0);
  in[0] = 1;
  std::vector<int> list{0};
  auto add_gen = [&](int s) {
    S.push_back(s);
    if (in[s]) return;
    // extend the closure by the new generator
    in[s] = 1;
    list.push_back(s);
    for (std::size_t i = 0; i < list.size(); ++i)
      for (int t : S) {
        const int y = G.mul(list[i], t);
        if (!in[y]) {
          in[y] = 1;
          list.push_back(y);
        }
      }
  };
  for (int e : elems)
    if (!in[e]) add_gen(e);
  for (std::size_t i = 0; i < S.size(); ++i)
    for (int g : G.generators()) {
      const int c = G.conj(S[i], g);
      if (!in[c]) add_gen(c);
    }
  std::sort(list.begin(), list.end());
  return list;
}

bool is_normal(const FiniteGroup& G, const std::vector<int>& elems) {
  std::vector<char> in(G.order(), 0);
  for (int x : elems) in[x] = 1;
  for (int x : elems)
    for (int g : G.generators())
      if (!in[G.conj(x, g)]) return false;
  return true;
}

Quotient quotient(const FiniteGroup& G, const std::vector<int>& elems) {
  const std::vector<int> N = normal_closure(G, elems);
  Quotient q;
  q.projection.assign(G.order(), -1);
  for (int g = 0; g < G.order(); ++g) {
    if (q.projection[g] >= 0) continue;
    const int id = static_cast<int>(q.section.size());
    q.section.push_back(g);
    for (int n : N) q.projection[G.mul(g, n)] = id;
  }
  q.group = FiniteGroup::from_mul(static_cast<int>(q.section.size()), [&](int a, int b) {
    return q.projection[G.mul(q.section[a], q.section[b])];
  });
  return q;
}

void search_homs(const FiniteGroup& G, const FiniteGroup& H, const std::vector<std::vector<int>>& candidates,
                 bool injective, const std::function<bool(const std::vector<int>&)>& visit) {
  const auto& gens = G.generators();
  const std::size_t k = gens.size();
  if (candidates.size() != k) throw InvalidArgument("search_homs: one candidate list per generator is required");
  std::vector<int> chosen(k, -1);
  std::vector<int> img(G.order(), -1);
  std::vector<char> used(H.order(), 0);
  std::vector<int> list;
  bool stop = false;

  // Map on <g_0..g_j> induced by the chosen images; false on conflict.
  auto consistent = [&](std::size_t j) {
    std::fill(img.begin(), img.end(), -1);
    if (injective) std::fill(used.begin(), used.end(), 0);
    img[0] = 0;
    used[0] = 1;
    list.assign(1, 0);
    for (std::size_t i = 0; i < list.size(); ++i) {
      const int x = list[i];
      for (std::size_t t = 0; t <= j; ++t) {
        const int y = G.mul(x, gens[t]);
        const int v = H.mul(img[x], chosen[t]);
        if (img[y] < 0) {
          if (injective) {
            if (used[v]) return false;
            used[v] = 1;
          }
          img[y] = v;
          list.push_back(y);
        } else if (img[y] != v) {
          return false;
        }
      }
    }
    return true;
  };

  std::function<void(std::size_t)> rec = [&](std::size_t j) {
    if (stop) return;
    if (j == k) {
      if (k == 0) {
        img.assign(G.order(), 0);
      }
      if (!visit(img)) stop = true;
      return;
    }
    for (int c : candidates[j]) {
      chosen[j] = c;
      if (!consistent(j)) continue;
      rec(j + 1);
      if (stop) return;
    }
  };
  rec(0);
}

std::vector<int> order_histogram(const FiniteGroup& G) {
  std::vector<int> h(G.order() + 1, 0);
  for (int x = 0; x < G.order(); ++x) ++h[G.elem_order(x)];
  return h;
}

std::vector<Perm> automorphism_maps(const FiniteGroup& G, std::size_t limit) {
  const int n = G.order();
  std::vector<std::vector<int>> cand;
  for (int g : G.generators()) {
    std::vector<int> c;
    for (int y = 0; y < n; ++y)
      if (G.elem_order(y) == G.elem_order(g)) c.push_back(y);
    cand.push_back(std::move(c));
  }
  std::vector<Perm> autos;
  search_homs(G, G, cand, true, [&](const std::vector<int>& img) {
    autos.push_back(img);
    if (autos.size() > limit) throw OrderBoundExceeded("automorphism group exceeds order bound");
    return true;
  });
  return autos;
}

AutomorphismData automorphisms(const FiniteGroup& G, int bound) {
  if (G.order() > bound)
    throw OrderBoundExceeded("automorphism search limited to order " + std::to_string(bound));
  const int n = G.order();
  const std::vector<Perm> autos = automorphism_maps(G, kDefaultGroupBound);

  // greedy generating set for Aut
  std::unordered_set<Perm, PermHash> seen;
  std::vector<Perm> have{perm_identity(n)};
  seen.insert(have[0]);
  std::vector<Perm> gens;
  for (const auto& a : autos) {
    if (seen.count(a)) continue;
    gens.push_back(a);
    for (std::size_t i = 0; i < have.size(); ++i)
      for (const auto& g : gens) {
        Perm y = perm_compose(have[i], g);
        if (seen.insert(y).second) have.push_back(std::move(y));
      }
  }
  if (gens.empty()) gens.push_back(perm_identity(n));

  AutomorphismData out;
  out.aut = group_from_permutations(n, gens);
  out.aut.set_name("Aut");
  out.inner_of.assign(n, 0);
  for (int g = 0; g < n; ++g) {
    Perm p(n);
    for (int x = 0; x < n; ++x) p[x] = G.mul(G.mul(g, x), G.inv(g));
    out.inner_of[g] = out.aut.find_perm(p);
  }
  out.inner = out.inner_of;
  std::sort(out.inner.begin(), out.inner.end());
  out.inner.erase(std::unique(out.inner.begin(), out.inner.end()), out.inner.end());
  out.out = quotient(out.aut, out.inner);
  out.z = center(G);
  const FinAbGroup& A = out.z.group();
  for (int o = 0; o < out.out.group.order(); ++o) {
    const Perm& p = out.aut.perm(out.out.section[o]);
    std::vector<int> act(static_cast<std::size_t>(A.order()));
    for (std::int64_t i = 0; i < A.order(); ++i) {
      const int g = out.z.embed(A.element(i));
      act[static_cast<std::size_t>(i)] = static_cast<int>(A.index_of(out.z.dec.coords_of(p[g])));
    }
    out.out_on_center.push_back(std::move(act));
  }
  return out;
}

Quotient abelianization_quotient(const FiniteGroup& G) {
  std::vector<int> comms;
  const auto& gs = G.generators();
  for (std::size_t i = 0; i < gs.size(); ++i)
    for (std::size_t j = i + 1; j < gs.size(); ++j) comms.push_back(G.commutator(gs[i], gs[j]));
  return quotient(G, comms);
}

FinAbGroup abelian_invariants(const FiniteGroup& G) {
  return decompose_abelian_group(abelianization_quotient(G).group).group;
}

std::optional<std::vector<QmodZ>> character_values(const FiniteGroup& G, const Character& chi) {
  if (chi.on_generators.size() != G.generators().size())
    throw InvalidArgument("character needs one value per generator");
  std::vector<QmodZ> v(G.order());
  for (std::size_t i = 1; i < G.bfs_order().size(); ++i) {
    const int x = G.bfs_order()[i];
    v[x] = v[G.parent(x)] + chi.on_generators[G.parent_gen(x)];
  }
  for (int x = 0; x < G.order(); ++x)
    for (std::size_t k = 0; k < G.generators().size(); ++k)
      if (v[G.mul(x, G.generators()[k])] != v[x] + chi.on_generators[k]) return std::nullopt;
  return v;
}

QmodZ CharacterGroup::eval(const AbElem& c, int g) const {
  const AbElem& x = ab_dec.coords_of(ab.projection[g]);
  const auto& d = dual().invariant_factors();
  QmodZ s;
  for (std::size_t i = 0; i < d.size(); ++i) s = s + QmodZ(c[i] * x[i], d[i]);
  return s;
}

Character CharacterGroup::as_character(const FiniteGroup& G, const AbElem& c) const {
  Character chi;
  for (int g : G.generators()) chi.on_generators.push_back(eval(c, g));
  return chi;
}

AbElem CharacterGroup::from_values(const std::vector<QmodZ>& values) const {
  const auto& d = dual().invariant_factors();
  AbElem c(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    const QmodZ v = values.at(ab.section[ab_dec.basis[i]]);
    if (d[i] % v.den() != 0) throw InvalidArgument("values do not define a character");
    c[i] = v.num() * (d[i] / v.den());
  }
  return c;
}

AbelianDecomposition CharacterGroup::power_image(std::int64_t d) const {
  std::vector<AbElem> gens;
  for (std::size_t i = 0; i < dual().rank(); ++i) gens.push_back(dual().scale(d, dual().unit(i)));
  return abelian_subgroup(dual(), gens);
}

CharacterGroup character_group(const FiniteGroup& G) {
  CharacterGroup cg;
  cg.ab = abelianization_quotient(G);
  cg.ab_dec = decompose_abelian_group(cg.ab.group);
  return cg;
}

std::optional<std::vector<int>> find_isomorphism(const FiniteGroup& G, const FiniteGroup& H, int bound) {
  if (G.order() != H.order()) return std::nullopt;
  if (order_histogram(G) != order_histogram(H)) return std::nullopt;
  const bool ga = G.is_abelian(), ha = H.is_abelian();
  if (ga != ha) return std::nullopt;
  if (ga) {
    const AbelianDecomposition dg = decompose_abelian_group(G), dh = decompose_abelian_group(H);
    if (!(dg.group == dh.group)) return std::nullopt;
    std::vector<int> w(G.order());
    for (int x = 0; x < G.order(); ++x) w[x] = dh.label_of(dg.coords_of(x));
    return w;
  }
  if (center(G).sub.group.order() != center(H).sub.group.order()) return std::nullopt;
  if (!(abelian_invariants(G) == abelian_invariants(H))) return std::nullopt;
  if (G.order() > bound) throw OrderBoundExceeded("isomorphism search limited to order " + std::to_string(bound));

  auto cent_sizes = [](const FiniteGroup& X) {
    std::vector<int> s(X.order(), 0);
    for (int a = 0; a < X.order(); ++a)
      for (int b = 0; b < X.order(); ++b)
        if (X.mul(a, b) == X.mul(b, a)) ++s[a];
    return s;
  };
  const auto cg = cent_sizes(G), ch = cent_sizes(H);
  std::vector<std::vector<int>> cand;
  for (int g : G.generators()) {
    std::vector<int> c;
    for (int y = 0; y < H.order(); ++y)
      if (H.elem_order(y) == G.elem_order(g) && ch[y] == cg[g]) c.push_back(y);
    cand.push_back(std::move(c));
  }
  std::optional<std::vector<int>> found;
  search_homs(G, H, cand, true, [&](const std::vector<int>& img) {
    found = img;
    return false;
  });
  return found;
}

}  // namespace stacky
