#include "stacky/butterfly.hpp"

#include <algorithm>

#include "stacky/errors.hpp"

namespace stacky {

namespace {

int least_lift(const ButterflyDiagram& b, int gamma, int rho_value) {
  for (int x = 0; x < b.E.order(); ++x)
    if (b.proj[x] == gamma && b.rho[x] == rho_value) return x;
  return -1;
}

std::vector<int> inverse_map(const std::vector<int>& f, int n) {
  std::vector<int> back(n, -1);
  for (int i = 0; i < static_cast<int>(f.size()); ++i) back[f[i]] = i;
  return back;
}

bool in_range(const std::vector<int>& f, int n) {
  return std::all_of(f.begin(), f.end(), [n](int v) { return v >= 0 && v < n; });
}

}  // namespace

ButterflyCheck butterfly_validate(const ButterflyDiagram& b, const CrossedModule& X) {
  auto fail = [](std::string why) { return ButterflyCheck{false, std::move(why)}; };
  const FiniteGroup &E = b.E, &G = b.Gamma;
  const int ne = E.order();
  if (static_cast<int>(b.inj.size()) != X.G2.order() || !in_range(b.inj, ne)) return fail("inj: wrong shape");
  if (static_cast<int>(b.proj.size()) != ne || !in_range(b.proj, G.order())) return fail("proj: wrong shape");
  if (static_cast<int>(b.rho.size()) != ne || !in_range(b.rho, X.G1.order())) return fail("rho: wrong shape");
  if (!X.G2.is_hom(b.inj, [&E](int x, int y) { return E.mul(x, y); })) return fail("inj is not a homomorphism");
  {
    std::vector<int> im = b.inj;
    std::sort(im.begin(), im.end());
    if (std::unique(im.begin(), im.end()) != im.end()) return fail("inj is not injective");
  }
  if (!E.is_hom(b.proj, [&G](int x, int y) { return G.mul(x, y); })) return fail("proj is not a homomorphism");
  {
    std::vector<char> hit(G.order(), 0);
    for (int v : b.proj) hit[v] = 1;
    if (std::count(hit.begin(), hit.end(), 0)) return fail("proj is not surjective");
  }
  {
    int kernel = 0;
    for (int v : b.proj) kernel += v == 0;
    if (kernel != X.G2.order()) return fail("kernel of proj differs from the image of inj");
    for (int x : b.inj)
      if (b.proj[x] != 0) return fail("kernel of proj differs from the image of inj");
  }
  if (!E.is_hom(b.rho, [&X](int x, int y) { return X.G1.mul(x, y); })) return fail("rho is not a homomorphism");
  for (int g = 0; g < X.G2.order(); ++g)
    if (b.rho[b.inj[g]] != X.phi[g]) return fail("triangle rho o inj = phi fails at " + std::to_string(g));
  for (int x = 0; x < ne; ++x)
    for (int g = 0; g < X.G2.order(); ++g)
      if (b.inj[X.act(g, b.rho[x])] != E.conj(b.inj[g], x))
        return fail("compatibility g^rho(x) = x^-1 g x fails at (x, g) = (" + std::to_string(x) + ", " +
                    std::to_string(g) + ")");
  return {};
}

bool butterflies_isomorphic(const ButterflyDiagram& a, const ButterflyDiagram& b) {
  if (a.E.order() != b.E.order() || a.inj.size() != b.inj.size() || a.Gamma.order() != b.Gamma.order()) return false;
  const std::vector<int> bback = inverse_map(b.inj, b.E.order());
  std::vector<std::vector<int>> cand;
  for (int x : b.E.generators()) {
    std::vector<int> c;
    if (bback[x] >= 0) {
      c.push_back(a.inj[bback[x]]);
    } else {
      for (int y = 0; y < a.E.order(); ++y)
        if (a.proj[y] == b.proj[x] && a.rho[y] == b.rho[x]) c.push_back(y);
    }
    cand.push_back(std::move(c));
  }
  bool found = false;
  search_homs(b.E, a.E, cand, true, [&](const std::vector<int>& f) {
    for (int e = 0; e < b.E.order(); ++e)
      if (a.proj[f[e]] != b.proj[e] || a.rho[f[e]] != b.rho[e]) return true;
    for (std::size_t g = 0; g < b.inj.size(); ++g)
      if (f[b.inj[g]] != a.inj[g]) return true;
    found = true;
    return false;
  });
  return found;
}

std::vector<int> butterfly_chi(const ButterflyDiagram& b, const HomotopyGroups& hg) {
  std::vector<int> chi(b.Gamma.order(), -1);
  for (int x = 0; x < b.E.order(); ++x)
    if (chi[b.proj[x]] < 0) chi[b.proj[x]] = hg.to_pi1.projection[b.rho[x]];
  return chi;
}

ModuleAction pi2_action(const CrossedModule& X, const HomotopyGroups& hg, const std::vector<int>& sigma,
                        const FiniteGroup& Gamma, const std::vector<int>& chi) {
  const FinAbGroup& A = hg.pi2;
  ModuleAction act(Gamma.order(), std::vector<int>(static_cast<std::size_t>(A.order())));
  for (int g = 0; g < Gamma.order(); ++g) {
    const int u = sigma[chi[Gamma.inv(g)]];
    for (std::int64_t i = 0; i < A.order(); ++i) {
      const int a = hg.pi2_in.label_of(A.element(i));
      act[g][static_cast<std::size_t>(i)] = static_cast<int>(A.index_of(hg.pi2_in.coords_of(X.act(a, u))));
    }
  }
  return act;
}

ButterflyDiagram split_butterfly(const FiniteGroup& Gamma, const CrossedModule& X, const HomotopyGroups& hg,
                                 const std::vector<int>& sigma, const std::vector<int>& chi,
                                 const std::vector<int>& cocycle) {
  const int n = Gamma.order(), n2 = X.G2.order();
  std::vector<int> u(n);
  for (int g = 0; g < n; ++g) u[g] = sigma[chi[g]];
  // c(g,h) as an element of G2, already acted on by sigma chi(gh)
  std::vector<int> cg(static_cast<std::size_t>(n) * n);
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) {
      const int c = hg.pi2_in.label_of(hg.pi2.element(cocycle[g * n + h]));
      cg[g * n + h] = X.act(c, u[Gamma.mul(g, h)]);
    }
  std::vector<int> gens;
  for (int a : X.G2.generators()) gens.push_back(n * a);
  for (int g : Gamma.generators()) gens.push_back(g);
  ButterflyDiagram b;
  b.Gamma = Gamma;
  b.E = FiniteGroup::from_mul(
      n * n2,
      [&](int x, int y) {
        const int g = x % n, a = x / n, h = y % n, c = y / n;
        const int gh = Gamma.mul(g, h);
        return gh + n * X.G2.mul(cg[g * n + h], X.G2.mul(X.act(a, u[h]), c));
      },
      gens, "E");
  b.inj.resize(n2);
  for (int a = 0; a < n2; ++a) b.inj[a] = n * a;
  b.proj.resize(n * n2);
  b.rho.resize(n * n2);
  for (int x = 0; x < n * n2; ++x) {
    b.proj[x] = x % n;
    b.rho[x] = X.G1.mul(u[x % n], X.phi[x / n]);
  }
  return b;
}

std::vector<ChiClasses> split_classes(const FiniteGroup& Gamma, const CrossedModule& X, const std::vector<int>& sigma) {
  const HomotopyGroups hg = homotopy_groups(X);
  check_section(X, hg, sigma);
  std::vector<std::vector<int>> cand;
  for (int g : Gamma.generators()) {
    std::vector<int> c;
    for (int y = 0; y < hg.pi1.order(); ++y)
      if (Gamma.elem_order(g) % hg.pi1.elem_order(y) == 0) c.push_back(y);
    cand.push_back(std::move(c));
  }
  std::vector<std::vector<int>> chis;
  search_homs(Gamma, hg.pi1, cand, false, [&](const std::vector<int>& img) {
    chis.push_back(img);
    return true;
  });
  std::vector<ChiClasses> out;
  for (auto& chi : chis) {
    const ModuleAction act = pi2_action(X, hg, sigma, Gamma, chi);
    out.push_back({std::move(chi), h2(Gamma, hg.pi2, act)});
  }
  return out;
}

void for_each_hom_class(const FiniteGroup& Gamma, const CrossedModule& X, const std::vector<int>& sigma,
                        const std::function<bool(const HomClass&)>& visit) {
  const HomotopyGroups hg = homotopy_groups(X);
  for (const ChiClasses& cc : split_classes(Gamma, X, sigma))
    for (std::int64_t i = 0; i < cc.h2.size(); ++i) {
      HomClass hc;
      hc.chi = cc.chi;
      hc.class_index = i;
      hc.cocycle = cc.h2.representative(i);
      hc.butterfly = split_butterfly(Gamma, X, hg, sigma, cc.chi, hc.cocycle.cocycle);
      if (!visit(hc)) return;
    }
}

std::vector<HomClass> hom_classes_split(const FiniteGroup& Gamma, const CrossedModule& X, const std::vector<int>& sigma) {
  std::vector<HomClass> out;
  for_each_hom_class(Gamma, X, sigma, [&out](const HomClass& hc) {
    out.push_back(hc);
    return true;
  });
  return out;
}

std::vector<int> butterfly_cocycle(const ButterflyDiagram& b, const CrossedModule& X, const HomotopyGroups& hg,
                                   const std::vector<int>& sigma) {
  const int n = b.Gamma.order();
  const std::vector<int> chi = butterfly_chi(b, hg);
  std::vector<int> s(n);
  for (int g = 0; g < n; ++g) {
    s[g] = least_lift(b, g, sigma[chi[g]]);
    if (s[g] < 0) throw InvalidArgument("no lift with rho = sigma(chi(g))");
  }
  const std::vector<int> back = inverse_map(b.inj, b.E.order());
  std::vector<int> c(static_cast<std::size_t>(n) * n);
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) {
      const int v = b.E.mul(b.E.mul(s[g], s[h]), b.E.inv(s[b.Gamma.mul(g, h)]));
      const int a = back[v];
      if (a < 0 || X.phi[a] != 0) throw InvalidArgument("section defect leaves pi2");
      c[g * n + h] = static_cast<int>(hg.pi2.index_of(hg.pi2_in.coords_of(a)));
    }
  return c;
}

ButterflyDiagram torsor_act(const ButterflyDiagram& b, const CocycleClass& c, const CrossedModule& X,
                            const HomotopyGroups& hg) {
  const int n = b.Gamma.order(), ne = b.E.order();
  if (c.Gamma.order() != n || !(c.A == hg.pi2)) throw InvalidArgument("cocycle is not over (Gamma, pi2)");
  // the action of Gamma on pi2 seen inside E
  std::vector<int> s(n, -1);
  for (int x = 0; x < ne; ++x)
    if (s[b.proj[x]] < 0) s[b.proj[x]] = x;
  const std::vector<int> back = inverse_map(b.inj, ne);
  const FinAbGroup& A = hg.pi2;
  ModuleAction act(n, std::vector<int>(static_cast<std::size_t>(A.order())));
  for (int g = 0; g < n; ++g)
    for (std::int64_t i = 0; i < A.order(); ++i) {
      const int a = b.inj[hg.pi2_in.label_of(A.element(i))];
      const int y = back[b.E.mul(b.E.mul(s[g], a), b.E.inv(s[g]))];
      act[g][static_cast<std::size_t>(i)] = static_cast<int>(A.index_of(hg.pi2_in.coords_of(y)));
    }
  if (!is_normalized_cocycle(b.Gamma, A, act, c.cocycle))
    throw InvalidArgument("not a normalized cocycle for the action induced by the butterfly");
  std::vector<int> twist(static_cast<std::size_t>(n) * n);
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) twist[g * n + h] = b.inj[hg.pi2_in.label_of(A.element(c.cocycle[g * n + h]))];
  std::vector<int> gens;
  for (int a : X.G2.generators()) gens.push_back(b.inj[a]);
  for (int g : b.Gamma.generators()) gens.push_back(s[g]);
  ButterflyDiagram out = b;
  out.E = FiniteGroup::from_mul(
      ne, [&](int x, int y) { return b.E.mul(twist[b.proj[x] * n + b.proj[y]], b.E.mul(x, y)); }, gens, "E");
  return out;
}

ButterflyDiagram conjugate_class(int a, const ButterflyDiagram& b, const CrossedModule& X) {
  if (a < 0 || a >= X.G1.order()) throw InvalidArgument("element of G1 out of range");
  ButterflyDiagram out = b;
  const int ainv = X.G1.inv(a);
  for (int g = 0; g < X.G2.order(); ++g) out.inj[g] = b.inj[X.act(g, ainv)];
  for (int x = 0; x < b.E.order(); ++x) out.rho[x] = X.G1.conj(b.rho[x], a);
  return out;
}

bool is_fixed(int a, const ButterflyDiagram& b, const CrossedModule& X) {
  return butterflies_isomorphic(b, conjugate_class(a, b, X));
}

}  // namespace stacky
