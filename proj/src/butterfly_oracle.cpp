#include "stacky/butterfly_oracle.hpp"

#include <stdexcept>

#include "stacky/errors.hpp"

namespace stacky {

namespace {

// Points are g a^i b^j with index g + |G2| (i + p j).
struct Pointset {
  const CrossedModule& X;
  int p, q, n2;
  int ua, ub;
  std::vector<std::vector<int>> U, Uinv;  // ua^i ub^j and its inverse
  std::vector<int> ubinv;                 // ub^-j
  std::vector<int> uainv;                 // ua^-i

  Pointset(const CrossedModule& X_, int p_, int q_, int ua_, int ub_)
      : X(X_), p(p_), q(q_), n2(X_.G2.order()), ua(ua_), ub(ub_) {
    const FiniteGroup& G1 = X.G1;
    U.assign(p, std::vector<int>(q));
    Uinv = U;
    for (int i = 0; i < p; ++i)
      for (int j = 0; j < q; ++j) {
        U[i][j] = G1.mul(G1.pow(ua, i), G1.pow(ub, j));
        Uinv[i][j] = G1.inv(U[i][j]);
      }
    for (int j = 0; j < q; ++j) ubinv.push_back(G1.inv(G1.pow(ub, j)));
    for (int i = 0; i < p; ++i) uainv.push_back(G1.inv(G1.pow(ua, i)));
  }
  int size() const { return n2 * p * q; }
  int point(int g, int i, int j) const { return g + n2 * (i + p * j); }

  int by_g2(int P, int h) const {
    const int g = P % n2, ij = P / n2, i = ij % p, j = ij / p;
    return point(X.G2.mul(g, X.act(h, Uinv[i][j])), i, j);
  }
  int by_b(int P, int w2) const {
    const int g = P % n2, ij = P / n2, i = ij % p, j = ij / p;
    if (j + 1 < q) return point(g, i, j + 1);
    return point(X.G2.mul(g, X.act(w2, uainv[i])), i, 0);
  }
  // c_j with b^j a = a b^j c_j
  std::vector<int> collect(int w3) const {
    std::vector<int> c(q, 0);
    int ubj = 0;  // ub^(j-1)
    for (int j = 1; j < q; ++j) {
      c[j] = X.G2.mul(X.act(w3, ubj), c[j - 1]);
      ubj = X.G1.mul(ubj, ub);
    }
    return c;
  }
  int by_a(int P, int w1, const std::vector<int>& c) const {
    const int g = P % n2, ij = P / n2, i = ij % p, j = ij / p;
    if (i + 1 < p) return point(X.G2.mul(g, X.act(c[j], Uinv[i + 1][j])), i + 1, j);
    return point(X.G2.mul(X.G2.mul(g, w1), X.act(c[j], ubinv[j])), 0, j);
  }
};

bool regular_butterfly(const Pointset& S, int w1, int w2, int w3) {
  const CrossedModule& X = S.X;
  const int P = S.size();
  const std::vector<int> c = S.collect(w3);
  std::vector<Perm> gens;
  std::vector<int> rho_gen;
  for (int h : X.G2.generators()) {
    Perm s(P);
    for (int x = 0; x < P; ++x) s[x] = S.by_g2(x, h);
    gens.push_back(std::move(s));
    rho_gen.push_back(X.phi[h]);
  }
  const int ia = static_cast<int>(gens.size());
  {
    Perm s(P);
    for (int x = 0; x < P; ++x) s[x] = S.by_a(x, w1, c);
    gens.push_back(std::move(s));
    rho_gen.push_back(S.ua);
  }
  int ib = -1;
  if (S.q > 1) {
    ib = static_cast<int>(gens.size());
    Perm s(P);
    for (int x = 0; x < P; ++x) s[x] = S.by_b(x, w2);
    gens.push_back(std::move(s));
    rho_gen.push_back(S.ub);
  }
  // transversal T_P with 0 T_P = P
  std::vector<Perm> T(P);
  std::vector<int> rho(P, -1);
  T[0] = perm_identity(P);
  rho[0] = 0;
  std::vector<int> queue{0};
  for (std::size_t k = 0; k < queue.size(); ++k) {
    const int x = queue[k];
    for (std::size_t s = 0; s < gens.size(); ++s) {
      const int y = gens[s][x];
      if (rho[y] >= 0) continue;
      T[y] = perm_compose(T[x], gens[s]);
      rho[y] = X.G1.mul(rho[x], rho_gen[s]);
      queue.push_back(y);
    }
  }
  if (static_cast<int>(queue.size()) != P) return false;
  for (int x = 0; x < P; ++x)
    for (std::size_t s = 0; s < gens.size(); ++s) {
      const int y = gens[s][x];
      if (rho[y] != X.G1.mul(rho[x], rho_gen[s])) return false;
      for (int z = 0; z < P; ++z)
        if (gens[s][T[x][z]] != T[y][z]) return false;
    }
  // compatibility at generators: x^-1 h x = h^rho(x), read off at the base point
  for (int xs : {ia, ib}) {
    if (xs < 0) continue;
    const Perm xinv = perm_inverse(gens[xs]);
    for (std::size_t hs = 0; hs < static_cast<std::size_t>(ia); ++hs) {
      const int h = X.G2.generators()[hs];
      const int at = gens[xs][gens[hs][xinv[0]]];
      if (at != S.point(X.act(h, rho_gen[xs]), 0, 0)) return false;
    }
  }
  return true;
}

}  // namespace

ButterflyOracle::ButterflyOracle(int p, int q, const CrossedModule& X)
    : p_(p), q_(q), X_(X), hg_(homotopy_groups(X)), Gamma_(direct_product(cyclic_group(p), cyclic_group(q))) {
  if (p < 2 || q < 1) throw InvalidArgument("oracle needs p >= 2 and q >= 1");
  const FiniteGroup& pi1 = hg_.pi1;
  const std::vector<int>& T = hg_.to_pi1.section;
  const int n2 = X.G2.order();
  auto fiber = [&](int target, std::vector<int>& f, std::vector<int>& pos) {
    pos.assign(n2, -1);
    for (int g = 0; g < n2; ++g)
      if (X.phi[g] == target) {
        pos[g] = static_cast<int>(f.size());
        f.push_back(g);
      }
  };
  for (int x = 0; x < pi1.order(); ++x) {
    if (pi1.pow(x, p) != 0) continue;
    for (int y = 0; y < pi1.order(); ++y) {
      if (pi1.pow(y, q) != 0 || pi1.mul(x, y) != pi1.mul(y, x)) continue;
      Chi c;
      c.x = x;
      c.y = y;
      c.ua = T[x];
      c.ub = T[y];
      const FiniteGroup& G1 = X.G1;
      fiber(G1.pow(c.ua, p), c.f1, c.pos1);
      if (q > 1) {
        fiber(G1.pow(c.ub, q), c.f2, c.pos2);
        fiber(G1.mul(G1.inv(G1.mul(c.ua, c.ub)), G1.mul(c.ub, c.ua)), c.f3, c.pos3);
      } else {
        c.f2 = c.f3 = {0};
        c.pos2.assign(n2, -1);
        c.pos3 = c.pos2;
        c.pos2[0] = c.pos3[0] = 0;
      }
      scan(c);
      chis_.push_back(std::move(c));
    }
  }
}

void ButterflyOracle::scan(Chi& c) {
  const Pointset S(X_, p_, q_, c.ua, c.ub);
  const std::int64_t n1 = c.f1.size(), n2f = c.f2.size(), n3 = c.f3.size();
  c.orbit_of.assign(static_cast<std::size_t>(n1 * n2f * n3), -1);
  const std::vector<int>& Z = hg_.kernel;
  const std::vector<int> zb_range = q_ > 1 ? Z : std::vector<int>{0};
  const FiniteGroup& G2 = X_.G2;
  for (std::int64_t t = 0; t < static_cast<std::int64_t>(c.orbit_of.size()); ++t) {
    if (c.orbit_of[t] >= 0) continue;
    const int w1 = c.f1[t % n1], w2 = c.f2[(t / n1) % n2f], w3 = c.f3[t / (n1 * n2f)];
    if (!regular_butterfly(S, w1, w2, w3)) {
      ++invalid_;
      continue;
    }
    ++valid_;
    const std::int64_t id = orbit_count();
    orbit_chi_.push_back(static_cast<int>(chis_.size()));  // c is pushed right after the scan
    const std::vector<int> col = S.collect(w3);
    // replace the lifts by a z_a and b z_b and read the new relations at the base point
    for (int za : Z)
      for (int zb : zb_range) {
        int P = 0;
        for (int k = 0; k < p_; ++k) P = S.by_g2(S.by_a(P, w1, col), za);
        const int v1 = P % S.n2;
        int v2 = 0, v3 = 0;
        if (q_ > 1) {
          P = 0;
          for (int k = 0; k < q_; ++k) P = S.by_g2(S.by_b(P, w2), zb);
          v2 = P % S.n2;
          const int Y = S.by_g2(S.by_b(S.by_g2(S.by_a(0, w1, col), za), w2), zb);
          const int W = S.by_g2(S.by_a(S.by_g2(S.by_b(0, w2), zb), w1, col), za);
          if (Y / S.n2 != W / S.n2) throw std::logic_error("oracle: lift change left the coset");
          v3 = X_.act(G2.mul(G2.inv(Y % S.n2), W % S.n2), S.U[1 % p_][1 % q_]);
        }
        const int i1 = c.pos1[v1], i2 = c.pos2[v2], i3 = c.pos3[v3];
        if (i1 < 0 || i2 < 0 || i3 < 0) throw std::logic_error("oracle: lift change left the fibers");
        const std::int64_t t2 = i1 + n1 * (i2 + n2f * i3);
        if (c.orbit_of[t2] >= 0 && c.orbit_of[t2] != id) throw std::logic_error("oracle: overlapping orbits");
        c.orbit_of[t2] = id;
      }
  }
}

std::pair<int, int> ButterflyOracle::orbit_chi(std::int64_t orbit) const {
  const Chi& c = chis_.at(static_cast<std::size_t>(orbit_chi_.at(static_cast<std::size_t>(orbit))));
  return {c.x, c.y};
}

std::int64_t ButterflyOracle::classify(const ButterflyDiagram& b) const {
  if (b.Gamma.order() != Gamma_.order() || b.E.order() != Gamma_.order() * X_.G2.order()) return -1;
  const int ga = product_index(cyclic_group(p_), 1 % p_, 0);
  const int gb = product_index(cyclic_group(p_), 0, 1 % q_);
  const FiniteGroup& E = b.E;
  int x = -1, y = -1;
  for (int e = 0; e < E.order(); ++e) {
    if (x < 0 && b.proj[e] == ga) x = hg_.to_pi1.projection[b.rho[e]];
    if (y < 0 && b.proj[e] == gb) y = hg_.to_pi1.projection[b.rho[e]];
  }
  const Chi* c = nullptr;
  for (const Chi& k : chis_)
    if (k.x == x && k.y == y) c = &k;
  if (!c) return -1;
  int ea = -1, eb = -1;
  for (int e = 0; e < E.order(); ++e) {
    if (ea < 0 && b.proj[e] == ga && b.rho[e] == c->ua) ea = e;
    if (eb < 0 && b.proj[e] == gb && b.rho[e] == c->ub) eb = e;
  }
  if (ea < 0 || eb < 0) return -1;
  std::vector<int> back(E.order(), -1);
  for (int g = 0; g < X_.G2.order(); ++g) back[b.inj[g]] = g;
  const int v1 = back[E.pow(ea, p_)];
  int v2 = 0, v3 = 0;
  if (q_ > 1) {
    v2 = back[E.pow(eb, q_)];
    v3 = back[E.mul(E.inv(E.mul(ea, eb)), E.mul(eb, ea))];
  }
  if (v1 < 0 || v2 < 0 || v3 < 0) return -1;
  const int i1 = c->pos1[v1], i2 = c->pos2[v2], i3 = c->pos3[v3];
  if (i1 < 0 || i2 < 0 || i3 < 0) return -1;
  const std::int64_t n1 = c->f1.size(), n2f = c->f2.size();
  return c->orbit_of[static_cast<std::size_t>(i1 + n1 * (i2 + n2f * i3))];
}

}  // namespace stacky
