#include "stacky/small_groups.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <unordered_set>

#include "stacky/errors.hpp"
#include "stacky/group_algorithms.hpp"

namespace stacky {

FiniteGroup cyclic_extension(const FiniteGroup& N, const std::vector<int>& theta, int a, int p) {
  const int n = N.order();
  std::vector<std::vector<int>> tp(p, std::vector<int>(n));
  for (int x = 0; x < n; ++x) tp[0][x] = x;
  for (int j = 1; j < p; ++j)
    for (int x = 0; x < n; ++x) tp[j][x] = theta[tp[j - 1][x]];
  return FiniteGroup::from_mul(p * n, [&](int u, int v) {
    const int i = u % p, x = u / p, j = v % p, y = v / p;
    int k = i + j;
    int val = N.mul(tp[j][x], y);
    if (k >= p) {
      k -= p;
      val = N.mul(a, val);
    }
    return k + p * val;
  });
}

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Cheap isomorphism invariants used to bucket candidates.
std::vector<int> signature(const FiniteGroup& G) {
  std::vector<int> s = order_histogram(G);
  s.push_back(-1);
  s.push_back(center(G).sub.group.order());
  const FinAbGroup ab = abelian_invariants(G);
  for (auto d : ab.invariant_factors()) s.push_back(static_cast<int>(d));
  s.push_back(-1);
  // (element order, centralizer size) counts
  std::map<std::pair<int, int>, int> oc;
  for (int a = 0; a < G.order(); ++a) {
    int c = 0;
    for (int b = 0; b < G.order(); ++b) c += G.mul(a, b) == G.mul(b, a);
    ++oc[{G.elem_order(a), c}];
  }
  for (const auto& [k, v] : oc) {
    s.push_back(k.first);
    s.push_back(k.second);
    s.push_back(v);
  }
  return s;
}

// One automorphism per coset of Inn(N), without tabulating Out(N).
std::vector<Perm> outer_representatives(const FiniteGroup& N) {
  const int m = N.order();
  std::vector<Perm> inner;
  for (int g = 0; g < m; ++g) {
    Perm c(m);
    for (int x = 0; x < m; ++x) c[x] = N.conj(x, g);
    inner.push_back(std::move(c));
  }
  std::sort(inner.begin(), inner.end());
  inner.erase(std::unique(inner.begin(), inner.end()), inner.end());
  std::unordered_set<Perm, PermHash> covered;
  std::vector<Perm> reps;
  for (const Perm& a : automorphism_maps(N)) {
    if (covered.count(a)) continue;
    reps.push_back(a);
    for (const Perm& c : inner) covered.insert(perm_compose(c, a));
  }
  return reps;
}

std::vector<FiniteGroup> build_order(int n) {
  if (n == 1) {
    FiniteGroup T;
    return {T};
  }
  std::vector<FiniteGroup> found;
  std::vector<std::vector<int>> sigs;
  auto consider = [&](FiniteGroup G) {
    const auto s = signature(G);
    for (std::size_t i = 0; i < found.size(); ++i)
      if (sigs[i] == s && is_isomorphic(found[i], G)) return;
    found.push_back(std::move(G));
    sigs.push_back(s);
  };
  for (int p = 2; p <= n; ++p) {
    if (n % p != 0 || !is_prime(p)) continue;
    for (const FiniteGroup& N : groups_of_order(n / p)) {
      const int m = N.order();
      // theta modulo inner automorphisms suffices: changing t by an element of N
      for (const Perm& theta : outer_representatives(N)) {
        Perm tp = perm_identity(m);
        for (int j = 0; j < p; ++j) tp = perm_compose(tp, theta);
        for (int a = 0; a < m; ++a) {
          if (theta[a] != a) continue;
          bool ok = true;
          for (int x : N.generators())
            if (tp[x] != N.conj(x, a)) {
              ok = false;
              break;
            }
          if (ok) consider(cyclic_extension(N, theta, a, p));
        }
      }
    }
  }
  return found;
}

}  // namespace

const std::vector<FiniteGroup>& groups_of_order(int order) {
  if (order < 1 || order > 32) throw OrderBoundExceeded("small group library covers orders 1..32");
  static std::mutex mu;
  static std::map<int, std::vector<FiniteGroup>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(order);
    if (it != cache.end()) return it->second;
  }
  std::vector<FiniteGroup> gs = build_order(order);
  for (std::size_t k = 0; k < gs.size(); ++k) gs[k].set_name("G" + std::to_string(order) + "_" + std::to_string(k + 1));
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(order, std::move(gs)).first->second;
}

std::vector<FiniteGroup> group_panel(const std::string& name) {
  std::vector<FiniteGroup> out;
  if (name == "small24") {
    for (int n = 1; n <= 24; ++n)
      for (const auto& G : groups_of_order(n)) out.push_back(G);
    out.push_back(alternating_group(5));
    return out;
  }
  if (name == "minimal") {
    for (int n = 1; n <= 6; ++n) out.push_back(cyclic_group(n));
    out.push_back(direct_product(cyclic_group(2), cyclic_group(2)));
    out.push_back(symmetric_group(3));
    out.push_back(dihedral_group(4));
    out.push_back(quaternion_group());
    out.push_back(alternating_group(4));
    out.push_back(alternating_group(5));
    return out;
  }
  throw InvalidArgument("unknown panel '" + name + "' (expected small24 or minimal)");
}

}  // namespace stacky
