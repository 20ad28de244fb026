#include "stacky/finite_group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "stacky/errors.hpp"

namespace stacky {

Perm perm_compose(const Perm& p, const Perm& q) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = q[p[i]];
  return r;
}

Perm perm_inverse(const Perm& p) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
  return r;
}

Perm perm_identity(int deg) {
  Perm p(deg);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

std::size_t PermHash::operator()(const Perm& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (int x : p) {
    h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

FiniteGroup::FiniteGroup() : table_{0}, inverse_{0}, elem_order_{1}, parent_{-1}, parent_gen_{-1}, bfs_{0} {}

int FiniteGroup::mul_perm(int a, int b) const {
  return perm_index_->at(perm_compose(perms_[a], perms_[b]));
}

int FiniteGroup::find_perm(const Perm& p) const {
  if (!perm_index_) return -1;
  auto it = perm_index_->find(p);
  return it == perm_index_->end() ? -1 : it->second;
}

int FiniteGroup::pow(int a, std::int64_t k) const {
  const int o = elem_order_[a];
  k %= o;
  if (k < 0) k += o;
  int r = 0, base = a;
  while (k) {
    if (k & 1) r = mul(r, base);
    base = mul(base, base);
    k >>= 1;
  }
  return r;
}

bool FiniteGroup::is_abelian() const {
  for (int a : gens_)
    for (int b : gens_)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

int FiniteGroup::exponent() const {
  int e = 1;
  for (int o : elem_order_) e = std::lcm(e, o);
  return e;
}

std::vector<int> FiniteGroup::extend_along_tree(const std::vector<int>& gen_images,
                                                const std::function<int(int, int)>& target_mul,
                                                int target_id) const {
  std::vector<int> img(order_, target_id);
  for (std::size_t i = 1; i < bfs_.size(); ++i) {
    const int x = bfs_[i];
    img[x] = target_mul(img[parent_[x]], gen_images[parent_gen_[x]]);
  }
  return img;
}

bool FiniteGroup::is_hom(const std::vector<int>& images, const std::function<int(int, int)>& target_mul) const {
  for (int x = 0; x < order_; ++x)
    for (int g : gens_)
      if (images[mul(x, g)] != target_mul(images[x], images[g])) return false;
  return true;
}

std::vector<std::vector<int>> FiniteGroup::table_rows() const {
  std::vector<std::vector<int>> rows(order_, std::vector<int>(order_));
  for (int a = 0; a < order_; ++a)
    for (int b = 0; b < order_; ++b) rows[a][b] = mul(a, b);
  return rows;
}

namespace {

// BFS closure of `start` (a closed set given as a membership mask) with extra generators.
std::vector<int> close_with(const FiniteGroup& G, std::vector<char>& in, std::vector<int> elems,
                            const std::vector<int>& gens) {
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (int g : gens) {
      const int y = G.mul(elems[i], g);
      if (!in[y]) {
        in[y] = 1;
        elems.push_back(y);
      }
    }
  return elems;
}

}  // namespace

void FiniteGroup::set_generators(std::vector<int> gens) {
  gens_ = std::move(gens);
  parent_.assign(order_, -1);
  parent_gen_.assign(order_, -1);
  bfs_.clear();
  std::vector<char> seen(order_, 0);
  seen[0] = 1;
  bfs_.push_back(0);
  for (std::size_t i = 0; i < bfs_.size(); ++i) {
    const int x = bfs_[i];
    for (std::size_t k = 0; k < gens_.size(); ++k) {
      const int y = mul(x, gens_[k]);
      if (!seen[y]) {
        seen[y] = 1;
        parent_[y] = x;
        parent_gen_[y] = static_cast<int>(k);
        bfs_.push_back(y);
      }
    }
  }
  if (static_cast<int>(bfs_.size()) != order_) throw InvalidArgument("generators do not generate the group");
}

void FiniteGroup::finish(bool choose_gens) {
  inverse_.assign(order_, -1);
  elem_order_.assign(order_, 0);
  for (int a = 0; a < order_; ++a) {
    if (elem_order_[a]) continue;
    int x = a, k = 1;
    while (x != 0) {
      x = mul(x, a);
      ++k;
    }
    elem_order_[a] = k;
  }
  for (int a = 0; a < order_; ++a) inverse_[a] = pow(a, elem_order_[a] - 1);
  if (!choose_gens) return;

  // Greedy generating set: for small groups pick the element that enlarges the
  // generated subgroup most; otherwise prefer large element orders.
  std::vector<int> gens;
  std::vector<char> in(order_, 0);
  in[0] = 1;
  std::vector<int> cur{0};
  if (order_ <= 512) {
    while (static_cast<int>(cur.size()) < order_) {
      int best = -1;
      std::size_t best_size = 0;
      for (int x = 1; x < order_; ++x) {
        if (in[x]) continue;
        std::vector<char> in2 = in;
        in2[x] = 1;
        std::vector<int> start = cur;
        start.push_back(x);
        std::vector<int> gs = gens;
        gs.push_back(x);
        const std::size_t sz = close_with(*this, in2, start, gs).size();
        if (sz > best_size) {
          best_size = sz;
          best = x;
        }
      }
      gens.push_back(best);
      in[best] = 1;
      cur.push_back(best);
      cur = close_with(*this, in, cur, gens);
    }
  } else {
    std::vector<int> cand(order_ - 1);
    std::iota(cand.begin(), cand.end(), 1);
    std::stable_sort(cand.begin(), cand.end(), [&](int a, int b) { return elem_order_[a] > elem_order_[b]; });
    for (int x : cand) {
      if (in[x]) continue;
      gens.push_back(x);
      in[x] = 1;
      cur.push_back(x);
      cur = close_with(*this, in, cur, gens);
      if (static_cast<int>(cur.size()) == order_) break;
    }
  }
  set_generators(std::move(gens));
}

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> table, std::string name) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw InvalidArgument("empty group table");
  if (n > kTableThreshold) throw OrderBoundExceeded("table groups are limited to order " + std::to_string(kTableThreshold));
  for (const auto& row : table)
    if (static_cast<int>(row.size()) != n) throw InvalidArgument("group table is not square");
  for (int i = 0; i < n; ++i) {
    std::vector<char> r(n, 0), c(n, 0);
    for (int j = 0; j < n; ++j) {
      const int a = table[i][j], b = table[j][i];
      if (a < 0 || a >= n || b < 0 || b >= n) throw InvalidArgument("group table entry out of range");
      if (r[a]++ || c[b]++) throw InvalidArgument("group table row or column is not a permutation");
    }
    if (table[0][i] != i || table[i][0] != i) throw InvalidArgument("element 0 is not the identity");
  }
  if (n <= 256) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (table[table[a][b]][c] != table[a][table[b][c]])
            throw InvalidArgument("group table is not associative at (" + std::to_string(a) + "," +
                                  std::to_string(b) + "," + std::to_string(c) + ")");
  }
  FiniteGroup G;
  G.order_ = n;
  G.table_.resize(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) G.table_[static_cast<std::size_t>(a) * n + b] = table[a][b];
  G.name_ = std::move(name);
  G.finish(true);
  return G;
}

FiniteGroup FiniteGroup::from_mul(int n, const std::function<int(int, int)>& mul, std::vector<int> gens,
                                  std::string name) {
  if (n <= 0) throw InvalidArgument("group order must be positive");
  if (n > kTableThreshold) throw OrderBoundExceeded("table groups are limited to order " + std::to_string(kTableThreshold));
  FiniteGroup G;
  G.order_ = n;
  G.table_.resize(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) G.table_[static_cast<std::size_t>(a) * n + b] = mul(a, b);
  for (int a = 0; a < n; ++a)
    if (G.table_[a] != a || G.table_[static_cast<std::size_t>(a) * n] != a)
      throw InvalidArgument("element 0 is not the identity");
  for (int g : gens)
    if (g < 0 || g >= n) throw InvalidArgument("generator index out of range");
  // drop the identity and repeats so the word tree stays small
  std::vector<int> kept;
  for (int g : gens)
    if (g != 0 && std::find(kept.begin(), kept.end(), g) == kept.end()) kept.push_back(g);
  G.name_ = std::move(name);
  G.finish(false);
  G.set_generators(std::move(kept));
  return G;
}

FiniteGroup FiniteGroup::from_mul(int n, const std::function<int(int, int)>& mul, std::string name) {
  if (n <= 0) throw InvalidArgument("group order must be positive");
  if (n > kTableThreshold) throw OrderBoundExceeded("table groups are limited to order " + std::to_string(kTableThreshold));
  FiniteGroup G;
  G.order_ = n;
  G.table_.resize(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) G.table_[static_cast<std::size_t>(a) * n + b] = mul(a, b);
  for (int a = 0; a < n; ++a)
    if (G.table_[a] != a || G.table_[static_cast<std::size_t>(a) * n] != a)
      throw InvalidArgument("element 0 is not the identity");
  G.name_ = std::move(name);
  G.finish(true);
  return G;
}

FiniteGroup group_from_permutations(int deg, const std::vector<Perm>& gens, int bound) {
  if (gens.empty()) throw InvalidArgument("at least one generator is required");
  if (deg < 1) throw InvalidArgument("degree must be positive");
  for (const auto& p : gens) {
    if (static_cast<int>(p.size()) != deg) throw InvalidArgument("generator has wrong degree");
    std::vector<char> seen(deg, 0);
    for (int x : p) {
      if (x < 0 || x >= deg || seen[x]) throw InvalidArgument("generator is not a permutation");
      seen[x] = 1;
    }
  }
  auto index = std::make_shared<std::unordered_map<Perm, int, PermHash>>();
  std::vector<Perm> elems{perm_identity(deg)};
  (*index)[elems[0]] = 0;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& g : gens) {
      Perm y = perm_compose(elems[i], g);
      if (index->count(y)) continue;
      if (static_cast<int>(elems.size()) >= bound)
        throw OrderBoundExceeded("permutation group exceeds order bound " + std::to_string(bound));
      (*index)[y] = static_cast<int>(elems.size());
      elems.push_back(std::move(y));
    }
  }
  FiniteGroup G;
  G.order_ = static_cast<int>(elems.size());
  G.degree_ = deg;
  G.perms_ = std::move(elems);
  G.perm_index_ = index;
  G.table_.clear();
  if (G.order_ <= kTableThreshold) {
    const int n = G.order_;
    G.table_.resize(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        G.table_[static_cast<std::size_t>(a) * n + b] = index->at(perm_compose(G.perms_[a], G.perms_[b]));
  }
  G.finish(false);
  // generators: the given ones in order, skipping those already generated
  std::vector<int> chosen;
  std::vector<char> in(G.order_, 0);
  in[0] = 1;
  std::vector<int> cur{0};
  for (const auto& p : gens) {
    const int x = index->at(p);
    if (in[x]) continue;
    chosen.push_back(x);
    in[x] = 1;
    cur.push_back(x);
    cur = close_with(G, in, cur, chosen);
  }
  G.set_generators(std::move(chosen));
  return G;
}

std::vector<int> closure(const FiniteGroup& G, const std::vector<int>& gens) {
  std::vector<char> in(G.order(), 0);
  in[0] = 1;
  std::vector<int> el = close_with(G, in, {0}, gens);
  std::sort(el.begin(), el.end());
  return el;
}

Subgroup subgroup(const FiniteGroup& G, const std::vector<int>& gens) {
  std::vector<int> gs;
  for (int g : gens)
    if (g != 0 && std::find(gs.begin(), gs.end(), g) == gs.end()) gs.push_back(g);
  std::vector<char> in(G.order(), 0);
  in[0] = 1;
  std::vector<int> el = close_with(G, in, {0}, gs);
  std::vector<int> back(G.order(), -1);
  for (std::size_t i = 0; i < el.size(); ++i) back[el[i]] = static_cast<int>(i);
  FiniteGroup S = FiniteGroup::from_mul(static_cast<int>(el.size()),
                                        [&](int a, int b) { return back[G.mul(el[a], el[b])]; });
  return {std::move(S), std::move(el)};
}

Subgroup subgroup_from_elements(const FiniteGroup& G, const std::vector<int>& elems) {
  std::vector<char> want(G.order(), 0);
  for (int x : elems) want[x] = 1;
  want[0] = 1;
  std::vector<int> gens;
  std::vector<char> in(G.order(), 0);
  in[0] = 1;
  std::vector<int> cur{0};
  for (int x = 0; x < G.order(); ++x) {
    if (!want[x] || in[x]) continue;
    gens.push_back(x);
    in[x] = 1;
    cur.push_back(x);
    cur = close_with(G, in, cur, gens);
  }
  for (int x = 0; x < G.order(); ++x)
    if (in[x] && !want[x]) throw InvalidArgument("element set is not closed under multiplication");
  return subgroup(G, gens);
}

FiniteGroup cyclic_group(int n) {
  if (n < 1) throw InvalidArgument("cyclic group order must be positive");
  return FiniteGroup::from_mul(n, [n](int a, int b) { return (a + b) % n; }, "Z" + std::to_string(n));
}

FiniteGroup dihedral_group(int n) {
  if (n < 1) throw InvalidArgument("dihedral parameter must be positive");
  // r^i s^a  <->  i + n a
  return FiniteGroup::from_mul(
      2 * n,
      [n](int x, int y) {
        const int i = x % n, a = x / n, j = y % n, b = y / n;
        const int k = ((a ? i - j : i + j) % n + n) % n;
        return k + n * ((a + b) % 2);
      },
      "D" + std::to_string(n));
}

FiniteGroup symmetric_group(int n) {
  if (n < 1) throw InvalidArgument("symmetric degree must be positive");
  if (n == 1) {
    FiniteGroup G;
    G.set_name("S1");
    return G;
  }
  Perm cyc(n), tr = perm_identity(n);
  for (int i = 0; i < n; ++i) cyc[i] = (i + 1) % n;
  std::swap(tr[0], tr[1]);
  std::vector<Perm> gens = n == 2 ? std::vector<Perm>{tr} : std::vector<Perm>{cyc, tr};
  FiniteGroup G = group_from_permutations(n, gens);
  G.set_name("S" + std::to_string(n));
  return G;
}

FiniteGroup alternating_group(int n) {
  if (n < 1) throw InvalidArgument("alternating degree must be positive");
  if (n < 3) {
    FiniteGroup G;
    G.set_name("A" + std::to_string(n));
    return G;
  }
  Perm three = perm_identity(n);
  three[0] = 1;
  three[1] = 2;
  three[2] = 0;
  std::vector<Perm> gens;
  if (n > 3) {
    Perm cyc = perm_identity(n);
    const int start = n % 2 ? 0 : 1;
    for (int i = start; i < n; ++i) cyc[i] = i + 1 < n ? i + 1 : start;
    gens.push_back(cyc);
  }
  gens.push_back(three);
  FiniteGroup G = group_from_permutations(n, gens);
  G.set_name("A" + std::to_string(n));
  return G;
}

FiniteGroup quaternion_group() {
  // index u + 4 s: unit u in {1,i,j,k}, sign s
  static const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  return FiniteGroup::from_mul(
      8,
      [](int x, int y) {
        const int u = x % 4, v = y % 4;
        return unit[u][v] + 4 * ((x / 4 + y / 4 + sign[u][v]) % 2);
      },
      "Q8");
}

FiniteGroup direct_product(const FiniteGroup& G, const FiniteGroup& H) {
  const int n = G.order();
  std::string name;
  if (!G.name().empty() && !H.name().empty()) name = G.name() + "x" + H.name();
  return FiniteGroup::from_mul(
      n * H.order(), [&](int a, int b) { return G.mul(a % n, b % n) + n * H.mul(a / n, b / n); }, name);
}

}  // namespace stacky
