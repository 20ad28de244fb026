#include "stacky/orbifold.hpp"

#include <algorithm>
#include <numeric>

#include "stacky/coset_enum.hpp"
#include "stacky/errors.hpp"
#include "stacky/group_algorithms.hpp"

namespace stacky {

OrbifoldCurveData::OrbifoldCurveData(int genus, std::vector<int> orders, int punctures)
    : g_(genus), orders_(std::move(orders)), l_(punctures) {
  if (g_ < 0) throw InvalidArgument("genus must be non-negative");
  if (l_ < 0) throw InvalidArgument("punctures must be non-negative");
  for (int n : orders_)
    if (n < 2) throw InvalidArgument("orbifold orders must be at least 2 (got " + std::to_string(n) + ")");
  std::sort(orders_.begin(), orders_.end());
}

std::string OrbifoldCurveData::str() const {
  std::string s = "g=" + std::to_string(g_) + " orders=[";
  for (std::size_t i = 0; i < orders_.size(); ++i) s += (i ? "," : "") + std::to_string(orders_[i]);
  return s + "] l=" + std::to_string(l_);
}

std::string UniformizationType::str() const {
  switch (kind) {
    case Kind::Hyperbolic:
      return "hyperbolic";
    case Kind::Euclidean:
      return "euclidean";
    case Kind::Spherical:
      return "spherical(" + std::to_string(m) + "," + std::to_string(n) + ")";
  }
  return {};
}

namespace {

void check_compactness(const OrbifoldCurveData& c, bool compact) {
  if (compact && c.punctures() != 0) throw InvalidArgument("a compact curve has no punctures");
  if (!compact && c.punctures() == 0) throw InvalidArgument("a non-compact curve needs at least one puncture");
}

}  // namespace

Rational euler_weight(const OrbifoldCurveData& c, bool compact) {
  check_compactness(c, compact);
  Rational w(2 * c.genus() - 2 + c.punctures());
  for (int n : c.orders()) w += Rational(n - 1, n);
  return w;
}

UniformizationType uniformization_type(const OrbifoldCurveData& c, bool compact, std::int64_t gerbe_degree) {
  if (gerbe_degree < 1) throw InvalidArgument("gerbe degree must be positive");
  // boost::rational's mixed comparisons recurse under C++20 rewrite rules; use the sign
  const std::int64_t sign = euler_weight(c, compact).numerator();
  UniformizationType u;
  if (!compact) {
    // weight <= 0 picks out C_n (1 <= n <= infinity) and C_{2,2}
    u.kind = sign <= 0 ? UniformizationType::Kind::Euclidean : UniformizationType::Kind::Hyperbolic;
    return u;
  }
  if (sign > 0) return u;
  if (sign == 0) {
    u.kind = UniformizationType::Kind::Euclidean;
    return u;
  }
  u.kind = UniformizationType::Kind::Spherical;
  if (c.k() <= 2) {
    const std::int64_t m = c.k() >= 1 ? c.orders()[0] : 1;
    const std::int64_t n = c.k() == 2 ? c.orders()[1] : 1;
    const std::int64_t a = std::gcd(m, n);
    u.m = gerbe_degree * m / a;
    u.n = gerbe_degree * n / a;
  } else {
    u.m = u.n = gerbe_degree;
  }
  return u;
}

GroupPresentation pi1_presentation(const OrbifoldCurveData& c) {
  std::vector<std::string> names;
  for (int i = 1; i <= c.genus(); ++i) {
    names.push_back("a" + std::to_string(i));
    names.push_back("b" + std::to_string(i));
  }
  for (int j = 1; j <= c.k(); ++j) names.push_back("r" + std::to_string(j));
  for (int h = 1; h <= c.punctures(); ++h) names.push_back("s" + std::to_string(h));

  std::vector<Word> rels;
  const int rho0 = 2 * c.genus() + 1;
  for (int j = 0; j < c.k(); ++j) rels.push_back(word_power({rho0 + j}, c.orders()[j]));
  Word prod;
  for (int i = 0; i < c.genus(); ++i) prod = word_concat(prod, word_commutator({2 * i + 1}, {2 * i + 2}));
  for (int j = 0; j < c.k() + c.punctures(); ++j) prod = word_concat(prod, {rho0 + j});
  rels.push_back(prod);
  return GroupPresentation(names, rels);
}

bool is_simply_connected(const OrbifoldCurveData& c, bool compact) {
  check_compactness(c, compact);
  if (c.genus() != 0) return false;
  if (c.punctures() <= 1 && c.k() == 0) return true;
  if (c.punctures() == 0 && c.k() <= 2) return c.k() < 2 || std::gcd(c.orders()[0], c.orders()[1]) == 1;
  return false;
}

GroupPresentation triangle_presentation(int p, int q, int r) {
  return GroupPresentation({"x", "y"}, {word_power({1}, p), word_power({2}, q), word_power({1, 2}, r)});
}

TriangleGroup triangle_group(int p, int q, int r) {
  if (p < 2 || q < 2 || r < 2) throw InvalidArgument("triangle group parameters must be at least 2");
  std::array<int, 3> s{p, q, r};
  std::sort(s.begin(), s.end());
  const OrbifoldCurveData c(0, {s[0], s[1], s[2]}, 0);
  TriangleGroup t;
  t.kind = uniformization_type(c, true).kind;
  if (t.kind != UniformizationType::Kind::Spherical) return t;
  if (s[0] == 2 && s[1] == 2)
    t.name = "dihedral";
  else if (s[2] == 3)
    t.name = "tetrahedral";
  else if (s[2] == 4)
    t.name = "octahedral";
  else
    t.name = "icosahedral";
  const CosetEnumeration ce = todd_coxeter(triangle_presentation(s[0], s[1], s[2]), {});
  if (!ce.finite) throw BudgetExceeded("coset enumeration of a spherical triangle group did not close");
  t.order = ce.index;
  return t;
}

Football football(std::int64_t m, std::int64_t n) {
  if (m < 1 || n < 1) throw InvalidArgument("football orders must be positive");
  const std::int64_t d = std::gcd(m, n);
  Football f;
  f.pi1 = d > 1 ? FinAbGroup({d}) : FinAbGroup();
  f.cover_m = m / d;
  f.cover_n = n / d;
  return f;
}

DMCurveData::DMCurveData(OrbifoldCurveData base, FiniteGroup H, std::vector<Perm> band, std::vector<LocalExtension> local)
    : base_(std::move(base)), H_(std::move(H)), band_(std::move(band)), local_(std::move(local)) {
  const int h = H_.order();
  const auto hmul = [this](int a, int b) { return H_.mul(a, b); };
  const int loops = 2 * base_.genus() + base_.punctures() - 1;
  if (static_cast<int>(band_.size()) != std::max(loops, 0))
    throw InvalidArgument("band needs " + std::to_string(std::max(loops, 0)) + " automorphisms, one per free loop");
  for (const Perm& a : band_) {
    if (static_cast<int>(a.size()) != h || perm_compose(a, perm_inverse(a)) != perm_identity(h))
      throw InvalidArgument("band entry is not a permutation of H");
    if (!H_.is_hom(a, hmul)) throw NotHomomorphism("band entry is not an automorphism of H");
  }
  if (local_.size() != base_.orders().size())
    throw InvalidArgument("one local extension is needed per orbifold point");
  for (std::size_t i = 0; i < local_.size(); ++i) {
    const LocalExtension& L = local_[i];
    const int n = base_.orders()[i];
    if (L.G.order() != h * n) throw InvalidArgument("local group has order " + std::to_string(L.G.order()) + ", expected |H|*n");
    if (static_cast<int>(L.embedding.size()) != h) throw InvalidArgument("embedding must list an image for every H element");
    if (!H_.is_hom(L.embedding, [&L](int a, int b) { return L.G.mul(a, b); }))
      throw NotHomomorphism("marked copy of H is not a homomorphic image");
    std::vector<int> img = L.embedding;
    std::sort(img.begin(), img.end());
    if (std::unique(img.begin(), img.end()) != img.end()) throw InvalidArgument("embedding of H is not injective");
    if (!is_normal(L.G, img)) throw InvalidArgument("marked copy of H is not normal");
    const Quotient q = quotient(L.G, img);
    bool cyclic = false;
    for (int x = 0; x < q.group.order() && !cyclic; ++x) cyclic = q.group.elem_order(x) == n;
    if (!cyclic) throw InvalidArgument("G/H is not cyclic of order " + std::to_string(n));
  }
}

DMCurveData plain_dm_curve(const OrbifoldCurveData& c) {
  const FiniteGroup H;
  std::vector<LocalExtension> local;
  for (int n : c.orders()) local.push_back({cyclic_group(n), {0}});
  const int loops = std::max(2 * c.genus() + c.punctures() - 1, 0);
  return DMCurveData(c, H, std::vector<Perm>(loops, perm_identity(1)), local);
}

DMCurveData trivial_band_gerbe(const OrbifoldCurveData& c, const FiniteGroup& H) {
  std::vector<LocalExtension> local;
  for (int n : c.orders()) {
    LocalExtension L{direct_product(H, cyclic_group(n)), {}};
    for (int x = 0; x < H.order(); ++x) L.embedding.push_back(product_index(H, x, 0));
    local.push_back(std::move(L));
  }
  const int loops = std::max(2 * c.genus() + c.punctures() - 1, 0);
  return DMCurveData(c, H, std::vector<Perm>(loops, perm_identity(H.order())), local);
}

GroupPresentation graph_of_groups_pi1(const DMCurveData& d) {
  const OrbifoldCurveData& c = d.base();
  if (c.punctures() == 0) throw RequiresOpenCurve("graph-of-groups description needs at least one puncture");
  const FiniteGroup& H = d.H();
  const GroupPresentation hp = table_presentation(H, "h");
  const int nh = static_cast<int>(hp.num_gens());
  const int nt = static_cast<int>(d.band().size());

  std::vector<std::string> names = hp.gens();
  for (int i = 1; i <= nt; ++i) names.push_back("t" + std::to_string(i));
  std::vector<Word> rels = hp.relators();

  // t^-1 h t = band(h)
  for (int i = 0; i < nt; ++i) {
    const int t = nh + i + 1;
    for (int j = 0; j < nh; ++j) {
      const int img = d.band()[i][H.generators()[j]];
      rels.push_back(word_concat(Word{-t, j + 1, t}, word_inverse(element_word(H, img))));
    }
  }

  int offset = nh + nt;
  for (std::size_t i = 0; i < d.local().size(); ++i) {
    const LocalExtension& L = d.local()[i];
    const GroupPresentation gp = table_presentation(L.G, "g");
    for (std::size_t j = 0; j < gp.num_gens(); ++j) names.push_back("g" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
    for (const Word& w : gp.relators()) {
      Word s = w;
      for (int& x : s) x += x > 0 ? offset : -offset;
      rels.push_back(s);
    }
    // marked H inside G_i equals the vertex group H
    for (int j = 0; j < nh; ++j)
      rels.push_back(word_concat(Word{j + 1}, word_inverse(element_word(L.G, L.embedding[H.generators()[j]], offset))));
    offset += static_cast<int>(gp.num_gens());
  }
  return GroupPresentation(names, rels);
}

HeisenbergWitness heisenberg_witness(int n) {
  if (n < 1) throw InvalidArgument("heisenberg_witness needs n >= 1");
  if (static_cast<std::int64_t>(n) * n * n > kTableThreshold) throw OrderBoundExceeded("heisenberg group too large");
  // (v1, v2; i) <-> v1 + n v2 + n^2 i, product (v + M^i w, i + j) with M = [[1,1],[0,1]]
  auto dec = [n](int e) { return std::array<int, 3>{e % n, (e / n) % n, e / (n * n)}; };
  auto enc = [n](int v1, int v2, int i) { return v1 + n * v2 + n * n * i; };
  HeisenbergWitness w;
  w.group = FiniteGroup::from_mul(n * n * n, [&](int a, int b) {
    const auto [v1, v2, i] = dec(a);
    const auto [w1, w2, j] = dec(b);
    return enc((v1 + w1 + i * w2) % n, (v2 + w2) % n, (i + j) % n);
  });
  w.group.set_name("Heis" + std::to_string(n));
  if (n > 1) {
    w.x = enc(0, 0, 1);
    w.y = enc(0, 1, 0);
    w.z = enc(1, 0, 0);
  }
  return w;
}

namespace {

// GF(q) by tables; elements are base-p digit strings of polynomial coefficients.
struct Field {
  int p = 0, q = 0;
  std::vector<int> add, mul, neg, inv;

  int a(int x, int y) const { return add[x * q + y]; }
  int m(int x, int y) const { return mul[x * q + y]; }
  int s(int x, int y) const { return add[x * q + neg[y]]; }
};

std::optional<Field> make_field(int q) {
  int p = 0, k = 0;
  for (int d = 2; d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  for (int t = q; t > 1; t /= p) {
    if (t % p != 0) return std::nullopt;
    ++k;
  }
  auto digits = [&](int x) {
    std::vector<int> v(k);
    for (int i = 0; i < k; ++i, x /= p) v[i] = x % p;
    return v;
  };
  auto undigits = [&](const std::vector<int>& v) {
    int x = 0;
    for (int i = k - 1; i >= 0; --i) x = x * p + v[i];
    return x;
  };
  Field F;
  F.p = p;
  F.q = q;
  F.add.resize(q * q);
  F.neg.resize(q);
  for (int x = 0; x < q; ++x) {
    const auto dx = digits(x);
    std::vector<int> n(k);
    for (int i = 0; i < k; ++i) n[i] = (p - dx[i]) % p;
    F.neg[x] = undigits(n);
    for (int y = 0; y < q; ++y) {
      const auto dy = digits(y);
      std::vector<int> s(k);
      for (int i = 0; i < k; ++i) s[i] = (dx[i] + dy[i]) % p;
      F.add[x * q + y] = undigits(s);
    }
  }
  // first monic f of degree k (low coefficients given by c) giving a field
  for (int c = 0; c < q; ++c) {
    const auto f = digits(c);
    std::vector<int> mul(q * q);
    for (int x = 0; x < q; ++x)
      for (int y = 0; y < q; ++y) {
        const auto dx = digits(x), dy = digits(y);
        std::vector<int> prod(2 * k, 0);
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + dx[i] * dy[j]) % p;
        for (int e = 2 * k - 1; e >= k; --e) {
          // x^e = x^(e-k) * (-f_low)
          const int coef = prod[e];
          prod[e] = 0;
          for (int i = 0; i < k; ++i) prod[e - k + i] = ((prod[e - k + i] - coef * f[i]) % p + p) % p;
        }
        mul[x * q + y] = undigits(std::vector<int>(prod.begin(), prod.begin() + k));
      }
    std::vector<int> inv(q, 0);
    bool field = true;
    for (int x = 1; x < q && field; ++x) {
      int found = 0;
      for (int y = 1; y < q; ++y)
        if (mul[x * q + y] == 1) {
          inv[x] = y;
          ++found;
        }
      field = found == 1;
    }
    if (field) {
      F.mul = std::move(mul);
      F.inv = std::move(inv);
      return F;
    }
  }
  return std::nullopt;
}

using Mat = std::array<int, 4>;

Mat mat_mul(const Field& F, const Mat& A, const Mat& B) {
  return {F.a(F.m(A[0], B[0]), F.m(A[1], B[2])), F.a(F.m(A[0], B[1]), F.m(A[1], B[3])),
          F.a(F.m(A[2], B[0]), F.m(A[3], B[2])), F.a(F.m(A[2], B[1]), F.m(A[3], B[3]))};
}

bool is_scalar_pm1(const Field& F, const Mat& A) {
  return A[1] == 0 && A[2] == 0 && A[0] == A[3] && (A[0] == 1 || A[0] == F.neg[1]);
}

Perm mobius(const Field& F, const Mat& A) {
  const int q = F.q;
  Perm p(q + 1);
  for (int z = 0; z <= q; ++z) {
    if (z == q) {
      p[z] = A[2] == 0 ? q : F.m(A[0], F.inv[A[2]]);
      continue;
    }
    const int num = F.a(F.m(A[0], z), A[1]);
    const int den = F.a(F.m(A[2], z), A[3]);
    p[z] = den == 0 ? q : F.m(num, F.inv[den]);
  }
  return p;
}

}  // namespace

std::optional<Psl2Witness> psl2_witness(int m, int n, int p, int q_max) {
  if (m < 2 || n < 2 || p < 2) throw InvalidArgument("psl2_witness orders must be at least 2");
  if (q_max > 101) throw InvalidArgument("q_max must be at most 101");
  for (int q = 3; q <= q_max; q += 2) {
    const auto Fo = make_field(q);
    if (!Fo) continue;
    const Field& F = *Fo;
    // PSL order of a non-scalar SL matrix depends only on its trace
    std::vector<int> ord(q, 0);
    for (int t = 0; t < q; ++t) {
      const Mat C{0, F.neg[1], 1, t};
      Mat P = C;
      int k = 1;
      while (!is_scalar_pm1(F, P)) {
        P = mat_mul(F, P, C);
        ++k;
      }
      ord[t] = k;
    }
    for (int t = 0; t < q; ++t) {
      if (ord[t] != m) continue;
      const Mat x{0, F.neg[1], 1, t};
      // y = [[a,b],[c,d]] over SL(2,q)
      for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b)
          for (int c = 0; c < q; ++c) {
            std::vector<int> ds;
            if (a != 0) {
              ds.push_back(F.m(F.a(1, F.m(b, c)), F.inv[a]));
            } else {
              if (F.m(b, c) != F.neg[1]) continue;
              for (int d = 0; d < q; ++d) ds.push_back(d);
            }
            for (int d : ds) {
              const Mat y{a, b, c, d};
              if (is_scalar_pm1(F, y) || ord[F.a(a, d)] != n) continue;
              const Mat xy = mat_mul(F, x, y);
              if (is_scalar_pm1(F, xy) || ord[F.a(xy[0], xy[3])] != p) continue;
              Psl2Witness w;
              w.q = q;
              w.x = x;
              w.y = y;
              w.x_perm = mobius(F, x);
              w.y_perm = mobius(F, y);
              return w;
            }
          }
    }
  }
  return std::nullopt;
}

}  // namespace stacky
