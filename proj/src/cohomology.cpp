#include "stacky/cohomology.hpp"

#include <numeric>

#include "stacky/errors.hpp"

namespace stacky {

namespace {

using Row = std::vector<std::int64_t>;
using Mat = std::vector<Row>;

std::int64_t md(std::int64_t a, std::int64_t m) {
  a %= m;
  return a < 0 ? a + m : a;
}

// s a + t b = g with g = gcd(a, b) >= 0
std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& s, std::int64_t& t) {
  if (a != 0 && b % a == 0) {
    // pure elimination keeps the pivot row untouched, which bounds the sweeps
    s = 1;
    t = 0;
    return a;
  }
  std::int64_t s0 = 1, t0 = 0, s1 = 0, t1 = 1;
  while (b != 0) {
    const std::int64_t q = a / b;
    std::int64_t r = a - q * b;
    a = b;
    b = r;
    r = s0 - q * s1;
    s0 = s1;
    s1 = r;
    r = t0 - q * t1;
    t0 = t1;
    t1 = r;
  }
  s = s0;
  t = t0;
  return a;
}

// Replaces (x, y) by (s x + t y, u x + v y) mod e, entrywise.
void mix(Row& x, Row& y, std::int64_t s, std::int64_t t, std::int64_t u, std::int64_t v, std::int64_t e) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    const std::int64_t a = x[i], b = y[i];
    if (a == 0 && b == 0) continue;
    x[i] = md(s * a + t * b, e);
    y[i] = md(u * a + v * b, e);
  }
}

// Diagonalizes M over Z/e by unimodular 2x2 transforms.  Row operations are
// applied to *U (if given); column operations to *W and, inversely, to the
// rows of *Winv.
void smith_mod(Mat& M, std::size_t cols, std::int64_t e, Mat* U, Mat* W, Mat* Winv) {
  const std::size_t rows = M.size();
  auto col_mix = [&](std::size_t c1, std::size_t c2, std::int64_t s, std::int64_t t, std::int64_t u, std::int64_t v) {
    // new c1 = s c1 + t c2, new c2 = u c1 + v c2 (as columns)
    for (Row& r : M) {
      const std::int64_t a = r[c1], b = r[c2];
      if (a == 0 && b == 0) continue;
      r[c1] = md(s * a + t * b, e);
      r[c2] = md(u * a + v * b, e);
    }
    if (W)
      for (Row& r : *W) {
        const std::int64_t a = r[c1], b = r[c2];
        if (a == 0 && b == 0) continue;
        r[c1] = md(s * a + t * b, e);
        r[c2] = md(u * a + v * b, e);
      }
    if (Winv) {
      // inverse of [[s,u],[t,v]] (det 1) is [[v,-u],[-t,s]] acting on rows
      mix((*Winv)[c1], (*Winv)[c2], v, -u, -t, s, e);
    }
  };
  auto col_swap = [&](std::size_t c1, std::size_t c2) {
    if (c1 == c2) return;
    for (Row& r : M) std::swap(r[c1], r[c2]);
    if (W)
      for (Row& r : *W) std::swap(r[c1], r[c2]);
    if (Winv) std::swap((*Winv)[c1], (*Winv)[c2]);
  };
  auto row_swap = [&](std::size_t r1, std::size_t r2) {
    if (r1 == r2) return;
    std::swap(M[r1], M[r2]);
    if (U) std::swap((*U)[r1], (*U)[r2]);
  };

  const std::size_t lim = std::min(rows, cols);
  for (std::size_t t = 0; t < lim; ++t) {
    // pivot with the smallest gcd against e
    std::size_t pi = rows, pj = cols;
    std::int64_t best = e + 1;
    for (std::size_t i = t; i < rows && best > 1; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (M[i][j] != 0) {
          const std::int64_t g = std::gcd(M[i][j], e);
          if (g < best) {
            best = g;
            pi = i;
            pj = j;
            if (g == 1) break;
          }
        }
    if (pi == rows) break;
    row_swap(t, pi);
    col_swap(t, pj);
    for (bool dirty = true; dirty;) {
      dirty = false;
      for (std::size_t r = t + 1; r < rows; ++r) {
        const std::int64_t b = M[r][t];
        if (b == 0) continue;
        const std::int64_t a = M[t][t];
        std::int64_t s, tt;
        const std::int64_t g = ext_gcd(a, b, s, tt);
        mix(M[t], M[r], s, tt, -(b / g), a / g, e);
        if (U) mix((*U)[t], (*U)[r], s, tt, -(b / g), a / g, e);
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        const std::int64_t b = M[t][c];
        if (b == 0) continue;
        const std::int64_t a = M[t][t];
        std::int64_t s, tt;
        const std::int64_t g = ext_gcd(a, b, s, tt);
        col_mix(t, c, s, tt, -(b / g), a / g);
        dirty = true;
      }
      if (dirty) {
        dirty = false;
        for (std::size_t r = t + 1; r < rows && !dirty; ++r) dirty = M[r][t] != 0;
      }
    }
  }
}

Mat identity(std::size_t n) {
  Mat I(n, Row(n, 0));
  for (std::size_t i = 0; i < n; ++i) I[i][i] = 1;
  return I;
}

struct Arith {
  const FinAbGroup& A;
  const ModuleAction& act;
  std::vector<AbElem> els;

  Arith(const FinAbGroup& a, const ModuleAction& ac) : A(a), act(ac), els(a.elements()) {}
  int add(int x, int y) const { return static_cast<int>(A.index_of(A.add(els[x], els[y]))); }
  int sub(int x, int y) const { return static_cast<int>(A.index_of(A.add(els[x], A.neg(els[y])))); }
  int apply(int g, int x) const { return act.empty() ? x : act[g][x]; }
};

}  // namespace

void validate_action(const FiniteGroup& Gamma, const FinAbGroup& A, const ModuleAction& act) {
  if (act.empty()) return;
  const int n = Gamma.order();
  const auto na = static_cast<std::size_t>(A.order());
  if (static_cast<int>(act.size()) != n) throw InvalidArgument("action needs one map per group element");
  for (const auto& m : act)
    if (m.size() != na) throw InvalidArgument("action map has the wrong size");
  const Arith ar(A, {});
  for (int g = 0; g < n; ++g) {
    std::vector<char> seen(na, 0);
    for (std::size_t a = 0; a < na; ++a) {
      const int x = act[g][a];
      if (x < 0 || static_cast<std::size_t>(x) >= na || seen[x]) throw NotHomomorphism("action of element " + std::to_string(g) + " is not a bijection");
      seen[x] = 1;
    }
    for (std::size_t a = 0; a < na; ++a)
      for (std::size_t b = 0; b < na; ++b)
        if (act[g][ar.add(static_cast<int>(a), static_cast<int>(b))] != ar.add(act[g][a], act[g][b]))
          throw NotHomomorphism("action of element " + std::to_string(g) + " is not additive");
  }
  for (std::size_t a = 0; a < na; ++a)
    if (act[0][a] != static_cast<int>(a)) throw NotHomomorphism("identity does not act trivially");
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      for (std::size_t a = 0; a < na; ++a)
        if (act[Gamma.mul(g, h)][a] != act[g][act[h][a]])
          throw NotHomomorphism("action is not compatible with multiplication at (" + std::to_string(g) + "," +
                                std::to_string(h) + ")");
}

bool is_normalized_cocycle(const FiniteGroup& Gamma, const FinAbGroup& A, const ModuleAction& act,
                           const std::vector<int>& c) {
  const int n = Gamma.order();
  if (static_cast<int>(c.size()) != n * n) return false;
  for (int g = 0; g < n; ++g)
    if (c[g] != 0 || c[g * n] != 0) return false;
  const Arith ar(A, act);
  for (int g = 1; g < n; ++g)
    for (int h = 1; h < n; ++h)
      for (int k = 1; k < n; ++k) {
        // g.c(h,k) + c(g,hk) = c(gh,k) + c(g,h)
        const int lhs = ar.add(ar.apply(g, c[h * n + k]), c[g * n + Gamma.mul(h, k)]);
        const int rhs = ar.add(c[Gamma.mul(g, h) * n + k], c[g * n + h]);
        if (lhs != rhs) return false;
      }
  return true;
}

H2 h2(const FiniteGroup& Gamma, const FinAbGroup& A, const ModuleAction& act, int gamma_bound) {
  if (Gamma.order() > gamma_bound)
    throw OrderBoundExceeded("H^2 computation limited to |Gamma| <= " + std::to_string(gamma_bound));
  if (A.exponent() > 1'000'000'000) throw OrderBoundExceeded("coefficient exponent too large");
  validate_action(Gamma, A, act);
  H2 out;
  out.gamma_ = Gamma;
  out.A_ = A;
  out.act_ = act;
  const int n = Gamma.order();
  const auto& d = A.invariant_factors();
  const std::size_t r = d.size();
  const std::int64_t e = r ? d.back() : 1;
  out.e_ = e;
  const std::size_t m = static_cast<std::size_t>(n - 1);
  const std::size_t N = m * m * r;
  if (N == 0) {
    out.sub_ = decompose_vector_subgroup({}, {});
    return out;
  }
  const Arith ar(A, act);
  auto col = [&](int g, int h, std::size_t j) { return ((static_cast<std::size_t>(g) - 1) * m + (h - 1)) * r + j; };

  // step 1: coboundaries plus the relations d_j e_{p,j}, diagonalized over Z/e
  Mat M;
  for (int x = 1; x < n; ++x)
    for (std::size_t j = 0; j < r; ++j) {
      const int u = static_cast<int>(A.index_of(A.unit(j)));
      auto u_at = [&](int y) { return y == x ? u : 0; };
      Row row(N, 0);
      for (int g = 1; g < n; ++g)
        for (int h = 1; h < n; ++h) {
          // (du)(g,h) = g.u(h) - u(gh) + u(g)
          const int v = ar.add(ar.sub(ar.apply(g, u_at(h)), u_at(Gamma.mul(g, h))), u_at(g));
          const AbElem& ve = ar.els[v];
          for (std::size_t i = 0; i < r; ++i) row[col(g, h, i)] = ve[i];
        }
      M.push_back(std::move(row));
    }
  for (std::size_t j = 0; j < r; ++j) {
    if (d[j] == e) continue;
    for (std::size_t p = 0; p < m * m; ++p) {
      Row row(N, 0);
      row[p * r + j] = d[j];
      M.push_back(std::move(row));
    }
  }
  Mat W = identity(N), Winv = identity(N);
  smith_mod(M, N, e, nullptr, &W, &Winv);

  std::vector<std::int64_t> q;
  for (std::size_t i = 0; i < N; ++i) {
    const std::int64_t Dii = i < M.size() ? M[i][i] : 0;
    const std::int64_t qi = std::gcd(Dii, e);
    if (qi > 1) {
      out.kept_.push_back(i);
      q.push_back(qi);
    }
  }
  const std::size_t k = out.kept_.size();
  out.W_.assign(N, Row(k));
  for (std::size_t p = 0; p < N; ++p)
    for (std::size_t t = 0; t < k; ++t) out.W_[p][t] = W[p][out.kept_[t]];
  for (std::size_t t = 0; t < k; ++t) out.f_.push_back(Winv[out.kept_[t]]);
  if (k == 0) {
    out.sub_ = decompose_vector_subgroup({}, {});
    return out;
  }

  // step 2: psi(f_t) = delta^2 f_t on triples with g a generator (the set of g
  // satisfying the identity is closed under products), scaled into Z/e
  auto value = [&](const Row& f, int g, int h) -> int {
    if (g == 0 || h == 0) return 0;
    AbElem v(r);
    for (std::size_t j = 0; j < r; ++j) v[j] = md(f[col(g, h, j)], d[j]);
    return static_cast<int>(A.index_of(v));
  };
  const auto& gens = Gamma.generators();
  const std::size_t T = gens.size() * m * m * r;
  Mat Psi(k, Row(T, 0));
  for (std::size_t t = 0; t < k; ++t) {
    const Row& f = out.f_[t];
    std::size_t c = 0;
    for (int g : gens)
      for (int h = 1; h < n; ++h)
        for (int kk = 1; kk < n; ++kk) {
          const int lhs = ar.add(ar.apply(g, value(f, h, kk)), value(f, g, Gamma.mul(h, kk)));
          const int rhs = ar.add(value(f, Gamma.mul(g, h), kk), value(f, g, h));
          const AbElem& dv = ar.els[ar.sub(lhs, rhs)];
          for (std::size_t j = 0; j < r; ++j) Psi[t][c++] = md(dv[j] * (e / d[j]), e);
        }
  }

  // step 3: kernel of y -> y Psi over Z/e
  Mat U = identity(k);
  smith_mod(Psi, T, e, &U, nullptr, nullptr);
  std::vector<AbElem> kgens;
  for (std::size_t i = 0; i < k; ++i) {
    const std::int64_t Dii = i < T ? Psi[i][i] : 0;
    const std::int64_t factor = e / std::gcd(e, Dii);
    AbElem v(k);
    bool nz = false;
    for (std::size_t t = 0; t < k; ++t) {
      v[t] = md(factor * U[i][t], q[t]);
      nz = nz || v[t] != 0;
    }
    if (nz) kgens.push_back(std::move(v));
  }
  out.sub_ = decompose_vector_subgroup(q, kgens);
  return out;
}

CocycleClass H2::representative(std::int64_t class_index) const {
  const int n = gamma_.order();
  CocycleClass cc{gamma_, A_, act_, std::vector<int>(static_cast<std::size_t>(n) * n, 0)};
  if (class_index < 0 || class_index >= size()) throw InvalidArgument("class index out of range");
  if (kept_.empty()) return cc;
  const AbElem& y = sub_.elements[static_cast<std::size_t>(class_index)];
  const auto& d = A_.invariant_factors();
  const std::size_t r = d.size(), m = static_cast<std::size_t>(n - 1);
  for (int g = 1; g < n; ++g)
    for (int h = 1; h < n; ++h) {
      AbElem v(r, 0);
      for (std::size_t j = 0; j < r; ++j) {
        const std::size_t c = ((g - 1) * m + (h - 1)) * r + j;
        std::int64_t s = 0;
        for (std::size_t t = 0; t < y.size(); ++t) s = md(s + y[t] * f_[t][c], e_);
        v[j] = md(s, d[j]);
      }
      cc.cocycle[static_cast<std::size_t>(g) * n + h] = static_cast<int>(A_.index_of(v));
    }
  return cc;
}

std::int64_t H2::class_of(const std::vector<int>& c) const {
  if (!is_normalized_cocycle(gamma_, A_, act_, c)) throw InvalidArgument("not a normalized 2-cocycle");
  if (kept_.empty()) return 0;
  const int n = gamma_.order();
  const auto& d = A_.invariant_factors();
  const std::size_t r = d.size(), m = static_cast<std::size_t>(n - 1);
  AbElem y(kept_.size(), 0);
  for (int g = 1; g < n; ++g)
    for (int h = 1; h < n; ++h) {
      const AbElem v = A_.element(c[static_cast<std::size_t>(g) * n + h]);
      for (std::size_t j = 0; j < r; ++j) {
        if (v[j] == 0) continue;
        const std::size_t p = ((g - 1) * m + (h - 1)) * r + j;
        for (std::size_t t = 0; t < y.size(); ++t) y[t] = md(y[t] + v[j] * W_[p][t], e_);
      }
    }
  for (std::size_t t = 0; t < y.size(); ++t) y[t] = md(y[t], sub_.moduli[t]);
  auto it = sub_.coords.find(y);
  if (it == sub_.coords.end()) throw InvalidArgument("cocycle class lies outside H^2 (internal inconsistency)");
  return sub_.group.index_of(it->second);
}

FiniteGroup extension_group(const FiniteGroup& Gamma, const FinAbGroup& A, const ModuleAction& act,
                            const std::vector<int>& c) {
  const int n = Gamma.order();
  const int na = static_cast<int>(A.order());
  if (static_cast<int>(c.size()) != n * n) throw InvalidArgument("cocycle has the wrong size");
  const Arith ar(A, act);
  return FiniteGroup::from_mul(na * n, [&](int x, int y) {
    const int a = x % na, g = x / na, b = y % na, h = y / na;
    const int v = ar.add(ar.add(a, ar.apply(g, b)), c[g * n + h]);
    return v + na * Gamma.mul(g, h);
  });
}

}  // namespace stacky
