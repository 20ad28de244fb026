#include "stacky/abelian.hpp"

#include "stacky/errors.hpp"
#include "stacky/int_matrix.hpp"

namespace stacky {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) {
  a %= m;
  return a < 0 ? a + m : a;
}

std::int64_t mod_big(const BigInt& a, std::int64_t m) {
  BigInt r = a % m;
  if (r < 0) r += m;
  return static_cast<std::int64_t>(r);
}

}  // namespace

FinAbGroup::FinAbGroup(std::vector<std::int64_t> invariant_factors) : d_(std::move(invariant_factors)) {
  for (std::size_t i = 0; i < d_.size(); ++i) {
    if (d_[i] < 2) throw InvalidArgument("invariant factors must be at least 2");
    if (i && d_[i] % d_[i - 1] != 0) throw InvalidArgument("invariant factors must form a divisibility chain");
  }
}

FinAbGroup FinAbGroup::from_cyclic_factors(const std::vector<std::int64_t>& orders) {
  IntMatrix m(orders.size(), orders.size());
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (orders[i] < 1) throw InvalidArgument("cyclic factor orders must be positive");
    m(i, i) = orders[i];
  }
  std::vector<std::int64_t> d;
  for (const auto& x : cokernel_invariants(m)) d.push_back(static_cast<std::int64_t>(x));
  return FinAbGroup(d);
}

std::int64_t FinAbGroup::order() const {
  std::int64_t n = 1;
  for (auto x : d_) n *= x;
  return n;
}

AbElem FinAbGroup::unit(std::size_t i) const {
  AbElem e = zero();
  e.at(i) = 1;
  return e;
}

AbElem FinAbGroup::add(const AbElem& a, const AbElem& b) const {
  AbElem c(d_.size());
  for (std::size_t i = 0; i < d_.size(); ++i) c[i] = mod(a[i] + b[i], d_[i]);
  return c;
}

AbElem FinAbGroup::neg(const AbElem& a) const {
  AbElem c(d_.size());
  for (std::size_t i = 0; i < d_.size(); ++i) c[i] = mod(-a[i], d_[i]);
  return c;
}

AbElem FinAbGroup::scale(std::int64_t k, const AbElem& a) const {
  AbElem c(d_.size());
  for (std::size_t i = 0; i < d_.size(); ++i) c[i] = mod(mod(k, d_[i]) * a[i], d_[i]);
  return c;
}

AbElem FinAbGroup::reduce(AbElem a) const {
  if (a.size() != d_.size()) throw InvalidArgument("element has wrong length for " + str());
  for (std::size_t i = 0; i < d_.size(); ++i) a[i] = mod(a[i], d_[i]);
  return a;
}

std::int64_t FinAbGroup::elem_order(const AbElem& a) const {
  std::int64_t o = 1;
  for (std::size_t i = 0; i < d_.size(); ++i) o = std::lcm(o, d_[i] / std::gcd(d_[i], mod(a[i], d_[i])));
  return o;
}

std::int64_t FinAbGroup::index_of(const AbElem& a) const {
  std::int64_t idx = 0, radix = 1;
  for (std::size_t i = 0; i < d_.size(); ++i) {
    idx += mod(a[i], d_[i]) * radix;
    radix *= d_[i];
  }
  return idx;
}

AbElem FinAbGroup::element(std::int64_t index) const {
  AbElem a(d_.size());
  for (std::size_t i = 0; i < d_.size(); ++i) {
    a[i] = index % d_[i];
    index /= d_[i];
  }
  return a;
}

std::vector<AbElem> FinAbGroup::elements() const {
  std::vector<AbElem> out;
  const auto n = order();
  out.reserve(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) out.push_back(element(i));
  return out;
}

FiniteGroup FinAbGroup::as_finite_group() const {
  const auto n = order();
  if (n > kTableThreshold) throw OrderBoundExceeded("abelian group too large for a table");
  FiniteGroup G = FiniteGroup::from_mul(static_cast<int>(n), [&](int a, int b) {
    return static_cast<int>(index_of(add(element(a), element(b))));
  });
  G.set_name(str() == "0" ? "1" : str());
  return G;
}

std::string FinAbGroup::str() const {
  if (d_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < d_.size(); ++i) s += (i ? "+Z" : "Z") + std::to_string(d_[i]);
  return s;
}

int AbelianDecomposition::label_of(const AbElem& c) const {
  return by_index_.at(static_cast<std::size_t>(group.index_of(c)));
}

namespace {

template <class E>
struct CoreResult {
  FinAbGroup group;
  std::vector<E> elements;
  std::vector<AbElem> coords;
  std::vector<E> basis;
};

// BFS over the generated subgroup recording exponent vectors; the Schreier
// relations go into a lattice whose Smith form gives the invariant factors.
// lookup(e) returns the BFS position of e or -1; record(e, pos) stores it.
template <class E, class Mul, class Lookup, class Record>
CoreResult<E> decompose_core(const E& identity, const std::vector<E>& gens, Mul mul, Lookup lookup, Record record) {
  const std::size_t k = gens.size();
  CoreResult<E> out;
  std::vector<std::vector<std::int64_t>> vec;
  out.elements.push_back(identity);
  vec.emplace_back(k, 0);
  record(identity, 0);
  LatticeBasis rel(k);
  for (std::size_t i = 0; i < out.elements.size(); ++i) {
    for (std::size_t g = 0; g < k; ++g) {
      E y = mul(out.elements[i], gens[g]);
      std::vector<std::int64_t> v = vec[i];
      v[g] += 1;
      const std::int64_t pos = lookup(y);
      if (pos < 0) {
        record(y, static_cast<std::int64_t>(out.elements.size()));
        out.elements.push_back(std::move(y));
        vec.push_back(std::move(v));
      } else {
        const auto& w = vec[pos];
        std::vector<BigInt> r(k);
        bool nz = false;
        for (std::size_t j = 0; j < k; ++j) {
          r[j] = v[j] - w[j];
          nz = nz || r[j] != 0;
        }
        if (nz) rel.insert(std::move(r));
      }
    }
  }
  const IntMatrix R = rel.matrix();
  if (R.rows() < k) throw InvalidArgument("abelian decomposition: group is not finite");
  const SmithForm sf = smith_normal_form(R, false);

  std::vector<std::size_t> keep;
  std::vector<std::int64_t> d;
  for (std::size_t i = 0; i < k; ++i) {
    const BigInt& di = sf.D(i, i);
    if (di == 0) throw InvalidArgument("abelian decomposition: group is not finite");
    if (di > 1) {
      keep.push_back(i);
      d.push_back(static_cast<std::int64_t>(di));
    }
  }
  out.group = FinAbGroup(d);
  out.coords.reserve(out.elements.size());
  for (const auto& v : vec) {
    AbElem c(keep.size());
    for (std::size_t t = 0; t < keep.size(); ++t) {
      BigInt s = 0;
      for (std::size_t j = 0; j < k; ++j)
        if (v[j]) s += v[j] * sf.V(j, keep[t]);
      c[t] = mod_big(s, d[t]);
    }
    out.coords.push_back(std::move(c));
  }
  auto power = [&](const E& g, std::int64_t e) {
    E r = identity;
    for (std::int64_t i = 0; i < e; ++i) r = mul(r, g);
    return r;
  };
  for (std::size_t t = 0; t < keep.size(); ++t) {
    E b = identity;
    for (std::size_t j = 0; j < k; ++j) b = mul(b, power(gens[j], mod_big(sf.Vinv(keep[t], j), out.group.exponent())));
    out.basis.push_back(std::move(b));
  }
  return out;
}

}  // namespace

AbelianDecomposition decompose_abelian(int label_count, int identity, const std::vector<int>& gens,
                                       const std::function<int(int, int)>& mul) {
  AbelianDecomposition out;
  out.label_pos.assign(label_count, -1);
  auto core = decompose_core<int>(
      identity, gens, mul, [&](int x) { return out.label_pos[x]; },
      [&](int x, std::int64_t p) { out.label_pos[x] = p; });
  out.group = core.group;
  out.elements = std::move(core.elements);
  out.coords = std::move(core.coords);
  out.basis = std::move(core.basis);
  out.by_index_.assign(static_cast<std::size_t>(out.group.order()), -1);
  for (std::size_t i = 0; i < out.elements.size(); ++i)
    out.by_index_[static_cast<std::size_t>(out.group.index_of(out.coords[i]))] = out.elements[i];
  return out;
}

AbelianDecomposition abelian_subgroup(const FinAbGroup& A, const std::vector<AbElem>& gens) {
  std::vector<int> g;
  for (const auto& x : gens) g.push_back(static_cast<int>(A.index_of(x)));
  return decompose_abelian(static_cast<int>(A.order()), 0, g, [&A](int a, int b) {
    return static_cast<int>(A.index_of(A.add(A.element(a), A.element(b))));
  });
}

AbelianDecomposition decompose_abelian_group(const FiniteGroup& G) {
  return decompose_abelian(G.order(), 0, G.generators(), [&G](int a, int b) { return G.mul(a, b); });
}

}  // namespace stacky

namespace stacky {

std::size_t AbElemHash::operator()(const AbElem& a) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (auto x : a) h = (h ^ static_cast<std::size_t>(x)) * 0x100000001b3ull;
  return h;
}

VectorSubgroup decompose_vector_subgroup(const std::vector<std::int64_t>& moduli, const std::vector<AbElem>& gens) {
  VectorSubgroup out;
  out.moduli = moduli;
  std::unordered_map<AbElem, std::int64_t, AbElemHash> pos;
  auto add = [&](const AbElem& a, const AbElem& b) {
    AbElem c(moduli.size());
    for (std::size_t i = 0; i < moduli.size(); ++i) c[i] = mod(a[i] + b[i], moduli[i]);
    return c;
  };
  std::vector<AbElem> g;
  for (const auto& x : gens) {
    AbElem y(moduli.size());
    for (std::size_t i = 0; i < moduli.size(); ++i) y[i] = mod(x.at(i), moduli[i]);
    g.push_back(std::move(y));
  }
  auto core = decompose_core<AbElem>(
      AbElem(moduli.size(), 0), g, add,
      [&](const AbElem& x) {
        auto it = pos.find(x);
        return it == pos.end() ? std::int64_t{-1} : it->second;
      },
      [&](const AbElem& x, std::int64_t p) { pos[x] = p; });
  out.group = core.group;
  out.basis = std::move(core.basis);
  out.elements.assign(static_cast<std::size_t>(out.group.order()), {});
  for (std::size_t i = 0; i < core.elements.size(); ++i) {
    out.elements[static_cast<std::size_t>(out.group.index_of(core.coords[i]))] = core.elements[i];
    out.coords.emplace(std::move(core.elements[i]), std::move(core.coords[i]));
  }
  return out;
}

}  // namespace stacky
