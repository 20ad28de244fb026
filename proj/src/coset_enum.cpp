#include "stacky/coset_enum.hpp"

#include <cstdlib>

#include "stacky/errors.hpp"

namespace stacky {

namespace {

int col_of(int letter) { return 2 * (std::abs(letter) - 1) + (letter < 0 ? 1 : 0); }

struct LimitHit {};

class Enumerator {
 public:
  Enumerator(const GroupPresentation& P, std::int64_t max_cosets)
      : ncols_(2 * static_cast<int>(P.num_gens())), max_(max_cosets) {
    for (const Word& r : P.relators()) {
      Cols c;
      for (int x : r) c.push_back(col_of(x));
      rels_.push_back(c);
    }
    // cyclic conjugates of relators and their inverses, bucketed by first letter
    by_first_.resize(ncols_);
    for (const Cols& r : rels_) {
      for (int inverse = 0; inverse < 2; ++inverse) {
        Cols w = r;
        if (inverse) {
          w.assign(r.rbegin(), r.rend());
          for (int& c : w) c ^= 1;
        }
        for (std::size_t s = 0; s < w.size(); ++s) {
          Cols rot(w.begin() + s, w.end());
          rot.insert(rot.end(), w.begin(), w.begin() + s);
          by_first_[rot[0]].push_back(std::move(rot));
        }
      }
    }
    new_coset();
  }

  CosetEnumeration run(const std::vector<Word>& subgroup_words) {
    CosetEnumeration out;
    try {
      for (const Word& w : subgroup_words) {
        Cols c;
        for (int x : free_reduce(w)) c.push_back(col_of(x));
        if (!c.empty()) scan_and_fill(0, c);
        process_deductions();
      }
      for (;;) {
        for (int c = 0; c < static_cast<int>(live_.size()); ++c) {
          if (!alive(c)) continue;
          for (const Cols& r : rels_) {
            scan_and_fill(c, r);
            process_deductions();
            if (!alive(c)) break;
          }
          if (!alive(c)) continue;
          for (int x = 0; x < ncols_ && alive(c); ++x)
            if (at(c, x) < 0) {
              define(c, x);
              process_deductions();
            }
          if (dead_ * 4 > static_cast<std::int64_t>(live_.size())) c = compact(c);
        }
        if (closed()) break;
      }
    } catch (const LimitHit&) {
      return out;
    }
    compact(0);
    out.finite = true;
    out.index = static_cast<std::int64_t>(live_.size());
    out.table.resize(live_.size());
    for (std::size_t c = 0; c < live_.size(); ++c)
      out.table[c].assign(tab_.begin() + static_cast<std::ptrdiff_t>(c * ncols_),
                          tab_.begin() + static_cast<std::ptrdiff_t>((c + 1) * ncols_));
    return out;
  }

 private:
  using Cols = std::vector<int>;

  int& at(int c, int x) { return tab_[static_cast<std::size_t>(c) * ncols_ + x]; }
  bool alive(int c) const { return live_[c] == c; }

  int new_coset() {
    if (static_cast<std::int64_t>(live_.size()) - dead_ >= max_) throw LimitHit{};
    const int d = static_cast<int>(live_.size());
    live_.push_back(d);
    tab_.resize(tab_.size() + ncols_, -1);
    return d;
  }

  void define(int c, int x) {
    const int d = new_coset();
    at(c, x) = d;
    at(d, x ^ 1) = c;
    deductions_.push_back({c, x});
  }

  int rep(int c) {
    int r = c;
    while (live_[r] != r) r = live_[r];
    while (live_[c] != r) {
      const int n = live_[c];
      live_[c] = r;
      c = n;
    }
    return r;
  }

  void merge(int a, int b) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    live_[b] = a;
    ++dead_;
    queue_.push_back(b);
  }

  void coincidence(int a, int b) {
    merge(a, b);
    for (std::size_t q = 0; q < queue_.size(); ++q) {
      const int e = queue_[q];
      for (int x = 0; x < ncols_; ++x) {
        const int f = at(e, x);
        if (f < 0) continue;
        if (at(f, x ^ 1) == e) at(f, x ^ 1) = -1;
        const int e1 = rep(e), f1 = rep(f);
        if (at(e1, x) >= 0) {
          merge(f1, at(e1, x));
        } else if (at(f1, x ^ 1) >= 0) {
          merge(e1, at(f1, x ^ 1));
        } else {
          at(e1, x) = f1;
          at(f1, x ^ 1) = e1;
          deductions_.push_back({e1, x});
        }
      }
    }
    queue_.clear();
  }

  // Traces w from c forwards and backwards; fill = define missing cosets.
  void trace(int c, const Cols& w, bool fill) {
    int f = c, b = c;
    int i = 0, j = static_cast<int>(w.size()) - 1;
    for (;;) {
      while (i <= j && at(f, w[i]) >= 0) f = at(f, w[i++]);
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && at(b, w[j] ^ 1) >= 0) b = at(b, w[j--] ^ 1);
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        at(f, w[i]) = b;
        at(b, w[i] ^ 1) = f;
        deductions_.push_back({f, w[i]});
        return;
      }
      if (!fill) return;
      define(f, w[i]);
    }
  }

  void scan_and_fill(int c, const Cols& w) { trace(c, w, true); }

  void process_deductions() {
    while (!deductions_.empty()) {
      auto [c, x] = deductions_.back();
      deductions_.pop_back();
      if (!alive(c)) continue;
      for (const Cols& r : by_first_[x]) {
        trace(c, r, false);
        if (!alive(c)) break;
      }
      const int d = at(c, x);
      if (d < 0 || !alive(d)) continue;
      for (const Cols& r : by_first_[x ^ 1]) {
        trace(d, r, false);
        if (!alive(d)) break;
      }
    }
  }

  bool closed() {
    for (int c = 0; c < static_cast<int>(live_.size()); ++c) {
      if (!alive(c)) continue;
      for (int x = 0; x < ncols_; ++x)
        if (at(c, x) < 0) return false;
      for (const Cols& r : rels_) {
        int f = c;
        for (int x : r) f = at(f, x);
        if (f != c) return false;
      }
    }
    return true;
  }

  // Renumbers live cosets in order; returns the new index of `keep`
  // (or of the first live coset before it).
  int compact(int keep) {
    if (dead_ == 0) return keep;
    std::vector<int> renum(live_.size(), -1);
    int n = 0, kept = -1;
    for (std::size_t c = 0; c < live_.size(); ++c) {
      if (live_[c] == static_cast<int>(c)) renum[c] = n++;
      if (static_cast<int>(c) <= keep && renum[c] >= 0) kept = renum[c];
    }
    std::vector<int> tab(static_cast<std::size_t>(n) * ncols_);
    for (std::size_t c = 0; c < live_.size(); ++c) {
      if (renum[c] < 0) continue;
      for (int x = 0; x < ncols_; ++x) {
        const int t = tab_[c * ncols_ + x];
        tab[static_cast<std::size_t>(renum[c]) * ncols_ + x] = t < 0 ? -1 : renum[t];
      }
    }
    tab_ = std::move(tab);
    live_.resize(n);
    for (int c = 0; c < n; ++c) live_[c] = c;
    dead_ = 0;
    deductions_.clear();
    return kept;
  }

  int ncols_;
  std::int64_t max_;
  std::vector<Cols> rels_;
  std::vector<std::vector<Cols>> by_first_;
  std::vector<int> tab_;
  std::vector<int> live_;  // union-find parent; live iff live_[c] == c
  std::int64_t dead_ = 0;
  std::vector<int> queue_;
  std::vector<std::pair<int, int>> deductions_;
};

}  // namespace

CosetEnumeration todd_coxeter(const GroupPresentation& P, const std::vector<Word>& subgroup_words,
                              std::int64_t max_cosets) {
  if (max_cosets < 1) throw InvalidArgument("max_cosets must be at least 1");
  if (P.num_gens() == 0) {
    CosetEnumeration out;
    out.finite = true;
    out.index = 1;
    out.table.assign(1, {});
    return out;
  }
  return Enumerator(P, max_cosets).run(subgroup_words);
}

std::optional<FiniteQuotient> finite_group_of(const GroupPresentation& P, std::int64_t max_cosets, int bound) {
  const CosetEnumeration ce = todd_coxeter(P, {}, max_cosets);
  if (!ce.finite) return std::nullopt;
  if (ce.index > bound) throw OrderBoundExceeded("group order " + std::to_string(ce.index) + " exceeds bound");
  const int n = static_cast<int>(ce.index);
  std::vector<Perm> gens;
  for (std::size_t g = 0; g < P.num_gens(); ++g) {
    Perm p(n);
    for (int c = 0; c < n; ++c) p[c] = ce.table[c][2 * g];
    gens.push_back(std::move(p));
  }
  FiniteQuotient q;
  if (n == 1) {
    q.gen_images.assign(P.num_gens(), 0);
    return q;
  }
  q.group = group_from_permutations(n, gens, bound);
  for (const Perm& p : gens) q.gen_images.push_back(q.group.find_perm(p));
  return q;
}

}  // namespace stacky
