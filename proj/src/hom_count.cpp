#include "stacky/hom_count.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>

#include "stacky/errors.hpp"
#include "stacky/small_groups.hpp"

namespace stacky {

std::int64_t resolve_budget(std::optional<std::int64_t> budget) {
  if (budget) {
    if (*budget < 1) throw InvalidArgument("budget must be positive");
    return *budget;
  }
  if (const char* env = std::getenv("STACKY_BUDGET")) {
    char* end = nullptr;
    const long long v = std::strtoll(env, &end, 10);
    if (end == env || *end != '\0' || v < 1) throw InvalidArgument("STACKY_BUDGET must be a positive integer");
    return v;
  }
  return kDefaultHomBudget;
}

namespace {

Word cyclic_reduce(Word w) {
  w = free_reduce(w);
  std::size_t i = 0, j = w.size();
  while (j - i >= 2 && w[i] == -w[j - 1]) {
    ++i;
    --j;
  }
  return Word(w.begin() + static_cast<std::ptrdiff_t>(i), w.begin() + static_cast<std::ptrdiff_t>(j));
}

// Drops generators that occur exactly once over all relators, together with
// the relator holding them: every assignment of the rest extends uniquely.
// Returns the surviving relators and marks generators that are now free.
std::vector<Word> tietze(std::size_t ngens, std::vector<Word> rels, std::vector<bool>& eliminated) {
  eliminated.assign(ngens, false);
  for (auto& r : rels) r = cyclic_reduce(r);
  rels.erase(std::remove_if(rels.begin(), rels.end(), [](const Word& w) { return w.empty(); }), rels.end());
  for (bool changed = true; changed;) {
    changed = false;
    std::vector<int> occ(ngens, 0), where(ngens, -1);
    for (std::size_t i = 0; i < rels.size(); ++i)
      for (int x : rels[i]) {
        ++occ[std::abs(x) - 1];
        where[std::abs(x) - 1] = static_cast<int>(i);
      }
    for (std::size_t g = 0; g < ngens; ++g)
      if (occ[g] == 1) {
        eliminated[g] = true;
        rels.erase(rels.begin() + where[g]);
        changed = true;
        break;
      }
  }
  return rels;
}

class Counter {
 public:
  Counter(const FiniteGroup& G, std::int64_t budget, std::int64_t& nodes) : G_(G), budget_(budget), nodes_(nodes) {}

  // Counts assignments of `gens` satisfying `rels`; all letters of rels are in gens.
  BigInt count(const std::vector<int>& gens, const std::vector<Word>& rels) {
    const int n = G_.order();
    order_ = gens;
    pos_.clear();
    for (std::size_t i = 0; i < gens.size(); ++i) pos_[gens[i]] = static_cast<int>(i);

    // single-generator relators restrict candidates up front
    cand_.assign(gens.size(), {});
    std::vector<bool> restricted(gens.size(), false);
    std::vector<Word> multi;
    for (const Word& r : rels) {
      bool single = true;
      for (int x : r) single = single && std::abs(x) == std::abs(r[0]);
      if (!single) {
        multi.push_back(r);
        continue;
      }
      const int p = pos_[std::abs(r[0])];
      std::vector<int> keep;
      const std::vector<int> from = restricted[p] ? cand_[p] : all(n);
      std::vector<int> img(std::abs(r[0]), 0);
      for (int g : from) {
        img[std::abs(r[0]) - 1] = g;
        if (evaluate_word(G_, r, img) == 0) keep.push_back(g);
      }
      cand_[p] = std::move(keep);
      restricted[p] = true;
    }
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (!restricted[i]) cand_[i] = all(n);

    // check each relator once its last generator is assigned
    check_at_.assign(gens.size(), {});
    solver_.assign(gens.size(), -1);
    for (const Word& r : multi) {
      int last = 0;
      for (int x : r) last = std::max(last, pos_[std::abs(x)]);
      check_at_[last].push_back(r);
    }
    // a relator in which its last generator occurs once pins that generator down
    for (std::size_t d = 0; d < gens.size(); ++d)
      for (std::size_t k = 0; k < check_at_[d].size(); ++k) {
        const Word& r = check_at_[d][k];
        int occ = 0;
        for (int x : r) occ += pos_[std::abs(x)] == static_cast<int>(d);
        if (occ == 1) {
          solver_[d] = static_cast<int>(k);
          break;
        }
      }
    letter_img_.assign(static_cast<std::size_t>(*std::max_element(gens.begin(), gens.end())) + 1, 0);
    return recurse(0);
  }

 private:
  static std::vector<int> all(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 0);
    return v;
  }

  int eval(const Word& w) const {
    int r = 0;
    for (int x : w) {
      const int g = letter_img_[std::abs(x)];
      r = G_.mul(r, x > 0 ? g : G_.inv(g));
    }
    return r;
  }

  bool relators_hold(std::size_t d) const {
    for (const Word& r : check_at_[d])
      if (eval(r) != 0) return false;
    return true;
  }

  void tick() {
    if (++nodes_ > budget_) throw BudgetExceeded("homomorphism search exceeded budget of " + std::to_string(budget_) + " nodes");
  }

  BigInt recurse(std::size_t d) {
    if (d == order_.size()) return 1;
    const int g = order_[d];
    if (solver_[d] >= 0) {
      // r = u x^e v with x absent from u, v: x^e = u^-1 v^-1
      const Word& r = check_at_[d][solver_[d]];
      std::size_t at = 0;
      while (std::abs(r[at]) != g) ++at;
      const Word u(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(at));
      const Word v(r.begin() + static_cast<std::ptrdiff_t>(at) + 1, r.end());
      int val = G_.inv(G_.mul(eval(v), eval(u)));
      if (r[at] < 0) val = G_.inv(val);
      tick();
      if (!std::binary_search(cand_[d].begin(), cand_[d].end(), val)) return 0;
      letter_img_[g] = val;
      if (!relators_hold(d)) return 0;
      return recurse(d + 1);
    }
    BigInt total = 0;
    for (int val : cand_[d]) {
      tick();
      letter_img_[g] = val;
      if (relators_hold(d)) total += recurse(d + 1);
    }
    return total;
  }

  const FiniteGroup& G_;
  std::int64_t budget_;
  std::int64_t& nodes_;
  std::vector<int> order_;
  std::map<int, int> pos_;
  std::vector<std::vector<int>> cand_;
  std::vector<std::vector<Word>> check_at_;
  std::vector<int> solver_;
  std::vector<int> letter_img_;
};

}  // namespace

BigInt hom_count(const GroupPresentation& P, const FiniteGroup& G, std::optional<std::int64_t> budget) {
  const std::int64_t limit = resolve_budget(budget);
  const std::size_t ngens = P.num_gens();
  std::vector<bool> eliminated;
  const std::vector<Word> rels = tietze(ngens, P.relators(), eliminated);

  // connected components of generators linked by relators
  std::vector<int> comp(ngens);
  std::iota(comp.begin(), comp.end(), 0);
  auto find = [&](int x) {
    while (comp[x] != x) x = comp[x] = comp[comp[x]];
    return x;
  };
  std::vector<bool> used(ngens, false);
  for (const Word& r : rels)
    for (int x : r) {
      used[std::abs(x) - 1] = true;
      comp[find(std::abs(x) - 1)] = find(std::abs(r[0]) - 1);
    }

  BigInt total = 1;
  std::int64_t nodes = 0;
  for (std::size_t g = 0; g < ngens; ++g)
    if (!eliminated[g] && !used[g]) total *= G.order();
  std::map<int, std::pair<std::vector<int>, std::vector<Word>>> parts;
  for (std::size_t g = 0; g < ngens; ++g)
    if (used[g]) parts[find(static_cast<int>(g))].first.push_back(static_cast<int>(g) + 1);
  for (const Word& r : rels) parts[find(std::abs(r[0]) - 1)].second.push_back(r);
  for (auto& [root, part] : parts) {
    Counter c(G, limit, nodes);
    total *= c.count(part.first, part.second);
    if (total == 0) break;
  }
  return total;
}

HomCountProfile hom_profile(const GroupPresentation& P, const std::vector<FiniteGroup>& panel,
                            std::optional<std::int64_t> budget) {
  const std::vector<FiniteGroup> groups = panel.empty() ? group_panel("small24") : panel;
  HomCountProfile out;
  for (const FiniteGroup& G : groups) out.counts.emplace_back(G.name(), hom_count(P, G, budget));
  return out;
}

}  // namespace stacky
