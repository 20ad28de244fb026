#include "stacky/presentation.hpp"

#include <cctype>
#include <cstdlib>
#include <map>

#include "stacky/errors.hpp"
#include "stacky/int_matrix.hpp"

namespace stacky {

Word free_reduce(const Word& w) {
  Word out;
  for (int x : w) {
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  }
  return out;
}

Word word_inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (int& x : out) x = -x;
  return out;
}

Word word_power(const Word& w, int k) {
  const Word base = k < 0 ? word_inverse(w) : w;
  Word out;
  for (int i = 0; i < std::abs(k); ++i) out.insert(out.end(), base.begin(), base.end());
  return free_reduce(out);
}

Word word_concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return free_reduce(out);
}

Word word_commutator(const Word& x, const Word& y) {
  return word_concat(word_concat(word_inverse(x), word_inverse(y)), word_concat(x, y));
}

GroupPresentation::GroupPresentation(std::vector<std::string> gens, const std::vector<Word>& relators)
    : gens_(std::move(gens)) {
  const int n = static_cast<int>(gens_.size());
  for (const Word& r : relators) {
    for (int x : r)
      if (x == 0 || std::abs(x) > n) throw InvalidArgument("relator letter references a missing generator");
    Word w = free_reduce(r);
    if (!w.empty()) relators_.push_back(std::move(w));
  }
}

namespace {

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  GroupPresentation run() {
    expect('<', "'<'");
    std::vector<std::string> gens;
    skip();
    if (peek() != '|' && peek() != '>') {
      gens.push_back(ident());
      while (accept(',')) gens.push_back(ident());
    }
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (index_.count(gens[i])) throw ParseError(pos_, "distinct generator names", "duplicate generator '" + gens[i] + "'");
      index_[gens[i]] = static_cast<int>(i) + 1;
    }
    std::vector<Word> rels;
    if (accept('|')) {
      skip();
      if (peek() != '>') {
        rels.push_back(relator());
        while (accept(',')) rels.push_back(relator());
      }
    }
    expect('>', "',' or '>'");
    skip();
    if (pos_ != s_.size()) throw ParseError(pos_, "end of input", "trailing characters");
    return GroupPresentation(gens, rels);
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c, const std::string& what) {
    if (!accept(c)) throw ParseError(pos_, what, pos_ < s_.size() ? std::string("unexpected '") + s_[pos_] + "'" : "unexpected end of input");
  }
  std::string ident() {
    skip();
    const std::size_t start = pos_;
    if (pos_ >= s_.size() || !std::isalpha(static_cast<unsigned char>(s_[pos_])))
      throw ParseError(pos_, "generator name", "identifier must start with a letter");
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    return s_.substr(start, pos_ - start);
  }
  Word relator() {
    Word w = word();
    if (accept('=')) w = word_concat(w, word_inverse(word()));
    return w;
  }
  bool starts_factor() {
    const char c = peek();
    return std::isalpha(static_cast<unsigned char>(c)) || c == '(' || c == '[';
  }
  Word word() {
    if (peek() == '1') {
      ++pos_;
      return {};
    }
    if (!starts_factor()) throw ParseError(pos_, "generator, '(', '[' or '1'", "expected a word");
    Word w = factor();
    for (;;) {
      if (accept('*')) {
        w = word_concat(w, factor());
      } else if (starts_factor()) {
        w = word_concat(w, factor());
      } else {
        break;
      }
    }
    return w;
  }
  Word factor() {
    Word a = atom();
    if (accept('^')) {
      skip();
      bool neg = false;
      if (pos_ < s_.size() && s_[pos_] == '-') {
        neg = true;
        ++pos_;
      }
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) throw ParseError(pos_, "integer exponent", "missing exponent");
      if (pos_ - start > 6) throw ParseError(start, "exponent below 10^6", "exponent too large");
      const int k = std::stoi(s_.substr(start, pos_ - start));
      a = word_power(a, neg ? -k : k);
    }
    return a;
  }
  Word atom() {
    skip();
    if (accept('(')) {
      Word w = word();
      expect(')', "')'");
      return w;
    }
    if (accept('[')) {
      Word x = word();
      expect(',', "','");
      Word y = word();
      expect(']', "']'");
      return word_commutator(x, y);
    }
    const std::size_t at = pos_;
    const std::string name = ident();
    auto it = index_.find(name);
    if (it == index_.end()) throw ParseError(at, "declared generator", "unknown generator '" + name + "'");
    return {it->second};
  }

  const std::string& s_;
  std::size_t pos_ = 0;
  std::map<std::string, int> index_;
};

}  // namespace

GroupPresentation parse_presentation(const std::string& text) { return Parser(text).run(); }

std::string format_word(const GroupPresentation& P, const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    const int run = static_cast<int>(j - i);
    const int e = w[i] > 0 ? run : -run;
    if (!out.empty()) out += "*";
    out += P.gens()[std::abs(w[i]) - 1];
    if (e != 1) out += "^" + std::to_string(e);
    i = j;
  }
  return out;
}

std::string format_presentation(const GroupPresentation& P) {
  std::string out = "<";
  for (std::size_t i = 0; i < P.gens().size(); ++i) out += (i ? ", " : "") + P.gens()[i];
  out += " | ";
  for (std::size_t i = 0; i < P.relators().size(); ++i) out += (i ? ", " : "") + format_word(P, P.relators()[i]);
  out += ">";
  return out;
}

Abelianization abelianization(const GroupPresentation& P) {
  const std::size_t n = P.num_gens();
  IntMatrix M(P.relators().size(), n);
  for (std::size_t i = 0; i < P.relators().size(); ++i)
    for (int x : P.relators()[i]) M(i, std::abs(x) - 1) += x > 0 ? 1 : -1;
  Abelianization ab;
  std::vector<std::int64_t> tors;
  for (const auto& d : cokernel_invariants(M)) {
    if (d == 0)
      ++ab.free_rank;
    else
      tors.push_back(static_cast<std::int64_t>(d));
  }
  ab.torsion = FinAbGroup(tors);
  return ab;
}

Word element_word(const FiniteGroup& G, int x, int offset) {
  Word w;
  while (x != 0) {
    w.push_back(G.parent_gen(x) + 1 + offset);
    x = G.parent(x);
  }
  return Word(w.rbegin(), w.rend());
}

GroupPresentation table_presentation(const FiniteGroup& G, const std::string& prefix) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < G.generators().size(); ++i) names.push_back(prefix + std::to_string(i + 1));
  std::vector<Word> rels;
  for (int x = 0; x < G.order(); ++x)
    for (std::size_t k = 0; k < G.generators().size(); ++k) {
      const int y = G.mul(x, G.generators()[k]);
      if (G.parent(y) == x && G.parent_gen(y) == static_cast<int>(k)) continue;  // tree edge
      Word w = element_word(G, x);
      w.push_back(static_cast<int>(k) + 1);
      rels.push_back(word_concat(w, word_inverse(element_word(G, y))));
    }
  return GroupPresentation(names, rels);
}

int evaluate_word(const FiniteGroup& G, const Word& w, const std::vector<int>& images) {
  int r = 0;
  for (int x : w) {
    const int g = images.at(std::abs(x) - 1);
    r = G.mul(r, x > 0 ? g : G.inv(g));
  }
  return r;
}

}  // namespace stacky
