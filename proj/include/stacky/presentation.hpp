#pragma once

#include <string>
#include <vector>

#include "stacky/abelian.hpp"
#include "stacky/finite_group.hpp"

namespace stacky {

/// Letters are signed 1-based generator indices: +k is generator k-1, -k its inverse.
using Word = std::vector<int>;

Word free_reduce(const Word& w);
Word word_inverse(const Word& w);
Word word_power(const Word& w, int k);
/// [x,y] = x^-1 y^-1 x y
Word word_commutator(const Word& x, const Word& y);
Word word_concat(const Word& a, const Word& b);

class GroupPresentation {
 public:
  GroupPresentation() = default;
  /// Relators are freely reduced; empty relators are dropped.
  GroupPresentation(std::vector<std::string> gens, const std::vector<Word>& relators);

  const std::vector<std::string>& gens() const { return gens_; }
  const std::vector<Word>& relators() const { return relators_; }
  std::size_t num_gens() const { return gens_.size(); }

  friend bool operator==(const GroupPresentation&, const GroupPresentation&) = default;

 private:
  std::vector<std::string> gens_;
  std::vector<Word> relators_;
};

/// Grammar:
///   presentation := '<' [ident {',' ident}] ['|' [relator {',' relator}]] '>'
///   relator      := word ['=' word]
///   word         := '1' | factor {['*'] factor}
///   factor       := atom ['^' ['-'] digits]
///   atom         := ident | '(' word ')' | '[' word ',' word ']'
///   ident        := letter {letter | digit | '_'}
/// Whitespace is ignored between tokens.
GroupPresentation parse_presentation(const std::string& text);
std::string format_word(const GroupPresentation& P, const Word& w);
std::string format_presentation(const GroupPresentation& P);

struct Abelianization {
  std::size_t free_rank = 0;
  FinAbGroup torsion;
};

Abelianization abelianization(const GroupPresentation& P);

/// Presentation of a finite group on its generators(): one relator per
/// non-tree edge of the word tree.  Generator names are prefix + index.
GroupPresentation table_presentation(const FiniteGroup& G, const std::string& prefix);
/// Word over generators(), offset letters by `offset` generator slots.
Word element_word(const FiniteGroup& G, int x, int offset = 0);

/// Evaluates a word given images of the generators in G.
int evaluate_word(const FiniteGroup& G, const Word& w, const std::vector<int>& images);

}  // namespace stacky
