#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "stacky/finite_group.hpp"
#include "stacky/presentation.hpp"

namespace stacky {

inline constexpr std::int64_t kDefaultMaxCosets = 1'000'000;

/// Result of a coset enumeration.  When finite, table[c][col] is the coset
/// reached from c by the letter of column col, where generator i has column
/// 2i and its inverse 2i+1.  Coset 0 is the subgroup itself.
struct CosetEnumeration {
  bool finite = false;
  std::int64_t index = 0;
  std::vector<std::vector<int>> table;
};

/// HLT enumeration with deduction processing.  Gives up (finite = false) when
/// more than max_cosets cosets are live at once.
CosetEnumeration todd_coxeter(const GroupPresentation& P, const std::vector<Word>& subgroup_words,
                              std::int64_t max_cosets = kDefaultMaxCosets);

/// The group defined by P realised through its regular coset action.
struct FiniteQuotient {
  FiniteGroup group;
  /// Element of `group` for each generator of P.
  std::vector<int> gen_images;
};

/// nullopt when the enumeration does not close within max_cosets.
/// Throws OrderBoundExceeded if the group order exceeds bound.
std::optional<FiniteQuotient> finite_group_of(const GroupPresentation& P, std::int64_t max_cosets = kDefaultMaxCosets,
                                              int bound = kDefaultGroupBound);

}  // namespace stacky
