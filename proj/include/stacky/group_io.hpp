#pragma once

#include <string>

#include "stacky/finite_group.hpp"

namespace stacky {

/// Text format:
///   perm <degree>            followed by one generator per line, disjoint cycles, e.g. (0 1 2)(3 4)
///   table <n>                followed by n rows of n indices
/// Lines may also be separated by ';'.
FiniteGroup parse_group_text(const std::string& text);
std::string format_group_text(const FiniteGroup& G);

Perm parse_cycles(const std::string& s, int degree);
std::string format_cycles(const Perm& p);

/// Named presets Zn, Dn (order 2n), Sn, An, Q8 and products joined by 'x'
/// (e.g. "Z2xS3"); otherwise the text format above; "@path" reads a file.
FiniteGroup parse_group_spec(const std::string& spec);

}  // namespace stacky
