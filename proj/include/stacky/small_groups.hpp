#pragma once

#include <string>
#include <vector>

#include "stacky/finite_group.hpp"

namespace stacky {

/// All groups of the given order up to isomorphism, for 1 <= order <= 32.
/// Built as cyclic extensions of groups of prime index and deduplicated by
/// isomorphism test.  Results are cached; the list order is deterministic.
/// Names are "G<order>_<k>" with k counting from 1.
const std::vector<FiniteGroup>& groups_of_order(int order);

/// Panel "small24": all groups of order <= 24 (74 of them) followed by A5.
/// Panel "minimal": a short list of common groups.
std::vector<FiniteGroup> group_panel(const std::string& name);

/// Cyclic extension of N by Z_p: elements t^i n (0 <= i < p), with
/// t^-1 n t = theta(n) and t^p = a.  Requires theta(a) = a and theta^p(x) = a^-1 x a.
FiniteGroup cyclic_extension(const FiniteGroup& N, const std::vector<int>& theta, int a, int p);

}  // namespace stacky
