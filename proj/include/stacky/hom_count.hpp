#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stacky/finite_group.hpp"
#include "stacky/int_matrix.hpp"
#include "stacky/presentation.hpp"

namespace stacky {

inline constexpr std::int64_t kDefaultHomBudget = 100'000'000;

/// Node budget for hom_count: the explicit value if given, else STACKY_BUDGET
/// from the environment, else kDefaultHomBudget.
std::int64_t resolve_budget(std::optional<std::int64_t> budget);

/// Number of homomorphisms P -> G.  Throws BudgetExceeded when the search
/// visits more than `budget` nodes.
BigInt hom_count(const GroupPresentation& P, const FiniteGroup& G, std::optional<std::int64_t> budget = std::nullopt);

struct HomCountProfile {
  std::vector<std::pair<std::string, BigInt>> counts;  // (group name, count)
  friend bool operator==(const HomCountProfile&, const HomCountProfile&) = default;
};

/// Empty panel means the default panel (all groups of order <= 24 plus A5).
HomCountProfile hom_profile(const GroupPresentation& P, const std::vector<FiniteGroup>& panel = {},
                            std::optional<std::int64_t> budget = std::nullopt);

}  // namespace stacky
