#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "stacky/crossed_module.hpp"
#include "stacky/finite_group.hpp"
#include "stacky/orbifold.hpp"
#include "stacky/qmodz.hpp"

namespace stacky {

// insertion order is kept so reports are byte-stable
using Json = nlohmann::ordered_json;

/// {"name", "order", "text"} with text in the group_io format.
Json group_to_json(const FiniteGroup& G);
/// Accepts a preset or text string, {"text": ...}, or {"table": [[...]]}.  Throws ParseError.
FiniteGroup group_from_json(const Json& j);

/// "1" for the trivial group, invariant factors for abelian groups, otherwise
/// the group's name with its order.
std::string describe_group(const FiniteGroup& G);

/// {"G2", "G1", "phi", "action"} with action[x][g] = g^x.
Json crossed_module_to_json(const CrossedModule& X);
/// Validates the result exhaustively.
CrossedModule crossed_module_from_json(const Json& j);

struct OrbifoldInput {
  OrbifoldCurveData curve;
  bool compact = true;
  std::int64_t gerbe_degree = 1;
};
/// {"genus", "orders", "punctures", "compact", "gerbe_degree"}; compact defaults
/// to punctures == 0 and gerbe_degree to 1.
OrbifoldInput orbifold_from_json(const Json& j);

Json qmodz_list(const std::vector<QmodZ>& v);

/// Reads a whole JSON document, turning syntax errors into ParseError.
Json parse_json(const std::string& text);

}  // namespace stacky
