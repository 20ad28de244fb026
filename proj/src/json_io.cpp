#include "stacky/json_io.hpp"

#include "stacky/abelian.hpp"
#include "stacky/errors.hpp"
#include "stacky/group_io.hpp"

namespace stacky {

namespace {

template <class T>
T get_as(const Json& j, const char* key, const T& fallback) {
  if (!j.contains(key)) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("field ") + key, e.what());
  }
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.byte, "JSON", e.what());
  }
}

Json group_to_json(const FiniteGroup& G) {
  Json j;
  j["name"] = G.name();
  j["order"] = G.order();
  j["text"] = format_group_text(G);
  return j;
}

FiniteGroup group_from_json(const Json& j) {
  if (j.is_string()) return parse_group_spec(j.get<std::string>());
  if (!j.is_object()) throw ParseError(0, "group string or object", "unexpected JSON value");
  FiniteGroup G;
  if (j.contains("text")) {
    G = parse_group_text(get_as<std::string>(j, "text", ""));
  } else if (j.contains("table")) {
    const auto rows = get_as<std::vector<std::vector<int>>>(j, "table", {});
    const int n = static_cast<int>(rows.size());
    for (const auto& r : rows)
      if (static_cast<int>(r.size()) != n) throw ParseError(0, "square table", "ragged multiplication table");
    std::string text = "table " + std::to_string(n);
    for (const auto& r : rows) {
      text += ";";
      for (int v : r) text += " " + std::to_string(v);
    }
    G = parse_group_text(text);
  } else if (j.contains("spec")) {
    G = parse_group_spec(get_as<std::string>(j, "spec", ""));
  } else {
    throw ParseError(0, "\"text\", \"table\" or \"spec\"", "group object has no content");
  }
  if (j.contains("name")) G.set_name(get_as<std::string>(j, "name", ""));
  return G;
}

std::string describe_group(const FiniteGroup& G) {
  if (G.order() == 1) return "1";
  if (G.is_abelian()) return decompose_abelian_group(G).group.str();
  const std::string n = G.name().empty() ? "G" : G.name();
  return n + " (order " + std::to_string(G.order()) + ")";
}

Json crossed_module_to_json(const CrossedModule& X) {
  Json j;
  j["G2"] = group_to_json(X.G2);
  j["G1"] = group_to_json(X.G1);
  j["phi"] = X.phi;
  j["action"] = X.action;
  return j;
}

CrossedModule crossed_module_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("G2") || !j.contains("G1"))
    throw ParseError(0, "{G2, G1, phi, action}", "crossed module object is incomplete");
  FiniteGroup G2 = group_from_json(j.at("G2")), G1 = group_from_json(j.at("G1"));
  auto phi = get_as<std::vector<int>>(j, "phi", std::vector<int>(G2.order(), 0));
  auto action = j.contains("action") ? get_as<std::vector<std::vector<int>>>(j, "action", {}) : trivial_action(G2, G1);
  return new_crossed_module(std::move(G2), std::move(G1), std::move(phi), std::move(action));
}

OrbifoldInput orbifold_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError(0, "orbifold object", "expected a JSON object");
  OrbifoldInput in;
  const int g = get_as<int>(j, "genus", 0);
  const int l = get_as<int>(j, "punctures", 0);
  in.curve = OrbifoldCurveData(g, get_as<std::vector<int>>(j, "orders", {}), l);
  in.compact = get_as<bool>(j, "compact", l == 0);
  in.gerbe_degree = get_as<std::int64_t>(j, "gerbe_degree", 1);
  return in;
}

Json qmodz_list(const std::vector<QmodZ>& v) {
  Json a = Json::array();
  for (const QmodZ& q : v) a.push_back(q.str());
  return a;
}

}  // namespace stacky
