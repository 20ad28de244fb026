#include "stacky/group_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "stacky/errors.hpp"

namespace stacky {

namespace {

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == '\n' || c == ';') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  std::vector<std::string> trimmed;
  for (auto& l : out) {
    const auto a = l.find_first_not_of(" \t\r");
    if (a == std::string::npos) continue;
    const auto b = l.find_last_not_of(" \t\r");
    trimmed.push_back(l.substr(a, b - a + 1));
  }
  return trimmed;
}

int parse_int(const std::string& s, std::size_t& i, const std::string& what) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  const std::size_t start = i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (start == i) throw ParseError(start, what, "no digits");
  if (i - start > 9) throw ParseError(start, what, "number too large");
  return std::stoi(s.substr(start, i - start));
}

}  // namespace

Perm parse_cycles(const std::string& s, int degree) {
  Perm p = perm_identity(degree);
  if (s == "id" || s == "()") return p;
  std::vector<char> moved(degree, 0);
  std::size_t i = 0;
  while (i < s.size()) {
    if (std::isspace(static_cast<unsigned char>(s[i]))) {
      ++i;
      continue;
    }
    if (s[i] != '(') throw ParseError(i, "'('", "bad cycle notation");
    ++i;
    std::vector<int> cyc;
    for (;;) {
      while (i < s.size() && (std::isspace(static_cast<unsigned char>(s[i])) || s[i] == ',')) ++i;
      if (i < s.size() && s[i] == ')') {
        ++i;
        break;
      }
      const std::size_t at = i;
      const int x = parse_int(s, i, "point or ')'");
      if (x >= degree) throw ParseError(at, "point below degree", "point out of range");
      if (moved[x]) throw ParseError(at, "new point", "point repeated across cycles");
      moved[x] = 1;
      cyc.push_back(x);
    }
    for (std::size_t k = 0; k < cyc.size(); ++k) p[cyc[k]] = cyc[(k + 1) % cyc.size()];
  }
  return p;
}

std::string format_cycles(const Perm& p) {
  std::string out;
  std::vector<char> seen(p.size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == static_cast<int>(i)) continue;
    out += "(";
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = 1;
      out += (first ? "" : " ") + std::to_string(j);
      first = false;
      j = static_cast<std::size_t>(p[j]);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

FiniteGroup parse_group_text(const std::string& text) {
  const auto lines = split_lines(text);
  if (lines.empty()) throw ParseError(0, "'perm' or 'table'", "empty group text");
  std::istringstream head(lines[0]);
  std::string kind;
  head >> kind;
  std::size_t pos = kind.size();
  if (kind == "perm") {
    const int deg = parse_int(lines[0], pos, "degree");
    std::vector<Perm> gens;
    for (std::size_t i = 1; i < lines.size(); ++i) gens.push_back(parse_cycles(lines[i], deg));
    if (gens.empty()) gens.push_back(perm_identity(deg));
    return group_from_permutations(deg, gens);
  }
  if (kind == "table") {
    const int n = parse_int(lines[0], pos, "order");
    if (static_cast<int>(lines.size()) != n + 1) throw ParseError(lines[0].size(), "n table rows", "wrong number of rows");
    std::vector<std::vector<int>> t;
    for (int r = 0; r < n; ++r) {
      std::vector<int> row;
      std::size_t i = 0;
      const std::string& l = lines[r + 1];
      while (i < l.size()) {
        if (std::isspace(static_cast<unsigned char>(l[i])) || l[i] == ',') {
          ++i;
          continue;
        }
        row.push_back(parse_int(l, i, "table entry"));
      }
      t.push_back(std::move(row));
    }
    return FiniteGroup::from_table(std::move(t));
  }
  throw ParseError(0, "'perm' or 'table'", "unknown group format '" + kind + "'");
}

std::string format_group_text(const FiniteGroup& G) {
  std::ostringstream os;
  if (G.has_perms()) {
    os << "perm " << G.degree() << "\n";
    for (int g : G.generators()) os << format_cycles(G.perm(g)) << "\n";
    return os.str();
  }
  os << "table " << G.order() << "\n";
  for (int a = 0; a < G.order(); ++a) {
    for (int b = 0; b < G.order(); ++b) os << (b ? " " : "") << G.mul(a, b);
    os << "\n";
  }
  return os.str();
}

namespace {

FiniteGroup preset(const std::string& s) {
  if (s == "Q8") return quaternion_group();
  if (s == "1") return cyclic_group(1);
  if (s.size() >= 2 && std::string("ZDSA").find(s[0]) != std::string::npos) {
    std::size_t i = 1;
    const int n = parse_int(s, i, "group parameter");
    if (i != s.size()) throw ParseError(i, "end of preset", "trailing characters in '" + s + "'");
    if (n < 1) throw InvalidArgument("preset parameter must be positive");
    switch (s[0]) {
      case 'Z': return cyclic_group(n);
      case 'D': return dihedral_group(n);
      case 'S': return symmetric_group(n);
      default: return alternating_group(n);
    }
  }
  throw ParseError(0, "Zn, Dn, Sn, An, Q8, or group text", "unknown group '" + s + "'");
}

}  // namespace

FiniteGroup parse_group_spec(const std::string& spec) {
  if (!spec.empty() && spec[0] == '@') {
    std::ifstream in(spec.substr(1));
    if (!in) throw InvalidArgument("cannot read group file " + spec.substr(1));
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_group_text(ss.str());
  }
  if (spec.rfind("perm", 0) == 0 || spec.rfind("table", 0) == 0) return parse_group_text(spec);
  // products of presets
  std::vector<std::string> parts;
  std::string cur;
  for (char c : spec) {
    if (c == 'x') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  FiniteGroup G = preset(parts[0]);
  for (std::size_t i = 1; i < parts.size(); ++i) G = direct_product(G, preset(parts[i]));
  G.set_name(spec);
  return G;
}

}  // namespace stacky
