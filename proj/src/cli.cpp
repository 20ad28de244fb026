#include "stacky/cli.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "stacky/coset_enum.hpp"
#include "stacky/errors.hpp"
#include "stacky/gerbe.hpp"
#include "stacky/hom_count.hpp"
#include "stacky/orbifold.hpp"
#include "stacky/presentation.hpp"
#include "stacky/small_groups.hpp"
#include "stacky/wpgl.hpp"

namespace stacky {

namespace {

const std::vector<std::string> kVerbs = {"classify-orbifold", "pi1", "triangle", "footballs", "gerbes",
                                         "spherical", "dd-classes", "h2", "coset-enum", "witness"};

std::string error_kind(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e)) return "ParseError";
  if (dynamic_cast<const NotCentral*>(&e)) return "NotCentral";
  if (dynamic_cast<const NotCoprime*>(&e)) return "NotCoprime";
  if (dynamic_cast<const RequiresOpenCurve*>(&e)) return "RequiresOpenCurve";
  if (dynamic_cast<const NotHomomorphism*>(&e)) return "NotHomomorphism";
  if (dynamic_cast<const EquivarianceFailure*>(&e)) return "EquivarianceFailure";
  if (dynamic_cast<const PeifferFailure*>(&e)) return "PeifferFailure";
  if (dynamic_cast<const CompatibilityFailure*>(&e)) return "CompatibilityFailure";
  if (dynamic_cast<const NotASection*>(&e)) return "NotASection";
  if (dynamic_cast<const NotAPgl2Subgroup*>(&e)) return "NotAPgl2Subgroup";
  if (dynamic_cast<const InvalidArgument*>(&e)) return "InvalidArgument";
  if (dynamic_cast<const OrderBoundExceeded*>(&e)) return "OrderBoundExceeded";
  if (dynamic_cast<const BudgetExceeded*>(&e)) return "BudgetExceeded";
  return "Error";
}

int exit_code(const std::exception& e) {
  if (dynamic_cast<const ValidationError*>(&e)) return 2;
  if (dynamic_cast<const BoundError*>(&e)) return 3;
  return 1;
}

template <class T>
T need(const Json& p, const char* key) {
  if (!p.contains(key)) throw InvalidArgument(std::string("missing parameter '") + key + "'");
  try {
    return p.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("parameter ") + key, e.what());
  }
}

template <class T>
T opt(const Json& p, const char* key, T fallback) {
  return p.contains(key) ? need<T>(p, key) : fallback;
}

Json header(const std::string& verb) {
  Json j;
  j["schema"] = "v1";
  j["verb"] = verb;
  return j;
}

std::string uniformization_tag(const UniformizationType& t) {
  switch (t.kind) {
    case UniformizationType::Kind::Hyperbolic: return "Hyperbolic";
    case UniformizationType::Kind::Euclidean: return "Euclidean";
    case UniformizationType::Kind::Spherical:
      return "Spherical(" + std::to_string(t.m) + "," + std::to_string(t.n) + ")";
  }
  return "?";
}

std::string rational_str(const Rational& r) {
  return r.denominator() == 1 ? std::to_string(r.numerator())
                              : std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Json abelianization_json(const Abelianization& a) {
  Json j;
  j["free_rank"] = a.free_rank;
  j["torsion"] = a.torsion.invariant_factors();
  j["str"] = a.torsion.str() == "0" && a.free_rank == 0
                 ? "1"
                 : (a.free_rank ? "Z^" + std::to_string(a.free_rank) + (a.torsion.is_trivial() ? "" : "+" + a.torsion.str())
                                : a.torsion.str());
  return j;
}

Json classify_orbifold(const Json& p) {
  const OrbifoldInput in = orbifold_from_json(p);
  const UniformizationType t = uniformization_type(in.curve, in.compact, in.gerbe_degree);
  Json r = header("classify-orbifold");
  r["curve"] = in.curve.str();
  r["compact"] = in.compact;
  r["euler_weight"] = rational_str(euler_weight(in.curve, in.compact));
  r["type"] = uniformization_tag(t);
  r["summary"] = uniformization_tag(t);
  return r;
}

Json pi1(const Json& p, const CliOptions& o) {
  const OrbifoldInput in = orbifold_from_json(p);
  const GroupPresentation P = pi1_presentation(in.curve);
  Json r = header("pi1");
  r["curve"] = in.curve.str();
  r["presentation"] = format_presentation(P);
  r["abelianization"] = abelianization_json(abelianization(P));
  r["simply_connected"] = is_simply_connected(in.curve, in.compact);
  r["summary"] = format_presentation(P);
  const std::string panel = opt<std::string>(p, "panel", o.panel);
  if (!panel.empty()) {
    const HomCountProfile prof = hom_profile(P, group_panel(panel), o.budget);
    Json rows = Json::array();
    for (const auto& [name, count] : prof.counts) rows.push_back({{"group", name}, {"homs", count.str()}});
    r["rows"] = rows;
  }
  return r;
}

Json triangle(const Json& p) {
  const int a = need<int>(p, "p"), b = need<int>(p, "q"), c = need<int>(p, "r");
  const TriangleGroup t = triangle_group(a, b, c);
  Json r = header("triangle");
  r["p"] = a;
  r["q"] = b;
  r["r"] = c;
  std::string kind = t.kind == UniformizationType::Kind::Spherical   ? "spherical"
                     : t.kind == UniformizationType::Kind::Euclidean ? "euclidean"
                                                                     : "hyperbolic";
  r["kind"] = kind;
  if (t.kind == UniformizationType::Kind::Spherical) {
    r["name"] = t.name;
    r["order"] = t.order;
    r["summary"] = kind + " " + t.name + " " + std::to_string(t.order);
  } else {
    r["summary"] = kind;
  }
  return r;
}

Json footballs(const Json& p) {
  const auto m = need<std::int64_t>(p, "m"), n = need<std::int64_t>(p, "n");
  const Football f = football(m, n);
  Json r = header("footballs");
  r["m"] = m;
  r["n"] = n;
  r["pi1"] = f.pi1.is_trivial() ? "1" : f.pi1.str();
  r["gcd"] = f.pi1.order();
  r["cover"] = "P(" + std::to_string(f.cover_m) + "," + std::to_string(f.cover_n) + ")";
  r["summary"] = "F(" + std::to_string(m) + "," + std::to_string(n) + ") pi1=" + r["pi1"].get<std::string>() +
                 " cover=" + r["cover"].get<std::string>();
  return r;
}

Json gerbes(const Json& p) {
  const FiniteGroup H = group_from_json(need<Json>(p, "H"));
  const int m = opt<int>(p, "m", 1), n = opt<int>(p, "n", 1);
  Json r = header("gerbes");
  r["H"] = describe_group(H);
  r["m"] = m;
  r["n"] = n;
  Json rows = Json::array();
  auto classes = classify_over_P(H, m, n);
  // trivial class first, then by the order of a
  std::stable_sort(classes.begin(), classes.end(),
                   [&H](const PClass& x, const PClass& y) { return H.elem_order(x.a) < H.elem_order(y.a); });
  for (const PClass& c : classes) {
    Json row;
    row["a"] = c.a;
    row["orbit"] = c.orbit;
    row["pi1"] = describe_group(c.pi1);
    rows.push_back(row);
  }
  r["count"] = rows.size();
  r["rows"] = rows;
  return r;
}

Json spherical(const Json& p) {
  const FiniteGroup G = group_from_json(need<Json>(p, "Gamma"));
  const auto m = need<std::int64_t>(p, "m"), n = need<std::int64_t>(p, "n");
  const SphericalClassification cl = classify_spherical_mn(G, m, n);
  Json r = header("spherical");
  r["Gamma"] = describe_group(G);
  r["m"] = m;
  r["n"] = n;
  r["d"] = std::gcd(m, n);
  Json rows = Json::array();
  for (const SphericalClassMN& c : cl.classes) {
    std::vector<QmodZ> on_gens;
    for (int g : G.generators()) on_gens.push_back(c.chi[g]);
    const KChiPair kp = to_pair_K_chi(c);
    Json row;
    row["chi"] = qmodz_list(on_gens);
    row["cocycle_class"] = c.class_index;
    row["K"] = describe_group(kp.K);
    rows.push_back(row);
  }
  r["count"] = cl.count;
  r["rows"] = rows;
  return r;
}

std::vector<int> int_list(const Json& j) {
  if (j.is_array()) return j.get<std::vector<int>>();
  if (!j.is_string()) throw ParseError(0, "integer list", "expected an array or a comma separated string");
  std::vector<int> out;
  std::stringstream ss(j.get<std::string>());
  std::string tok;
  try {
    while (std::getline(ss, tok, ','))
      if (!tok.empty()) out.push_back(std::stoi(tok));
  } catch (const std::logic_error&) {
    throw ParseError(0, "integer", "bad list entry '" + tok + "'");
  }
  return out;
}

Json dd_classes(const Json& p) {
  const FiniteGroup G = group_from_json(need<Json>(p, "Gamma"));
  const FiniteGroup T = p.contains("T") ? group_from_json(need<Json>(p, "T")) : G;
  std::vector<int> chi;
  if (p.contains("chi")) {
    chi = int_list(need<Json>(p, "chi"));
  } else {
    if (T.order() != G.order()) throw InvalidArgument("chi is required when T differs from Gamma");
    for (int g = 0; g < G.order(); ++g) chi.push_back(g);
  }
  const auto d = need<std::int64_t>(p, "d");
  const DdConjugacyReport rep = class_size_dd(G, T, chi, d);
  Json r = header("dd-classes");
  r["Gamma"] = describe_group(G);
  r["chi_image_type"] = rep.chi_image_type.str();
  r["d"] = rep.d;
  r["centralizer"] = to_string(rep.centralizer.kind);
  r["centralizer_order"] = rep.centralizer.order;
  r["Cstar"] = rep.Cstar;
  r["power_image_order"] = rep.power_image_order;
  r["D_order"] = rep.D_order;
  r["summary"] = rep.chi_image_type.str() + " d=" + std::to_string(d) + " |D|=" + std::to_string(rep.D_order);
  return r;
}

Json h2_verb(const Json& p) {
  const FiniteGroup G = group_from_json(need<Json>(p, "Gamma"));
  std::vector<std::int64_t> factors;
  for (int v : int_list(need<Json>(p, "A"))) factors.push_back(v);
  const FinAbGroup A = FinAbGroup::from_cyclic_factors(factors);
  const H2 h = h2(G, A);
  Json r = header("h2");
  r["Gamma"] = describe_group(G);
  r["A"] = A.is_trivial() ? "0" : A.str();
  r["order"] = h.size();
  r["invariants"] = h.group().invariant_factors();
  r["summary"] = "H2 = " + (h.group().is_trivial() ? std::string("0") : h.group().str());
  return r;
}

Json coset_enum(const Json& p, const CliOptions& o) {
  const GroupPresentation P = parse_presentation(need<std::string>(p, "presentation"));
  std::vector<Word> H;
  if (p.contains("subgroup")) {
    std::string text = "<";
    for (std::size_t i = 0; i < P.num_gens(); ++i) text += (i ? "," : "") + P.gens()[i];
    text += " | ";
    const auto words = need<std::vector<std::string>>(p, "subgroup");
    for (std::size_t i = 0; i < words.size(); ++i) text += (i ? "," : "") + words[i];
    text += ">";
    H = parse_presentation(text).relators();
  }
  const std::int64_t limit = opt<std::int64_t>(p, "max_cosets", o.max_cosets > 0 ? o.max_cosets : kDefaultMaxCosets);
  const CosetEnumeration ce = todd_coxeter(P, H, limit);
  if (!ce.finite) throw BudgetExceeded("coset enumeration did not close within " + std::to_string(limit) + " cosets");
  Json r = header("coset-enum");
  r["presentation"] = format_presentation(P);
  r["index"] = ce.index;
  r["summary"] = "index " + std::to_string(ce.index);
  return r;
}

Json witness(const Json& p) {
  const std::string kind = need<std::string>(p, "kind");
  Json r = header("witness");
  r["kind"] = kind;
  if (kind == "heisenberg") {
    const int n = need<int>(p, "n");
    const HeisenbergWitness w = heisenberg_witness(n);
    const FiniteGroup& G = w.group;
    const int comm = G.mul(G.mul(w.x, w.y), G.mul(G.inv(w.x), G.inv(w.y)));
    r["n"] = n;
    r["order"] = G.order();
    r["commutator_is_z"] = comm == w.z;
    r["z_order"] = G.elem_order(w.z);
    r["summary"] = "Heis" + std::to_string(n) + " |z|=" + std::to_string(G.elem_order(w.z));
  } else if (kind == "psl2") {
    const int m = need<int>(p, "m"), n = need<int>(p, "n"), q = need<int>(p, "p");
    const auto w = psl2_witness(m, n, q, opt<int>(p, "q_max", 101));
    r["m"] = m;
    r["n"] = n;
    r["p"] = q;
    r["found"] = w.has_value();
    if (w) {
      r["q"] = w->q;
      r["x"] = w->x;
      r["y"] = w->y;
      r["summary"] = "PSL2(" + std::to_string(w->q) + ")";
    } else {
      r["summary"] = "none";
    }
  } else {
    throw InvalidArgument("witness kind must be heisenberg or psl2");
  }
  return r;
}

std::string cell(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

// key=lo..hi | key=v | key=a,b,c
std::pair<std::string, std::vector<std::int64_t>> parse_range(const std::string& s) {
  const auto eq = s.find('=');
  if (eq == std::string::npos || eq == 0) throw ParseError(0, "key=lo..hi", "bad range '" + s + "'");
  const std::string key = s.substr(0, eq), val = s.substr(eq + 1);
  std::vector<std::int64_t> vals;
  try {
    const auto dots = val.find("..");
    if (dots != std::string::npos) {
      const std::int64_t lo = std::stoll(val.substr(0, dots)), hi = std::stoll(val.substr(dots + 2));
      for (std::int64_t v = lo; v <= hi; ++v) vals.push_back(v);
    } else {
      std::stringstream ss(val);
      std::string tok;
      while (std::getline(ss, tok, ',')) vals.push_back(std::stoll(tok));
    }
  } catch (const std::logic_error&) {
    throw ParseError(eq + 1, "integers", "bad range '" + s + "'");
  }
  if (vals.empty()) throw ParseError(eq + 1, "a non-empty range", "empty range '" + s + "'");
  return {key, vals};
}

// Integer scan keys become verb parameters; a few verbs take groups built from them.
Json scan_params(const std::string& verb, const Json& base, const std::vector<std::pair<std::string, std::int64_t>>& kv) {
  Json p = base.is_object() ? base : Json::object();
  std::vector<int> orders;
  for (const auto& [k, v] : kv) {
    if (verb == "h2" && k == "n") {
      p["Gamma"] = "Z" + std::to_string(v);
    } else if (verb == "h2" && k == "m") {
      p["A"] = std::vector<std::int64_t>{v};
    } else if (verb == "spherical" && k == "k") {
      p["Gamma"] = "Z" + std::to_string(v);
    } else if ((verb == "classify-orbifold" || verb == "pi1") && k.size() > 1 && k[0] == 'o' &&
               std::isdigit(static_cast<unsigned char>(k[1]))) {
      if (v != 0) orders.push_back(static_cast<int>(v));
    } else {
      p[k] = v;
    }
  }
  if (!orders.empty()) p["orders"] = orders;
  return p;
}

int run_scan(const std::string& verb, const std::vector<std::string>& ranges, bool sorted, const Json& base,
             const CliOptions& o, std::ostream& out) {
  if (std::find(kVerbs.begin(), kVerbs.end(), verb) == kVerbs.end())
    throw InvalidArgument("unknown verb '" + verb + "'");
  std::vector<std::pair<std::string, std::vector<std::int64_t>>> axes;
  for (const auto& s : ranges) axes.push_back(parse_range(s));
  std::vector<std::size_t> pos(axes.size(), 0);
  std::int64_t index = 0;
  for (;;) {
    std::vector<std::pair<std::string, std::int64_t>> kv;
    bool keep = true;
    for (std::size_t i = 0; i < axes.size(); ++i) {
      kv.emplace_back(axes[i].first, axes[i].second[pos[i]]);
      if (sorted && i > 0 && kv[i].second < kv[i - 1].second) keep = false;
    }
    if (keep) {
      Json line;
      line["index"] = index++;
      Json pv = Json::object();
      for (const auto& [k, v] : kv) pv[k] = v;
      line["params"] = pv;
      try {
        line["result"] = run_verb(verb, scan_params(verb, base, kv), o);
      } catch (const std::exception& e) {
        line["error"] = {{"kind", error_kind(e)}, {"message", e.what()}};
      }
      if (o.format == "table")
        out << cell(pv) << "  " << (line.contains("result") ? render_table(line["result"]) : "error " + cell(line["error"]) + "\n");
      else
        out << line.dump() << "\n";
    }
    // odometer, last axis fastest
    std::size_t i = axes.size();
    while (i > 0) {
      --i;
      if (++pos[i] < axes[i].second.size()) break;
      pos[i] = 0;
      if (i == 0) return 0;
    }
    if (axes.empty()) return 0;
  }
}

}  // namespace

Json run_verb(const std::string& verb, const Json& params, const CliOptions& o) {
  if (verb == "classify-orbifold") return classify_orbifold(params);
  if (verb == "pi1") return pi1(params, o);
  if (verb == "triangle") return triangle(params);
  if (verb == "footballs") return footballs(params);
  if (verb == "gerbes") return gerbes(params);
  if (verb == "spherical") return spherical(params);
  if (verb == "dd-classes") return dd_classes(params);
  if (verb == "h2") return h2_verb(params);
  if (verb == "coset-enum") return coset_enum(params, o);
  if (verb == "witness") return witness(params);
  throw InvalidArgument("unknown verb '" + verb + "'");
}

std::string render_table(const Json& report) {
  std::ostringstream os;
  if (report.contains("rows")) {
    for (const auto& row : report["rows"]) {
      bool first = true;
      for (const auto& [k, v] : row.items()) {
        os << (first ? "" : " ") << k << "=" << cell(v);
        first = false;
      }
      os << "\n";
    }
    if (report.contains("summary") && !report.contains("count")) os << cell(report["summary"]) << "\n";
    return os.str();
  }
  os << (report.contains("summary") ? cell(report["summary"]) : report.dump()) << "\n";
  return os.str();
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"stacky: classification of Deligne-Mumford analytic curves", "stacky"};
  app.require_subcommand(1);
  CliOptions o;
  app.add_option("--format", o.format, "json or table")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--max-cosets", o.max_cosets, "coset table limit");
  std::int64_t budget = 0;
  auto* budget_opt = app.add_option("--budget", budget, "node budget for homomorphism searches");
  app.add_option("--panel", o.panel, "group panel for hom profiles")->check(CLI::IsMember({"small24", "minimal"}));
  app.fallthrough();

  Json params = Json::object();
  std::string json_arg, verb_arg;
  std::vector<std::string> ranges;
  bool sorted = false;
  std::string base_arg;
  std::map<std::string, std::string> sopt;
  std::vector<std::string> subgroup;
  std::vector<int> ints;

  auto* co = app.add_subcommand("classify-orbifold", "uniformization type of an orbifold curve");
  co->add_option("params", json_arg, "orbifold JSON")->required();
  auto* pi = app.add_subcommand("pi1", "fundamental group presentation");
  pi->add_option("params", json_arg, "orbifold JSON")->required();
  auto* tr = app.add_subcommand("triangle", "triangle group classification");
  tr->add_option("pqr", ints, "p q r")->required()->expected(3);
  auto* fb = app.add_subcommand("footballs", "football F(m,n)");
  fb->add_option("mn", ints, "m n")->required()->expected(2);
  auto* ge = app.add_subcommand("gerbes", "gerbes over P(m,n) with trivial band");
  ge->add_option("--H", sopt["H"], "group")->required();
  ge->add_option("--m", sopt["m"], "m");
  ge->add_option("--n", sopt["n"], "n");
  auto* sp = app.add_subcommand("spherical", "spherical curves with cover P(m,n), m != n");
  sp->add_option("--Gamma", sopt["Gamma"], "group")->required();
  sp->add_option("--m", sopt["m"], "m")->required();
  sp->add_option("--n", sopt["n"], "n")->required();
  auto* dd = app.add_subcommand("dd-classes", "conjugacy class sizes for cover P(d,d)");
  dd->add_option("--Gamma", sopt["Gamma"], "group")->required();
  dd->add_option("--T", sopt["T"], "dihedral or platonic target, default Gamma");
  dd->add_option("--chi", sopt["chi"], "images of Gamma elements in T, comma separated");
  dd->add_option("--d", sopt["d"], "d")->required();
  auto* hh = app.add_subcommand("h2", "H^2(Gamma, A) with trivial action");
  hh->add_option("--Gamma", sopt["Gamma"], "group")->required();
  hh->add_option("--A", sopt["A"], "cyclic factors, comma separated")->required();
  auto* ce = app.add_subcommand("coset-enum", "Todd-Coxeter coset enumeration");
  ce->add_option("presentation", json_arg, "<gens | relators>")->required();
  ce->add_option("--subgroup", subgroup, "subgroup generator words");
  auto* wi = app.add_subcommand("witness", "finite quotient witnesses");
  wi->add_option("kind", verb_arg, "heisenberg or psl2")->required();
  wi->add_option("--n", sopt["n"], "n");
  wi->add_option("--m", sopt["m"], "m");
  wi->add_option("--p", sopt["p"], "p");
  wi->add_option("--q-max", sopt["q_max"], "largest field size");
  auto* sc = app.add_subcommand("scan", "batch over integer ranges, one JSON object per line");
  sc->add_option("verb", verb_arg, "verb to run")->required();
  sc->add_option("ranges", ranges, "key=lo..hi");
  sc->add_flag("--sorted", sorted, "only non-decreasing tuples");
  sc->add_option("--base", base_arg, "JSON object merged into every item");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 2;
  }
  if (*budget_opt) o.budget = budget;

  try {
    auto num = [&](const char* k) {
      const std::string& s = sopt[k];
      if (s.empty()) return;
      try {
        std::size_t used = 0;
        const long long v = std::stoll(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        params[k] = v;
      } catch (const std::logic_error&) {
        throw ParseError(0, "integer", std::string("--") + k + " " + s);
      }
    };
    auto str = [&](const char* k) {
      if (!sopt[k].empty()) params[k] = sopt[k];
    };
    const CLI::App* sub = app.get_subcommands().front();
    const std::string verb = sub->get_name();
    if (verb == "scan") {
      const Json base = base_arg.empty() ? Json::object() : parse_json(base_arg);
      return run_scan(verb_arg, ranges, sorted, base, o, out);
    }
    if (verb == "classify-orbifold" || verb == "pi1") params = parse_json(json_arg);
    if (verb == "triangle") params = {{"p", ints[0]}, {"q", ints[1]}, {"r", ints[2]}};
    if (verb == "footballs") params = {{"m", ints[0]}, {"n", ints[1]}};
    if (verb == "gerbes") {
      str("H");
      num("m");
      num("n");
    }
    if (verb == "spherical" || verb == "h2" || verb == "dd-classes") {
      str("Gamma");
      num("m");
      num("n");
      num("d");
      str("T");
      str("chi");
      str("A");
    }
    if (verb == "coset-enum") {
      params["presentation"] = json_arg;
      if (!subgroup.empty()) params["subgroup"] = subgroup;
    }
    if (verb == "witness") {
      params["kind"] = verb_arg;
      num("n");
      num("m");
      num("p");
      num("q_max");
    }
    const Json report = run_verb(verb, params, o);
    if (o.format == "table")
      out << render_table(report);
    else
      out << report.dump() << "\n";
    return 0;
  } catch (const std::exception& e) {
    err << "stacky: " << error_kind(e) << ": " << e.what() << "\n";
    return exit_code(e);
  }
}

}  // namespace stacky
