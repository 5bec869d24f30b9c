#include "kleinvcy/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include "kleinvcy/homology.hpp"
#include "kleinvcy/isotropy.hpp"
#include "kleinvcy/models.hpp"
#include "kleinvcy/serialize.hpp"
#include "kleinvcy/simplicial.hpp"
#include "kleinvcy/verify.hpp"

namespace kleinvcy::cli {
namespace {

// One named value in a record, carried in both output encodings.
struct Field {
  std::string key;
  Json json;
  std::string text;
};

struct Record {
  std::string command;
  std::vector<Field> inputs;
  std::vector<Field> result;
  std::string provenance;
};

struct Globals {
  bool json = false;
  std::uint64_t seed = VerifyOptions{}.seed;
  long max_denominator = VerifyOptions{}.max_denominator;
  std::string out_path;
};

// Options of the keyword-style subcommands.
struct Keywords {
  long bound = 3;
  long circles = 1;
  std::string method = "kunneth";
  std::string suite = "all";
};

Field field(std::string key, Json json, std::string text) { return {std::move(key), std::move(json), std::move(text)}; }

Field field(std::string key, const Json& json) { return {std::move(key), json, json.dump()}; }

Field field(std::string key, const GroupElement& g) { return field(std::move(key), encode(g), text(g)); }
Field field(std::string key, const PlanePoint& p) { return field(std::move(key), encode(p), text(p)); }
Field field(std::string key, const CyclicSubgroup& s) { return field(std::move(key), encode(s), text(s)); }
Field field(std::string key, const Line& l) { return field(std::move(key), encode(l), text(l)); }
Field field(std::string key, const CommClass& c) { return field(std::move(key), encode(c), text(c)); }
Field field(std::string key, const SubgroupFamily& f) { return field(std::move(key), encode(f), text(f)); }
Field field(std::string key, const FixedSet& f) { return field(std::move(key), encode(f), text(f)); }
Field field(std::string key, const Integer& x) { return field(std::move(key), encode(x), to_string(x)); }
Field field(std::string key, const Rational& q) { return field(std::move(key), encode(q), to_string(q)); }
Field field(std::string key, const GradedGroups& h) { return field(std::move(key), encode(h), to_string(h)); }
Field field(std::string key, bool b) { return field(std::move(key), Json(b), b ? "true" : "false"); }

Json json_of(const std::vector<Field>& fields) {
  Json j = Json::object();
  for (const auto& f : fields) j[f.key] = f.json;
  return j;
}

void indent_lines(std::ostream& os, const std::string& text, const std::string& pad) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) os << pad << line << '\n';
}

void write_text_fields(std::ostream& os, const char* heading, const std::vector<Field>& fields) {
  os << heading << ":\n";
  for (const auto& f : fields) {
    if (f.text.find('\n') == std::string::npos) {
      os << "  " << f.key << ": " << f.text << '\n';
    } else {
      os << "  " << f.key << ":\n";
      indent_lines(os, f.text, "    ");
    }
  }
}

std::string render(const Record& r, bool as_json) {
  std::ostringstream os;
  if (as_json) {
    const Json j{{"command", r.command},
                 {"inputs", json_of(r.inputs)},
                 {"result", json_of(r.result)},
                 {"provenance", r.provenance}};
    os << j.dump(2) << '\n';
  } else {
    os << "command: " << r.command << '\n';
    write_text_fields(os, "inputs", r.inputs);
    write_text_fields(os, "result", r.result);
    os << "provenance: " << r.provenance << '\n';
  }
  return os.str();
}

// ---- argument decoding ------------------------------------------------------

using Args = std::vector<std::string>;

GroupElement element_at(const Args& a, std::size_t i) { return {parse_integer(a[i]), parse_integer(a[i + 1])}; }

CyclicSubgroup subgroup_at(const Args& a, std::size_t i) {
  const GroupElement g = element_at(a, i);
  if (g.is_identity()) throw PreconditionError("subgroup generator must be nontrivial, got " + text(g));
  return CyclicSubgroup::generated_by(g);
}

PlanePoint point_at(const Args& a, std::size_t i) { return {parse_rational(a[i]), parse_rational(a[i + 1])}; }

Line line_at(const Args& a, std::size_t i) { return parse_line(a[i], a[i + 1]); }

HomologyMethod method_of(const std::string& name) {
  if (name == "kunneth") return HomologyMethod::Kunneth;
  if (name == "simplicial") return HomologyMethod::Simplicial;
  throw ParseError("method must be kunneth or simplicial, got '" + name + "'");
}

// Named spaces for the product and join commands: point, circle, klein,
// circles:N.
struct NamedSpace {
  std::string name;
  std::size_t circles = 0;  // nonzero for circles:N
};

NamedSpace space_of(const std::string& name) {
  if (name == "point" || name == "circle" || name == "klein") return {name, 0};
  const std::string prefix = "circles:";
  if (name.rfind(prefix, 0) == 0) {
    const Integer n = parse_integer(name.substr(prefix.size()));
    if (n < 1 || n > 64) throw PreconditionError("circles:N needs 1 <= N <= 64");
    return {name, n.get_ui()};
  }
  throw ParseError("unknown space '" + name + "' (expected point, circle, klein or circles:N)");
}

GradedGroups homology_of(const NamedSpace& s) {
  if (s.name == "point") return GradedGroups{{AbelianGroup::free(1)}, false};
  if (s.name == "circle") return circle_homology();
  if (s.name == "klein") return klein_homology();
  return disjoint_copies(circle_homology(), s.circles);
}

SimplicialComplex complex_of(const NamedSpace& s) {
  if (s.name == "point") return point_complex();
  if (s.name == "circle") return circle_complex();
  if (s.name == "klein") return klein_complex();
  if (s.circles > kDefaultSimplicialCap) {
    throw PreconditionError("simplicial method is capped at " + std::to_string(kDefaultSimplicialCap) + " circles");
  }
  return disjoint_circles(s.circles);
}

std::string model_text(const ModelDescriptor& d) {
  std::ostringstream os;
  os << to_string(d.kind) << ": H=" << d.count(PieceKind::HLine) << " K=" << d.count(PieceKind::KJoin)
     << " R=" << d.count(PieceKind::RLine) << " slope_families=" << d.count(PieceKind::SlopeFamily) << '\n';
  for (const auto& p : d.pieces) {
    os << p.label << " [" << to_string(p.kind) << "] " << p.space << "; action " << p.action << "; map "
       << p.attaching_map;
    if (p.cls) os << "; class " << text(*p.cls);
    if (p.commensurator) os << "; commensurator " << to_string(*p.commensurator);
    if (p.family) os << "; family " << text(*p.family);
    os << '\n';
  }
  os << "identification: " << d.identification << '\n';
  return os.str();
}

// ---- provenance strings -----------------------------------------------------

std::string parity(const Integer& x) { return is_even(x) ? "even" : "odd"; }

std::string class_provenance(const CyclicSubgroup& s) {
  switch (class_tag(s)) {
    case ClassTag::H: return "generator (n,0): horizontal class [H]";
    case ClassTag::K: return "generator (n,m) with m odd or n = 0: class [K] of <(0,2)>";
    case ClassTag::R: return "generator (n,m) with n != 0 and m even nonzero: class [R] of the maximal subgroup";
  }
  return {};
}

std::string commensurator_provenance(const CommClass& c) {
  if (c.tag == ClassTag::R) return "[R] is flipped by conjugation with odd t2: commensurator {(t1,2t2)}";
  return "[" + to_string(c.tag) + "] is fixed by conjugation: commensurator is the whole group";
}

std::string stabilizes_provenance(const GroupElement& g, const Line& l) {
  if (g.is_identity()) return "identity element";
  if (!l.is_vertical()) return "finite slope: stabilized iff m even and m = a n";
  return is_even(g.m) ? "vertical line, m even: stabilized iff n = 0" : "vertical line, m odd: stabilized iff n = 2b";
}

// ---- subcommands ------------------------------------------------------------

struct Positional {
  std::vector<std::string> names;
  std::string description;
  std::function<Record(const Args&)> handler;
};

std::map<std::string, Positional> positional_commands() {
  std::map<std::string, Positional> c;

  c["mul"] = {{"n1", "m1", "n2", "m2"}, "product (n1,m1)(n2,m2)", [](const Args& a) {
                const GroupElement g = element_at(a, 0), h = element_at(a, 2);
                return Record{"mul", {field("g", g), field("h", h)}, {field("product", mul(g, h))},
                              "twisted product (n1 + (-1)^m1 n2, m1 + m2) with m1 " + parity(g.m)};
              }};
  c["inv"] = {{"n", "m"}, "inverse of (n,m)", [](const Args& a) {
                const GroupElement g = element_at(a, 0);
                return Record{"inv", {field("g", g)}, {field("inverse", inv(g))},
                              "((-1)^(1-m) n, -m) with m " + parity(g.m)};
              }};
  c["pow"] = {{"n", "m", "k"}, "power (n,m)^k", [](const Args& a) {
                const GroupElement g = element_at(a, 0);
                const Integer k = parse_integer(a[2]);
                std::string why = is_even(g.m)   ? "m even: (k n, k m)"
                                  : is_even(k) ? "m odd, k even: (0, k m)"
                                               : "m odd, k odd: (n, k m)";
                return Record{"pow", {field("g", g), field("k", k)}, {field("power", pow(g, k))}, why};
              }};
  c["conj"] = {{"t1", "t2", "n", "m"}, "conjugate t g t^-1", [](const Args& a) {
                 const GroupElement t = element_at(a, 0), g = element_at(a, 2);
                 return Record{"conj", {field("t", t), field("g", g)}, {field("conjugate", conj(t, g))},
                               "((-1)^t2 n + t1 + (-1)^(m+1) t1, m) with t2 " + parity(t.m) + ", m " + parity(g.m)};
               }};
  c["contains"] = {{"n", "m", "q1", "q2"}, "membership of (q1,q2) in <(n,m)>", [](const Args& a) {
                     const CyclicSubgroup s = subgroup_at(a, 0);
                     const GroupElement g = element_at(a, 2);
                     return Record{"contains", {field("subgroup", s), field("element", g)},
                                   {field("contains", contains(s, g))},
                                   is_even(s.generator().m) ? "even generator: powers (k n, k m)"
                                                            : "odd generator: powers (0, k m) and (n, k m)"};
                   }};
  c["commensurable"] = {{"n1", "m1", "n2", "m2"}, "commensurability of two cyclic subgroups", [](const Args& a) {
                          const CyclicSubgroup s = subgroup_at(a, 0), t = subgroup_at(a, 2);
                          return Record{"commensurable",
                                        {field("s", s), field("t", t)},
                                        {field("commensurable", commensurable(s, t)), field("class_s", comm_class(s)),
                                         field("class_t", comm_class(t))},
                                        "same class tag, and for [R] proportional generators"};
                        }};
  c["class"] = {{"n", "m"}, "commensurability class of <(n,m)>", [](const Args& a) {
                  const CyclicSubgroup s = subgroup_at(a, 0);
                  return Record{"class", {field("subgroup", s)}, {field("class", comm_class(s))}, class_provenance(s)};
                }};
  c["commensurator"] = {{"n", "m"}, "commensurator of the class of <(n,m)>", [](const Args& a) {
                          const CyclicSubgroup s = subgroup_at(a, 0);
                          const CommClass cls = comm_class(s);
                          const std::string d = to_string(commensurator(cls));
                          return Record{"commensurator", {field("subgroup", s)},
                                        {field("class", cls), field("commensurator", Json(d), d)},
                                        commensurator_provenance(cls)};
                        }};
  c["family-contains"] = {
      {"n", "m", "q1", "q2"}, "whether <(q1,q2)> lies in the family of the class of <(n,m)>", [](const Args& a) {
        const CyclicSubgroup s = subgroup_at(a, 0), t = subgroup_at(a, 2);
        const CommClass cls = comm_class(s);
        const SubgroupFamily f = class_family(cls);
        return Record{"family-contains",
                      {field("class_of", s), field("subgroup", t)},
                      {field("class", cls), field("family", f), field("contains", family_contains(f, t))},
                      cls.tag == ClassTag::R ? "[R] family: subgroups of the maximal R-subgroup"
                                             : "[" + to_string(cls.tag) + "] family: subgroups commensurable with it"};
      }};
  c["conj-subgroup"] = {{"t1", "t2", "n", "m"}, "conjugate subgroup t <(n,m)> t^-1", [](const Args& a) {
                          const GroupElement t = element_at(a, 0);
                          const CyclicSubgroup s = subgroup_at(a, 2);
                          return Record{"conj-subgroup", {field("t", t), field("subgroup", s)},
                                        {field("conjugate", conj_subgroup(t, s))},
                                        "generator conjugated and canonicalized, t2 " + parity(t.m)};
                        }};
  c["act-point"] = {{"n", "m", "t", "r"}, "image of the point (t,r) under (n,m)", [](const Args& a) {
                      const GroupElement g = element_at(a, 0);
                      const PlanePoint p = point_at(a, 2);
                      return Record{"act-point", {field("g", g), field("point", p)},
                                    {field("image", act_point(g, p))}, "(n + (-1)^m t, m + r)"};
                    }};
  c["act-line"] = {{"n", "m", "a", "b"}, "image of the line l(a,b) under (n,m)", [](const Args& a) {
                     const GroupElement g = element_at(a, 0);
                     const Line l = line_at(a, 2);
                     return Record{"act-line", {field("g", g), field("line", l)}, {field("image", act_line(g, l))},
                                   l.is_vertical() ? "vertical: l(inf, n + (-1)^m b)"
                                                   : "finite slope: l((-1)^m a, b + m - (-1)^m a n)"};
                   }};
  c["line-distance"] = {{"a1", "b1", "a2", "b2"}, "distance between two lines", [](const Args& a) {
                          const Line l1 = line_at(a, 0), l2 = line_at(a, 2);
                          const LineDistance d = line_distance(l1, l2);
                          Record r{"line-distance", {field("l1", l1), field("l2", l2)},
                                   {field("parallel", d.parallel)},
                                   d.parallel ? "parallel lines: k/(1+k) with k the squared strip width"
                                              : "lines that are not parallel are at distance 1"};
                          if (d.width_sq) r.result.push_back(field("width_sq", *d.width_sq));
                          r.result.push_back(field("distance", Json(d.distance)));
                          return r;
                        }};
  c["stabilizes"] = {{"n", "m", "a", "b"}, "whether (n,m) fixes the line l(a,b)", [](const Args& a) {
                       const GroupElement g = element_at(a, 0);
                       const Line l = line_at(a, 2);
                       return Record{"stabilizes", {field("g", g), field("line", l)},
                                     {field("stabilizes", stabilizes(g, l))}, stabilizes_provenance(g, l)};
                     }};
  c["is-axis"] = {{"a", "b"}, "whether l(a,b) is an axis", [](const Args& a) {
                    const Line l = line_at(a, 0);
                    return Record{"is-axis", {field("line", l)},
                                  {field("is_axis", is_axis(l)), field("isotropy", isotropy_group(l))},
                                  "every line has infinite cyclic isotropy acting by translation"};
                  }};
  c["isotropy"] = {{"a", "b"}, "isotropy group of the line l(a,b)", [](const Args& a) {
                     const Line l = line_at(a, 0);
                     const Isotropy iso = isotropy(l);
                     return Record{"isotropy", {field("line", l)}, {field("isotropy", iso.group)}, describe(iso.rule)};
                   }};
  c["fixed-set"] = {{"n", "m"}, "lines fixed by <(n,m)>", [](const Args& a) {
                      const CyclicSubgroup s = subgroup_at(a, 0);
                      const FixedSetResult f = fixed_set_with_rule(s);
                      return Record{"fixed-set", {field("subgroup", s)}, {field("fixed_set", f.set)}, describe(f.rule)};
                    }};
  c["kn-act"] = {{"t1", "t2", "n"}, "index of (t1,t2) k_n", [](const Args& a) {
                   const GroupElement t = element_at(a, 0);
                   const Integer n = parse_integer(a[2]);
                   return Record{"kn-act", {field("t", t), field("n", n)}, {field("image", act_on_kn(t, n))},
                                 "(-1)^t2 n + 2 t1"};
                 }};
  c["map-p"] = {{"t", "r"}, "projection of the plane to the line", [](const Args& a) {
                  const PlanePoint x = point_at(a, 0);
                  return Record{"map-p", {field("point", x)}, {field("image", map_p(x))}, "p(t,r) = r"};
                }};
  c["map-f"] = {{"n", "m", "t", "r"}, "map of the plane to the line of the class of <(n,m)>", [](const Args& a) {
                  const CyclicSubgroup s = subgroup_at(a, 0);
                  const PlanePoint x = point_at(a, 2);
                  return Record{"map-f", {field("rep", s), field("point", x)}, {field("image", map_f(s, x))},
                                "f(t,r) = (m t - n r)/2 for the representative <(n,m)>"};
                }};
  c["h-act"] = {{"n", "m", "x"}, "action of (n,m) on the line model of [H]", [](const Args& a) {
                    const GroupElement g = element_at(a, 0);
                    const Rational x = parse_rational(a[2]);
                    return Record{"h-act", {field("g", g), field("x", x)}, {field("image", model3b_action(g, x))},
                                  g.m == 0 ? "t2 = 0: acts trivially" : "translation by t2"};
                  }};
  return c;
}

Record homology_record(const Keywords& k) {
  if (k.circles < 1) throw PreconditionError("need at least one circle");
  const HomologyMethod m = method_of(k.method);
  const GradedGroups h = model_homology(static_cast<std::size_t>(k.circles), m);
  return {"homology",
          {field("circles", Json(k.circles)), field("method", Json(k.method), k.method)},
          {field("homology", h)},
          m == HomologyMethod::Kunneth ? "reduced Kunneth formula for the join of N circles with the Klein bottle"
                                       : "Smith normal form of the join complex of N circles with the Klein bottle"};
}

Record product_record(const std::string& command, const std::string& x_name, const std::string& y_name,
                      const Keywords& k) {
  const NamedSpace x = space_of(x_name), y = space_of(y_name);
  const HomologyMethod m = method_of(k.method);
  const bool is_join = command == "kunneth-join";
  GradedGroups h;
  if (m == HomologyMethod::Kunneth) {
    h = is_join ? to_unreduced(kunneth_join(to_reduced(homology_of(x)), to_reduced(homology_of(y))))
                : kunneth_product(homology_of(x), homology_of(y));
  } else {
    const SimplicialComplex cx = complex_of(x), cy = complex_of(y);
    h = simplicial_homology(is_join ? join(cx, cy) : ordered_product(cx, cy));
  }
  std::string why = m == HomologyMethod::Kunneth
                        ? (is_join ? "reduced Kunneth formula shifted by one" : "Kunneth formula: tensor plus Tor")
                        : (is_join ? "Smith normal form of the simplicial join"
                                   : "Smith normal form of the ordered product triangulation");
  return {command,
          {field("x", Json(x.name), x.name), field("y", Json(y.name), y.name), field("method", Json(k.method), k.method)},
          {field("homology", h)},
          why};
}

Record ses_record(const Keywords& k) {
  if (k.circles < 1) throw PreconditionError("need at least one circle");
  const GradedGroups x = to_reduced(disjoint_copies(circle_homology(), static_cast<std::size_t>(k.circles)));
  const std::vector<SesRow> rows = join_ses_bookkeeping(x, to_reduced(klein_homology()));
  Json arr = Json::array();
  std::ostringstream text;
  bool all_ok = true;
  for (const auto& r : rows) {
    all_ok = all_ok && r.rank_ok && r.torsion_ok;
    arr.push_back({{"degree", r.degree},
                   {"join_next", encode(r.join_next)},
                   {"product", encode(r.product)},
                   {"sum", encode(r.sum)},
                   {"rank_ok", r.rank_ok},
                   {"torsion_ok", r.torsion_ok}});
    text << "n=" << r.degree << ": " << r.join_next << " | " << r.product << " | " << r.sum
         << (r.rank_ok && r.torsion_ok ? " ok" : " MISMATCH") << '\n';
  }
  return {"ses",
          {field("circles", Json(k.circles))},
          {field("rows", arr, text.str()), field("consistent", all_ok)},
          "0 -> H~_{n+1}(X*K) -> H~_n(X x K) -> H~_n X + H~_n K -> 0"};
}

Record verify_record(const Keywords& k, const Globals& g) {
  VerifyOptions o;
  o.bound = k.bound;
  o.seed = g.seed;
  o.max_denominator = g.max_denominator;
  std::vector<std::string> suites;
  if (k.suite == "all") {
    suites = suite_names();
  } else {
    suites.push_back(k.suite);
  }
  Record r{"verify",
           {field("suite", Json(k.suite), k.suite), field("bound", Json(k.bound)), field("seed", Json(g.seed)),
            field("max_denominator", Json(g.max_denominator))},
           {},
           "closed forms checked against brute-force oracles"};
  bool all = true;
  for (const auto& s : suites) {
    const SuiteReport rep = run_suite(s, o);
    all = all && rep.passed;
    std::string line = std::string(rep.passed ? "passed" : "FAILED") + " (" + std::to_string(rep.checks) + " checks)";
    for (const auto& f : rep.failures) line += "\n" + f;
    r.result.push_back(
        field(s, Json{{"passed", rep.passed}, {"checks", rep.checks}, {"failures", rep.failures}}, line));
  }
  r.result.push_back(field("passed", all));
  return r;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Computations in the Klein bottle group and its classifying spaces", "kleinvcy"};
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--json", g.json, "emit JSON instead of text");
  app.add_option("--seed", g.seed, "seed for randomized verify suites");
  app.add_option("--max-denominator", g.max_denominator, "grid bound for line data in verify suites");
  app.add_option("--out", g.out_path, "write output to FILE instead of standard output");

  const std::map<std::string, Positional> commands = positional_commands();
  std::map<std::string, Args> slots;
  for (const auto& [name, cmd] : commands) {
    CLI::App* sub = app.add_subcommand(name, cmd.description);
    sub->fallthrough();
    Args& values = slots[name];
    values.resize(cmd.names.size());
    for (std::size_t i = 0; i < cmd.names.size(); ++i) sub->add_option(cmd.names[i], values[i])->required();
  }

  Keywords kw;
  std::string x_space, y_space;
  CLI::App* homology = app.add_subcommand("homology", "homology of N circles joined with the Klein bottle");
  homology->add_option("--circles", kw.circles, "number of circles N")->required();
  homology->add_option("--method", kw.method, "kunneth or simplicial");
  CLI::App* ses = app.add_subcommand("ses", "exact sequence bookkeeping for N circles joined with the Klein bottle");
  ses->add_option("--circles", kw.circles, "number of circles N")->required();
  CLI::App* kproduct = app.add_subcommand("kunneth-product", "homology of a product X x Y");
  CLI::App* kjoin = app.add_subcommand("kunneth-join", "homology of a join X * Y");
  for (CLI::App* sub : {kproduct, kjoin}) {
    sub->add_option("x", x_space, "point, circle, klein or circles:N")->required();
    sub->add_option("y", y_space, "point, circle, klein or circles:N")->required();
    sub->add_option("--method", kw.method, "kunneth or simplicial");
  }
  CLI::App* pushout = app.add_subcommand("pushout-report", "pieces of the pushout model");
  pushout->add_option("--bound", kw.bound, "bound on the R-class representatives");
  CLI::App* joinrep = app.add_subcommand("join-report", "pieces of the join model");
  joinrep->add_option("--bound", kw.bound, "bound on slope numerators and denominators");
  CLI::App* verify = app.add_subcommand("verify", "run self-check suites");
  verify->add_option("--suite", kw.suite, "suite name or all");
  verify->add_option("--bound", kw.bound, "coordinate bound");
  for (CLI::App* sub : {homology, ses, kproduct, kjoin, pushout, joinrep, verify}) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParse;
  }

  try {
    const CLI::App* chosen = app.get_subcommands().front();
    const std::string name = chosen->get_name();
    Record record;
    if (auto it = commands.find(name); it != commands.end()) {
      record = it->second.handler(slots.at(name));
    } else if (chosen == homology) {
      record = homology_record(kw);
    } else if (chosen == ses) {
      record = ses_record(kw);
    } else if (chosen == kproduct || chosen == kjoin) {
      record = product_record(name, x_space, y_space, kw);
    } else if (chosen == pushout || chosen == joinrep) {
      const ModelDescriptor d = chosen == pushout ? pushout_report(kw.bound) : join_model_report(kw.bound);
      record = {name,
                {field("bound", Json(kw.bound))},
                {field("model", encode(d), model_text(d))},
                chosen == pushout ? "pushout of the plane model along one piece per commensurability class"
                                  : "join of the plane with one line per slope"};
    } else {
      record = verify_record(kw, g);
    }
    const std::string rendered = render(record, g.json);
    if (g.out_path.empty()) {
      out << rendered;
    } else {
      std::ofstream file(g.out_path, std::ios::binary);
      if (!file) throw PreconditionError("cannot open output file '" + g.out_path + "'");
      file << rendered;
    }
    return kExitOk;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const PreconditionError& e) {
    err << "error: precondition violated: " << e.what() << '\n';
    return kExitPrecondition;
  }
}

}  // namespace kleinvcy::cli
