#pragma once

// Command-line front end. run() is the whole program; tools/raagtk.cpp only
// forwards argv, which keeps every subcommand testable in-process.

#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "raagtk/raagtk.hpp"
#include "raagtk/selftest/acceptance.hpp"

namespace raagtk::cli {

using Json = nlohmann::ordered_json;

inline constexpr int exit_ok = 0;
inline constexpr int exit_domain = 1;
inline constexpr int exit_usage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  bool json = false;
  std::uint64_t seed = 0;
  std::string graph_file;
  std::vector<std::string> words;
  std::string from = "1", to = "1", base = "1";
  std::string vertex, tree_vertex, dls, z, sides_a, sides_b, sides_c;
  std::vector<std::string> subgroups, tuples, probes;
  std::vector<int> only;
  int radius = 4, delta = 1, max_power = 8, power = 1, sample = 0;
  std::size_t cap = default_closure_cap;
  std::string member;
};

namespace detail {

inline DefGraph load_graph(const std::string& path) {
  if (path.empty()) throw UsageError("--graph is required");
  std::ifstream in(path);
  if (!in) throw Error(errc::io_error, "cannot read graph file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return DefGraph::parse(buf.str());
}

inline std::string word(const DefGraph& g, const NormalForm& a) { return format(g, a); }

inline Json names(const DefGraph& g, VertexSet s) {
  Json out = Json::array();
  for (Vertex v : s.members()) out.push_back(g.name(v));
  return out;
}

inline std::string set_text(const DefGraph& g, VertexSet s) { return g.format_set(s); }

inline NormalForm one_word(const DefGraph& g, const Options& o) {
  if (o.words.size() != 1) throw UsageError("exactly one --word is required");
  return parse_element(g, o.words.front());
}

inline Vertex vertex_option(const DefGraph& g, const std::string& name, const char* flag) {
  if (name.empty()) throw UsageError(std::string(flag) + " is required");
  return g.vertex(name);
}

inline Json triple_json(const DefGraph& g, const std::optional<Triple>& t) {
  if (!t) return nullptr;
  return Json{{"x", word(g, t->x)}, {"y", word(g, t->y)}, {"p", word(g, t->p)}};
}

inline DlsAutomorphism dls_option(const DefGraph& g, const Options& o) {
  if (!o.dls.empty()) return parse_dls(g, o.dls);
  if (!o.vertex.empty()) return build_transvection(g, g.vertex(o.vertex), parse_element(g, o.z));
  if (!o.sides_a.empty() || !o.sides_b.empty())
    return build_partial_conjugation(g, g.parse_set(o.sides_a), g.parse_set(o.sides_b), g.parse_set(o.sides_c),
                                     parse_element(g, o.z));
  throw UsageError("--dls, --vertex/--z or --A/--B/--C/--z is required");
}

inline Json subgroup_json(const DefGraph& g, const SubgroupForm& sf) {
  Json roots = Json::array();
  for (const auto& r : sf.abelian_roots) roots.push_back(word(g, r));
  return Json{{"kind", to_string(sf.kind)},
              {"conjugator", word(g, sf.conjugator)},
              {"roots", roots},
              {"support", names(g, sf.support)},
              {"literal", format(g, sf)}};
}

inline std::string bool_text(bool b) { return b ? "true" : "false"; }

// Each handler fills `j` and returns the text rendering.

inline std::string cmd_graph(const DefGraph& g, Json& j) {
  Json edges = Json::array();
  for (Vertex u = 0; u < g.size(); ++u)
    for (Vertex w = u + 1; w < g.size(); ++w)
      if (g.adjacent(u, w)) edges.push_back({g.name(u), g.name(w)});
  j["vertices"] = names(g, g.all());
  j["edges"] = edges;
  j["clique_number"] = g.clique_number();
  j["text"] = g.dump();
  std::string out = g.dump();
  if (!out.empty() && out.back() == '\n') out.pop_back();
  return out;
}

inline std::string cmd_normalize(const DefGraph& g, const Options& o, Json& j) {
  const NormalForm a = one_word(g, o);
  j["input"] = o.words.front();
  j["normal_form"] = word(g, a);
  j["length"] = a.size();
  return word(g, a);
}

inline std::string cmd_multiply(const DefGraph& g, const Options& o, Json& j) {
  if (o.words.empty()) throw UsageError("at least one --word is required");
  NormalForm acc;
  Json factors = Json::array();
  for (const auto& w : o.words) {
    const NormalForm a = parse_element(g, w);
    factors.push_back(word(g, a));
    acc = multiply(g, acc, a);
  }
  j["factors"] = factors;
  j["product"] = word(g, acc);
  j["length"] = acc.size();
  return word(g, acc);
}

inline std::string cmd_median(const DefGraph& g, const Options& o, Json& j) {
  if (o.words.size() != 3) throw UsageError("median needs exactly three --word options");
  const NormalForm x = parse_element(g, o.words[0]), y = parse_element(g, o.words[1]), z = parse_element(g, o.words[2]);
  const NormalForm m = median(g, x, y, z);
  j["x"] = word(g, x);
  j["y"] = word(g, y);
  j["z"] = word(g, z);
  j["median"] = word(g, m);
  j["length"] = m.size();
  return word(g, m);
}

inline std::string cmd_closure(const DefGraph& g, const Options& o, Json& j) {
  if (o.tuples.empty()) throw UsageError("at least one --tuple is required");
  std::vector<Tuple> s;
  for (const auto& t : o.tuples) {
    Tuple tuple;
    std::string part;
    std::istringstream in(t);
    while (std::getline(in, part, ',')) tuple.push_back(parse_element(g, part));
    s.push_back(std::move(tuple));
  }
  const auto r = subalgebra_closure(g, s, o.cap);
  Json elements = Json::array();
  std::string text;
  for (const auto& t : r.elements) {
    Json row = Json::array();
    std::string line;
    for (std::size_t i = 0; i < t.size(); ++i) {
      row.push_back(word(g, t[i]));
      line += (i ? ", " : "") + word(g, t[i]);
    }
    elements.push_back(row);
    text += line + "\n";
  }
  j["arity"] = s.front().size();
  j["count"] = r.elements.size();
  j["truncated"] = r.truncated;
  j["elements"] = elements;
  if (r.truncated) text += "(truncated at " + std::to_string(o.cap) + ")\n";
  text += std::to_string(r.elements.size()) + " elements";
  return text;
}

inline std::string cmd_element(const std::string& op, const DefGraph& g, const Options& o, Json& j) {
  const NormalForm a = one_word(g, o);
  j["word"] = word(g, a);
  if (op == "gamma") {
    const VertexSet s = gamma(g, a);
    j["gamma"] = names(g, s);
    j["label_irreducible"] = is_label_irreducible(g, a);
    return set_text(g, s);
  }
  if (op == "li") {
    const auto li = li_components(g, a);
    Json comps = Json::array();
    std::string text;
    for (std::size_t i = 0; i < li.components.size(); ++i) {
      comps.push_back({{"component", word(g, li.components[i])}, {"support", names(g, li.supports[i])}});
      text += (i ? "\n" : "") + word(g, li.components[i]) + "  " + set_text(g, li.supports[i]);
    }
    j["conjugator"] = word(g, cyclic_reduce(g, a).conjugator);
    j["components"] = comps;
    return text;
  }
  if (op == "root") {
    const auto r = primitive_root(g, a);
    j["root"] = word(g, r.root);
    j["exponent"] = r.exponent;
    return "(" + word(g, r.root) + ")^" + std::to_string(r.exponent);
  }
  const auto cf = centralizer(g, a);
  SubgroupForm sf{cf.cyclic_roots.empty() ? SubgroupKind::parabolic : SubgroupKind::semi_parabolic, cf.conjugator,
                  cf.cyclic_roots, cf.parabolic_support};
  j["centralizer"] = subgroup_json(g, sf);
  std::string text = format(g, sf);
  if (!o.member.empty()) {
    const bool in = membership_centralizer(g, cf, parse_element(g, o.member));
    j["member"] = {{"word", word(g, parse_element(g, o.member))}, {"in_centralizer", in}};
    text += "\nmember: " + bool_text(in);
  }
  return text;
}

inline std::string cmd_tree(const std::string& op, const DefGraph& g, const Options& o, Json& j) {
  const Vertex v = vertex_option(g, o.vertex, "--vertex");
  j["vertex"] = g.name(v);
  if (op == "length") {
    const NormalForm a = one_word(g, o);
    const int l = tv_translation_length(g, v, a);
    j["word"] = word(g, a);
    j["translation_length"] = l;
    j["elliptic"] = l == 0;
    return std::to_string(l);
  }
  const TreeArc arc = tree_arc(g, v, parse_element(g, o.from), parse_element(g, o.to));
  const int len = length(g, arc);
  j["from"] = format(g, arc.p);
  j["to"] = format(g, arc.q);
  j["distance"] = len;
  if (op == "dist") return std::to_string(len);
  if (op == "stab") {
    const auto sf = arc_stabilizer(g, arc);
    j["stabilizer"] = subgroup_json(g, sf);
    return format(g, sf);
  }
  const auto d = almost_stabilizer(g, arc, o.delta, o.radius);
  const auto rep = classify_almost_stabilizer(g, arc, o.delta, d.elements);
  Json elements = Json::array();
  for (std::size_t i = 0; i < d.elements.size(); ++i)
    elements.push_back({{"element", word(g, d.elements[i])},
                        {"side", rep.sides[i] == AlmostSide::fixes_core ? "fixes_core" : "axial"}});
  j["delta"] = o.delta;
  j["radius"] = o.radius;
  j["count"] = d.elements.size();
  j["elements"] = elements;
  j["dichotomy"] = {{"ok", rep.ok},
                    {"failure", rep.failure},
                    {"elliptic", rep.elliptic},
                    {"loxodromic", rep.loxodromic},
                    {"axis_root", rep.axis_root ? Json(word(g, *rep.axis_root)) : Json(nullptr)}};
  std::string text = std::to_string(d.elements.size()) + " elements within radius " + std::to_string(o.radius) +
                     ": " + std::to_string(rep.elliptic) + " fix the core, " + std::to_string(rep.loxodromic) +
                     " axial";
  if (rep.axis_root) text += " along " + word(g, *rep.axis_root);
  text += rep.ok ? "\ndichotomy: ok" : "\ndichotomy: FAILED (" + rep.failure + ")";
  return text;
}

inline std::string cmd_subgroup(const std::string& op, const DefGraph& g, const Options& o, Json& j) {
  if (o.subgroups.empty()) throw UsageError("--subgroup is required");
  const SubgroupForm a = parse_subgroup(g, o.subgroups.front());
  if (op == "validate") {
    const auto v = validate(g, a);
    j["valid"] = v.ok;
    j["diagnostic"] = v.diagnostic;
    if (v.ok) j["reduced"] = subgroup_json(g, reduce_conjugator(g, a));
    return v.ok ? "valid: " + format(g, reduce_conjugator(g, a)) : "invalid: " + v.diagnostic;
  }
  if (op == "member") {
    const NormalForm h = one_word(g, o);
    const bool in = member(g, a, h);
    j["word"] = word(g, h);
    j["member"] = in;
    return bool_text(in);
  }
  if (o.subgroups.size() != 2) throw UsageError("intersect needs exactly two --subgroup options");
  const SubgroupForm b = parse_subgroup(g, o.subgroups[1]);
  const auto r = intersect(g, a, b, o.radius);
  j["radius"] = o.radius;
  j["intersection"] = subgroup_json(g, r);
  return format(g, r);
}

inline Json images_json(const DefGraph& g, const ImageMap& im) {
  Json out = Json::object();
  for (Vertex u = 0; u < g.size(); ++u) out[g.name(u)] = word(g, im[static_cast<std::size_t>(u)]);
  return out;
}

inline std::string cmd_dls(const std::string& op, const DefGraph& g, const Options& o, Json& j) {
  const DlsAutomorphism phi = dls_option(g, o);
  j["automorphism"] = format(g, phi);
  j["kind"] = to_string(phi.kind);
  if (op == "build") {
    const auto check = verify_automorphism(g, phi);
    j["images"] = images_json(g, phi.images);
    j["inverse"] = images_json(g, inverse(g, phi).images);
    j["verified"] = check.ok;
    j["diagnostic"] = check.diagnostic;
    std::string text = format(g, phi) + "\nkind: " + to_string(phi.kind);
    for (Vertex u = 0; u < g.size(); ++u)
      text += "\n" + g.name(u) + " -> " + word(g, phi.images[static_cast<std::size_t>(u)]);
    text += "\nverified: " + (check.ok ? std::string("true") : "false (" + check.diagnostic + ")");
    return text;
  }
  if (op == "apply") {
    NormalForm a = one_word(g, o);
    if (o.power < 0) throw Error(errc::out_of_range, "--power must be non-negative");
    j["word"] = word(g, a);
    for (int i = 0; i < o.power; ++i) a = apply(g, phi, a);
    j["power"] = o.power;
    j["image"] = word(g, a);
    return word(g, a);
  }
  std::vector<NormalForm> probes;
  for (const auto& p : o.probes) probes.push_back(parse_element(g, p));
  if (probes.empty())
    for (Vertex u = 0; u < g.size(); ++u) probes.push_back(generator(u));
  const auto cert = outer_order_certificate(g, phi, probes, o.max_power);
  Json traces = Json::array();
  std::string text;
  for (std::size_t i = 0; i < probes.size(); ++i) {
    traces.push_back({{"probe", word(g, probes[i])}, {"lengths", cert.traces[i]}});
    text += word(g, probes[i]) + ":";
    for (int l : cert.traces[i]) text += " " + std::to_string(l);
    text += "\n";
  }
  j["max_power"] = cert.max_power;
  j["traces"] = traces;
  j["outer_powers"] = cert.outer_powers;
  j["certified"] = cert.certified();
  j["witness"] = cert.witness ? Json(word(g, probes[*cert.witness])) : Json(nullptr);
  text += cert.certified() ? "certified: infinite order in Out up to power " + std::to_string(cert.max_power) +
                                 " (witness " + word(g, probes[*cert.witness]) + ")"
                           : "certified: false";
  return text;
}

inline std::string cmd_cmp(const std::string& op, const DefGraph& g, const Options& o, Json& j) {
  const DlsAutomorphism phi = dls_option(g, o);
  j["automorphism"] = format(g, phi);
  if (op == "defect") {
    if (o.radius < 1) throw Error(errc::out_of_range, "radius must be at least 1");
    DefectReport r;
    if (o.sample > 0) {
      std::mt19937_64 rng(o.seed);
      r = cmp_defect_sampled(g, phi, o.radius, o.sample, rng);
    } else {
      r = cmp_defect(g, phi, o.radius);
    }
    j["radius"] = r.radius;
    j["defect"] = r.defect;
    j["witness"] = triple_json(g, r.witness);
    j["method"] = o.sample > 0 ? "sampled" : "exhaustive";
    if (o.sample > 0) j["samples"] = o.sample;
    std::string text = "defect " + std::to_string(r.defect) + " at radius " + std::to_string(r.radius);
    if (o.sample > 0) text += " (lower bound from " + std::to_string(o.sample) + " samples)";
    if (r.witness)
      text += "\nwitness x=" + word(g, r.witness->x) + " y=" + word(g, r.witness->y) + " p=" + word(g, r.witness->p);
    return text;
  }
  const auto c = cmp_certify(g, phi);
  Json defects = Json::array();
  for (const auto& d : c.defects) defects.push_back({{"radius", d.radius}, {"defect", d.defect}});
  j["verdict"] = to_string(c.verdict);
  j["trace"] = c.trace;
  j["defects"] = defects;
  std::string text = to_string(c.verdict);
  for (const auto& t : c.trace) text += "\n  " + t;
  return text;
}

inline std::string big(const BigInt& b) { return b.str(); }

inline std::string cmd_decomp(const std::string& op, const DefGraph& g, const Options& o, Json& j) {
  const NormalForm a = one_word(g, o);
  j["word"] = word(g, a);
  if (op == "good") {
    const auto d = decompose_good(g, a.letters());
    Json pieces = Json::array();
    std::string text;
    for (const auto& p : d.pieces) {
      const Word sub(a.letters().begin() + static_cast<std::ptrdiff_t>(p.begin),
                     a.letters().begin() + static_cast<std::ptrdiff_t>(p.end));
      pieces.push_back({{"begin", p.begin}, {"end", p.end}, {"tag", to_string(p.tag)}, {"word", format_word(g, sub)}});
      text += std::string(to_string(p.tag)) + " [" + std::to_string(p.begin) + "," + std::to_string(p.end) +
              ") " + format_word(g, sub) + "\n";
    }
    j["pieces"] = pieces;
    j["count"] = d.pieces.size();
    j["bound"] = big(d.bound);
    j["within_bound"] = d.within_bound;
    j["decent"] = is_decent(g, a.letters()).decent;
    text += std::to_string(d.pieces.size()) + " pieces, bound " + big(d.bound) +
            (d.within_bound ? " (ok)" : " (EXCEEDED)");
    return text;
  }
  if (op == "chain") {
    const Vertex v = vertex_option(g, o.tree_vertex, "--tree-vertex");
    const TreeArc arc = tree_arc(g, v, parse_element(g, o.base), multiply(g, parse_element(g, o.base), a));
    const auto r = decompose_chain(g, arc);
    auto segs = [](const std::vector<ChainSegment>& s) {
      Json out = Json::array();
      for (const auto& x : s) out.push_back({x.from, x.to});
      return out;
    };
    j["tree_vertex"] = g.name(v);
    j["arc_length"] = r.arc_length;
    j["mu"] = segs(r.mu);
    j["nu"] = segs(r.nu);
    j["gaps"] = r.gaps;
    j["bounds"] = {{"N", big(r.n)}, {"L", big(r.l)}};
    j["checks"] = {{"mu_within_L", r.mu_ok},     {"nu_longer_than_2q", r.nu_ok}, {"count_ok", r.s_ok},
                   {"gaps_ok", r.gaps_ok},       {"ends_decent", r.ends_decent}, {"all_ok", r.all_ok()}};
    std::string text = "arc length " + std::to_string(r.arc_length) + "\n";
    for (std::size_t i = 0; i < r.mu.size(); ++i) {
      text += "mu [" + std::to_string(r.mu[i].from) + "," + std::to_string(r.mu[i].to) + "]\n";
      if (i < r.nu.size()) text += "nu [" + std::to_string(r.nu[i].from) + "," + std::to_string(r.nu[i].to) + "]\n";
    }
    text += "N = " + big(r.n) + ", L = " + big(r.l) + "\nchecks: " + (r.all_ok() ? "ok" : "FAILED");
    return text;
  }
  const auto p = make_pair(g, parse_element(g, o.base), a.letters());
  const auto inv = delta_invariants(g, p);
  const auto c = classify_decent_pair(g, p);
  j["base"] = word(g, p.base);
  j["u"] = format(g, p.u);
  j["w"] = format(g, p.w);
  j["delta"] = names(g, inv.delta);
  j["case"] = to_string(c.kind);
  j["stabilizer"] = subgroup_json(g, c.stabilizer);
  j["sigma"] = names(g, c.sigma);
  j["closure"] = names(g, c.closure);
  j["double_centralizer"] = subgroup_json(g, double_centralizer(g, p, c));
  j["g"] = c.g ? Json(word(g, *c.g)) : Json(nullptr);
  j["crossed"] = c.crossed;
  j["skewered"] = c.skewered;
  j["skewer_bound_ok"] = c.skewer_bound_ok;
  std::string text = std::string(to_string(c.kind)) + "\nstabilizer " + format(g, c.stabilizer) +
                     "\ndouble centralizer " + format(g, double_centralizer(g, p, c));
  if (c.g) text += "\ng = " + word(g, *c.g);
  return text;
}

inline int cmd_selftest(const Options& o, std::ostream& out) {
  Json rows = Json::array();
  const auto results = verify::run_acceptance(o.seed, std::set<int>(o.only.begin(), o.only.end()),
                                              [&](const verify::CriterionResult& r) {
                                                if (!o.json) out << verify::format(r) << std::endl;
                                              });
  int passed = 0;
  for (const auto& r : results) {
    passed += r.pass ? 1 : 0;
    rows.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
  }
  const bool all = passed == static_cast<int>(results.size());
  if (o.json) {
    Json j = {{"schema", 1}, {"seed", o.seed}, {"criteria", rows}, {"passed", passed}, {"all_pass", all}};
    out << j.dump(2) << "\n";
  } else {
    out << passed << "/" << results.size() << " criteria passed\n";
  }
  return all ? exit_ok : exit_domain;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"raagtk: right-angled Artin group toolkit"};
  app.fallthrough();
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "emit one JSON document");
  app.add_option("--seed", o.seed, "seed for sampled operations");
  app.add_option("--graph", o.graph_file, "defining graph file");

  auto words = [&](CLI::App* s) { s->add_option("--word", o.words, "word, letters a or a^-1, identity 1"); };
  auto leaf = [&](CLI::App* parent, const char* name, const char* help) { return parent->add_subcommand(name, help); };

  auto* graph = app.add_subcommand("graph", "dump the defining graph");
  auto* normalize_cmd = app.add_subcommand("normalize", "canonical normal form");
  words(normalize_cmd);
  auto* multiply_cmd = app.add_subcommand("multiply", "product of the given words");
  words(multiply_cmd);
  auto* median_cmd = app.add_subcommand("median", "median of three elements");
  words(median_cmd);
  auto* closure = app.add_subcommand("closure", "median subalgebra closure of tuples");
  closure->add_option("--tuple", o.tuples, "comma separated words");
  closure->add_option("--cap", o.cap, "stop after this many tuples");

  auto* element = app.add_subcommand("element", "element invariants");
  element->require_subcommand(1);
  for (const char* n : {"gamma", "li", "root", "centralizer"}) {
    auto* s = leaf(element, n, "");
    words(s);
    if (std::string(n) == "centralizer") s->add_option("--member", o.member, "test membership of this word");
  }

  auto* tree = app.add_subcommand("tree", "Bass-Serre tree T_v");
  tree->require_subcommand(1);
  for (const char* n : {"dist", "length", "stab", "almost-stab"}) {
    auto* s = leaf(tree, n, "");
    s->add_option("--vertex", o.vertex, "vertex v of T_v");
    if (std::string(n) == "length") {
      words(s);
      continue;
    }
    s->add_option("--from", o.from, "element whose coset is the first endpoint");
    s->add_option("--to", o.to, "element whose coset is the second endpoint");
    if (std::string(n) == "almost-stab") {
      s->add_option("--delta", o.delta, "displacement allowance");
      s->add_option("--radius", o.radius, "ball radius");
    }
  }

  auto* subgroup = app.add_subcommand("subgroup", "semi-parabolic subgroups");
  subgroup->require_subcommand(1);
  for (const char* n : {"validate", "member", "intersect"}) {
    auto* s = leaf(subgroup, n, "");
    s->add_option("--subgroup", o.subgroups, "literal conj=W roots=W1,W2 support=a,b");
    if (std::string(n) == "member") words(s);
    if (std::string(n) == "intersect") s->add_option("--radius", o.radius, "search radius");
  }

  auto dls_options = [&](CLI::App* s) {
    s->add_option("--dls", o.dls, "twist|fold|mixed|transvection v=.. z=.. or pc A=.. B=.. C=.. z=..");
    s->add_option("--vertex", o.vertex, "transvection vertex");
    s->add_option("--z", o.z, "multiplier");
    s->add_option("--A", o.sides_a, "partial conjugation side A");
    s->add_option("--B", o.sides_b, "partial conjugation side B");
    s->add_option("--C", o.sides_c, "partial conjugation edge group");
  };
  auto* dls = app.add_subcommand("dls", "DLS automorphisms");
  dls->require_subcommand(1);
  for (const char* n : {"build", "apply", "certify"}) {
    auto* s = leaf(dls, n, "");
    dls_options(s);
    if (std::string(n) == "apply") {
      words(s);
      s->add_option("--power", o.power, "apply this many times");
    }
    if (std::string(n) == "certify") {
      s->add_option("--max-power", o.max_power, "largest power traced");
      s->add_option("--probes,--probe", o.probes, "probe words (default: the generators)");
    }
  }

  auto* cmp = app.add_subcommand("cmp", "coarse-median defects");
  cmp->require_subcommand(1);
  for (const char* n : {"defect", "certify"}) {
    auto* s = leaf(cmp, n, "");
    dls_options(s);
    if (std::string(n) == "defect") {
      s->add_option("--radius", o.radius, "ball radius");
      s->add_option("--sample", o.sample, "random samples instead of the exhaustive scan");
    }
  }

  auto* decomp = app.add_subcommand("decomp", "decompositions of geodesics and arcs");
  decomp->require_subcommand(1);
  for (const char* n : {"good", "chain", "classify"}) {
    auto* s = leaf(decomp, n, "");
    words(s);
    if (std::string(n) == "chain") s->add_option("--tree-vertex", o.tree_vertex, "vertex v of T_v");
    if (std::string(n) != "good") s->add_option("--base", o.base, "starting element");
  }

  auto* selftest = app.add_subcommand("selftest", "run the acceptance criteria");
  selftest->add_option("--only", o.only, "criterion ids")->delimiter(',');

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << "run with --help for usage\n";
    return exit_usage;
  }

  auto sub_name = [](CLI::App* s) { return s->get_subcommands().front()->get_name(); };
  try {
    if (selftest->parsed()) return detail::cmd_selftest(o, out);
    const DefGraph g = detail::load_graph(o.graph_file);
    Json j = {{"schema", 1}};
    std::string text;
    if (graph->parsed()) text = detail::cmd_graph(g, j);
    else if (normalize_cmd->parsed()) text = detail::cmd_normalize(g, o, j);
    else if (multiply_cmd->parsed()) text = detail::cmd_multiply(g, o, j);
    else if (median_cmd->parsed()) text = detail::cmd_median(g, o, j);
    else if (closure->parsed()) text = detail::cmd_closure(g, o, j);
    else if (element->parsed()) text = detail::cmd_element(sub_name(element), g, o, j);
    else if (tree->parsed()) text = detail::cmd_tree(sub_name(tree), g, o, j);
    else if (subgroup->parsed()) text = detail::cmd_subgroup(sub_name(subgroup), g, o, j);
    else if (dls->parsed()) text = detail::cmd_dls(sub_name(dls), g, o, j);
    else if (cmp->parsed()) text = detail::cmd_cmp(sub_name(cmp), g, o, j);
    else if (decomp->parsed()) text = detail::cmd_decomp(sub_name(decomp), g, o, j);
    if (o.json) out << j.dump(2) << "\n";
    else {
      out << text;
      if (text.empty() || text.back() != '\n') out << "\n";
    }
    return exit_ok;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return exit_usage;
  } catch (const Error& e) {
    if (o.json) out << Json{{"schema", 1}, {"error", e.code()}, {"message", e.what()}}.dump(2) << "\n";
    else err << "error: " << e.code() << ": " << e.what() << "\n";
    return exit_domain;
  }
}

inline int run(int argc, char** argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace raagtk::cli
