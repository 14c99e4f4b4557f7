// JSON instances, bundled fixtures and result documents.
//
// Instance schema:
//   {"id", "group": {"elements", "table", "identity"},
//    "space": {"points", "min_open": {pt: [...]}},
//    "partial_action": {"domains": {g: [...]}, "maps": {g: {x: y}}},
//    optional "big_group", "k_embedding": {k: g}, "subgroups": {name: [...]},
//    "maps": {name: {x: y}}, "factors": [{"space", "partial_action"}]}
// Errors carry a dotted location such as partial_action.domains.1.
#pragma once

#include "pact/claim.hpp"
#include "pact/envelope.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace pact {

using ojson = nlohmann::ordered_json;

struct NamedSubgroup {
  std::string name;
  Subgroup subgroup;
};

struct NamedMap {
  std::string name;
  SpaceMap map;
};

/// A further space acted on by the same group, for product constructions.
struct Factor {
  PartialAction action;
};

struct Instance {
  std::string id;
  PartialAction action;
  std::optional<GroupEmbedding> k_embedding;  // acting group -> big_group
  std::vector<NamedSubgroup> subgroups;
  std::vector<NamedMap> maps;
  std::vector<Factor> factors;

  const Group& group() const { return action.group(); }
  const FinSpace& space() const { return action.space(); }
  /// The embedding used for twisted products: the given one, else the identity.
  GroupEmbedding embedding() const {
    return k_embedding ? *k_embedding : identity_embedding(group());
  }
  const Subgroup& subgroup(const std::string& name) const {
    for (const auto& s : subgroups)
      if (s.name == name) return s.subgroup;
    fail_input("unknown-subgroup", "no subgroup named '" + name + "'", {name});
  }
};

namespace detail {

[[noreturn]] inline void schema_error(const std::string& loc, const std::string& msg) {
  throw Error(ErrorKind::invalid_input, "schema", loc + ": " + msg, {loc});
}

inline std::string join_loc(const std::string& loc, const std::string& key) {
  return loc.empty() ? key : loc + "." + key;
}

inline const ojson& field(const ojson& obj, const std::string& key, const std::string& loc) {
  if (!obj.is_object()) schema_error(loc, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) schema_error(join_loc(loc, key), "missing field");
  return *it;
}

inline std::string text(const ojson& j, const std::string& loc) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return j.dump();
  schema_error(loc, "expected a string");
}

inline std::vector<std::string> text_list(const ojson& j, const std::string& loc) {
  if (!j.is_array()) schema_error(loc, "expected an array");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(text(j[i], join_loc(loc, std::to_string(i))));
  return out;
}

/// Re-throws a library error with the location prefixed.
template <class F>
auto at(const std::string& loc, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::internal) throw;
    auto witness = e.witness().empty() ? std::vector<std::string>{loc} : e.witness();
    throw Error(e.kind(), e.rule(), loc + ": " + e.what(), std::move(witness));
  }
}

inline Group parse_group(const ojson& j, const std::string& loc) {
  const auto elements = text_list(field(j, "elements", loc), join_loc(loc, "elements"));
  std::map<std::string, Elem> idx;
  for (Elem i = 0; i < elements.size(); ++i) idx.emplace(elements[i], i);
  const ojson& t = field(j, "table", loc);
  const std::string tloc = join_loc(loc, "table");
  if (!t.is_array() || t.size() != elements.size())
    schema_error(tloc, "table must have one row per element");
  std::vector<std::vector<Elem>> table(elements.size());
  for (std::size_t r = 0; r < t.size(); ++r) {
    const std::string rloc = join_loc(tloc, std::to_string(r));
    const auto row = text_list(t[r], rloc);
    if (row.size() != elements.size()) schema_error(rloc, "row has wrong length");
    for (std::size_t c = 0; c < row.size(); ++c) {
      auto it = idx.find(row[c]);
      if (it == idx.end())
        schema_error(join_loc(rloc, std::to_string(c)), "'" + row[c] + "' is not an element");
      table[r].push_back(it->second);
    }
  }
  const std::string identity = text(field(j, "identity", loc), join_loc(loc, "identity"));
  return at(loc, [&] { return validate_group(elements, std::move(table), identity); });
}

inline FinSpace parse_space(const ojson& j, const std::string& loc) {
  const auto points = text_list(field(j, "points", loc), join_loc(loc, "points"));
  const ojson& mo = field(j, "min_open", loc);
  const std::string mloc = join_loc(loc, "min_open");
  if (!mo.is_object()) schema_error(mloc, "expected an object");
  std::set<std::string> known(points.begin(), points.end());
  std::map<std::string, std::vector<std::string>> opens;
  for (const auto& [p, list] : mo.items()) {
    const std::string ploc = join_loc(mloc, p);
    if (!known.count(p)) schema_error(ploc, "'" + p + "' is not a point");
    auto members = text_list(list, ploc);
    for (const auto& q : members)
      if (!known.count(q)) schema_error(ploc, "'" + q + "' is not a point");
    opens[p] = std::move(members);
  }
  for (const auto& p : points)
    if (!opens.count(p)) schema_error(join_loc(mloc, p), "missing minimal open set");
  return at(loc, [&] { return space_from_min_opens(points, opens); });
}

inline PartialAction parse_action(const ojson& j, const Group& g, const FinSpace& s,
                                  const std::string& loc) {
  std::map<std::string, std::vector<std::string>> domains;
  std::map<std::string, std::map<std::string, std::string>> maps;
  const ojson& d = field(j, "domains", loc);
  const std::string dloc = join_loc(loc, "domains");
  if (!d.is_object()) schema_error(dloc, "expected an object");
  for (const auto& [e, list] : d.items()) {
    const std::string eloc = join_loc(dloc, e);
    if (!g.has(e)) schema_error(eloc, "'" + e + "' is not a group element");
    auto pts = text_list(list, eloc);
    for (const auto& p : pts)
      if (!s.has(p)) schema_error(eloc, "'" + p + "' is not a point of the space");
    domains[e] = std::move(pts);
  }
  const ojson& m = field(j, "maps", loc);
  const std::string mloc = join_loc(loc, "maps");
  if (!m.is_object()) schema_error(mloc, "expected an object");
  for (const auto& [e, table] : m.items()) {
    const std::string eloc = join_loc(mloc, e);
    if (!g.has(e)) schema_error(eloc, "'" + e + "' is not a group element");
    if (!table.is_object()) schema_error(eloc, "expected an object");
    for (const auto& [x, y] : table.items()) {
      const std::string xloc = join_loc(eloc, x);
      const std::string yl = text(y, xloc);
      if (!s.has(x)) schema_error(xloc, "'" + x + "' is not a point of the space");
      if (!s.has(yl)) schema_error(xloc, "'" + yl + "' is not a point of the space");
      maps[e][x] = yl;
    }
  }
  return at(loc, [&] { return validate_partial_action(g, s, domains, maps); });
}

inline SpaceMap parse_map(const ojson& j, const FinSpace& s, const std::string& loc) {
  if (!j.is_object()) schema_error(loc, "expected an object");
  std::vector<Point> a(s.size(), npos);
  for (const auto& [x, y] : j.items()) {
    const std::string xloc = join_loc(loc, x);
    const std::string yl = text(y, xloc);
    if (!s.has(x)) schema_error(xloc, "'" + x + "' is not a point of the space");
    if (!s.has(yl)) schema_error(xloc, "'" + yl + "' is not a point of the space");
    a[s.index(x)] = s.index(yl);
  }
  for (Point p = 0; p < s.size(); ++p)
    if (a[p] == npos) schema_error(join_loc(loc, s.label(p)), "map undefined here");
  return SpaceMap{s, s, std::move(a)};
}

}  // namespace detail

inline Instance parse_instance(const ojson& j) {
  using namespace detail;
  if (!j.is_object()) schema_error("", "instance must be an object");
  Instance inst;
  inst.id = text(field(j, "id", ""), "id");
  const Group g = parse_group(field(j, "group", ""), "group");
  const FinSpace s = parse_space(field(j, "space", ""), "space");
  inst.action = parse_action(field(j, "partial_action", ""), g, s, "partial_action");

  const bool has_big = j.contains("big_group"), has_emb = j.contains("k_embedding");
  if (has_big != has_emb)
    schema_error(has_big ? "k_embedding" : "big_group", "big_group and k_embedding go together");
  if (has_big) {
    const Group big = parse_group(j["big_group"], "big_group");
    const ojson& e = j["k_embedding"];
    if (!e.is_object()) schema_error("k_embedding", "expected an object");
    std::vector<Elem> map(g.size(), npos);
    for (const auto& [k, v] : e.items()) {
      const std::string kloc = join_loc("k_embedding", k);
      const std::string vl = text(v, kloc);
      if (!g.has(k)) schema_error(kloc, "'" + k + "' is not an element of group");
      if (!big.has(vl)) schema_error(kloc, "'" + vl + "' is not an element of big_group");
      map[g.index(k)] = big.index(vl);
    }
    for (Elem k = 0; k < g.size(); ++k)
      if (map[k] == npos) schema_error(join_loc("k_embedding", g.label(k)), "missing image");
    inst.k_embedding = at("k_embedding", [&] { return validate_embedding(g, big, map); });
  }
  if (j.contains("subgroups")) {
    const ojson& sj = j["subgroups"];
    if (!sj.is_object()) schema_error("subgroups", "expected an object");
    for (const auto& [name, list] : sj.items()) {
      const std::string loc = join_loc("subgroups", name);
      PointSet mask(g.size());
      for (const auto& l : text_list(list, loc)) {
        if (!g.has(l)) schema_error(loc, "'" + l + "' is not a group element");
        mask.set(g.index(l));
      }
      inst.subgroups.push_back({name, at(loc, [&] { return make_subgroup(g, mask); })});
    }
  }
  if (j.contains("maps")) {
    const ojson& mj = j["maps"];
    if (!mj.is_object()) schema_error("maps", "expected an object");
    for (const auto& [name, table] : mj.items())
      inst.maps.push_back({name, parse_map(table, s, join_loc("maps", name))});
  }
  if (j.contains("factors")) {
    const ojson& fj = j["factors"];
    if (!fj.is_array()) schema_error("factors", "expected an array");
    for (std::size_t i = 0; i < fj.size(); ++i) {
      const std::string loc = join_loc("factors", std::to_string(i));
      const FinSpace fs = parse_space(field(fj[i], "space", loc), join_loc(loc, "space"));
      inst.factors.push_back(
          {parse_action(field(fj[i], "partial_action", loc), g, fs, join_loc(loc, "partial_action"))});
    }
  }
  return inst;
}

inline Instance parse_instance_text(const std::string& text) {
  ojson j;
  try {
    j = ojson::parse(text);
  } catch (const ojson::parse_error& e) {
    throw Error(ErrorKind::invalid_input, "json", std::string("malformed JSON: ") + e.what());
  }
  return parse_instance(j);
}

inline Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::invalid_input, "io", "cannot read " + path, {path});
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_instance_text(ss.str());
}

// ---- serialization ----

inline ojson to_json(const Group& g) {
  ojson table = ojson::array();
  for (Elem a = 0; a < g.size(); ++a) {
    ojson row = ojson::array();
    for (Elem b = 0; b < g.size(); ++b) row.push_back(g.label(g.mul(a, b)));
    table.push_back(row);
  }
  return {{"elements", g.labels()}, {"table", table}, {"identity", g.label(g.identity())}};
}

inline ojson to_json(const FinSpace& s) {
  ojson mo = ojson::object();
  for (Point p = 0; p < s.size(); ++p) mo[s.label(p)] = s.labels_of(s.min_open(p));
  return {{"points", s.labels()}, {"min_open", mo}};
}

inline ojson to_json(const PartialAction& pa) {
  const Group& g = pa.group();
  const FinSpace& s = pa.space();
  ojson domains = ojson::object(), maps = ojson::object();
  for (Elem e = 0; e < g.size(); ++e) {
    domains[g.label(e)] = s.labels_of(pa.domain(e));
    ojson m = ojson::object();
    for (Point x = 0; x < s.size(); ++x)
      if (pa.defined(e, x)) m[s.label(x)] = s.label(pa.act(e, x));
    maps[g.label(e)] = m;
  }
  return {{"domains", domains}, {"maps", maps}};
}

inline ojson map_table(const SpaceMap& f) {
  ojson j = ojson::object();
  for (Point x = 0; x < f.source.size(); ++x) j[f.source.label(x)] = f.target.label(f(x));
  return j;
}

inline ojson to_json(const Instance& inst) {
  ojson j;
  j["id"] = inst.id;
  j["group"] = to_json(inst.group());
  j["space"] = to_json(inst.space());
  j["partial_action"] = to_json(inst.action);
  if (inst.k_embedding) {
    j["big_group"] = to_json(inst.k_embedding->target);
    ojson e = ojson::object();
    for (Elem k = 0; k < inst.group().size(); ++k)
      e[inst.group().label(k)] = inst.k_embedding->target.label((*inst.k_embedding)(k));
    j["k_embedding"] = e;
  }
  if (!inst.subgroups.empty()) {
    ojson s = ojson::object();
    for (const auto& ns : inst.subgroups) s[ns.name] = ns.subgroup.labels();
    j["subgroups"] = s;
  }
  if (!inst.maps.empty()) {
    ojson m = ojson::object();
    for (const auto& nm : inst.maps) m[nm.name] = map_table(nm.map);
    j["maps"] = m;
  }
  if (!inst.factors.empty()) {
    ojson f = ojson::array();
    for (const auto& fa : inst.factors)
      f.push_back({{"space", to_json(fa.action.space())}, {"partial_action", to_json(fa.action)}});
    j["factors"] = f;
  }
  return j;
}

// ---- bundled fixtures ----

namespace fixtures {

/// The 8-point circle: corners c_i closed, arcs a_i open,
/// U_{c_i} = {a_{i-1}, c_i, a_i}. Points ordered c0, a0, c1, a1, ...
inline FinSpace circle8() {
  std::vector<std::string> labels;
  for (int i = 0; i < 4; ++i) {
    labels.push_back("c" + std::to_string(i));
    labels.push_back("a" + std::to_string(i));
  }
  std::vector<PointSet> opens(8, PointSet(8));
  for (Point i = 0; i < 4; ++i) {
    opens[2 * i].set(2 * i).set(2 * i + 1).set((2 * i + 7) % 8);
    opens[2 * i + 1].set(2 * i + 1);
  }
  return space_from_min_opens(std::move(labels), std::move(opens));
}

inline PartialAction z4_circle_action() {
  const Group g = cyclic_group(4);
  const FinSpace s = circle8();
  std::vector<std::vector<Point>> act(4, std::vector<Point>(8));
  for (Elem k = 0; k < 4; ++k)
    for (Point p = 0; p < 8; ++p) act[k][p] = (p + 2 * k) % 8;
  return global_action(g, s, std::move(act));
}

inline Instance make(std::string id, PartialAction pa) {
  Instance inst;
  inst.id = std::move(id);
  inst.action = std::move(pa);
  return inst;
}

inline NamedMap named(const std::string& name, const FinSpace& s,
                      const std::map<std::string, std::string>& table) {
  return {name, make_map(s, s, table)};
}

inline PartialAction z2_pair_action() {
  const FinSpace s = discrete_space({"a", "b"});
  return validate_partial_action(cyclic_group(2), s, {{"1", {"a"}}}, {{"1", {{"a", "a"}}}});
}

inline Instance build(const std::string& name) {
  const Group z2 = cyclic_group(2), z4 = cyclic_group(4);
  if (name == "pt") return make(name, point_action(z2));
  if (name == "z2-pair") {
    Instance i = make(name, z2_pair_action());
    i.maps.push_back(named("identity", i.space(), {{"a", "a"}, {"b", "b"}}));
    i.maps.push_back(named("collapse", i.space(), {{"a", "a"}, {"b", "a"}}));
    return i;
  }
  if (name == "z2-swap")
    return make(name, global_action(z2, discrete_space({"u", "v"}), {{0, 1}, {1, 0}}));
  if (name == "z2-wedge") {
    const FinSpace s = space_from_min_opens(
        {"w", "a", "b"}, {make_set(3, {0}), make_set(3, {0, 1}), make_set(3, {0, 2})});
    Instance i = make(name, global_action(z2, s, {{0, 1, 2}, {0, 2, 1}}));
    i.maps.push_back(named("identity", s, {{"w", "w"}, {"a", "a"}, {"b", "b"}}));
    i.maps.push_back(named("collapse", s, {{"w", "w"}, {"a", "w"}, {"b", "w"}}));
    return i;
  }
  if (name == "z4-circle") return make(name, z4_circle_action());
  if (name == "z4-half") {
    const auto c = z4_circle_action();
    return make(name, restrict_global(c, c.space().set_of({"a3", "c0", "a0", "c1", "a1"})));
  }
  if (name == "z2-pair-sq") {
    const auto x = z2_pair_action();
    Instance i = make(name, diagonal_product({x, x}).action);
    i.factors = {{x}, {x}};
    return i;
  }
  if (name == "z4-arcs") {
    const FinSpace s = circle8();
    Instance i = make(name, validate_partial_action(
                                z4, s, {{"1", {"a0"}}, {"2", {"a1", "a3"}}, {"3", {"a2"}}},
                                {{"1", {{"a2", "a0"}}},
                                 {"2", {{"a1", "a1"}, {"a3", "a3"}}},
                                 {"3", {{"a0", "a2"}}}}));
    i.subgroups.push_back({"H", subgroup_generated(z4, std::vector<std::string>{"2"})});
    return i;
  }
  if (name == "z4-from-z2-pair") {
    Instance i = make(name, z2_pair_action());
    i.k_embedding = validate_embedding(i.group(), z4, {0, 2});
    return i;
  }
  fail_input("unknown-fixture", "no bundled fixture named '" + name + "'", {name});
}

inline const std::vector<std::string>& names() {
  static const std::vector<std::string> n{"pt",      "z2-pair",   "z2-swap",    "z2-wedge",
                                          "z4-circle", "z4-half", "z2-pair-sq", "z4-arcs",
                                          "z4-from-z2-pair"};
  return n;
}

/// The fixture as a JSON document, parsed back so the instance is exactly
/// what a file would give.
inline ojson document(const std::string& name) { return to_json(build(name)); }

inline Instance load(const std::string& name) { return parse_instance(document(name)); }

}  // namespace fixtures

// ---- result documents ----

inline ojson envelope_document(const EnvelopeResult& env) {
  ojson classes = ojson::array();
  for (Point c = 0; c < env.classes.size(); ++c) {
    ojson members = ojson::array();
    for (Point u : env.classes[c]) members.push_back(env.product.label(u));
    classes.push_back({{"label", env.total.label(c)}, {"members", members}});
  }
  ojson action = ojson::object();
  const Group& g = env.big_group();
  for (Elem a = 0; a < g.size(); ++a) {
    ojson row = ojson::object();
    for (Point c = 0; c < env.total.size(); ++c) row[env.total.label(c)] = env.total.label(env.act(a, c));
    action[g.label(a)] = row;
  }
  ojson subgroup = ojson::array();
  for (Elem k = 0; k < env.base.group().size(); ++k) subgroup.push_back(g.label(env.embedding(k)));
  return {{"group", g.labels()},
          {"subgroup", subgroup},
          {"class_count", env.total.size()},
          {"classes", classes},
          {"space", to_json(env.total)},
          {"action", action},
          {"embedding", map_table(env.iota)}};
}

inline ojson orbit_document(const OrbitSpace& o) {
  ojson orbits = ojson::array();
  for (Point c = 0; c < o.orbits.size(); ++c) {
    ojson members = ojson::array();
    for (Point p : o.orbits[c]) members.push_back(o.base.space().label(p));
    orbits.push_back({{"label", o.space.label(c)}, {"members", members}});
  }
  return {{"orbit_count", o.space.size()},
          {"orbits", orbits},
          {"space", to_json(o.space)},
          {"projection", map_table(o.projection)}};
}

}  // namespace pact
