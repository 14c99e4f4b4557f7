// Claim registry: each claim is an executable check over one instance.
#pragma once

#include "pact/homotopy.hpp"
#include "pact/instance.hpp"

#include <chrono>
#include <functional>
#include <sstream>

namespace pact {

[[noreturn]] inline void fail_precondition(std::string rule, std::string message) {
  throw Error(ErrorKind::precondition, std::move(rule), std::move(message));
}

namespace detail {

/// A K-space with the embedding of K into the ambient group.
struct TwistContext {
  std::string subgroup;  // label of K
  PartialAction space;
  GroupEmbedding embedding;
};

inline std::string subgroup_name(const std::vector<std::string>& labels) {
  std::string s = "{";
  for (std::size_t i = 0; i < labels.size(); ++i) s += (i ? "," : "") + labels[i];
  return s + "}";
}

/// Every subgroup K of the acting group, plus the instance's own embedding.
inline std::vector<TwistContext> twist_contexts(const Instance& inst, const Bounds& bounds) {
  std::vector<TwistContext> out;
  for (const auto& k : all_subgroups(inst.group(), bounds)) {
    auto emb = subgroup_as_group(k);
    out.push_back({subgroup_name(k.labels()), restrict_group(inst.action, emb), emb});
  }
  if (inst.k_embedding)
    out.push_back({"k_embedding", inst.action, *inst.k_embedding});
  return out;
}

inline ojson labels_json(const FinSpace& s, const PointSet& set) { return s.labels_of(set); }

/// Independent scan of the partial-action axioms over the raw tables.
inline std::vector<std::string> axiom_scan(const PartialAction& pa) {
  std::vector<std::string> out;
  const Group& g = pa.group();
  const FinSpace& s = pa.space();
  const Elem e = g.identity();
  for (Point x = 0; x < s.size(); ++x)
    if (!pa.defined(e, x) || pa.act(e, x) != x) out.push_back("identity acts nontrivially");
  for (Elem a = 0; a < g.size(); ++a) {
    if (!is_open(s, pa.domain(a))) out.push_back("domain of " + g.label(a) + " not open");
    for (Point x = 0; x < s.size(); ++x) {
      if (pa.defined(a, x) != pa.domain(g.inv(a)).test(x))
        out.push_back("theta_" + g.label(a) + " has the wrong domain");
      if (!pa.defined(a, x)) continue;
      const Point y = pa.act(a, x);
      if (!pa.domain(a).test(y)) out.push_back("theta_" + g.label(a) + " leaves its range");
      if (!pa.defined(g.inv(a), y) || pa.act(g.inv(a), y) != x)
        out.push_back("theta_" + g.label(a) + " not inverted by its inverse");
      for (Point z = 0; z < s.size(); ++z)
        if (pa.defined(a, z) && s.leq(z, x) != s.leq(pa.act(a, z), y))
          out.push_back("theta_" + g.label(a) + " not a homeomorphism");
      for (Elem b = 0; b < g.size(); ++b)
        if (pa.defined(b, y)) {
          const Elem ba = g.mul(b, a);
          if (!pa.defined(ba, x) || pa.act(ba, x) != pa.act(b, y))
            out.push_back("composition fails at (" + g.label(b) + "," + g.label(a) + "," +
                          s.label(x) + ")");
        }
    }
  }
  return out;
}

/// Partition of G x X under (g,x) ~ (h,y) iff x in X_{g^-1 h} and
/// theta_{h^-1 g}(x) = y, computed straight from the definition.
inline std::vector<std::vector<Point>> direct_relation_classes(const PartialAction& pa) {
  const Group& g = pa.group();
  const std::size_t n = pa.space().size(), total = g.size() * n;
  std::vector<std::vector<Point>> classes;
  std::vector<bool> seen(total, false);
  for (Point u = 0; u < total; ++u) {
    if (seen[u]) continue;
    const Elem a = u / n;
    const Point x = u % n;
    std::vector<Point> cls;
    for (Point v = 0; v < total; ++v) {
      const Elem b = v / n;
      const Point y = v % n;
      const Elem k = g.mul(g.inv(b), a);
      if (pa.domain(g.mul(g.inv(a), b)).test(x) && pa.act(k, x) == y) {
        cls.push_back(v);
        seen[v] = true;
      }
    }
    classes.push_back(std::move(cls));
  }
  return classes;
}

template <class T>
std::vector<T> take(std::vector<T> v, std::size_t n) {
  if (v.size() > n) v.resize(n);
  return v;
}

/// Global G-spaces used as adjunction targets: a point, the given extra
/// spaces, and bundled global fixtures acted on by the same group.
inline std::vector<std::pair<std::string, PartialAction>> global_targets(
    const Group& g, std::vector<std::pair<std::string, PartialAction>> extra) {
  std::vector<std::pair<std::string, PartialAction>> out;
  out.emplace_back("point", point_action(g));
  for (auto& e : extra) out.push_back(std::move(e));
  for (const auto& name : fixtures::names()) {
    auto f = fixtures::build(name);
    if (f.action.is_global() && f.group().same_as(g) && !f.k_embedding)
      out.emplace_back(name, f.action);
  }
  return out;
}

}  // namespace detail

// ---- claims ----

namespace claims {

using detail::TwistContext;

inline void pa_axioms(const Instance& inst, const Bounds&, ClaimReport& r) {
  const auto v = detail::axiom_scan(inst.action);
  ojson sizes = ojson::object();
  for (Elem g = 0; g < inst.group().size(); ++g)
    sizes[inst.group().label(g)] = inst.action.domain(g).count();
  r.witness["domain_sizes"] = sizes;
  if (v.empty()) {
    r.status = ClaimStatus::holds;
  } else {
    r.status = ClaimStatus::fails;
    r.witness["violations"] = v;
  }
}

inline void embedding(const Instance& inst, const Bounds& b, ClaimReport& r) {
  const auto& pa = inst.action;
  bool nice = true;
  for (Elem g = 0; g < pa.group().size(); ++g) nice = nice && is_open(pa.space(), pa.domain(g));
  auto env = globalize(pa, b);
  const PointSet img = env.embedded();
  bool reflects = true;
  for (Point x = 0; x < env.width(); ++x)
    for (Point y = 0; y < env.width(); ++y)
      if (pa.space().leq(x, y) != env.total.leq(env.iota(x), env.iota(y))) reflects = false;
  const bool injective = is_injective(env.iota), continuous = is_continuous(env.iota);
  const bool open_image = is_open(env.total, img);
  const bool open_embedding = injective && continuous && open_image && reflects;
  r.witness["nice"] = nice;
  r.witness["injective"] = injective;
  r.witness["continuous"] = continuous;
  r.witness["open_image"] = open_image;
  r.witness["homeomorphism_onto_image"] = reflects;
  r.status = nice == open_embedding ? ClaimStatus::holds : ClaimStatus::fails;
}

inline void recognition(const Instance& inst, const Bounds& b, ClaimReport& r) {
  auto record = [&](const RecognitionResult& rec, const FinSpace& y, const PointSet& u) {
    if (rec.is_G_homeomorphism()) return true;
    r.status = ClaimStatus::fails;
    r.witness["open_set"] = y.labels_of(u);
    r.witness["well_defined"] = rec.well_defined;
    r.witness["bijective"] = rec.bijective;
    r.witness["continuous"] = rec.continuous;
    r.witness["inverse_continuous"] = rec.inverse_continuous;
    r.witness["equivariant"] = rec.equivariant;
    r.witness["inverse_equivariant"] = rec.inverse_equivariant;
    return false;
  };
  r.status = ClaimStatus::holds;
  if (!inst.action.is_global()) {
    auto env = globalize(inst.action, b);
    r.witness["mode"] = "globalization";
    r.witness["points"] = env.total.size();
    record(recognize_globalization(env.enveloping, env.embedded(), b), env.total, env.embedded());
    return;
  }
  const auto& y = inst.action;
  const std::size_t n = y.space().size();
  if (n > b.local_points) fail_bounds("open-set enumeration", n, b.local_points);
  std::size_t checked = 0;
  for (std::size_t m = 1; m < (std::size_t{1} << n); ++m) {
    PointSet u(n, m);
    if (!is_open(y.space(), u)) continue;
    PointSet cover(n);
    for (Elem g = 0; g < y.group().size(); ++g)
      for (Point p : members(u)) cover.set(y.act(g, p));
    if (!cover.all()) continue;
    ++checked;
    if (!record(recognize_globalization(y, u, b), y.space(), u)) return;
  }
  r.witness["mode"] = "covering open sets";
  r.witness["open_sets_checked"] = checked;
}

inline void twist_eq_glob(const Instance& inst, const Bounds& b, ClaimReport& r) {
  auto env = globalize(inst.action, b);
  auto twist = twisted_product(inst.action, identity_embedding(inst.group()), b);
  const auto direct = detail::direct_relation_classes(inst.action);
  const bool same = env.classes == direct && twist.classes == direct &&
                    twist.total.labels() == env.total.labels();
  r.witness["classes"] = env.total.size();
  r.witness["direct_classes"] = direct.size();
  r.status = same ? ClaimStatus::holds : ClaimStatus::fails;
}

template <class Check>
void per_context(const Instance& inst, const Bounds& b, ClaimReport& r, Check check) {
  ojson rows = ojson::array();
  r.status = ClaimStatus::holds;
  for (const auto& ctx : detail::twist_contexts(inst, b)) {
    ojson row = {{"subgroup", ctx.subgroup}};
    if (!check(ctx, row)) r.status = ClaimStatus::fails;
    rows.push_back(row);
  }
  r.witness["subgroups"] = rows;
}

inline void iota_k(const Instance& inst, const Bounds& b, ClaimReport& r) {
  per_context(inst, b, r, [&](const TwistContext& c, ojson& row) {
    auto env = twisted_product(c.space, c.embedding, b);
    auto res = restrict_group(env.enveloping, c.embedding);
    const bool inj = is_injective(env.iota);
    const bool cont = is_continuous(env.iota);
    const bool iso = cont && is_isovariant(env.iota, c.space, res);
    row["injective"] = inj;
    row["isovariant"] = iso;
    return inj && iso;
  });
}

inline void preimage(const Instance& inst, const Bounds& b, ClaimReport& r) {
  per_context(inst, b, r, [&](const TwistContext& c, ojson& row) {
    auto env = twisted_product(c.space, c.embedding, b);
    const PointSet pre = env.projection.preimage(env.embedded());
    const PointSet ks = env.k_star_x();
    row["preimage_size"] = pre.count();
    if (pre != ks) {
      row["preimage"] = env.product.labels_of(pre);
      row["k_star_x"] = env.product.labels_of(ks);
    }
    return pre == ks;
  });
}

inline void iterated_twist(const Instance& inst, const Bounds& b, ClaimReport& r) {
  per_context(inst, b, r, [&](const TwistContext& c, ojson& row) {
    auto it = iterated_twist_comparison(c.space, c.embedding, b);
    row["points"] = it.direct.total.size();
    if (!it.holds()) {
      row["m_continuous"] = it.m_continuous;
      row["n_continuous"] = it.n_continuous;
      row["m_equivariant"] = it.m_equivariant;
      row["n_equivariant"] = it.n_equivariant;
      row["mutually_inverse"] = it.mutually_inverse;
    }
    return it.holds();
  });
}

inline void adjunction(const Instance& inst, const Bounds& b, ClaimReport& r) {
  ojson rows = ojson::array();
  r.status = ClaimStatus::holds;
  std::size_t skipped = 0;
  for (const auto& c : detail::twist_contexts(inst, b)) {
    const Group& g = c.embedding.target;
    if (c.space.space().size() > b.adjunction_points || g.size() > b.adjunction_group) {
      ++skipped;
      continue;
    }
    std::vector<std::pair<std::string, PartialAction>> extra;
    auto env = twisted_product(c.space, c.embedding, b);
    extra.emplace_back("twisted product", env.enveloping);
    auto targets = detail::global_targets(g, extra);
    // endomorphisms of the K-space for naturality in the first variable
    std::vector<SourceMorphism> sources;
    for (const auto& a : detail::take(enumerate_assignments(c.space.space(), c.space.space(),
                                                           {&c.space, &c.space}, b), 3))
      sources.push_back({c.space, SpaceMap{c.space.space(), c.space.space(), a}});
    for (const auto& [name, y] : targets) {
      if (y.space().size() > b.adjunction_points) {
        ++skipped;
        continue;
      }
      std::vector<TargetMorphism> tms;
      for (const auto& [name2, y2] : targets) {
        if (y2.space().size() > b.adjunction_points) continue;
        for (const auto& a : detail::take(enumerate_assignments(y.space(), y2.space(), {&y, &y2}, b), 2))
          tms.push_back({y2, SpaceMap{y.space(), y2.space(), a}});
      }
      auto rep = adjunction_maps(c.space, c.embedding, y, sources, tms, b);
      ojson row = {{"subgroup", c.subgroup},
                   {"target", name},
                   {"hom_global", rep.hom_global.size()},
                   {"hom_partial", rep.hom_partial.size()},
                   {"naturality_checked", rep.naturality_checked}};
      if (!rep.holds()) {
        r.status = ClaimStatus::fails;
        row["lambda_well_typed"] = rep.lambda_well_typed;
        row["tau_well_defined"] = rep.tau_well_defined;
        row["tau_lambda_identity"] = rep.tau_lambda_identity;
        row["lambda_tau_identity"] = rep.lambda_tau_identity;
        row["naturality_failed"] = rep.naturality_failed;
      }
      rows.push_back(row);
    }
  }
  if (rows.empty()) fail_bounds("adjunction hom-set enumeration", inst.space().size(), b.adjunction_points);
  r.witness["cases"] = rows;
  r.witness["cases_skipped_by_bounds"] = skipped;
}

inline void product_comparison_claim(const Instance& inst, const Bounds& b, ClaimReport& r) {
  if (inst.factors.size() < 2) fail_precondition("factors", "instance has no two factors");
  auto pc = product_comparison(inst.factors[0].action, inst.factors[1].action,
                               identity_embedding(inst.group()), b);
  const FinSpace& tgt = pc.target.space();
  r.witness["source_classes"] = pc.source.total.size();
  r.witness["target_points"] = tgt.size();
  r.witness["well_defined"] = pc.well_defined;
  r.witness["continuous"] = pc.continuous;
  r.witness["equivariant"] = pc.equivariant;
  r.witness["injective"] = pc.injective;
  r.witness["surjective"] = pc.surjective;
  r.witness["inverse_continuous"] = pc.inverse_continuous;
  if (pc.is_G_homeomorphism()) {
    r.status = ClaimStatus::holds;
    return;
  }
  r.status = ClaimStatus::fails;
  r.witness["reason"] = (pc.injective && pc.surjective) ? "inverse not continuous or not equivariant"
                                                         : "not bijective";
  ojson unhit = ojson::array();
  for (Point p : pc.unhit) unhit.push_back(tgt.label(p));
  ojson coll = ojson::array();
  for (auto [a, c] : pc.collisions)
    coll.push_back({pc.source.total.label(a), pc.source.total.label(c)});
  r.witness["unhit"] = unhit;
  r.witness["collisions"] = coll;
}

inline void trivial_collapse_claim(const Instance& inst, const Bounds& b, ClaimReport& r) {
  if (!is_trivial(inst.action) || !inst.action.is_global())
    fail_precondition("trivial", "action is not trivial with full domains");
  auto tc = trivial_collapse(inst.action, inst.embedding(), b);
  r.witness["classes"] = tc.envelope.total.size();
  r.witness["points"] = inst.space().size();
  if (tc.is_homeomorphism()) {
    r.status = ClaimStatus::holds;
    return;
  }
  r.status = ClaimStatus::fails;
  r.witness["well_defined"] = tc.well_defined;
  r.witness["continuous"] = tc.continuous;
  r.witness["surjective"] = tc.surjective;
  r.witness["injective"] = tc.injective;
  r.witness["inverse_continuous"] = tc.inverse_continuous;
  if (tc.collision)
    r.witness["collision"] = {tc.envelope.total.label(tc.collision->first),
                              tc.envelope.total.label(tc.collision->second)};
}

inline void t1(const Instance& inst, const Bounds& b, ClaimReport& r) {
  if (!is_T1(inst.space())) fail_precondition("t1", "space is not T1");
  per_context(inst, b, r, [&](const TwistContext& c, ojson& row) {
    auto env = twisted_product(c.space, c.embedding, b);
    const bool ok = is_T1(env.total);
    row["points"] = env.total.size();
    if (!ok)
      for (Point p = 0; p < env.total.size(); ++p)
        if (env.total.min_open(p).count() > 1) {
          PointSet below = env.total.min_open(p);
          below.reset(p);
          row["non_closed_pair"] = {env.total.label(members(below).front()), env.total.label(p)};
          break;
        }
    return ok;
  });
}

inline void homotopy_preservation(const Instance& inst, const Bounds& b, ClaimReport& r) {
  const auto& pa = inst.action;
  const auto emb = inst.embedding();
  std::vector<std::pair<SpaceMap, SpaceMap>> pairs;
  std::vector<std::pair<std::string, std::string>> names;
  // named maps that are G-maps
  std::vector<const NamedMap*> gmaps;
  for (const auto& m : inst.maps)
    if (is_continuous(m.map) && is_G_map(m.map, pa, pa)) gmaps.push_back(&m);
  for (std::size_t i = 0; i < gmaps.size(); ++i)
    for (std::size_t j = i + 1; j < gmaps.size(); ++j)
      if (are_G_homotopic(gmaps[i]->map, gmaps[j]->map, pa, pa, b)) {
        pairs.emplace_back(gmaps[i]->map, gmaps[j]->map);
        names.emplace_back(gmaps[i]->name, gmaps[j]->name);
      }
  // representatives of nontrivial fence components among the G-endomaps
  auto poset = enumerate_maps(pa.space(), pa.space(), {&pa, &pa}, b);
  const auto comp = poset.components();
  std::map<std::size_t, std::size_t> first;
  for (std::size_t i = 0; i < poset.size() && pairs.size() < 6; ++i) {
    auto [it, fresh] = first.emplace(comp[i], i);
    if (!fresh && pairs.size() < 6) {
      pairs.emplace_back(poset.map(it->second), poset.map(i));
      names.emplace_back("endomap#" + std::to_string(it->second), "endomap#" + std::to_string(i));
      it->second = i;  // next pair starts here, so pairs spread along the component
    }
  }
  if (pairs.empty()) {
    const auto id = identity_map(pa.space());
    pairs.emplace_back(id, id);
    names.emplace_back("identity", "identity");
  }
  ojson rows = ojson::array();
  r.status = ClaimStatus::holds;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    auto rep = check_homotopy_preservation(pairs[i].first, pairs[i].second, pa, pa, emb, b);
    ojson row = {{"f", names[i].first}, {"g", names[i].second}, {"status", to_string(rep.status)}};
    if (rep.status == ClaimStatus::fails) {
      r.status = ClaimStatus::fails;
      row["detail"] = rep.witness;
    }
    rows.push_back(row);
  }
  r.witness["endomaps"] = poset.size();
  r.witness["pairs"] = rows;
}

inline void g_contractible(const Instance& inst, const Bounds& b, ClaimReport& r) {
  auto rep = check_G_contractibility_theorem(inst.action, b);
  r.status = rep.status;
  r.witness = rep.witness;
}

inline void locally_g_contractible(const Instance& inst, const Bounds& b, ClaimReport& r) {
  auto env = globalize(inst.action, b);
  if (env.total.size() > b.local_points)
    fail_bounds("local G-contractibility of the globalization", env.total.size(), b.local_points);
  const auto lhs = is_locally_G_contractible(inst.action, b);
  const auto rhs = is_locally_G_contractible(env.enveloping, b);
  r.witness["space"] = lhs.holds;
  r.witness["globalization"] = rhs.holds;
  auto describe = [](const LocalGContractibility& l, const FinSpace& s) {
    ojson j = {{"neighborhoods_checked", l.neighborhoods_checked}};
    if (!l.holds) {
      j["point"] = s.label(*l.point);
      j["neighborhood"] = s.labels_of(*l.neighborhood);
    }
    return j;
  };
  r.witness["space_detail"] = describe(lhs, inst.space());
  r.witness["globalization_detail"] = describe(rhs, env.total);
  r.status = lhs.holds == rhs.holds ? ClaimStatus::holds : ClaimStatus::fails;
}

inline void fixed_decomposition_claim(const Instance& inst, const Bounds& b, ClaimReport& r) {
  ojson rows = ojson::array();
  r.status = ClaimStatus::holds;
  for (const auto& h : all_subgroups(inst.group(), b)) {
    auto fd = fixed_decomposition(inst.action, h, b);
    const bool ok = fd.decomposition_holds() && fd.images_hold();
    ojson row = {{"subgroup", detail::subgroup_name(h.labels())},
                 {"fixed", fd.envelope.total.labels_of(fd.fixed)}};
    if (!ok) {
      r.status = ClaimStatus::fails;
      row["translates"] = fd.envelope.total.labels_of(fd.translates);
      row["images_hold"] = fd.images_hold();
    }
    rows.push_back(row);
  }
  r.witness["subgroups"] = rows;
}

inline void generated_intersection(const Instance& inst, const Bounds& b, ClaimReport& r) {
  auto fd = fixed_decomposition(inst.action, trivial_subgroup(inst.group()), b);
  r.witness["families"] = fd.intersections.size();
  r.status = ClaimStatus::holds;
  for (const auto& in : fd.intersections)
    if (!in.equal()) {
      r.status = ClaimStatus::fails;
      ojson fam = ojson::array();
      for (std::size_t i : in.family) fam.push_back(detail::subgroup_name(fd.images[i].subgroup.labels()));
      r.witness["family"] = fam;
      r.witness["intersection"] = fd.envelope.total.labels_of(in.intersection);
      r.witness["generated"] = fd.envelope.total.labels_of(in.generated);
      return;
    }
}

}  // namespace claims

using ClaimFn = void (*)(const Instance&, const Bounds&, ClaimReport&);

struct ClaimEntry {
  const char* id;
  ClaimFn run;
};

inline const std::vector<ClaimEntry>& claim_registry() {
  static const std::vector<ClaimEntry> r{
      {"pa-axioms", claims::pa_axioms},
      {"embedding", claims::embedding},
      {"recognition", claims::recognition},
      {"twist-eq-glob", claims::twist_eq_glob},
      {"iota-k", claims::iota_k},
      {"preimage", claims::preimage},
      {"iterated-twist", claims::iterated_twist},
      {"adjunction", claims::adjunction},
      {"product-comparison", claims::product_comparison_claim},
      {"trivial-collapse", claims::trivial_collapse_claim},
      {"t1", claims::t1},
      {"homotopy-preservation", claims::homotopy_preservation},
      {"g-contractible", claims::g_contractible},
      {"locally-g-contractible", claims::locally_g_contractible},
      {"fixed-decomposition", claims::fixed_decomposition_claim},
      {"generated-intersection", claims::generated_intersection},
  };
  return r;
}

inline bool is_registered(const std::string& id) {
  for (const auto& e : claim_registry())
    if (id == e.id) return true;
  return false;
}

/// Runs one claim. Bounds and unmet preconditions become statuses; invalid
/// input and internal errors propagate.
inline ClaimReport run_claim(const std::string& id, const Instance& inst, const Bounds& bounds = {}) {
  for (const auto& e : claim_registry()) {
    if (id != e.id) continue;
    ClaimReport r;
    r.claim_id = id;
    r.instance_id = inst.id;
    const auto start = std::chrono::steady_clock::now();
    try {
      e.run(inst, bounds, r);
    } catch (const Error& err) {
      if (err.kind() == ErrorKind::bounds) {
        r.status = ClaimStatus::skipped_bounds;
        r.witness = {{"bound", err.what()}};
      } else if (err.kind() == ErrorKind::precondition) {
        r.status = ClaimStatus::precondition_unmet;
        r.witness = {{"reason", err.what()}};
      } else {
        throw;
      }
    }
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
  }
  fail_input("unknown-claim", "no claim named '" + id + "'", {id});
}

/// Every registered claim in registry order; product-comparison only when
/// the instance has factors.
inline std::vector<ClaimReport> run_all(const Instance& inst, const Bounds& bounds = {}) {
  std::vector<ClaimReport> out;
  for (const auto& e : claim_registry()) {
    if (std::string(e.id) == "product-comparison" && inst.factors.size() < 2) continue;
    out.push_back(run_claim(e.id, inst, bounds));
  }
  return out;
}

struct ReplayResult {
  bool certified = false;
  std::string note;
};

/// Re-checks a report's witness against the instance. Failure witnesses of
/// the product comparison and trivial collapse are checked directly on the
/// constructed maps; other failures are re-derived and compared.
inline ReplayResult replay_witness(const ClaimReport& r, const Instance& inst, const Bounds& b = {}) {
  if (r.status != ClaimStatus::fails) return {true, "nothing to replay for status " + std::string(to_string(r.status))};
  const ojson& w = r.witness;
  try {
    if (r.claim_id == "product-comparison") {
      if (inst.factors.size() < 2) return {false, "instance has no factors"};
      auto pc = product_comparison(inst.factors[0].action, inst.factors[1].action,
                                   identity_embedding(inst.group()), b);
      const FinSpace& tgt = pc.target.space();
      const FinSpace& src = pc.source.total;
      if (w.at("source_classes").get<std::size_t>() != src.size()) return {false, "source class count differs"};
      if (w.at("target_points").get<std::size_t>() != tgt.size()) return {false, "target point count differs"};
      const auto& unhit = w.at("unhit");
      const auto& coll = w.at("collisions");
      if (unhit.empty() && coll.empty()) return {false, "witness lists no unhit point and no collision"};
      for (const auto& l : unhit) {
        const Point p = tgt.index(l.get<std::string>());
        if (pc.map.preimage(make_set(tgt.size(), {p})).any())
          return {false, "point " + l.get<std::string>() + " is hit"};
      }
      for (const auto& c : coll) {
        const Point a = src.index(c.at(0).get<std::string>()), d = src.index(c.at(1).get<std::string>());
        if (a == d || pc.map(a) != pc.map(d)) return {false, "listed collision is not one"};
      }
      return {true, "unhit points have empty preimage"};
    }
    if (r.claim_id == "trivial-collapse" && w.contains("collision")) {
      auto env = twisted_product(inst.action, inst.embedding(), b);
      const Point a = env.total.index(w["collision"].at(0).get<std::string>());
      const Point c = env.total.index(w["collision"].at(1).get<std::string>());
      auto image = [&](Point cls) { return env.pair_point(env.classes[cls].front()); };
      if (a == c || image(a) != image(c)) return {false, "listed classes do not collide"};
      return {true, "two distinct classes have the same image"};
    }
  } catch (const std::exception& e) {
    return {false, std::string("malformed witness: ") + e.what()};
  }
  auto again = run_claim(r.claim_id, inst, b);
  if (again.status == r.status && again.witness == r.witness) return {true, "re-derived identically"};
  return {false, "re-derivation disagrees"};
}

// ---- rendering ----

inline ojson report_json(const ClaimReport& r, bool with_time = true) {
  ojson j = {{"claim_id", r.claim_id}, {"instance_id", r.instance_id},
             {"status", to_string(r.status)}, {"witness", r.witness}};
  if (with_time) j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

inline std::string report_text(const ClaimReport& r) {
  std::ostringstream os;
  os << r.instance_id << "  " << r.claim_id << "  " << to_string(r.status);
  os.setf(std::ios::fixed);
  os.precision(1);
  os << "  (" << r.elapsed_ms << " ms)";
  if (r.status != ClaimStatus::holds) os << "\n    " << r.witness.dump();
  return os.str();
}

/// 0 when nothing fails, 1 when something fails.
inline int exit_code(const std::vector<ClaimReport>& reports) {
  for (const auto& r : reports)
    if (r.status == ClaimStatus::fails) return 1;
  return 0;
}

}  // namespace pact
