// Globalizations and twisted products G x_K X of partial actions, together
// with the comparison maps built from them.
//
// G is finite and carries the discrete topology, so G x X is |G| disjoint
// copies of X. Point (g,x) of G x X has index g*|X| + x. Every quotient point
// is a class [g,x]_K named by its least member under that indexing.
#pragma once

#include "pact/enumerate.hpp"
#include "pact/paction.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pact {

struct EnvelopeResult {
  PartialAction base;         // the K-space X
  GroupEmbedding embedding;   // K -> G
  FinSpace product;           // G x X
  FinSpace total;             // G x_K X
  PartialAction enveloping;   // the global action mu_K on total
  SpaceMap projection;        // p_K : G x X -> total
  SpaceMap iota;              // iota_K : X -> total, x -> [e,x]_K
  std::vector<std::vector<Point>> classes;  // members of each class, in G x X

  const Group& big_group() const { return embedding.target; }
  std::size_t width() const { return base.space().size(); }
  Point pair(Elem g, Point x) const { return g * width() + x; }
  Elem pair_group(Point p) const { return p / width(); }
  Point pair_point(Point p) const { return p % width(); }
  Point class_of(Elem g, Point x) const { return projection(pair(g, x)); }
  Point act(Elem g, Point c) const { return enveloping.act(g, c); }

  /// K*X inside G x X: pairs (k,x) with k.x defined.
  PointSet k_star_x() const {
    PointSet s(product.size());
    const Group& k = base.group();
    for (Elem h = 0; h < k.size(); ++h)
      for (Point x = 0; x < width(); ++x)
        if (base.defined(h, x)) s.set(pair(embedding(h), x));
    return s;
  }
  PointSet embedded() const { return iota.image(full_set(width())); }
};

inline std::string class_label(const std::string& g, const std::string& x) {
  return "[" + g + "," + x + "]";
}

/// G x_K X: the orbit space of G x X under k.(g,x) = (g k^-1, theta(k,x)),
/// with mu_K(g', [g,x]_K) = [g'g, x]_K.
inline EnvelopeResult twisted_product(const PartialAction& pa, const GroupEmbedding& emb,
                                      const Bounds& bounds = {}) {
  if (!emb.source.same_as(pa.group()))
    fail_input("group-mismatch", "partial action is not over the embedded subgroup");
  const Group& k = pa.group();
  const Group& g = emb.target;
  const FinSpace& x = pa.space();
  const std::size_t n = x.size();
  const std::size_t total_pairs = g.size() * n;
  if (total_pairs > bounds.envelope_points)
    fail_bounds("twisted product |G|*|X|", total_pairs, bounds.envelope_points);

  std::vector<std::string> labels;
  std::vector<PointSet> opens;
  for (Elem a = 0; a < g.size(); ++a)
    for (Point p = 0; p < n; ++p) {
      labels.push_back(pair_label(g.label(a), x.label(p)));
      PointSet u(total_pairs);
      for (Point q : members(x.min_open(p))) u.set(a * n + q);
      opens.push_back(std::move(u));
    }
  FinSpace gx = space_from_min_opens(std::move(labels), std::move(opens));

  std::vector<PointSet> rel(total_pairs, PointSet(total_pairs));
  for (Elem a = 0; a < g.size(); ++a)
    for (Point p = 0; p < n; ++p)
      for (Elem h = 0; h < k.size(); ++h)
        if (pa.defined(h, p))
          rel[a * n + p].set(g.mul(a, g.inv(emb(h))) * n + pa.act(h, p));
  for (Point u = 0; u < total_pairs; ++u) {
    if (!rel[u].test(u)) fail_internal("R-equivalence", "relation not reflexive");
    for (Point v : members(rel[u])) {
      if (!rel[v].test(u)) fail_internal("R-equivalence", "relation not symmetric");
      if (!rel[v].is_subset_of(rel[u])) fail_internal("R-equivalence", "relation not transitive");
    }
  }
  std::vector<std::vector<Point>> classes;
  std::vector<std::string> names;
  PointSet seen(total_pairs);
  for (Point u = 0; u < total_pairs; ++u)
    if (!seen.test(u)) {
      classes.push_back(members(rel[u]));
      names.push_back(class_label(g.label(u / n), x.label(u % n)));
      seen |= rel[u];
    }
  auto q = quotient(gx, std::move(classes), std::move(names));

  std::vector<std::vector<Point>> mu(g.size(), std::vector<Point>(q.classes.size()));
  for (Elem a = 0; a < g.size(); ++a)
    for (Point c = 0; c < q.classes.size(); ++c) {
      Point image = npos;
      for (Point u : q.classes[c]) {
        const Point v = q.projection(g.mul(a, u / n) * n + u % n);
        if (image == npos) image = v;
        else if (image != v) fail_internal("mu-well-defined", "enveloping action not well defined");
      }
      mu[a][c] = image;
    }
  PartialAction env = global_action(g, q.space, std::move(mu));
  std::vector<Point> iota(n);
  for (Point p = 0; p < n; ++p) iota[p] = q.projection(g.identity() * n + p);
  return EnvelopeResult{pa,      emb,
                        gx,      q.space,
                        env,     q.projection,
                        SpaceMap{x, q.space, std::move(iota)},
                        std::move(q.classes)};
}

/// X_G = (G x X)/R with the enveloping action.
inline EnvelopeResult globalize(const PartialAction& pa, const Bounds& bounds = {}) {
  return twisted_product(pa, identity_embedding(pa.group()), bounds);
}

/// Violated structural properties of a constructed envelope (empty when all
/// hold): p_K continuous, open and surjective; iota_K injective and
/// continuous; mu_K compatible with iota_K; G.iota(X) covers the total space.
inline std::vector<std::string> envelope_violations(const EnvelopeResult& env) {
  std::vector<std::string> out;
  if (!is_continuous(env.projection)) out.push_back("p not continuous");
  if (!is_open_map(env.projection)) out.push_back("p not open");
  if (!is_surjective(env.projection)) out.push_back("p not surjective");
  if (!is_injective(env.iota)) out.push_back("iota not injective");
  if (!is_continuous(env.iota)) out.push_back("iota not continuous");
  const PartialAction& pa = env.base;
  for (Elem k = 0; k < pa.group().size(); ++k)
    for (Point x = 0; x < env.width(); ++x)
      if (pa.defined(k, x) && env.act(env.embedding(k), env.iota(x)) != env.iota(pa.act(k, x)))
        out.push_back("mu not compatible with iota");
  PointSet cover(env.total.size());
  const PointSet img = env.embedded();
  for (Elem g = 0; g < env.big_group().size(); ++g)
    for (Point c : members(img)) cover.set(env.act(g, c));
  if (!cover.all()) out.push_back("G.iota(X) does not cover");
  return out;
}

/// p_K^-1(iota_K(X)) == K*X.
inline bool preimage_identity_holds(const EnvelopeResult& env) {
  return env.projection.preimage(env.embedded()) == env.k_star_x();
}

/// G x_K f : [g,x]_K -> [g,f(x)]_K for a K-map f between the bases.
inline SpaceMap envelope_of_map(const SpaceMap& f, const EnvelopeResult& ex,
                                const EnvelopeResult& ey) {
  if (!ex.big_group().same_as(ey.big_group()) || ex.embedding.map != ey.embedding.map)
    fail_input("group-mismatch", "envelopes over different subgroup embeddings");
  if (!is_G_map(f, ex.base, ey.base)) fail_input("not-equivariant", "map is not a K-map");
  std::vector<Point> a(ex.total.size());
  for (Point c = 0; c < ex.classes.size(); ++c) {
    Point image = npos;
    for (Point u : ex.classes[c]) {
      const Point v = ey.class_of(ex.pair_group(u), f(ex.pair_point(u)));
      if (image == npos) image = v;
      else if (image != v) fail_internal("map-well-defined", "induced map not well defined");
    }
    a[c] = image;
  }
  return SpaceMap{ex.total, ey.total, std::move(a)};
}

struct RecognitionResult {
  bool covered = false;
  PointSet uncovered;  // Y minus the union of beta_g(U)
  std::optional<EnvelopeResult> envelope;
  std::optional<SpaceMap> map;  // X_G -> Y, [g,x] -> beta_g(x)
  bool well_defined = false;
  bool bijective = false;
  bool continuous = false;
  bool inverse_continuous = false;
  bool equivariant = false;
  bool inverse_equivariant = false;

  bool is_G_homeomorphism() const {
    return covered && well_defined && bijective && continuous && inverse_continuous &&
           equivariant && inverse_equivariant;
  }
};

/// When Y is the union of the translates of an open U, the globalization of
/// the restriction to U maps onto Y by [g,x] -> beta_g(x). Everything about
/// the map is checked rather than assumed.
inline RecognitionResult recognize_globalization(const PartialAction& y, const PointSet& u,
                                                 const Bounds& bounds = {}) {
  if (!y.is_global()) fail_input("not-global", "recognition needs a global action");
  if (u.none()) fail_input("empty", "open set must be nonempty");
  if (!is_open(y.space(), u)) fail_input("open", "subset is not open");
  RecognitionResult r;
  PointSet cover(y.space().size());
  for (Elem g = 0; g < y.group().size(); ++g)
    for (Point p : members(u)) cover.set(y.act(g, p));
  r.uncovered = ~cover;
  r.covered = cover.all();
  if (!r.covered) return r;
  const auto pts = members(u);
  auto env = globalize(restrict_global(y, u), bounds);
  std::vector<Point> a(env.total.size());
  r.well_defined = true;
  for (Point c = 0; c < env.classes.size(); ++c) {
    Point image = npos;
    for (Point m : env.classes[c]) {
      const Point v = y.act(env.pair_group(m), pts[env.pair_point(m)]);
      if (image == npos) image = v;
      else if (image != v) r.well_defined = false;
    }
    a[c] = image;
  }
  SpaceMap f{env.total, y.space(), std::move(a)};
  auto inv = inverse(f);
  r.bijective = inv.has_value();
  r.continuous = is_continuous(f);
  r.equivariant = r.continuous && is_G_map(f, env.enveloping, y);
  if (inv) {
    r.inverse_continuous = is_continuous(*inv);
    r.inverse_equivariant = r.inverse_continuous && is_G_map(*inv, y, env.enveloping);
  }
  r.map = std::move(f);
  r.envelope = std::move(env);
  return r;
}

/// A K-map r : X' -> X used to test naturality in the first variable.
struct SourceMorphism {
  PartialAction source;
  SpaceMap map;
};

/// A G-map s : Y -> Y' used to test naturality in the second variable.
struct TargetMorphism {
  PartialAction target;
  SpaceMap map;
};

struct AdjunctionReport {
  std::vector<std::vector<Point>> hom_global;   // G-maps G x_K X -> Y
  std::vector<std::vector<Point>> hom_partial;  // K-maps X -> res Y
  std::vector<std::size_t> lambda;  // f -> f o iota_K, as indices into hom_partial
  std::vector<std::size_t> tau;     // f -> ([g,x] -> g.f(x)), as indices into hom_global
  bool lambda_well_typed = true;
  bool tau_well_defined = true;
  bool tau_lambda_identity = true;
  bool lambda_tau_identity = true;
  std::size_t naturality_checked = 0;
  std::size_t naturality_failed = 0;

  bool holds() const {
    return lambda_well_typed && tau_well_defined && tau_lambda_identity && lambda_tau_identity &&
           naturality_failed == 0;
  }
};

namespace detail {

inline std::size_t find_assignment(const std::vector<std::vector<Point>>& list,
                                   const std::vector<Point>& a) {
  auto it = std::lower_bound(list.begin(), list.end(), a);
  return (it != list.end() && *it == a) ? static_cast<std::size_t>(it - list.begin()) : npos;
}

inline void check_adjunction_bounds(const PartialAction& x, const PartialAction& y,
                                    const Bounds& bounds) {
  if (x.space().size() > bounds.adjunction_points)
    fail_bounds("adjunction |X|", x.space().size(), bounds.adjunction_points);
  if (y.space().size() > bounds.adjunction_points)
    fail_bounds("adjunction |Y|", y.space().size(), bounds.adjunction_points);
  if (y.group().size() > bounds.adjunction_group)
    fail_bounds("adjunction |G|", y.group().size(), bounds.adjunction_group);
}

struct AdjunctionTables {
  EnvelopeResult env;
  PartialAction res_y;
  AdjunctionReport report;
};

inline AdjunctionTables adjunction_tables(const PartialAction& x, const GroupEmbedding& emb,
                                          const PartialAction& y, const Bounds& bounds) {
  if (!y.is_global()) fail_input("not-global", "adjunction target must be a global G-space");
  if (!y.group().same_as(emb.target)) fail_input("group-mismatch", "target acted on by another group");
  check_adjunction_bounds(x, y, bounds);
  auto env = twisted_product(x, emb, bounds);
  auto res_y = restrict_group(y, emb);
  AdjunctionReport r;
  r.hom_global = enumerate_assignments(env.total, y.space(), {&env.enveloping, &y}, bounds);
  r.hom_partial = enumerate_assignments(x.space(), y.space(), {&x, &res_y}, bounds);
  for (const auto& f : r.hom_global) {
    std::vector<Point> l(x.space().size());
    for (Point p = 0; p < l.size(); ++p) l[p] = f[env.iota(p)];
    const std::size_t i = find_assignment(r.hom_partial, l);
    if (i == npos) r.lambda_well_typed = false;
    r.lambda.push_back(i);
  }
  for (const auto& f : r.hom_partial) {
    std::vector<Point> t(env.total.size(), npos);
    for (Point c = 0; c < env.classes.size(); ++c)
      for (Point u : env.classes[c]) {
        const Point v = y.act(env.pair_group(u), f[env.pair_point(u)]);
        if (t[c] == npos) t[c] = v;
        else if (t[c] != v) r.tau_well_defined = false;
      }
    const std::size_t i = find_assignment(r.hom_global, t);
    if (i == npos) r.tau_well_defined = false;
    r.tau.push_back(i);
  }
  for (std::size_t i = 0; i < r.lambda.size(); ++i)
    if (r.lambda[i] == npos || r.tau[r.lambda[i]] != i) r.tau_lambda_identity = false;
  for (std::size_t i = 0; i < r.tau.size(); ++i)
    if (r.tau[i] == npos || r.lambda[r.tau[i]] != i) r.lambda_tau_identity = false;
  return {std::move(env), std::move(res_y), std::move(r)};
}

}  // namespace detail

/// Enumerates both hom-sets of the adjunction between G x_K - and res^G_K,
/// materializes lambda and tau, checks they are mutually inverse, and checks
/// both naturality squares for every supplied test morphism.
inline AdjunctionReport adjunction_maps(const PartialAction& x, const GroupEmbedding& emb,
                                        const PartialAction& y,
                                        const std::vector<SourceMorphism>& sources = {},
                                        const std::vector<TargetMorphism>& targets = {},
                                        const Bounds& bounds = {}) {
  auto base = detail::adjunction_tables(x, emb, y, bounds);
  AdjunctionReport& r = base.report;

  // lambda_{X,Y'}(s o f) == res(s) o lambda_{X,Y}(f)
  for (const auto& t : targets) {
    if (!is_G_map(t.map, y, t.target)) fail_input("not-equivariant", "test morphism is not a G-map");
    auto other = detail::adjunction_tables(x, emb, t.target, bounds);
    for (std::size_t i = 0; i < r.hom_global.size(); ++i) {
      ++r.naturality_checked;
      std::vector<Point> sf(r.hom_global[i].size());
      for (Point c = 0; c < sf.size(); ++c) sf[c] = t.map(r.hom_global[i][c]);
      const std::size_t j = detail::find_assignment(other.report.hom_global, sf);
      if (j == npos || r.lambda[i] == npos || other.report.lambda[j] == npos) {
        ++r.naturality_failed;
        continue;
      }
      const auto& left = other.report.hom_partial[other.report.lambda[j]];
      const auto& lf = r.hom_partial[r.lambda[i]];
      std::vector<Point> right(lf.size());
      for (Point p = 0; p < lf.size(); ++p) right[p] = t.map(lf[p]);
      if (left != right) ++r.naturality_failed;
    }
  }
  // lambda_{X',Y}(f o (G x_K r)) == lambda_{X,Y}(f) o r
  for (const auto& s : sources) {
    if (!is_G_map(s.map, s.source, x)) fail_input("not-equivariant", "test morphism is not a K-map");
    auto other = detail::adjunction_tables(s.source, emb, y, bounds);
    const SpaceMap gr = envelope_of_map(s.map, other.env, base.env);
    for (std::size_t i = 0; i < r.hom_global.size(); ++i) {
      ++r.naturality_checked;
      std::vector<Point> fg(gr.assignment.size());
      for (Point c = 0; c < fg.size(); ++c) fg[c] = r.hom_global[i][gr(c)];
      const std::size_t j = detail::find_assignment(other.report.hom_global, fg);
      if (j == npos || r.lambda[i] == npos || other.report.lambda[j] == npos) {
        ++r.naturality_failed;
        continue;
      }
      const auto& left = other.report.hom_partial[other.report.lambda[j]];
      const auto& lf = r.hom_partial[r.lambda[i]];
      std::vector<Point> right(s.map.assignment.size());
      for (Point p = 0; p < right.size(); ++p) right[p] = lf[s.map(p)];
      if (left != right) ++r.naturality_failed;
    }
  }
  return r;
}

struct ProductComparison {
  EnvelopeResult source;        // G x_K (X1 x X2)
  EnvelopeResult first;         // G x_K X1
  EnvelopeResult second;        // G x_K X2
  PartialAction target;         // (G x_K X1) x (G x_K X2), diagonal action
  SpaceMap map;                 // [g,(x1,x2)] -> ([g,x1],[g,x2])
  bool well_defined = true;
  bool continuous = false;
  bool equivariant = false;
  bool injective = false;
  bool surjective = false;
  bool inverse_continuous = false;
  std::vector<Point> unhit;                       // target points with empty preimage
  std::vector<std::pair<Point, Point>> collisions;  // source pairs with equal image

  bool is_G_homeomorphism() const {
    return well_defined && continuous && equivariant && injective && surjective &&
           inverse_continuous;
  }
};

/// Builds the canonical comparison map of twisted products over a diagonal
/// product and reports each of its properties.
inline ProductComparison product_comparison(const PartialAction& x1, const PartialAction& x2,
                                            const GroupEmbedding& emb,
                                            const Bounds& bounds = {}) {
  auto diag = diagonal_product({x1, x2}, bounds);
  auto src = twisted_product(diag.action, emb, bounds);
  auto e1 = twisted_product(x1, emb, bounds);
  auto e2 = twisted_product(x2, emb, bounds);
  auto tgt = diagonal_product({e1.enveloping, e2.enveloping}, bounds);
  const std::size_t w2 = e2.total.size();
  const auto& p1 = diag.projections[0];
  const auto& p2 = diag.projections[1];

  ProductComparison r{src, e1, e2, tgt.action, SpaceMap{}, true, false, false, false, false, false, {}, {}};
  std::vector<Point> a(src.total.size(), npos);
  for (Point c = 0; c < src.classes.size(); ++c)
    for (Point u : src.classes[c]) {
      const Elem g = src.pair_group(u);
      const Point xx = src.pair_point(u);
      const Point v = e1.class_of(g, p1(xx)) * w2 + e2.class_of(g, p2(xx));
      if (a[c] == npos) a[c] = v;
      else if (a[c] != v) r.well_defined = false;
    }
  r.map = SpaceMap{src.total, tgt.action.space(), std::move(a)};
  r.continuous = is_continuous(r.map);
  r.equivariant = r.continuous && is_G_map(r.map, src.enveloping, r.target);
  const PointSet hit = r.map.image(full_set(src.total.size()));
  r.unhit = members(~hit);
  std::vector<Point> first_pre(r.target.space().size(), npos);
  for (Point c = 0; c < r.map.assignment.size(); ++c) {
    const Point v = r.map(c);
    if (first_pre[v] == npos) first_pre[v] = c;
    else r.collisions.emplace_back(first_pre[v], c);
  }
  r.injective = r.collisions.empty();
  r.surjective = r.unhit.empty();
  if (auto inv = inverse(r.map)) r.inverse_continuous = is_continuous(*inv);
  return r;
}

struct IteratedTwist {
  EnvelopeResult inner;   // X_K = K x_K X
  EnvelopeResult outer;   // G x_K (X_K)
  EnvelopeResult direct;  // G x_K X
  SpaceMap m;             // [g,(h,x)]_K -> [gh,x]_K
  SpaceMap n;             // [g,x]_K -> [g,(e,x)]_K
  bool m_well_defined = true;
  bool n_well_defined = true;
  bool m_continuous = false;
  bool n_continuous = false;
  bool m_equivariant = false;
  bool n_equivariant = false;
  bool mutually_inverse = false;

  bool holds() const {
    return m_well_defined && n_well_defined && m_continuous && n_continuous && m_equivariant &&
           n_equivariant && mutually_inverse;
  }
};

/// Compares G x_K (X_K) with G x_K X through m and n, checking every
/// representative of every class.
inline IteratedTwist iterated_twist_comparison(const PartialAction& pa, const GroupEmbedding& emb,
                                               const Bounds& bounds = {}) {
  auto inner = globalize(pa, bounds);
  auto outer = twisted_product(inner.enveloping, emb, bounds);
  auto direct = twisted_product(pa, emb, bounds);
  const Group& g = emb.target;
  IteratedTwist r{inner, outer, direct, {}, {}};

  std::vector<Point> m(outer.total.size(), npos);
  for (Point c = 0; c < outer.classes.size(); ++c)
    for (Point u : outer.classes[c]) {
      const Elem a = outer.pair_group(u);
      for (Point w : inner.classes[outer.pair_point(u)]) {
        const Point v = direct.class_of(g.mul(a, emb(inner.pair_group(w))), inner.pair_point(w));
        if (m[c] == npos) m[c] = v;
        else if (m[c] != v) r.m_well_defined = false;
      }
    }
  std::vector<Point> n(direct.total.size(), npos);
  for (Point c = 0; c < direct.classes.size(); ++c)
    for (Point u : direct.classes[c]) {
      const Point inner_point = inner.iota(direct.pair_point(u));
      const Point v = outer.class_of(direct.pair_group(u), inner_point);
      if (n[c] == npos) n[c] = v;
      else if (n[c] != v) r.n_well_defined = false;
    }
  r.m = SpaceMap{outer.total, direct.total, std::move(m)};
  r.n = SpaceMap{direct.total, outer.total, std::move(n)};
  r.m_continuous = is_continuous(r.m);
  r.n_continuous = is_continuous(r.n);
  r.m_equivariant = r.m_continuous && is_G_map(r.m, outer.enveloping, direct.enveloping);
  r.n_equivariant = r.n_continuous && is_G_map(r.n, direct.enveloping, outer.enveloping);
  const auto mn = compose(r.m, r.n);
  const auto nm = compose(r.n, r.m);
  r.mutually_inverse = mn.assignment == identity_map(direct.total).assignment &&
                       nm.assignment == identity_map(outer.total).assignment;
  return r;
}

struct TrivialCollapse {
  EnvelopeResult envelope;
  SpaceMap delta;  // [g,y]_K -> y
  bool well_defined = true;
  bool continuous = false;
  bool surjective = false;
  bool injective = false;
  bool inverse_continuous = false;
  std::optional<std::pair<Point, Point>> collision;  // two classes with the same image

  bool is_homeomorphism() const {
    return well_defined && continuous && surjective && injective && inverse_continuous;
  }
};

/// delta : G x_K Y -> Y for a trivial partial action on Y.
inline TrivialCollapse trivial_collapse(const PartialAction& pa, const GroupEmbedding& emb,
                                        const Bounds& bounds = {}) {
  if (!is_trivial(pa)) fail_input("not-trivial", "trivial_collapse needs a trivial partial action");
  auto env = twisted_product(pa, emb, bounds);
  TrivialCollapse r{env, {}, true, false, false, false, false, std::nullopt};
  std::vector<Point> d(env.total.size(), npos);
  for (Point c = 0; c < env.classes.size(); ++c)
    for (Point u : env.classes[c]) {
      const Point v = env.pair_point(u);
      if (d[c] == npos) d[c] = v;
      else if (d[c] != v) r.well_defined = false;
    }
  r.delta = SpaceMap{env.total, pa.space(), std::move(d)};
  r.continuous = is_continuous(r.delta);
  r.surjective = is_surjective(r.delta);
  std::vector<Point> first(pa.space().size(), npos);
  for (Point c = 0; c < r.delta.assignment.size() && !r.collision; ++c) {
    if (first[r.delta(c)] == npos) first[r.delta(c)] = c;
    else r.collision = std::make_pair(first[r.delta(c)], c);
  }
  r.injective = !r.collision;
  if (auto inv = inverse(r.delta)) r.inverse_continuous = is_continuous(*inv);
  return r;
}

struct FixedDecomposition {
  struct SubgroupImage {
    Subgroup subgroup;
    PointSet image_of_fixed;  // iota(X[K])
    PointSet fixed_in_image;  // iota(X)[K]
    bool equal() const { return image_of_fixed == fixed_in_image; }
  };
  struct Intersection {
    std::vector<std::size_t> family;  // indices into `images`
    PointSet intersection;            // cap_i iota(X)[K_i]
    PointSet generated;               // iota(X)[<cup_i K_i>]
    bool equal() const { return intersection == generated; }
  };

  EnvelopeResult envelope;
  Subgroup h;
  PointSet fixed;        // X_G[H]
  PointSet translates;   // cup_g mu_g(iota(X)[g^-1 H g])
  std::vector<SubgroupImage> images;
  std::vector<Intersection> intersections;

  bool decomposition_holds() const { return fixed == translates; }
  bool images_hold() const {
    return std::all_of(images.begin(), images.end(), [](const auto& i) { return i.equal(); });
  }
  bool intersections_hold() const {
    return std::all_of(intersections.begin(), intersections.end(),
                       [](const auto& i) { return i.equal(); });
  }
};

/// Fixed sets of the globalization against their description through
/// translates of the embedded copy of X. Subgroup families for the
/// intersection identity are all nonempty families when there are at most
/// ten subgroups, otherwise all pairs.
inline FixedDecomposition fixed_decomposition(const PartialAction& pa, const Subgroup& h,
                                              const Bounds& bounds = {}) {
  const Group& g = pa.group();
  if (h.mask().size() != g.size() || !is_subgroup_mask(g, h.mask()))
    fail_input("subgroup", "H must be a subgroup of the acting group");
  auto env = globalize(pa, bounds);
  const PointSet img = env.embedded();
  auto fixed_in_image = [&](const Subgroup& k) { return fixed_points(env.enveloping, k) & img; };

  FixedDecomposition r{env, h, fixed_points(env.enveloping, h), PointSet(env.total.size()), {}, {}};
  for (Elem a = 0; a < g.size(); ++a)
    for (Point c : members(fixed_in_image(conjugate_subgroup(h, a)))) r.translates.set(env.act(a, c));

  const auto subs = all_subgroups(g, bounds);
  for (const auto& k : subs)
    r.images.push_back({k, env.iota.image(fixed_points(pa, k)), fixed_in_image(k)});

  std::vector<std::vector<std::size_t>> families;
  if (subs.size() <= 10) {
    for (std::size_t mask = 1; mask < (std::size_t{1} << subs.size()); ++mask) {
      std::vector<std::size_t> fam;
      for (std::size_t i = 0; i < subs.size(); ++i)
        if (mask >> i & 1) fam.push_back(i);
      families.push_back(std::move(fam));
    }
  } else {
    for (std::size_t i = 0; i < subs.size(); ++i)
      for (std::size_t j = i; j < subs.size(); ++j) families.push_back({i, j});
  }
  for (auto& fam : families) {
    PointSet inter = img;
    PointSet joined(g.size());
    for (std::size_t i : fam) {
      inter &= r.images[i].fixed_in_image;
      joined |= subs[i].mask();
    }
    auto gen = subgroup_generated(g, members(joined));
    r.intersections.push_back({std::move(fam), inter, fixed_in_image(gen)});
  }
  return r;
}

}  // namespace pact
