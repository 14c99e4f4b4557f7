// Partial actions of finite groups on finite spaces.
#pragma once

#include "pact/algebra.hpp"
#include "pact/finspace.hpp"

#include <map>
#include <string>
#include <vector>

namespace pact {

/// A topological partial action: open domains X_g and homeomorphisms
/// theta_g : X_{g^-1} -> X_g satisfying PA1-PA3. Only constructible through
/// validate_partial_action, so every instance satisfies the axioms.
class PartialAction {
public:
  const Group& group() const { return group_; }
  const FinSpace& space() const { return space_; }

  /// X_g.
  const PointSet& domain(Elem g) const { return domain_[g]; }
  const std::vector<PointSet>& domains() const { return domain_; }
  /// Whether g.x exists, i.e. x in X_{g^-1}.
  bool defined(Elem g, Point x) const { return theta_[g][x] != npos; }
  /// theta_g(x), or npos when undefined.
  Point act(Elem g, Point x) const { return theta_[g][x]; }
  const std::vector<std::vector<Point>>& theta() const { return theta_; }

  bool is_global() const {
    for (const auto& d : domain_)
      if (!d.all()) return false;
    return true;
  }
  /// G*X closed in G x X; G is discrete, so this is every X_g closed.
  bool graph_closed() const { return graph_closed_; }

private:
  Group group_;
  FinSpace space_;
  std::vector<PointSet> domain_;
  std::vector<std::vector<Point>> theta_;
  bool graph_closed_ = true;

  friend PartialAction validate_partial_action(const Group&, const FinSpace&,
                                               std::vector<PointSet>,
                                               std::vector<std::vector<Point>>);
};

/// Validates the axioms in a fixed order and throws on the first violation:
/// identity (PA3), open domains, structure (theta_g defined exactly on
/// X_{g^-1}), range, injectivity, PA1, homeomorphism, PA2. PA2 is checked both
/// by the direct triple scan and by the domain-identity form; if the two
/// disagree the validator itself is broken and an internal error is raised.
inline PartialAction validate_partial_action(const Group& group, const FinSpace& space,
                                             std::vector<PointSet> domain,
                                             std::vector<std::vector<Point>> theta) {
  const std::size_t ng = group.size();
  const std::size_t n = space.size();
  auto gl = [&](Elem g) { return group.label(g); };
  auto pl = [&](Point x) { return space.label(x); };
  if (domain.size() != ng || theta.size() != ng)
    fail_input("shape", "need one domain and one map per group element");
  for (Elem g = 0; g < ng; ++g) {
    if (domain[g].size() != n || theta[g].size() != n)
      fail_input("shape", "domain or map of " + gl(g) + " has wrong size", {gl(g)});
    for (Point x = 0; x < n; ++x)
      if (theta[g][x] != npos && theta[g][x] >= n)
        fail_input("shape", "theta_" + gl(g) + " maps outside the space", {gl(g), pl(x)});
  }
  const Elem e = group.identity();
  for (Point x = 0; x < n; ++x)
    if (!domain[e].test(x) || theta[e][x] != x)
      fail_input("PA3", "identity does not act as identity at " + pl(x), {gl(e), pl(x)});
  for (Elem g = 0; g < ng; ++g)
    for (Point y : members(domain[g]))
      if (!space.min_open(y).is_subset_of(domain[g])) {
        Point z = members(space.min_open(y) - domain[g]).front();
        fail_input("open", "X_" + gl(g) + " is not open: U_" + pl(y) + " contains " + pl(z),
                   {gl(g), pl(y), pl(z)});
      }
  for (Elem g = 0; g < ng; ++g) {
    const Elem gi = group.inv(g);
    for (Point x = 0; x < n; ++x)
      if ((theta[g][x] != npos) != domain[gi].test(x))
        fail_input("structure",
                   "theta_" + gl(g) + " must be defined exactly on X_" + gl(gi) + " (point " +
                       pl(x) + ")",
                   {gl(g), pl(x)});
  }
  for (Elem g = 0; g < ng; ++g)
    for (Point x = 0; x < n; ++x)
      if (theta[g][x] != npos && !domain[g].test(theta[g][x]))
        fail_input("range", "theta_" + gl(g) + "(" + pl(x) + ") is not in X_" + gl(g),
                   {gl(g), pl(x)});
  for (Elem g = 0; g < ng; ++g) {
    std::vector<Point> pre(n, npos);
    for (Point x = 0; x < n; ++x) {
      const Point y = theta[g][x];
      if (y == npos) continue;
      if (pre[y] != npos)
        fail_input("injective", "theta_" + gl(g) + " identifies " + pl(pre[y]) + " and " + pl(x),
                   {gl(g), pl(pre[y]), pl(x)});
      pre[y] = x;
    }
  }
  for (Elem g = 0; g < ng; ++g) {
    const Elem gi = group.inv(g);
    for (Point x = 0; x < n; ++x) {
      const Point y = theta[g][x];
      if (y != npos && theta[gi][y] != x)
        fail_input("PA1", "theta_" + gl(gi) + "(theta_" + gl(g) + "(" + pl(x) + ")) != " + pl(x),
                   {gl(g), pl(x)});
    }
  }
  for (Elem g = 0; g < ng; ++g)
    for (Point x = 0; x < n; ++x) {
      if (theta[g][x] == npos) continue;
      for (Point y = 0; y < n; ++y) {
        if (theta[g][y] == npos) continue;
        if (space.leq(x, y) != space.leq(theta[g][x], theta[g][y]))
          fail_input("homeomorphism",
                     "theta_" + gl(g) + " does not preserve the order of " + pl(x) + "," + pl(y),
                     {gl(g), pl(x), pl(y)});
      }
    }

  // PA2 by direct scan.
  std::vector<std::string> pa2;
  for (Elem g = 0; g < ng && pa2.empty(); ++g)
    for (Elem h = 0; h < ng && pa2.empty(); ++h)
      for (Point x = 0; x < n; ++x) {
        const Point hx = theta[h][x];
        if (hx == npos || theta[g][hx] == npos) continue;
        const Point ghx = theta[group.mul(g, h)][x];
        if (ghx == npos || ghx != theta[g][hx]) {
          pa2 = {gl(g), gl(h), pl(x)};
          break;
        }
      }
  // PA2 in domain-identity form: theta_g(X_{g^-1} cap X_h) = X_g cap X_gh and
  // theta_g theta_h = theta_gh on X_{h^-1} cap X_{(gh)^-1}.
  bool identity_form = true;
  for (Elem g = 0; g < ng && identity_form; ++g)
    for (Elem h = 0; h < ng && identity_form; ++h) {
      const Elem gi = group.inv(g);
      const Elem gh = group.mul(g, h);
      PointSet img(n);
      for (Point x : members(domain[gi] & domain[h])) img.set(theta[g][x]);
      if (img != (domain[g] & domain[gh])) identity_form = false;
      for (Point x : members(domain[group.inv(h)] & domain[group.inv(gh)]))
        if (theta[g][theta[h][x]] == npos || theta[g][theta[h][x]] != theta[gh][x])
          identity_form = false;
    }
  if (pa2.empty() != identity_form)
    fail_internal("PA2-consistency", "PA2 scan and domain identity disagree");
  if (!pa2.empty())
    fail_input("PA2", "PA2 fails at (" + pa2[0] + "," + pa2[1] + "," + pa2[2] + ")", pa2);

  PartialAction pa;
  pa.group_ = group;
  pa.space_ = space;
  for (const auto& d : domain)
    if (!is_closed(space, d)) pa.graph_closed_ = false;
  pa.domain_ = std::move(domain);
  pa.theta_ = std::move(theta);
  return pa;
}

/// Label-based form; the identity's domain and map may be omitted.
inline PartialAction validate_partial_action(
    const Group& group, const FinSpace& space,
    const std::map<std::string, std::vector<std::string>>& domains,
    const std::map<std::string, std::map<std::string, std::string>>& maps) {
  const std::size_t ng = group.size(), n = space.size();
  std::vector<PointSet> dom(ng, PointSet(n));
  std::vector<std::vector<Point>> theta(ng, std::vector<Point>(n, npos));
  const Elem e = group.identity();
  dom[e].set();
  for (Point x = 0; x < n; ++x) theta[e][x] = x;
  for (const auto& [g, pts] : domains) {
    const Elem gi = group.index(g);
    dom[gi].reset();
    for (const auto& p : pts) dom[gi].set(space.index(p));
  }
  for (const auto& [g, table] : maps) {
    const Elem gi = group.index(g);
    std::fill(theta[gi].begin(), theta[gi].end(), npos);
    for (const auto& [x, y] : table) theta[gi][space.index(x)] = space.index(y);
  }
  return validate_partial_action(group, space, std::move(dom), std::move(theta));
}

/// Global action from a table act[g][x].
inline PartialAction global_action(const Group& group, const FinSpace& space,
                                   std::vector<std::vector<Point>> act) {
  return validate_partial_action(group, space,
                                 std::vector<PointSet>(group.size(), full_set(space.size())),
                                 std::move(act));
}

/// Every element acts as the identity on the whole space.
inline PartialAction trivial_action(const Group& group, const FinSpace& space) {
  std::vector<Point> id(space.size());
  for (Point x = 0; x < id.size(); ++x) id[x] = x;
  return global_action(group, space, std::vector<std::vector<Point>>(group.size(), id));
}

inline PartialAction point_action(const Group& group) {
  return trivial_action(group, point_space());
}

/// theta(k,x) = x wherever defined.
inline bool is_trivial(const PartialAction& pa) {
  for (Elem g = 0; g < pa.group().size(); ++g)
    for (Point x = 0; x < pa.space().size(); ++x)
      if (pa.defined(g, x) && pa.act(g, x) != x) return false;
  return true;
}

/// Restriction of a global action to a nonempty open subset U:
/// X_g = U cap mu_g(U), theta_g = mu_g on X_{g^-1}.
inline PartialAction restrict_global(const PartialAction& global, const PointSet& subset) {
  if (!global.is_global()) fail_input("not-global", "restrict_global needs a global action");
  if (subset.none()) fail_input("empty", "restriction to an empty subset");
  if (!is_open(global.space(), subset))
    fail_input("open", "restriction subset is not open");
  const Group& g = global.group();
  const auto pts = members(subset);
  std::vector<Point> local(global.space().size(), npos);
  for (std::size_t i = 0; i < pts.size(); ++i) local[pts[i]] = i;
  FinSpace sub = subspace(global.space(), subset);
  std::vector<PointSet> dom(g.size(), PointSet(pts.size()));
  std::vector<std::vector<Point>> theta(g.size(), std::vector<Point>(pts.size(), npos));
  for (Elem h = 0; h < g.size(); ++h)
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const Point y = global.act(h, pts[i]);
      if (subset.test(y)) {
        theta[h][i] = local[y];
        dom[h].set(local[y]);
      }
    }
  return validate_partial_action(g, sub, std::move(dom), std::move(theta));
}

/// Restriction of a partial action to an open subset S: g.s is kept when
/// both s and g.s lie in S.
inline PartialAction restrict_to_subset(const PartialAction& pa, const PointSet& subset) {
  const Group& g = pa.group();
  const auto pts = members(subset);
  std::vector<Point> local(pa.space().size(), npos);
  for (std::size_t i = 0; i < pts.size(); ++i) local[pts[i]] = i;
  FinSpace sub = subspace(pa.space(), subset);
  std::vector<PointSet> dom(g.size(), PointSet(pts.size()));
  std::vector<std::vector<Point>> theta(g.size(), std::vector<Point>(pts.size(), npos));
  for (Elem h = 0; h < g.size(); ++h)
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const Point y = pa.act(h, pts[i]);
      if (y != npos && subset.test(y)) {
        theta[h][i] = local[y];
        dom[h].set(local[y]);
      }
    }
  return validate_partial_action(g, sub, std::move(dom), std::move(theta));
}

/// Pulls a partial action back along a group embedding K -> G.
inline PartialAction restrict_group(const PartialAction& pa, const GroupEmbedding& emb) {
  if (!emb.target.same_as(pa.group())) fail_input("group-mismatch", "embedding target differs");
  std::vector<PointSet> dom;
  std::vector<std::vector<Point>> theta;
  for (Elem k = 0; k < emb.source.size(); ++k) {
    dom.push_back(pa.domain(emb(k)));
    theta.push_back(pa.theta()[emb(k)]);
  }
  return validate_partial_action(emb.source, pa.space(), std::move(dom), std::move(theta));
}

struct DiagonalProduct {
  PartialAction action;
  std::vector<SpaceMap> projections;
};

/// Diagonal partial action on the product: g.(x_j) defined iff every g.x_j is.
inline DiagonalProduct diagonal_product(const std::vector<PartialAction>& factors,
                                        const Bounds& bounds = {}) {
  if (factors.empty()) fail_input("empty", "diagonal product needs a factor");
  const Group& g = factors.front().group();
  std::size_t n = 1;
  for (const auto& f : factors) {
    if (!f.group().same_as(g)) fail_input("group-mismatch", "factors act by different groups");
    n *= f.space().size();
    if (n > bounds.product_points) fail_bounds("diagonal_product", n, bounds.product_points);
  }
  const std::size_t m = factors.size();
  auto coords = [&](Point p) {
    std::vector<Point> c(m);
    for (std::size_t j = m; j-- > 0;) {
      c[j] = p % factors[j].space().size();
      p /= factors[j].space().size();
    }
    return c;
  };
  auto index = [&](const std::vector<Point>& c) {
    Point p = 0;
    for (std::size_t j = 0; j < m; ++j) p = p * factors[j].space().size() + c[j];
    return p;
  };
  std::vector<std::string> labels;
  std::vector<PointSet> opens;
  for (Point p = 0; p < n; ++p) {
    const auto c = coords(p);
    std::string l = "(";
    for (std::size_t j = 0; j < m; ++j) l += (j ? "," : "") + factors[j].space().label(c[j]);
    labels.push_back(l + ")");
    PointSet u(n);
    for (Point q = 0; q < n; ++q) {
      const auto d = coords(q);
      bool in = true;
      for (std::size_t j = 0; j < m && in; ++j) in = factors[j].space().leq(d[j], c[j]);
      if (in) u.set(q);
    }
    opens.push_back(std::move(u));
  }
  FinSpace space = space_from_min_opens(std::move(labels), std::move(opens));
  std::vector<PointSet> dom(g.size(), PointSet(n));
  std::vector<std::vector<Point>> theta(g.size(), std::vector<Point>(n, npos));
  for (Elem h = 0; h < g.size(); ++h)
    for (Point p = 0; p < n; ++p) {
      auto c = coords(p);
      bool in = true;
      for (std::size_t j = 0; j < m && in; ++j) in = factors[j].domain(h).test(c[j]);
      if (in) dom[h].set(p);
      bool def = true;
      for (std::size_t j = 0; j < m && def; ++j) {
        c[j] = factors[j].act(h, c[j]);
        def = c[j] != npos;
      }
      if (def) theta[h][p] = index(c);
    }
  DiagonalProduct out{validate_partial_action(g, space, std::move(dom), std::move(theta)), {}};
  for (std::size_t j = 0; j < m; ++j) {
    std::vector<Point> a(n);
    for (Point p = 0; p < n; ++p) a[p] = coords(p)[j];
    out.projections.push_back(SpaceMap{space, factors[j].space(), std::move(a)});
  }
  return out;
}

struct Isotropy {
  PointSet defined;  // G^x, elements g with g.x defined
  Subgroup stabilizer;  // G_x
};

inline Isotropy isotropy(const PartialAction& pa, Point x) {
  const Group& g = pa.group();
  if (x >= pa.space().size()) fail_input("unknown-point", "point out of range");
  PointSet def(g.size()), fix(g.size());
  for (Elem h = 0; h < g.size(); ++h)
    if (pa.defined(h, x)) {
      def.set(h);
      if (pa.act(h, x) == x) fix.set(h);
    }
  if (!is_subgroup_mask(g, fix)) fail_internal("isotropy", "stabilizer is not a subgroup");
  return {def, Subgroup(g, fix)};
}

/// X[K] = {x : K contained in G_x}.
inline PointSet fixed_points(const PartialAction& pa, const Subgroup& k) {
  if (k.mask().size() != pa.group().size() || !is_subgroup_mask(pa.group(), k.mask()))
    fail_input("subgroup", "fixed_points needs a subgroup of the acting group");
  PointSet out(pa.space().size());
  for (Point x = 0; x < pa.space().size(); ++x) {
    bool fixed = true;
    for (Elem h : k.elements())
      if (!pa.defined(h, x) || pa.act(h, x) != x) { fixed = false; break; }
    if (fixed) out.set(x);
  }
  return out;
}

struct OrbitSpace {
  PartialAction base;
  FinSpace space;
  SpaceMap projection;
  std::vector<std::vector<Point>> orbits;
};

/// Quotient by x ~ g.x; the relation is checked to be an equivalence first.
inline OrbitSpace orbit_space(const PartialAction& pa) {
  const std::size_t n = pa.space().size();
  std::vector<PointSet> rel(n, PointSet(n));
  for (Point x = 0; x < n; ++x)
    for (Elem g = 0; g < pa.group().size(); ++g)
      if (pa.defined(g, x)) rel[x].set(pa.act(g, x));
  for (Point x = 0; x < n; ++x) {
    if (!rel[x].test(x)) fail_internal("orbit-relation", "orbit relation not reflexive");
    for (Point y : members(rel[x])) {
      if (!rel[y].test(x)) fail_internal("orbit-relation", "orbit relation not symmetric");
      if (!rel[y].is_subset_of(rel[x]))
        fail_internal("orbit-relation", "orbit relation not transitive");
    }
  }
  std::vector<std::vector<Point>> classes;
  PointSet seen(n);
  for (Point x = 0; x < n; ++x)
    if (!seen.test(x)) {
      classes.push_back(members(rel[x]));
      seen |= rel[x];
    }
  auto q = quotient(pa.space(), std::move(classes));
  return {pa, q.space, q.projection, q.classes};
}

inline bool is_free(const PartialAction& pa) {
  for (Elem g = 0; g < pa.group().size(); ++g) {
    if (g == pa.group().identity()) continue;
    for (Point x = 0; x < pa.space().size(); ++x)
      if (pa.defined(g, x) && pa.act(g, x) == x) return false;
  }
  return true;
}

/// theta(k,s) in S whenever s in S and k.s is defined, for k in K.
inline bool is_invariant(const PartialAction& pa, const PointSet& subset, const Subgroup& k) {
  if (subset.size() != pa.space().size()) fail_input("subset-shape", "subset has wrong size");
  if (k.mask().size() != pa.group().size()) fail_input("subgroup", "subgroup of another group");
  for (Elem h : k.elements())
    for (Point s : members(subset))
      if (pa.defined(h, s) && !subset.test(pa.act(h, s))) return false;
  return true;
}

namespace detail {

inline void require_equivariant_inputs(const SpaceMap& f, const PartialAction& px,
                                       const PartialAction& py) {
  if (!px.group().same_as(py.group())) fail_input("group-mismatch", "actions by different groups");
  if (!f.source.same_as(px.space()) || !f.target.same_as(py.space()))
    fail_input("space-mismatch", "map does not go between the acting spaces");
  if (!is_continuous(f)) fail_input("discontinuous", "G-maps must be continuous");
}

inline bool g_map_condition(const SpaceMap& f, const PartialAction& px, const PartialAction& py) {
  for (Elem g = 0; g < px.group().size(); ++g)
    for (Point x = 0; x < px.space().size(); ++x) {
      if (!px.defined(g, x)) continue;
      const Point fx = f(x);
      if (!py.defined(g, fx) || py.act(g, fx) != f(px.act(g, x))) return false;
    }
  return true;
}

}  // namespace detail

/// (g, f(x)) in G*Y and eta(g, f(x)) = f(theta(g, x)) for all (g,x) in G*X.
/// A discontinuous f is an error, not a negative answer.
inline bool is_G_map(const SpaceMap& f, const PartialAction& px, const PartialAction& py) {
  detail::require_equivariant_inputs(f, px, py);
  return detail::g_map_condition(f, px, py);
}

/// A G-map that also preserves isotropy groups exactly.
inline bool is_isovariant(const SpaceMap& f, const PartialAction& px, const PartialAction& py) {
  if (!is_G_map(f, px, py)) return false;
  for (Point x = 0; x < px.space().size(); ++x)
    if (!(isotropy(px, x).stabilizer == isotropy(py, f(x)).stabilizer)) return false;
  return true;
}

}  // namespace pact
