// Homotopy of maps between finite spaces.
//
// Two maps into a finite space are homotopic exactly when a fence (a chain of
// pointwise comparable maps) joins them. For G-maps the fence is taken inside
// the poset of G-maps: G acts trivially on the interval, so the two-step
// homotopy between comparable G-maps is itself equivariant.
#pragma once

#include "pact/claim.hpp"
#include "pact/enumerate.hpp"
#include "pact/envelope.hpp"

#include <deque>
#include <optional>
#include <vector>

namespace pact {

/// All continuous maps (or all G-maps) X -> Y, ordered by f <= g iff
/// f(x) <= g(x) for every x.
struct MapPoset {
  FinSpace source;
  FinSpace target;
  std::vector<std::vector<Point>> maps;  // lexicographic order

  std::size_t size() const { return maps.size(); }

  bool leq(std::size_t i, std::size_t j) const {
    for (Point x = 0; x < source.size(); ++x)
      if (!target.leq(maps[i][x], maps[j][x])) return false;
    return true;
  }
  bool comparable(std::size_t i, std::size_t j) const { return leq(i, j) || leq(j, i); }

  std::size_t index_of(const std::vector<Point>& a) const {
    auto it = std::lower_bound(maps.begin(), maps.end(), a);
    return (it != maps.end() && *it == a) ? static_cast<std::size_t>(it - maps.begin()) : npos;
  }
  SpaceMap map(std::size_t i) const { return SpaceMap{source, target, maps[i]}; }

  /// Shortest fence from i to the first map satisfying `goal`, as indices.
  template <class Goal>
  std::optional<std::vector<std::size_t>> fence_to(std::size_t from, Goal goal) const {
    std::vector<std::size_t> parent(size(), npos);
    std::deque<std::size_t> queue{from};
    parent[from] = from;
    while (!queue.empty()) {
      const std::size_t i = queue.front();
      queue.pop_front();
      if (goal(i)) {
        std::vector<std::size_t> path{i};
        while (path.back() != from) path.push_back(parent[path.back()]);
        return std::vector<std::size_t>(path.rbegin(), path.rend());
      }
      for (std::size_t j = 0; j < size(); ++j)
        if (parent[j] == npos && comparable(i, j)) {
          parent[j] = i;
          queue.push_back(j);
        }
    }
    return std::nullopt;
  }

  std::optional<std::vector<std::size_t>> fence(std::size_t from, std::size_t to) const {
    return fence_to(from, [to](std::size_t i) { return i == to; });
  }

  /// Connected component label of every map.
  std::vector<std::size_t> components() const {
    std::vector<std::size_t> label(size(), npos);
    std::size_t next = 0;
    for (std::size_t s = 0; s < size(); ++s) {
      if (label[s] != npos) continue;
      std::deque<std::size_t> queue{s};
      label[s] = next;
      while (!queue.empty()) {
        const std::size_t i = queue.front();
        queue.pop_front();
        for (std::size_t j = 0; j < size(); ++j)
          if (label[j] == npos && comparable(i, j)) {
            label[j] = next;
            queue.push_back(j);
          }
      }
      ++next;
    }
    return label;
  }
};

inline MapPoset enumerate_maps(const FinSpace& x, const FinSpace& y,
                               const EquivarianceConstraint& constraint = {},
                               const Bounds& bounds = {}) {
  return MapPoset{x, y, enumerate_assignments(x, y, constraint, bounds)};
}

/// Fence between two continuous maps, or empty if they are not homotopic.
inline std::optional<std::vector<SpaceMap>> homotopy_fence(const SpaceMap& f, const SpaceMap& g,
                                                           const EquivarianceConstraint& c = {},
                                                           const Bounds& bounds = {}) {
  if (!f.source.same_as(g.source) || !f.target.same_as(g.target))
    fail_input("space-mismatch", "maps have different source or target");
  if (!is_continuous(f) || !is_continuous(g)) fail_input("discontinuous", "maps must be continuous");
  if (c.source && (!is_G_map(f, *c.source, *c.target) || !is_G_map(g, *c.source, *c.target)))
    fail_input("not-equivariant", "maps must be G-maps");
  auto poset = enumerate_maps(f.source, f.target, c, bounds);
  auto path = poset.fence(poset.index_of(f.assignment), poset.index_of(g.assignment));
  if (!path) return std::nullopt;
  std::vector<SpaceMap> out;
  for (std::size_t i : *path) out.push_back(poset.map(i));
  return out;
}

inline bool are_homotopic(const SpaceMap& f, const SpaceMap& g, const Bounds& bounds = {}) {
  return homotopy_fence(f, g, {}, bounds).has_value();
}

inline bool are_G_homotopic(const SpaceMap& f, const SpaceMap& g, const PartialAction& px,
                            const PartialAction& py, const Bounds& bounds = {}) {
  return homotopy_fence(f, g, {&px, &py}, bounds).has_value();
}

namespace detail {

/// x is a beat point of the sub-poset `alive`: its strict down-set has a
/// maximum or its strict up-set has a minimum.
inline bool is_beat_point(const FinSpace& s, const PointSet& alive, Point x) {
  PointSet below = s.min_open(x) & alive;
  below.reset(x);
  if (below.any())
    for (Point y : members(below))
      if (below.is_subset_of(s.min_open(y))) return true;
  PointSet above = s.up_set(x) & alive;
  above.reset(x);
  if (above.any())
    for (Point y : members(above))
      if (above.is_subset_of(s.up_set(y))) return true;
  return false;
}

}  // namespace detail

/// Removes beat points until none remain, taking the first beat point in
/// `priority` order (default: lowest index). Non-T0 input is reduced by its
/// Kolmogorov quotient first, and `priority` then refers to quotient points.
inline FinSpace core(const FinSpace& space, std::vector<Point> priority = {}) {
  const FinSpace s = is_T0(space) ? space : t0_quotient(space).space;
  if (priority.empty())
    for (Point x = 0; x < s.size(); ++x) priority.push_back(x);
  PointSet alive = full_set(s.size());
  bool removed = true;
  while (removed && alive.count() > 1) {
    removed = false;
    for (Point x : priority)
      if (alive.test(x) && detail::is_beat_point(s, alive, x)) {
        alive.reset(x);
        removed = true;
        break;
      }
  }
  return subspace(s, alive);
}

inline bool has_beat_point(const FinSpace& s) {
  const PointSet alive = full_set(s.size());
  for (Point x = 0; x < s.size(); ++x)
    if (detail::is_beat_point(s, alive, x)) return true;
  return false;
}

inline bool is_contractible(const FinSpace& s) { return core(s).size() == 1; }

struct GContraction {
  bool contractible = false;
  std::optional<Point> fixed_point;
  std::vector<SpaceMap> fence;  // from the identity to the constant map
};

/// Searches the poset of G-maps X -> X for a fence from the identity to a
/// constant map at a point of X[G]. With `prefilter`, an empty X[G] answers
/// immediately.
inline GContraction is_G_contractible(const PartialAction& pa, const Bounds& bounds = {},
                                      bool prefilter = true) {
  const PointSet fixed = fixed_points(pa, whole_group(pa.group()));
  if (prefilter && fixed.none()) return {};
  auto poset = enumerate_maps(pa.space(), pa.space(), {&pa, &pa}, bounds);
  const std::size_t id = poset.index_of(identity_map(pa.space()).assignment);
  auto is_fixed_constant = [&](std::size_t i) {
    const auto& a = poset.maps[i];
    return std::all_of(a.begin(), a.end(), [&](Point v) { return v == a.front(); }) &&
           fixed.test(a.front());
  };
  auto path = poset.fence_to(id, is_fixed_constant);
  if (!path) return {};
  GContraction r{true, poset.maps[path->back()].front(), {}};
  for (std::size_t i : *path) r.fence.push_back(poset.map(i));
  return r;
}

struct LocalGContractibility {
  bool holds = true;
  std::optional<Point> point;              // failing point
  std::optional<PointSet> neighborhood;    // failing G_x-invariant neighborhood
  std::size_t neighborhoods_checked = 0;
};

/// For every x and every G_x-invariant open U containing x, looks for a
/// G_x-invariant open V with x in V inside U whose inclusion into U is joined
/// by a fence of G_x-maps to a constant at a G_x-fixed point of U.
inline LocalGContractibility is_locally_G_contractible(const PartialAction& pa,
                                                       const Bounds& bounds = {}) {
  const FinSpace& s = pa.space();
  const std::size_t n = s.size();
  if (n > bounds.local_points) fail_bounds("local G-contractibility", n, bounds.local_points);
  std::vector<std::uint32_t> down(n);
  for (Point x = 0; x < n; ++x)
    for (Point y : members(s.min_open(x))) down[x] |= std::uint32_t{1} << y;
  auto to_set = [n](std::uint32_t m) {
    PointSet p(n);
    for (Point i = 0; i < n; ++i)
      if (m >> i & 1) p.set(i);
    return p;
  };
  std::vector<std::uint32_t> opens;
  for (std::uint32_t m = 1; m < (std::uint32_t{1} << n); ++m) {
    bool open = true;
    for (Point x = 0; x < n && open; ++x)
      if ((m >> x & 1) && (down[x] & ~m)) open = false;
    if (open) opens.push_back(m);
  }
  std::stable_sort(opens.begin(), opens.end(), [](std::uint32_t a, std::uint32_t b) {
    return __builtin_popcount(a) < __builtin_popcount(b);
  });

  LocalGContractibility r;
  for (Point x = 0; x < n; ++x) {
    const Subgroup gx = isotropy(pa, x).stabilizer;
    const GroupEmbedding emb = subgroup_as_group(gx);
    const PartialAction pk = restrict_group(pa, emb);
    std::vector<std::uint32_t> candidates;
    for (std::uint32_t m : opens)
      if ((m >> x & 1) && is_invariant(pa, to_set(m), gx)) candidates.push_back(m);
    for (std::uint32_t u : candidates) {
      ++r.neighborhoods_checked;
      const PointSet uset = to_set(u);
      const PartialAction pu = restrict_to_subset(pk, uset);
      const PointSet u_fixed = fixed_points(pu, whole_group(pu.group()));
      const auto upts = members(uset);
      bool found = false;
      for (std::uint32_t v : candidates) {
        if ((v & ~u) != 0) continue;
        const PointSet vset = to_set(v);
        const PartialAction pv = restrict_to_subset(pk, vset);
        std::vector<Point> incl;
        for (Point p : members(vset))
          incl.push_back(static_cast<Point>(std::lower_bound(upts.begin(), upts.end(), p) -
                                            upts.begin()));
        auto poset = enumerate_maps(pv.space(), pu.space(), {&pv, &pu}, bounds);
        const std::size_t start = poset.index_of(incl);
        if (start == npos) continue;
        auto path = poset.fence_to(start, [&](std::size_t i) {
          const auto& a = poset.maps[i];
          return std::all_of(a.begin(), a.end(), [&](Point w) { return w == a.front(); }) &&
                 u_fixed.test(a.front());
        });
        if (path) {
          found = true;
          break;
        }
      }
      if (!found) {
        r.holds = false;
        r.point = x;
        r.neighborhood = uset;
        return r;
      }
    }
  }
  return r;
}

namespace detail {

inline nlohmann::ordered_json map_json(const SpaceMap& f) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (Point x = 0; x < f.source.size(); ++x) j[f.source.label(x)] = f.target.label(f(x));
  return j;
}

inline nlohmann::ordered_json fence_json(const std::vector<SpaceMap>& fence) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const auto& f : fence) j.push_back(map_json(f));
  return j;
}

}  // namespace detail

/// For G-homotopic K-maps f, g : X -> Y, decides whether G x_K f and
/// G x_K g are G-homotopic by a direct fence search on the twisted products.
inline ClaimReport check_homotopy_preservation(const SpaceMap& f, const SpaceMap& g,
                                               const PartialAction& px, const PartialAction& py,
                                               const GroupEmbedding& emb,
                                               const Bounds& bounds = {}) {
  ClaimReport r;
  r.claim_id = "homotopy-preservation";
  r.witness["f"] = detail::map_json(f);
  r.witness["g"] = detail::map_json(g);
  auto base_fence = homotopy_fence(f, g, {&px, &py}, bounds);
  if (!base_fence) {
    r.status = ClaimStatus::precondition_unmet;
    r.witness["reason"] = "f and g are not G-homotopic";
    return r;
  }
  auto ex = twisted_product(px, emb, bounds);
  auto ey = twisted_product(py, emb, bounds);
  const SpaceMap ef = envelope_of_map(f, ex, ey);
  const SpaceMap eg = envelope_of_map(g, ex, ey);
  auto fence = homotopy_fence(ef, eg, {&ex.enveloping, &ey.enveloping}, bounds);
  r.witness["fence_length"] = base_fence->size() - 1;
  if (fence) {
    r.status = ClaimStatus::holds;
    r.witness["induced_fence"] = detail::fence_json(*fence);
  } else {
    r.status = ClaimStatus::fails;
    r.witness["induced_f"] = detail::map_json(ef);
    r.witness["induced_g"] = detail::map_json(eg);
  }
  return r;
}

/// If X is G-contractible, checks that its globalization is.
inline ClaimReport check_G_contractibility_theorem(const PartialAction& pa,
                                                   const Bounds& bounds = {}) {
  ClaimReport r;
  r.claim_id = "g-contractible";
  auto base = is_G_contractible(pa, bounds);
  if (!base.contractible) {
    r.status = ClaimStatus::precondition_unmet;
    r.witness["reason"] = "X is not G-contractible";
    r.witness["fixed_points"] = pa.space().labels_of(fixed_points(pa, whole_group(pa.group())));
    return r;
  }
  r.witness["fixed_point"] = pa.space().label(*base.fixed_point);
  r.witness["fence"] = detail::fence_json(base.fence);
  auto env = globalize(pa, bounds);
  auto glob = is_G_contractible(env.enveloping, bounds);
  if (glob.contractible) {
    r.status = ClaimStatus::holds;
    r.witness["envelope_fixed_point"] = env.total.label(*glob.fixed_point);
    r.witness["envelope_fence"] = detail::fence_json(glob.fence);
  } else {
    r.status = ClaimStatus::fails;
    r.witness["envelope_fixed_points"] =
        env.total.labels_of(fixed_points(env.enveloping, whole_group(pa.group())));
  }
  return r;
}

}  // namespace pact
