// Finite topological spaces in the minimal-open-set encoding.
//
// Points are ordered; x <= y (the specialization preorder) means x lies in the
// minimal open set U_y. Open sets are exactly the down-sets of <=.
#pragma once

#include "pact/core.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace pact {

class FinSpace {
public:
  FinSpace() = default;

  std::size_t size() const { return data_ ? data_->labels.size() : 0; }
  const std::string& label(Point p) const { return data_->labels[p]; }
  const std::vector<std::string>& labels() const { return data_->labels; }

  /// U_y, the smallest open set containing y.
  const PointSet& min_open(Point y) const { return data_->down[y]; }
  /// {y : x <= y}, the smallest closed set containing x.
  const PointSet& up_set(Point x) const { return data_->up[x]; }
  bool leq(Point x, Point y) const { return data_->down[y].test(x); }

  Point index(const std::string& label) const {
    auto it = data_->index.find(label);
    if (it == data_->index.end())
      fail_input("unknown-point", "unknown point '" + label + "'", {label});
    return it->second;
  }
  bool has(const std::string& label) const { return data_->index.count(label) != 0; }

  PointSet set_of(const std::vector<std::string>& labels) const {
    PointSet s(size());
    for (const auto& l : labels) s.set(index(l));
    return s;
  }
  std::vector<std::string> labels_of(const PointSet& s) const {
    std::vector<std::string> out;
    for (Point p : members(s)) out.push_back(label(p));
    return out;
  }

  bool same_as(const FinSpace& o) const {
    return data_ == o.data_ ||
           (data_ && o.data_ && data_->labels == o.data_->labels && data_->down == o.data_->down);
  }

private:
  struct Data {
    std::vector<std::string> labels;
    std::map<std::string, Point> index;
    std::vector<PointSet> down;
    std::vector<PointSet> up;
  };
  std::shared_ptr<const Data> data_;

  friend FinSpace space_from_min_opens(std::vector<std::string>, std::vector<PointSet>);
};

/// Builds a space from U_x for every point x; rejects families that are not
/// minimal open sets (x must lie in U_x, and y in U_x forces U_y inside U_x).
inline FinSpace space_from_min_opens(std::vector<std::string> labels,
                                     std::vector<PointSet> min_open) {
  const std::size_t n = labels.size();
  if (n == 0) fail_input("empty", "space has no points");
  if (min_open.size() != n) fail_input("min-open-shape", "min_open must cover every point");
  auto d = std::make_shared<FinSpace::Data>();
  for (Point i = 0; i < n; ++i)
    if (!d->index.emplace(labels[i], i).second)
      fail_input("duplicate-point", "duplicate point '" + labels[i] + "'", {labels[i]});
  for (Point x = 0; x < n; ++x) {
    if (min_open[x].size() != n) fail_input("min-open-shape", "min_open set has wrong size");
    if (!min_open[x].test(x))
      fail_input("membership", labels[x] + " is not in its own minimal open set", {labels[x]});
  }
  for (Point x = 0; x < n; ++x)
    for (Point y : members(min_open[x]))
      if (!min_open[y].is_subset_of(min_open[x])) {
        Point z = members(min_open[y] - min_open[x]).front();
        fail_input("nesting",
                   labels[y] + " is in U_" + labels[x] + " but " + labels[z] + " in U_" +
                       labels[y] + " is not",
                   {labels[x], labels[y], labels[z]});
      }
  d->up.assign(n, PointSet(n));
  for (Point y = 0; y < n; ++y)
    for (Point x : members(min_open[y])) d->up[x].set(y);
  d->labels = std::move(labels);
  d->down = std::move(min_open);
  FinSpace s;
  s.data_ = std::move(d);
  return s;
}

inline FinSpace space_from_min_opens(
    const std::vector<std::string>& labels,
    const std::map<std::string, std::vector<std::string>>& min_open) {
  std::map<std::string, Point> idx;
  for (Point i = 0; i < labels.size(); ++i) idx[labels[i]] = i;
  std::vector<PointSet> sets(labels.size(), PointSet(labels.size()));
  for (Point i = 0; i < labels.size(); ++i) {
    auto it = min_open.find(labels[i]);
    if (it == min_open.end())
      fail_input("min-open-missing", "no minimal open set for " + labels[i], {labels[i]});
    for (const auto& l : it->second) {
      auto j = idx.find(l);
      if (j == idx.end()) fail_input("unknown-point", "unknown point '" + l + "'", {l});
      sets[i].set(j->second);
    }
  }
  return space_from_min_opens(labels, std::move(sets));
}

/// Discrete space on the given labels.
inline FinSpace discrete_space(const std::vector<std::string>& labels) {
  std::vector<PointSet> sets;
  for (Point i = 0; i < labels.size(); ++i) sets.push_back(make_set(labels.size(), {i}));
  return space_from_min_opens(labels, std::move(sets));
}

inline FinSpace point_space(const std::string& label = "*") { return discrete_space({label}); }

inline bool is_open(const FinSpace& s, const PointSet& subset) {
  if (subset.size() != s.size()) fail_input("subset-shape", "subset has wrong size");
  for (Point y : members(subset))
    if (!s.min_open(y).is_subset_of(subset)) return false;
  return true;
}

inline bool is_closed(const FinSpace& s, const PointSet& subset) {
  return is_open(s, ~subset);
}

/// Smallest open set containing `subset`.
inline PointSet open_hull(const FinSpace& s, const PointSet& subset) {
  PointSet out(s.size());
  for (Point y : members(subset)) out |= s.min_open(y);
  return out;
}

/// A total function between point sets; continuity is a property, not an invariant.
struct SpaceMap {
  FinSpace source;
  FinSpace target;
  std::vector<Point> assignment;

  Point operator()(Point x) const { return assignment[x]; }

  PointSet image(const PointSet& s) const {
    PointSet out(target.size());
    for (Point x : members(s)) out.set(assignment[x]);
    return out;
  }
  PointSet preimage(const PointSet& s) const {
    PointSet out(source.size());
    for (Point x = 0; x < assignment.size(); ++x)
      if (s.test(assignment[x])) out.set(x);
    return out;
  }
};

inline SpaceMap identity_map(const FinSpace& s) {
  std::vector<Point> a(s.size());
  std::iota(a.begin(), a.end(), Point{0});
  return {s, s, std::move(a)};
}

inline SpaceMap constant_map(const FinSpace& src, const FinSpace& tgt, Point value) {
  return {src, tgt, std::vector<Point>(src.size(), value)};
}

/// g after f.
inline SpaceMap compose(const SpaceMap& g, const SpaceMap& f) {
  std::vector<Point> a(f.assignment.size());
  for (Point x = 0; x < a.size(); ++x) a[x] = g.assignment[f.assignment[x]];
  return {f.source, g.target, std::move(a)};
}

inline SpaceMap make_map(const FinSpace& src, const FinSpace& tgt,
                         const std::map<std::string, std::string>& table) {
  std::vector<Point> a(src.size(), npos);
  for (const auto& [x, y] : table) a[src.index(x)] = tgt.index(y);
  for (Point x = 0; x < a.size(); ++x)
    if (a[x] == npos)
      fail_input("map-partial", "map undefined at " + src.label(x), {src.label(x)});
  return {src, tgt, std::move(a)};
}

inline bool is_injective(const SpaceMap& f) {
  PointSet hit(f.target.size());
  for (Point y : f.assignment) {
    if (hit.test(y)) return false;
    hit.set(y);
  }
  return true;
}

inline bool is_surjective(const SpaceMap& f) {
  return f.image(full_set(f.source.size())).all();
}

/// Continuity of a map between finite spaces is monotonicity of the preorder.
inline bool is_continuous(const SpaceMap& f) {
  for (Point y = 0; y < f.source.size(); ++y)
    for (Point x : members(f.source.min_open(y)))
      if (!f.target.leq(f(x), f(y))) return false;
  return true;
}

inline bool is_open_map(const SpaceMap& f) {
  // Every open set is a union of minimal opens and images preserve unions.
  for (Point y = 0; y < f.source.size(); ++y)
    if (!is_open(f.target, f.image(f.source.min_open(y)))) return false;
  return true;
}

/// Inverse of a bijection; empty when f is not bijective.
inline std::optional<SpaceMap> inverse(const SpaceMap& f) {
  if (f.source.size() != f.target.size() || !is_injective(f)) return std::nullopt;
  std::vector<Point> a(f.target.size());
  for (Point x = 0; x < f.assignment.size(); ++x) a[f.assignment[x]] = x;
  return SpaceMap{f.target, f.source, std::move(a)};
}

inline bool is_homeomorphism(const SpaceMap& f) {
  auto inv = inverse(f);
  return inv && is_continuous(f) && is_continuous(*inv);
}

struct ProductResult {
  FinSpace space;
  SpaceMap first;
  SpaceMap second;
  std::size_t width = 0;  // point (a,b) has index a*width + b

  Point pair(Point a, Point b) const { return a * width + b; }
};

inline std::string pair_label(const std::string& a, const std::string& b) {
  return "(" + a + "," + b + ")";
}

/// Product topology: U_(a,b) = U_a x U_b.
inline ProductResult product(const FinSpace& a, const FinSpace& b, const Bounds& bounds = {}) {
  const std::size_t n = a.size() * b.size();
  if (n > bounds.product_points) fail_bounds("product", n, bounds.product_points);
  std::vector<std::string> labels;
  std::vector<PointSet> opens;
  std::vector<Point> p1, p2;
  for (Point i = 0; i < a.size(); ++i)
    for (Point j = 0; j < b.size(); ++j) {
      labels.push_back(pair_label(a.label(i), b.label(j)));
      PointSet u(n);
      for (Point x : members(a.min_open(i)))
        for (Point y : members(b.min_open(j))) u.set(x * b.size() + y);
      opens.push_back(std::move(u));
      p1.push_back(i);
      p2.push_back(j);
    }
  FinSpace s = space_from_min_opens(std::move(labels), std::move(opens));
  return {s, SpaceMap{s, a, std::move(p1)}, SpaceMap{s, b, std::move(p2)}, b.size()};
}

struct QuotientResult {
  FinSpace space;
  SpaceMap projection;
  std::vector<std::vector<Point>> classes;  // members of each quotient point
};

/// Quotient by a partition. The quotient preorder is the transitive closure of
/// [x] <= [y] whenever some members satisfy x' <= y'. Classes keep the order of
/// their least member; each class is labelled by its lexicographically least
/// member label unless `labels` is given.
inline QuotientResult quotient(const FinSpace& s, std::vector<std::vector<Point>> classes,
                               std::optional<std::vector<std::string>> labels = std::nullopt) {
  const std::size_t n = s.size();
  std::vector<Point> cls(n, npos);
  for (auto& c : classes) {
    if (c.empty()) fail_input("partition", "empty class");
    std::sort(c.begin(), c.end());
  }
  if (labels && labels->size() != classes.size())
    fail_input("partition", "label count mismatch");
  {
    std::vector<std::size_t> order(classes.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return classes[i] < classes[j]; });
    std::vector<std::vector<Point>> sorted;
    std::vector<std::string> sorted_labels;
    for (std::size_t i : order) {
      sorted.push_back(std::move(classes[i]));
      if (labels) sorted_labels.push_back(std::move((*labels)[i]));
    }
    classes = std::move(sorted);
    if (labels) labels = std::move(sorted_labels);
  }
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (Point p : classes[i]) {
      if (p >= n) fail_input("partition", "class member out of range");
      if (cls[p] != npos)
        fail_input("partition", s.label(p) + " lies in two classes", {s.label(p)});
      cls[p] = i;
    }
  for (Point p = 0; p < n; ++p)
    if (cls[p] == npos) fail_input("partition", s.label(p) + " lies in no class", {s.label(p)});

  const std::size_t m = classes.size();
  std::vector<PointSet> down(m, PointSet(m));
  for (Point y = 0; y < n; ++y)
    for (Point x : members(s.min_open(y))) down[cls[y]].set(cls[x]);
  for (std::size_t k = 0; k < m; ++k)  // Warshall
    for (std::size_t i = 0; i < m; ++i)
      if (down[i].test(k)) down[i] |= down[k];

  std::vector<std::string> names;
  if (labels) {
    names = std::move(*labels);
  } else {
    for (const auto& c : classes) {
      std::string best = s.label(c.front());
      for (Point p : c) best = std::min(best, s.label(p));
      names.push_back(best);
    }
  }
  FinSpace q = space_from_min_opens(std::move(names), std::move(down));
  return {q, SpaceMap{s, q, std::move(cls)}, std::move(classes)};
}

/// Subspace topology: U_x intersected with the subset, points in parent order.
inline FinSpace subspace(const FinSpace& s, const PointSet& subset) {
  if (subset.none()) fail_input("empty", "subspace of an empty subset");
  const auto pts = members(subset);
  std::vector<Point> local(s.size(), npos);
  for (std::size_t i = 0; i < pts.size(); ++i) local[pts[i]] = i;
  std::vector<std::string> labels;
  std::vector<PointSet> opens;
  for (Point p : pts) {
    labels.push_back(s.label(p));
    PointSet u(pts.size());
    for (Point q : members(s.min_open(p) & subset)) u.set(local[q]);
    opens.push_back(std::move(u));
  }
  return space_from_min_opens(std::move(labels), std::move(opens));
}

/// Kolmogorov quotient: identifies points with x <= y and y <= x.
inline QuotientResult t0_quotient(const FinSpace& s) {
  std::vector<std::vector<Point>> classes;
  std::vector<bool> done(s.size(), false);
  for (Point x = 0; x < s.size(); ++x) {
    if (done[x]) continue;
    std::vector<Point> c;
    for (Point y = x; y < s.size(); ++y)
      if (!done[y] && s.leq(x, y) && s.leq(y, x)) { c.push_back(y); done[y] = true; }
    classes.push_back(std::move(c));
  }
  return quotient(s, std::move(classes));
}

inline bool is_T0(const FinSpace& s) {
  for (Point x = 0; x < s.size(); ++x)
    for (Point y = x + 1; y < s.size(); ++y)
      if (s.leq(x, y) && s.leq(y, x)) return false;
  return true;
}

/// Every singleton closed.
inline bool is_T1(const FinSpace& s) {
  for (Point x = 0; x < s.size(); ++x)
    if (!is_closed(s, make_set(s.size(), {x}))) return false;
  return true;
}

inline bool is_discrete(const FinSpace& s) {
  for (Point x = 0; x < s.size(); ++x)
    if (s.min_open(x).count() != 1) return false;
  return true;
}

namespace detail {

struct Profile {
  std::size_t down, up;
  bool operator==(const Profile&) const = default;
};

inline std::vector<Profile> profiles(const FinSpace& s) {
  std::vector<Profile> out;
  for (Point x = 0; x < s.size(); ++x) out.push_back({s.min_open(x).count(), s.up_set(x).count()});
  return out;
}

}  // namespace detail

/// Backtracking search for a preorder isomorphism, pruned by (|U_x|, |closure x|)
/// profiles. Returns the first isomorphism in lexicographic target order.
inline std::optional<SpaceMap> find_homeomorphism(const FinSpace& a, const FinSpace& b,
                                                  const Bounds& bounds = {}) {
  const std::size_t n = a.size();
  if (std::max(n, b.size()) > bounds.homeomorphism_points)
    fail_bounds("find_homeomorphism", std::max(n, b.size()), bounds.homeomorphism_points);
  if (n != b.size()) return std::nullopt;
  const auto pa = detail::profiles(a);
  const auto pb = detail::profiles(b);
  {
    auto key = [](const detail::Profile& p) { return std::make_pair(p.down, p.up); };
    std::vector<std::pair<std::size_t, std::size_t>> ka, kb;
    for (auto p : pa) ka.push_back(key(p));
    for (auto p : pb) kb.push_back(key(p));
    std::sort(ka.begin(), ka.end());
    std::sort(kb.begin(), kb.end());
    if (ka != kb) return std::nullopt;
  }
  std::vector<Point> assign(n, npos);
  std::vector<bool> used(n, false);
  auto consistent = [&](Point x, Point y) {
    if (!(pa[x] == pb[y])) return false;
    for (Point z = 0; z < x; ++z) {
      if (a.leq(z, x) != b.leq(assign[z], y)) return false;
      if (a.leq(x, z) != b.leq(y, assign[z])) return false;
    }
    return true;
  };
  auto search = [&](auto&& self, Point x) -> bool {
    if (x == n) return true;
    for (Point y = 0; y < n; ++y) {
      if (used[y] || !consistent(x, y)) continue;
      assign[x] = y;
      used[y] = true;
      if (self(self, x + 1)) return true;
      used[y] = false;
    }
    assign[x] = npos;
    return false;
  };
  if (!search(search, 0)) return std::nullopt;
  return SpaceMap{a, b, std::move(assign)};
}

}  // namespace pact
