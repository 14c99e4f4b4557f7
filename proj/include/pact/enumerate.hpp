// Enumeration of continuous maps (optionally equivariant) between finite spaces.
#pragma once

#include "pact/paction.hpp"

#include <vector>

namespace pact {

/// Restricts enumeration to G-maps between two partial actions.
struct EquivarianceConstraint {
  const PartialAction* source = nullptr;
  const PartialAction* target = nullptr;
};

/// Depth-first enumeration of monotone assignments X -> Y in lexicographic
/// order. Each tentative assignment is checked against already-assigned
/// points through the minimal open sets of X; under an equivariance
/// constraint the assignment x -> y also forces g.x -> g.y for every defined
/// g.x, so whole orbits are fixed at once. Throws when more than
/// `bounds.map_nodes` search nodes are explored.
inline std::vector<std::vector<Point>> enumerate_assignments(
    const FinSpace& x, const FinSpace& y, const EquivarianceConstraint& constraint = {},
    const Bounds& bounds = {}) {
  const std::size_t n = x.size(), m = y.size();
  const PartialAction* px = constraint.source;
  const PartialAction* py = constraint.target;
  if ((px == nullptr) != (py == nullptr))
    fail_input("constraint", "equivariance constraint needs both actions");
  if (px) {
    if (!px->group().same_as(py->group()))
      fail_input("group-mismatch", "actions by different groups");
    if (!px->space().same_as(x) || !py->space().same_as(y))
      fail_input("space-mismatch", "constraint actions are on other spaces");
  }

  std::vector<std::vector<Point>> out;
  std::vector<Point> assign(n, npos);
  std::vector<Point> trail;
  std::vector<std::pair<Point, Point>> queue;
  std::size_t nodes = 0;

  auto undo = [&](std::size_t mark) {
    while (trail.size() > mark) {
      assign[trail.back()] = npos;
      trail.pop_back();
    }
  };
  auto place = [&](Point p0, Point v0) {
    queue.clear();
    queue.emplace_back(p0, v0);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const auto [p, v] = queue[qi];
      if (assign[p] != npos) {
        if (assign[p] != v) return false;
        continue;
      }
      for (Point q : members(x.min_open(p)))
        if (assign[q] != npos && !y.leq(assign[q], v)) return false;
      for (Point q : members(x.up_set(p)))
        if (assign[q] != npos && !y.leq(v, assign[q])) return false;
      assign[p] = v;
      trail.push_back(p);
      if (px) {
        for (Elem g = 0; g < px->group().size(); ++g) {
          if (!px->defined(g, p)) continue;
          if (!py->defined(g, v)) return false;
          queue.emplace_back(px->act(g, p), py->act(g, v));
        }
      }
    }
    return true;
  };
  auto search = [&](auto&& self, Point from) -> void {
    while (from < n && assign[from] != npos) ++from;
    if (from == n) {
      out.push_back(assign);
      return;
    }
    for (Point v = 0; v < m; ++v) {
      if (++nodes > bounds.map_nodes) fail_bounds("map enumeration nodes", nodes, bounds.map_nodes);
      const std::size_t mark = trail.size();
      if (place(from, v)) self(self, from + 1);
      undo(mark);
    }
  };
  search(search, 0);
  return out;
}

}  // namespace pact
