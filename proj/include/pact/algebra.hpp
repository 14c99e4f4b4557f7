// Finite groups given by multiplication tables, and their subgroups.
#pragma once

#include "pact/core.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace pact {

/// A finite group with labelled elements. Copies share the validated table.
class Group {
public:
  Group() = default;

  std::size_t size() const { return data_ ? data_->labels.size() : 0; }
  Elem identity() const { return data_->identity; }
  Elem mul(Elem a, Elem b) const { return data_->table[a][b]; }
  Elem inv(Elem a) const { return data_->inverse[a]; }
  const std::string& label(Elem a) const { return data_->labels[a]; }
  const std::vector<std::string>& labels() const { return data_->labels; }
  const std::vector<std::vector<Elem>>& table() const { return data_->table; }

  Elem index(const std::string& label) const {
    auto it = data_->index.find(label);
    if (it == data_->index.end())
      fail_input("unknown-element", "unknown group element '" + label + "'", {label});
    return it->second;
  }
  bool has(const std::string& label) const { return data_->index.count(label) != 0; }

  bool is_abelian() const {
    for (Elem a = 0; a < size(); ++a)
      for (Elem b = 0; b < size(); ++b)
        if (mul(a, b) != mul(b, a)) return false;
    return true;
  }

  bool same_as(const Group& other) const { return data_ == other.data_ ||
      (data_ && other.data_ && data_->labels == other.data_->labels &&
       data_->table == other.data_->table); }

private:
  struct Data {
    std::vector<std::string> labels;
    std::map<std::string, Elem> index;
    std::vector<std::vector<Elem>> table;
    std::vector<Elem> inverse;
    Elem identity = 0;
  };
  std::shared_ptr<const Data> data_;

  friend Group validate_group(std::vector<std::string>, std::vector<std::vector<Elem>>,
                              const std::string&);
};

/// Checks the group axioms and returns the group, or throws with the first
/// violated axiom (closure, identity, inverse, associativity) and its witness.
inline Group validate_group(std::vector<std::string> elements,
                            std::vector<std::vector<Elem>> table,
                            const std::string& identity) {
  const std::size_t n = elements.size();
  if (n == 0) fail_input("empty", "group has no elements");
  auto d = std::make_shared<Group::Data>();
  for (Elem i = 0; i < n; ++i) {
    if (!d->index.emplace(elements[i], i).second)
      fail_input("duplicate-element", "duplicate element '" + elements[i] + "'",
                 {elements[i]});
  }
  if (table.size() != n)
    fail_input("table-shape", "table has " + std::to_string(table.size()) +
                                  " rows for " + std::to_string(n) + " elements");
  for (Elem a = 0; a < n; ++a) {
    if (table[a].size() != n)
      fail_input("table-shape", "row " + elements[a] + " has wrong length", {elements[a]});
    for (Elem b = 0; b < n; ++b)
      if (table[a][b] >= n)
        fail_input("closure", "product " + elements[a] + "*" + elements[b] +
                                  " is not an element", {elements[a], elements[b]});
  }
  auto it = d->index.find(identity);
  if (it == d->index.end())
    fail_input("identity", "identity '" + identity + "' is not an element", {identity});
  const Elem e = it->second;
  for (Elem a = 0; a < n; ++a)
    if (table[e][a] != a || table[a][e] != a)
      fail_input("identity", identity + " is not a two-sided identity at " + elements[a],
                 {elements[a]});
  d->inverse.assign(n, npos);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b)
      if (table[a][b] == e && table[b][a] == e) { d->inverse[a] = b; break; }
    if (d->inverse[a] == npos)
      fail_input("inverse", elements[a] + " has no two-sided inverse", {elements[a]});
  }
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          fail_input("associativity",
                     "(" + elements[a] + "*" + elements[b] + ")*" + elements[c] + " != " +
                         elements[a] + "*(" + elements[b] + "*" + elements[c] + ")",
                     {elements[a], elements[b], elements[c]});
  d->labels = std::move(elements);
  d->table = std::move(table);
  d->identity = e;
  Group g;
  g.data_ = std::move(d);
  return g;
}

/// Z_n with elements "0".."n-1" under addition.
inline Group cyclic_group(std::size_t n) {
  std::vector<std::string> labels;
  std::vector<std::vector<Elem>> table(n, std::vector<Elem>(n));
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(std::to_string(i));
    for (std::size_t j = 0; j < n; ++j) table[i][j] = (i + j) % n;
  }
  return validate_group(std::move(labels), std::move(table), "0");
}

/// A subgroup, stored as a membership mask over the parent's elements.
class Subgroup {
public:
  Subgroup(Group parent, PointSet mask) : parent_(std::move(parent)), mask_(std::move(mask)) {}

  const Group& parent() const { return parent_; }
  const PointSet& mask() const { return mask_; }
  bool contains(Elem g) const { return mask_.test(g); }
  std::size_t size() const { return mask_.count(); }
  std::vector<Elem> elements() const { return members(mask_); }

  std::vector<std::string> labels() const {
    std::vector<std::string> out;
    for (Elem g : elements()) out.push_back(parent_.label(g));
    return out;
  }

  bool operator==(const Subgroup& o) const { return mask_ == o.mask_; }

private:
  Group parent_;
  PointSet mask_;
};

inline bool is_subgroup_mask(const Group& g, const PointSet& mask) {
  if (!mask.test(g.identity())) return false;
  for (Elem a : members(mask)) {
    if (!mask.test(g.inv(a))) return false;
    for (Elem b : members(mask))
      if (!mask.test(g.mul(a, b))) return false;
  }
  return true;
}

/// Wraps a mask as a Subgroup after checking the subgroup axioms.
inline Subgroup make_subgroup(const Group& g, const PointSet& mask) {
  if (mask.size() != g.size() || !is_subgroup_mask(g, mask))
    fail_input("subgroup", "element set is not a subgroup");
  return Subgroup(g, mask);
}

inline Subgroup trivial_subgroup(const Group& g) {
  return Subgroup(g, make_set(g.size(), {g.identity()}));
}

inline Subgroup whole_group(const Group& g) { return Subgroup(g, full_set(g.size())); }

/// Closure of `gens` under product and inverse.
inline Subgroup subgroup_generated(const Group& g, const std::vector<Elem>& gens) {
  PointSet mask(g.size());
  mask.set(g.identity());
  std::vector<Elem> frontier;
  for (Elem a : gens) {
    if (a >= g.size()) fail_input("unknown-element", "generator out of range");
    if (!mask.test(a)) { mask.set(a); frontier.push_back(a); }
  }
  // Finite group: closure under products alone already contains inverses.
  while (!frontier.empty()) {
    std::vector<Elem> next;
    const auto current = members(mask);
    for (Elem a : frontier)
      for (Elem b : current)
        for (Elem c : {g.mul(a, b), g.mul(b, a)})
          if (!mask.test(c)) { mask.set(c); next.push_back(c); }
    frontier = std::move(next);
  }
  return Subgroup(g, mask);
}

inline Subgroup subgroup_generated(const Group& g, const std::vector<std::string>& gens) {
  std::vector<Elem> idx;
  for (const auto& s : gens) idx.push_back(g.index(s));
  return subgroup_generated(g, idx);
}

/// {g^-1 h g : h in H}.
inline Subgroup conjugate_subgroup(const Subgroup& h, Elem g) {
  const Group& grp = h.parent();
  if (g >= grp.size()) fail_input("unknown-element", "conjugating element out of range");
  PointSet mask(grp.size());
  for (Elem x : h.elements()) mask.set(grp.mul(grp.mul(grp.inv(g), x), g));
  return Subgroup(grp, mask);
}

/// Every subgroup exactly once, ordered by size then by member list.
inline std::vector<Subgroup> all_subgroups(const Group& g, const Bounds& bounds = {}) {
  if (g.size() > bounds.group_size) fail_bounds("all_subgroups", g.size(), bounds.group_size);
  auto key = [](const PointSet& m) { return std::make_pair(m.count(), members(m)); };
  std::set<std::pair<std::size_t, std::vector<Elem>>> seen;
  std::vector<PointSet> found;
  auto add = [&](const PointSet& m) {
    if (seen.insert(key(m)).second) { found.push_back(m); return true; }
    return false;
  };
  for (Elem a = 0; a < g.size(); ++a) add(subgroup_generated(g, std::vector<Elem>{a}).mask());
  // Every subgroup is the join of its cyclic subgroups.
  for (std::size_t i = 0; i < found.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      auto joined = subgroup_generated(g, members(found[i] | found[j])).mask();
      add(joined);
    }
  std::vector<Subgroup> out;
  for (const auto& k : seen) {
    PointSet m(g.size());
    for (Elem e : k.second) m.set(e);
    out.emplace_back(g, m);
  }
  return out;
}

/// An injective homomorphism from `source` into `target`.
struct GroupEmbedding {
  Group source;
  Group target;
  std::vector<Elem> map;

  Elem operator()(Elem k) const { return map[k]; }

  Subgroup image() const {
    PointSet m(target.size());
    for (Elem e : map) m.set(e);
    return Subgroup(target, m);
  }
};

inline GroupEmbedding validate_embedding(const Group& source, const Group& target,
                                         std::vector<Elem> map) {
  if (map.size() != source.size())
    fail_input("embedding", "embedding must map every element of the subgroup");
  std::set<Elem> used;
  for (Elem k = 0; k < source.size(); ++k) {
    if (map[k] >= target.size()) fail_input("embedding", "embedding image out of range");
    if (!used.insert(map[k]).second)
      fail_input("embedding-injective", "embedding is not injective at " + source.label(k),
                 {source.label(k)});
  }
  for (Elem a = 0; a < source.size(); ++a)
    for (Elem b = 0; b < source.size(); ++b)
      if (map[source.mul(a, b)] != target.mul(map[a], map[b]))
        fail_input("embedding-homomorphism",
                   "embedding is not a homomorphism at (" + source.label(a) + "," +
                       source.label(b) + ")",
                   {source.label(a), source.label(b)});
  return GroupEmbedding{source, target, std::move(map)};
}

inline GroupEmbedding identity_embedding(const Group& g) {
  std::vector<Elem> map(g.size());
  for (Elem i = 0; i < g.size(); ++i) map[i] = i;
  return GroupEmbedding{g, g, std::move(map)};
}

/// Re-indexes a subgroup as a group in its own right (labels kept), together
/// with its inclusion into the parent.
inline GroupEmbedding subgroup_as_group(const Subgroup& h) {
  const Group& g = h.parent();
  const auto elems = h.elements();
  std::vector<Elem> local(g.size(), npos);
  for (std::size_t i = 0; i < elems.size(); ++i) local[elems[i]] = i;
  std::vector<std::string> labels;
  std::vector<std::vector<Elem>> table(elems.size(), std::vector<Elem>(elems.size()));
  for (std::size_t i = 0; i < elems.size(); ++i) {
    labels.push_back(g.label(elems[i]));
    for (std::size_t j = 0; j < elems.size(); ++j)
      table[i][j] = local[g.mul(elems[i], elems[j])];
  }
  Group k = validate_group(std::move(labels), std::move(table), g.label(g.identity()));
  return GroupEmbedding{k, g, elems};
}

}  // namespace pact
