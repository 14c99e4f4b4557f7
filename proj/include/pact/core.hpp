// Shared vocabulary: index types, point sets, errors and search bounds.
#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pact {

using Point = std::size_t;
using Elem = std::size_t;
using PointSet = boost::dynamic_bitset<>;

inline constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

enum class ErrorKind {
  invalid_input,  // malformed or axiom-violating input
  bounds,         // a configured size/search limit was exceeded
  precondition,   // input valid but outside an operation's domain
  internal,       // a trusted invariant failed
};

/// Error carrying the violated rule and the labels witnessing it.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, std::string rule, std::string message,
        std::vector<std::string> witness = {})
      : std::runtime_error(std::move(message)), kind_(kind),
        rule_(std::move(rule)), witness_(std::move(witness)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& rule() const noexcept { return rule_; }
  const std::vector<std::string>& witness() const noexcept { return witness_; }

private:
  ErrorKind kind_;
  std::string rule_;
  std::vector<std::string> witness_;
};

[[noreturn]] inline void fail_input(std::string rule, std::string message,
                                    std::vector<std::string> witness = {}) {
  throw Error(ErrorKind::invalid_input, std::move(rule), std::move(message),
              std::move(witness));
}

[[noreturn]] inline void fail_bounds(std::string what, std::size_t size,
                                     std::size_t limit) {
  throw Error(ErrorKind::bounds, "bound",
              what + ": size " + std::to_string(size) + " exceeds bound " +
                  std::to_string(limit));
}

[[noreturn]] inline void fail_internal(std::string rule, std::string message) {
  throw Error(ErrorKind::internal, std::move(rule), std::move(message));
}

/// Limits on every exponential construction or search.
struct Bounds {
  std::size_t group_size = 16;           // all_subgroups
  std::size_t product_points = 64;       // product, diagonal_product
  std::size_t homeomorphism_points = 24; // find_homeomorphism
  std::size_t envelope_points = 256;     // |G| * |X| for twisted products
  std::size_t map_nodes = 1'000'000;     // map enumeration search nodes
  std::size_t local_points = 12;         // local G-contractibility
  std::size_t adjunction_points = 5;     // |X|, |Y| for hom-set enumeration
  std::size_t adjunction_group = 4;      // |G| for hom-set enumeration
};

inline PointSet make_set(std::size_t n, std::initializer_list<Point> pts = {}) {
  PointSet s(n);
  for (Point p : pts) s.set(p);
  return s;
}

inline std::vector<Point> members(const PointSet& s) {
  std::vector<Point> out;
  out.reserve(s.count());
  for (auto i = s.find_first(); i != PointSet::npos; i = s.find_next(i))
    out.push_back(i);
  return out;
}

inline PointSet full_set(std::size_t n) {
  PointSet s(n);
  s.set();
  return s;
}

}  // namespace pact
