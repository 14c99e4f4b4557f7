#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace pact;

namespace {

std::vector<std::size_t> witness_indices(const Error& e, const PartialAction& pa,
                                         const std::string& rule) {
  // witnesses start with a group element except for the order-only rules
  std::vector<std::size_t> out;
  const auto& w = e.witness();
  for (std::size_t i = 0; i < w.size(); ++i) {
    const bool group_slot = (i == 0) || (rule == "PA2" && i == 1);
    out.push_back(group_slot ? pa.group().index(w[i]) : pa.space().index(w[i]));
  }
  return out;
}

}  // namespace

TEST(Axioms, FixturesValidate) {
  for (const auto& name : fixtures::names()) {
    const auto inst = fixtures::load(name);
    EXPECT_TRUE(oracle::violations(oracle::raw(inst.action)).empty()) << name;
  }
}

TEST(Axioms, SingleEntryMutationsAgreeWithExhaustiveScan) {
  for (const auto& name : fixtures::names()) {
    const auto pa = fixtures::load(name).action;
    const std::size_t ng = pa.group().size(), n = pa.space().size();
    std::uniform_int_distribution<std::size_t> pick_g(0, ng - 1), pick_x(0, n - 1), coin(0, 1);
    for (int trial = 0; trial < 50; ++trial) {
      auto dom = pa.domains();
      auto theta = pa.theta();
      const Elem g = pick_g(oracle::rng());
      const Point x = pick_x(oracle::rng());
      if (coin(oracle::rng())) {
        dom[g].flip(x);
      } else {
        std::uniform_int_distribution<std::size_t> pick_v(0, n);
        const std::size_t v = pick_v(oracle::rng());
        theta[g][x] = v == n ? npos : v;
      }
      oracle::RawAction raw = oracle::raw(pa);
      for (Elem h = 0; h < ng; ++h)
        for (Point p = 0; p < n; ++p) raw.domain[h][p] = dom[h].test(p);
      raw.theta = theta;
      const bool valid = oracle::violations(raw).empty();
      try {
        validate_partial_action(pa.group(), pa.space(), dom, theta);
        EXPECT_TRUE(valid) << name << " accepted an invalid mutation";
      } catch (const Error& e) {
        ASSERT_EQ(e.kind(), ErrorKind::invalid_input) << e.what();
        EXPECT_FALSE(valid) << name << " rejected a valid mutation: " << e.what();
        EXPECT_TRUE(oracle::certifies(raw, e.rule(), witness_indices(e, pa, e.rule())))
            << name << ": witness does not certify " << e.rule() << ": " << e.what();
      }
    }
  }
}

TEST(Axioms, CompositionFailureIsReportedAsPA2) {
  // theta_1 = theta_2 = (a b): inverse to each other, yet theta_1 theta_1 != theta_2
  const Group z3 = cyclic_group(3);
  const auto s = discrete_space({"a", "b", "c"});
  std::vector<PointSet> dom(3, full_set(3));
  try {
    validate_partial_action(z3, s, dom, {{0, 1, 2}, {1, 0, 2}, {1, 0, 2}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.rule(), "PA2");
    EXPECT_EQ(e.witness().size(), 3u);
  }
  EXPECT_NO_THROW(validate_partial_action(z3, s, dom, {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}));
}

TEST(Axioms, DomainPointOutsideOpenSetRejected) {
  const auto c = fixtures::z4_circle_action();
  auto dom = c.domains();
  dom[1].reset(c.space().index("a0"));
  try {
    validate_partial_action(c.group(), c.space(), dom, c.theta());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.rule(), "open");
  }
}

TEST(Restriction, HalfCircleDomains) {
  const auto h = fixtures::load("z4-half").action;
  const auto& s = h.space();
  EXPECT_EQ(s.labels_of(h.domain(1)), (std::vector<std::string>{"a0", "c1", "a1"}));
  EXPECT_EQ(s.labels_of(h.domain(2)), (std::vector<std::string>{"a1", "a3"}));
  EXPECT_EQ(s.labels_of(h.domain(3)), (std::vector<std::string>{"c0", "a0", "a3"}));
  EXPECT_FALSE(h.is_global());
  EXPECT_TRUE(fixed_points(h, whole_group(h.group())).none());
}

TEST(Restriction, RejectsNonOpenOrEmptySubsets) {
  const auto c = fixtures::z4_circle_action();
  EXPECT_THROW(restrict_global(c, c.space().set_of({"c0"})), Error);
  EXPECT_THROW(restrict_global(c, PointSet(8)), Error);
  EXPECT_THROW(restrict_global(fixtures::z2_pair_action(), make_set(2, {0})), Error);
}

TEST(Isotropy, ArcsAction) {
  const auto pa = fixtures::load("z4-arcs").action;
  const auto& s = pa.space();
  const auto iso = isotropy(pa, s.index("a1"));
  EXPECT_EQ(iso.stabilizer.labels(), (std::vector<std::string>{"0", "2"}));
  EXPECT_EQ(isotropy(pa, s.index("a0")).stabilizer.size(), 1u);
  EXPECT_EQ(isotropy(pa, s.index("c0")).stabilizer.size(), 1u);
  const auto h = subgroup_generated(pa.group(), std::vector<std::string>{"2"});
  EXPECT_EQ(s.labels_of(fixed_points(pa, h)), (std::vector<std::string>{"a1", "a3"}));
  EXPECT_EQ(s.labels_of(fixed_points(pa, trivial_subgroup(pa.group()))).size(), 8u);
}

TEST(Orbits, ArcsAndPair) {
  const auto arcs = orbit_space(fixtures::load("z4-arcs").action);
  EXPECT_EQ(arcs.space.size(), 7u);
  EXPECT_TRUE(is_continuous(arcs.projection));
  EXPECT_TRUE(is_open_map(arcs.projection));
  const auto pair = orbit_space(fixtures::z2_pair_action());
  EXPECT_EQ(pair.space.size(), 2u);
  const auto swap = orbit_space(fixtures::load("z2-swap").action);
  EXPECT_EQ(swap.space.size(), 1u);
}

TEST(DiagonalProduct, SquareOfPair) {
  const auto x = fixtures::z2_pair_action();
  const auto d = diagonal_product({x, x});
  EXPECT_EQ(d.action.space().size(), 4u);
  EXPECT_EQ(d.action.space().labels_of(d.action.domain(1)), (std::vector<std::string>{"(a,a)"}));
  for (const auto& p : d.projections) EXPECT_TRUE(is_G_map(p, d.action, x));
}

TEST(GMaps, EquivarianceAndIsovariance) {
  const auto inst = fixtures::load("z2-wedge");
  const auto& pa = inst.action;
  for (const auto& m : inst.maps) EXPECT_TRUE(is_G_map(m.map, pa, pa)) << m.name;
  const auto swap_ab = make_map(pa.space(), pa.space(), {{"w", "w"}, {"a", "a"}, {"b", "a"}});
  EXPECT_FALSE(is_G_map(swap_ab, pa, pa));
  EXPECT_TRUE(is_isovariant(identity_map(pa.space()), pa, pa));
  // collapsing onto the fixed point enlarges isotropy
  EXPECT_FALSE(is_isovariant(inst.maps[1].map, pa, pa));
  const auto bad = make_map(pa.space(), pa.space(), {{"w", "a"}, {"a", "w"}, {"b", "w"}});
  EXPECT_THROW(is_G_map(bad, pa, pa), Error);
}

TEST(GMaps, CountsMatchBruteForce) {
  for (const auto& name : {"z2-pair", "z2-wedge", "z2-swap", "z4-half"}) {
    const auto pa = fixtures::load(name).action;
    const auto raw = oracle::raw(pa);
    const auto lib = enumerate_assignments(pa.space(), pa.space(), {&pa, &pa});
    const auto brute = oracle::count_maps(pa.space().size(), pa.space().size(), [&](const auto& f) {
      return oracle::monotone(pa.space(), pa.space(), f) && oracle::g_map(raw, raw, f);
    });
    EXPECT_EQ(lib.size(), brute) << name;
    EXPECT_TRUE(std::is_sorted(lib.begin(), lib.end()));
  }
}
