#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace pact;

namespace {

ojson document_core(const EnvelopeResult& env) {
  const auto d = envelope_document(env);
  return {{"classes", d["classes"]}, {"space", d["space"]}, {"action", d["action"]},
          {"embedding", d["embedding"]}};
}

PartialAction z2_on_point_in_z4_context() { return point_action(cyclic_group(2)); }

}  // namespace

TEST(Globalization, PairHasThreeClasses) {
  const auto env = globalize(fixtures::z2_pair_action());
  EXPECT_EQ(env.total.labels(), (std::vector<std::string>{"[0,a]", "[0,b]", "[1,b]"}));
  const Point a = env.total.index("[0,a]"), b0 = env.total.index("[0,b]"), b1 = env.total.index("[1,b]");
  EXPECT_EQ(env.act(1, a), a);
  EXPECT_EQ(env.act(1, b0), b1);
  EXPECT_EQ(env.act(1, b1), b0);
  EXPECT_TRUE(envelope_violations(env).empty());
  EXPECT_TRUE(is_open(env.total, env.embedded()));
  EXPECT_TRUE(is_injective(env.iota));
}

TEST(Globalization, DocumentMatchesRelationClosureOracle) {
  for (const auto& name : fixtures::names()) {
    const auto pa = fixtures::load(name).action;
    EXPECT_EQ(document_core(globalize(pa)).dump(), oracle::globalization_document(pa).dump()) << name;
  }
}

TEST(Globalization, StructuralPropertiesOnEveryFixture) {
  for (const auto& name : fixtures::names()) {
    const auto env = globalize(fixtures::load(name).action);
    EXPECT_TRUE(envelope_violations(env).empty()) << name;
    EXPECT_TRUE(env.enveloping.is_global());
    EXPECT_TRUE(preimage_identity_holds(env)) << name;
  }
}

TEST(Globalization, GlobalActionIsItsOwnGlobalization) {
  for (const auto& name : {"z2-swap", "z2-wedge", "z4-circle"}) {
    const auto pa = fixtures::load(name).action;
    const auto env = globalize(pa);
    EXPECT_EQ(env.total.size(), pa.space().size()) << name;
    EXPECT_TRUE(is_homeomorphism(SpaceMap{pa.space(), env.total, env.iota.assignment}));
  }
}

TEST(TwistedProduct, ClassCountsMatchOracleForEverySubgroup) {
  for (const auto& name : fixtures::names()) {
    const auto inst = fixtures::load(name);
    for (const auto& k : all_subgroups(inst.group())) {
      const auto emb = subgroup_as_group(k);
      const auto res = restrict_group(inst.action, emb);
      const auto env = twisted_product(res, emb);
      const auto brute = oracle::twisted_classes(oracle::raw(res), inst.group().table(),
                                                 inst.group().identity(), emb.map);
      EXPECT_EQ(env.classes, brute) << name << " K=" << k.size();
      EXPECT_TRUE(preimage_identity_holds(env)) << name;
      EXPECT_TRUE(envelope_violations(env).empty()) << name;
    }
  }
}

TEST(TwistedProduct, KnownCounts) {
  const auto pair = fixtures::load("z4-from-z2-pair");
  const auto env = twisted_product(pair.action, *pair.k_embedding);
  EXPECT_EQ(env.total.size(), 6u);
  EXPECT_EQ(oracle::twisted_classes(oracle::raw(pair.action), cyclic_group(4).table(), 0, {0, 2}).size(), 6u);

  const auto pt = z2_on_point_in_z4_context();
  const auto emb = validate_embedding(pt.group(), cyclic_group(4), {0, 2});
  EXPECT_EQ(twisted_product(pt, emb).total.size(), 2u);

  EXPECT_EQ(globalize(fixtures::load("z4-arcs").action).total.size(), 24u);
}

TEST(TwistedProduct, WholeGroupGivesGlobalization) {
  for (const auto& name : fixtures::names()) {
    const auto pa = fixtures::load(name).action;
    const auto emb = subgroup_as_group(whole_group(pa.group()));
    EXPECT_EQ(twisted_product(pa, emb).classes, globalize(pa).classes) << name;
  }
}

TEST(TwistedProduct, BoundEnforced) {
  Bounds b;
  b.envelope_points = 10;
  EXPECT_THROW(globalize(fixtures::load("z4-arcs").action, b), Error);
}

TEST(TwistedProduct, IotaIsIsovariant) {
  for (const auto& name : fixtures::names()) {
    const auto inst = fixtures::load(name);
    const auto emb = inst.embedding();
    const auto env = twisted_product(inst.action, emb);
    EXPECT_TRUE(is_isovariant(env.iota, inst.action, restrict_group(env.enveloping, emb))) << name;
  }
}

TEST(Recognition, HalfCircleGlobalizesToCircle) {
  const auto circle = fixtures::z4_circle_action();
  const auto u = circle.space().set_of({"a3", "c0", "a0", "c1", "a1"});
  const auto r = recognize_globalization(circle, u);
  EXPECT_TRUE(r.is_G_homeomorphism());
  const auto env = globalize(fixtures::load("z4-half").action);
  EXPECT_EQ(env.total.size(), 8u);
  EXPECT_TRUE(find_homeomorphism(env.total, fixtures::circle8()).has_value());
}

TEST(Recognition, NonCoveringSetReported) {
  const auto circle = fixtures::z4_circle_action();
  const auto r = recognize_globalization(circle, circle.space().set_of({"a0"}));
  EXPECT_FALSE(r.covered);
  EXPECT_EQ(r.uncovered.count(), 4u);
}

TEST(InducedMaps, FunctorialOnGlobalizations) {
  const auto inst = fixtures::load("z2-wedge");
  const auto env = globalize(inst.action);
  const auto& id = inst.maps[0].map;
  const auto& collapse = inst.maps[1].map;
  EXPECT_EQ(envelope_of_map(id, env, env).assignment, identity_map(env.total).assignment);
  EXPECT_EQ(envelope_of_map(compose(collapse, collapse), env, env).assignment,
            compose(envelope_of_map(collapse, env, env), envelope_of_map(collapse, env, env)).assignment);
  const auto pair = fixtures::load("z2-pair");
  const auto penv = globalize(pair.action);
  const auto e = envelope_of_map(pair.maps[1].map, penv, penv);
  EXPECT_TRUE(is_G_map(e, penv.enveloping, penv.enveloping));
}

TEST(Adjunction, PairIntoWedgeHasThreeMaps) {
  const auto x = fixtures::z2_pair_action();
  const auto y = fixtures::load("z2-wedge").action;
  const auto rep = adjunction_maps(x, identity_embedding(x.group()), y);
  EXPECT_EQ(rep.hom_global.size(), 3u);
  EXPECT_EQ(rep.hom_partial.size(), 3u);
  EXPECT_TRUE(rep.holds());

  const auto env = globalize(x);
  const auto rx = oracle::raw(x), ry = oracle::raw(y), re = oracle::raw(env.enveloping);
  EXPECT_EQ(oracle::count_maps(2, 3, [&](const auto& f) { return oracle::monotone(x.space(), y.space(), f) && oracle::g_map(rx, ry, f); }), 3u);
  EXPECT_EQ(oracle::count_maps(3, 3, [&](const auto& f) { return oracle::monotone(env.total, y.space(), f) && oracle::g_map(re, ry, f); }), 3u);
}

TEST(Adjunction, PairIntoSwapIsEmpty) {
  const auto x = fixtures::z2_pair_action();
  const auto rep = adjunction_maps(x, identity_embedding(x.group()), fixtures::load("z2-swap").action);
  EXPECT_EQ(rep.hom_global.size(), 0u);
  EXPECT_EQ(rep.hom_partial.size(), 0u);
  EXPECT_TRUE(rep.holds());
}

TEST(Adjunction, NaturalityWithTestMorphisms) {
  const auto x = fixtures::load("z2-pair");
  const auto wedge = fixtures::load("z2-wedge").action;
  const auto pt = point_action(x.group());
  std::vector<SourceMorphism> src{{x.action, x.maps[1].map}, {x.action, x.maps[0].map}};
  std::vector<TargetMorphism> tgt{{pt, constant_map(wedge.space(), pt.space(), 0)}};
  const auto rep = adjunction_maps(x.action, identity_embedding(x.group()), wedge, src, tgt);
  EXPECT_TRUE(rep.holds());
  EXPECT_EQ(rep.naturality_checked, 9u);
}

TEST(ProductComparison, SquareOfPairIsNotBijective) {
  const auto x = fixtures::z2_pair_action();
  const auto pc = product_comparison(x, x, identity_embedding(x.group()));
  EXPECT_TRUE(pc.well_defined);
  EXPECT_TRUE(pc.continuous);
  EXPECT_TRUE(pc.equivariant);
  EXPECT_EQ(pc.source.total.size(), 7u);
  EXPECT_EQ(pc.target.space().size(), 9u);
  ASSERT_EQ(pc.unhit.size(), 2u);
  EXPECT_EQ(pc.target.space().label(pc.unhit[0]), "([0,b],[1,b])");
  EXPECT_EQ(pc.target.space().label(pc.unhit[1]), "([1,b],[0,b])");
  EXPECT_FALSE(pc.is_G_homeomorphism());
  // oracle counts: classes of the square and the square of the classes
  const auto sq = fixtures::load("z2-pair-sq").action;
  EXPECT_EQ(oracle::globalization_classes(sq).size(), 7u);
  const auto c = oracle::globalization_classes(x).size();
  EXPECT_EQ(c * c, 9u);
}

TEST(ProductComparison, GlobalFactorsGiveHomeomorphism) {
  const auto x = fixtures::load("z2-swap").action;
  EXPECT_TRUE(product_comparison(x, x, identity_embedding(x.group())).is_G_homeomorphism());
}

TEST(IteratedTwist, HoldsForEverySubgroup) {
  for (const auto& name : fixtures::names()) {
    const auto inst = fixtures::load(name);
    for (const auto& k : all_subgroups(inst.group())) {
      const auto emb = subgroup_as_group(k);
      EXPECT_TRUE(iterated_twist_comparison(restrict_group(inst.action, emb), emb).holds()) << name;
    }
  }
}

TEST(TrivialCollapse, WholeGroupTrivialActionCollapses) {
  const auto wedge_space = fixtures::load("z2-wedge").space();
  for (const auto& pa : {point_action(cyclic_group(2)), trivial_action(cyclic_group(3), wedge_space)}) {
    const auto tc = trivial_collapse(pa, identity_embedding(pa.group()));
    EXPECT_TRUE(tc.is_homeomorphism());
  }
}

TEST(TrivialCollapse, ProperSubgroupOnPointIsNotInjective) {
  const auto pt = z2_on_point_in_z4_context();
  const auto tc = trivial_collapse(pt, validate_embedding(pt.group(), cyclic_group(4), {0, 2}));
  EXPECT_FALSE(tc.injective);
  ASSERT_TRUE(tc.collision.has_value());
  EXPECT_NE(tc.collision->first, tc.collision->second);
  EXPECT_TRUE(tc.continuous);
  EXPECT_TRUE(tc.surjective);
  EXPECT_THROW(trivial_collapse(fixtures::z4_circle_action(), identity_embedding(cyclic_group(4))), Error);
}

TEST(FixedSets, ArcsDecomposition) {
  const auto inst = fixtures::load("z4-arcs");
  const auto& h = inst.subgroup("H");
  EXPECT_EQ(inst.space().labels_of(fixed_points(inst.action, h)), (std::vector<std::string>{"a1", "a3"}));
  for (const auto& k : all_subgroups(inst.group())) {
    const auto fd = fixed_decomposition(inst.action, k);
    EXPECT_TRUE(fd.decomposition_holds());
    EXPECT_TRUE(fd.images_hold());
    EXPECT_TRUE(fd.intersections_hold());
    EXPECT_EQ(fd.envelope.total.size(), 24u);
  }
}

TEST(FixedSets, DecompositionOnEveryFixture) {
  for (const auto& name : fixtures::names()) {
    const auto pa = fixtures::load(name).action;
    for (const auto& k : all_subgroups(pa.group())) {
      const auto fd = fixed_decomposition(pa, k);
      EXPECT_TRUE(fd.decomposition_holds() && fd.images_hold() && fd.intersections_hold()) << name;
    }
  }
}
