#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace pact;

namespace {

std::vector<std::vector<Elem>> klein_table() {
  return {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
}

// S3 as permutations of {0,1,2}: e, (01), (02), (12), (012), (021)
Group s3() {
  const std::vector<std::vector<int>> perms{{0, 1, 2}, {1, 0, 2}, {2, 1, 0},
                                            {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
  std::vector<std::vector<Elem>> t(6, std::vector<Elem>(6));
  for (Elem a = 0; a < 6; ++a)
    for (Elem b = 0; b < 6; ++b) {
      std::vector<int> c(3);
      for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
      t[a][b] = std::find(perms.begin(), perms.end(), c) - perms.begin();
    }
  return validate_group({"e", "s01", "s02", "s12", "r", "r2"}, t, "e");
}

std::string rule_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.rule();
  }
  return "";
}

}  // namespace

TEST(GroupValidation, AcceptsCyclicAndKlein) {
  EXPECT_EQ(cyclic_group(5).size(), 5u);
  auto v = validate_group({"e", "a", "b", "c"}, klein_table(), "e");
  EXPECT_TRUE(v.is_abelian());
  EXPECT_EQ(v.inv(1), 1u);
}

TEST(GroupValidation, ReportsFirstFailingAxiomWithWitness) {
  auto t = cyclic_group(4).table();
  t[1][1] = 3;
  try {
    validate_group({"0", "1", "2", "3"}, t, "0");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.rule(), "associativity");
    EXPECT_EQ(e.witness(), (std::vector<std::string>{"1", "1", "2"}));
  }
  EXPECT_EQ(rule_of([] { validate_group({"0", "1"}, {{0, 1}, {1, 1}}, "0"); }), "inverse");
  EXPECT_EQ(rule_of([] { validate_group({"0", "1"}, {{0, 1}, {1, 0}}, "1"); }), "identity");
  EXPECT_EQ(rule_of([] { validate_group({"0", "1"}, {{0, 1}, {1, 2}}, "0"); }), "closure");
  EXPECT_EQ(rule_of([] { validate_group({"0", "1"}, {{0, 1}}, "0"); }), "table-shape");
}

TEST(Subgroups, MatchExhaustiveSubsetScan) {
  for (const Group& g : {cyclic_group(1), cyclic_group(4), cyclic_group(6), cyclic_group(8), s3(),
                         validate_group({"e", "a", "b", "c"}, klein_table(), "e")}) {
    auto subs = all_subgroups(g);
    auto brute = oracle::subgroups(g.table());
    ASSERT_EQ(subs.size(), brute.size());
    std::set<oracle::Mask> lib;
    for (const auto& s : subs) {
      oracle::Mask m = 0;
      for (Elem e : s.elements()) m |= oracle::bit(e);
      lib.insert(m);
    }
    EXPECT_EQ(lib, std::set<oracle::Mask>(brute.begin(), brute.end()));
    for (std::size_t i = 1; i < subs.size(); ++i) EXPECT_LE(subs[i - 1].size(), subs[i].size());
  }
}

TEST(Subgroups, CountsForKnownGroups) {
  EXPECT_EQ(all_subgroups(cyclic_group(4)).size(), 3u);
  EXPECT_EQ(all_subgroups(s3()).size(), 6u);
  EXPECT_EQ(all_subgroups(validate_group({"e", "a", "b", "c"}, klein_table(), "e")).size(), 5u);
}

TEST(Subgroups, GeneratedAndConjugate) {
  const Group z4 = cyclic_group(4);
  EXPECT_EQ(subgroup_generated(z4, std::vector<std::string>{"2"}).labels(),
            (std::vector<std::string>{"0", "2"}));
  EXPECT_EQ(subgroup_generated(z4, std::vector<std::string>{"1"}).size(), 4u);
  EXPECT_EQ(subgroup_generated(z4, std::vector<Elem>{}).size(), 1u);
  const Group g = s3();
  const Subgroup h = subgroup_generated(g, std::vector<std::string>{"s01"});
  const Subgroup c = conjugate_subgroup(h, g.index("r"));
  EXPECT_EQ(c.size(), 2u);
  EXPECT_FALSE(c == h);
  // conjugating a normal subgroup gives it back
  const Subgroup a3 = subgroup_generated(g, std::vector<std::string>{"r"});
  for (Elem x = 0; x < g.size(); ++x) EXPECT_TRUE(conjugate_subgroup(a3, x) == a3);
}

TEST(Subgroups, BoundIsEnforced) {
  Bounds b;
  b.group_size = 4;
  EXPECT_THROW(all_subgroups(cyclic_group(6), b), Error);
}

TEST(Embeddings, HomomorphismAndInjectivityChecked) {
  const Group z2 = cyclic_group(2), z4 = cyclic_group(4);
  EXPECT_NO_THROW(validate_embedding(z2, z4, {0, 2}));
  EXPECT_EQ(rule_of([&] { validate_embedding(z2, z4, {0, 1}); }), "embedding-homomorphism");
  EXPECT_EQ(rule_of([&] { validate_embedding(z2, z4, {0, 0}); }), "embedding-injective");
  auto emb = subgroup_as_group(subgroup_generated(z4, std::vector<std::string>{"2"}));
  EXPECT_EQ(emb.source.size(), 2u);
  EXPECT_EQ(emb.image().labels(), (std::vector<std::string>{"0", "2"}));
  EXPECT_NO_THROW(validate_embedding(emb.source, z4, emb.map));
}
