#include <map>
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace pact;

namespace {

std::string error_location(const std::string& text) {
  try {
    parse_instance_text(text);
  } catch (const Error& e) {
    return e.witness().empty() ? e.rule() : e.witness().front();
  }
  return "";
}

ojson pair_doc() { return fixtures::document("z2-pair"); }

Instance point_in_z4() {
  Instance i;
  i.id = "z4-from-pt";
  i.action = point_action(cyclic_group(2));
  i.k_embedding = validate_embedding(i.group(), cyclic_group(4), {0, 2});
  return i;
}

}  // namespace

TEST(Instances, FixturesRoundTrip) {
  for (const auto& name : fixtures::names()) {
    const auto doc = fixtures::document(name);
    const auto inst = parse_instance_text(doc.dump());
    EXPECT_EQ(to_json(inst).dump(), doc.dump()) << name;
    EXPECT_EQ(inst.id, name);
  }
}

TEST(Instances, IdentityEntriesMayBeOmitted) {
  auto doc = pair_doc();
  doc["partial_action"]["domains"].erase("0");
  doc["partial_action"]["maps"].erase("0");
  EXPECT_NO_THROW(parse_instance(doc));
}

TEST(Instances, ErrorsCarryLocations) {
  auto doc = pair_doc();
  doc["partial_action"]["domains"]["1"] = {"a", "zz"};
  EXPECT_EQ(error_location(doc.dump()), "partial_action.domains.1");

  doc = pair_doc();
  doc.erase("space");
  EXPECT_EQ(error_location(doc.dump()), "space");

  doc = pair_doc();
  doc["group"]["table"][1][1] = "7";
  EXPECT_EQ(error_location(doc.dump()), "group.table.1.1");

  doc = pair_doc();
  doc["partial_action"]["maps"]["1"]["a"] = "b";
  try {
    parse_instance(doc);
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("partial_action"), std::string::npos);
  }
  EXPECT_EQ(error_location("{not json"), "json");
}

TEST(Instances, NonHomomorphicEmbeddingRejected) {
  auto doc = fixtures::document("z4-from-z2-pair");
  doc["k_embedding"]["1"] = "1";
  try {
    parse_instance(doc);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.rule(), "embedding-homomorphism");
  }
  doc.erase("big_group");
  EXPECT_EQ(error_location(doc.dump()), "big_group");
}

TEST(Instances, NamedSubgroupsAndMaps) {
  const auto arcs = fixtures::load("z4-arcs");
  EXPECT_EQ(arcs.subgroup("H").labels(), (std::vector<std::string>{"0", "2"}));
  EXPECT_THROW(arcs.subgroup("nope"), Error);
  auto doc = fixtures::document("z4-arcs");
  doc["subgroups"]["bad"] = {"0", "1", "2"};
  EXPECT_EQ(error_location(doc.dump()), "subgroups.bad");
  doc = fixtures::document("z2-wedge");
  doc["maps"]["partial"] = {{"w", "w"}};
  EXPECT_EQ(error_location(doc.dump()), "maps.partial.a");
}

TEST(Claims, RegistryOrderAndUnknownId) {
  const auto& reg = claim_registry();
  ASSERT_EQ(reg.size(), 16u);
  EXPECT_STREQ(reg.front().id, "pa-axioms");
  EXPECT_STREQ(reg.back().id, "generated-intersection");
  EXPECT_THROW(run_claim("no-such-claim", fixtures::load("pt")), Error);
}

TEST(Claims, PointHasNoFailures) {
  for (const auto& r : run_all(fixtures::load("pt")))
    EXPECT_TRUE(r.status == ClaimStatus::holds || r.status == ClaimStatus::precondition_unmet) << r.claim_id;
}

TEST(Claims, PairRunsWithoutProductComparison) {
  const auto reports = run_all(fixtures::load("z2-pair"));
  EXPECT_EQ(reports.size(), 15u);
  for (const auto& r : reports) {
    EXPECT_NE(r.claim_id, "product-comparison");
    EXPECT_NE(r.status, ClaimStatus::fails) << r.claim_id;
  }
  EXPECT_EQ(run_claim("twist-eq-glob", fixtures::load("z2-pair")).status, ClaimStatus::holds);
  EXPECT_EQ(run_claim("product-comparison", fixtures::load("z2-pair")).status, ClaimStatus::precondition_unmet);
}

TEST(Claims, SquareFailsOnlyProductComparison) {
  const auto inst = fixtures::load("z2-pair-sq");
  for (const auto& r : run_all(inst)) {
    if (r.claim_id == "product-comparison") {
      EXPECT_EQ(r.status, ClaimStatus::fails);
      EXPECT_EQ(r.witness["source_classes"], 7);
      EXPECT_EQ(r.witness["target_points"], 9);
      EXPECT_EQ(r.witness["unhit"].size(), 2u);
      EXPECT_EQ(r.witness["reason"], "not bijective");
    } else {
      EXPECT_NE(r.status, ClaimStatus::fails) << r.claim_id;
    }
  }
}

TEST(Claims, NoFixtureFailsOutsideProductComparison) {
  for (const auto& name : fixtures::names())
    for (const auto& r : run_all(fixtures::load(name)))
      if (r.claim_id != "product-comparison") {
        EXPECT_NE(r.status, ClaimStatus::fails) << name << " " << r.claim_id;
      }
}

TEST(Claims, WedgeIsGContractible) {
  EXPECT_EQ(run_claim("g-contractible", fixtures::load("z2-wedge")).status, ClaimStatus::holds);
}

TEST(Claims, TrivialCollapseOnProperSubgroupFails) {
  const auto inst = point_in_z4();
  const auto r = run_claim("trivial-collapse", inst);
  EXPECT_EQ(r.status, ClaimStatus::fails);
  ASSERT_TRUE(r.witness.contains("collision"));
  EXPECT_TRUE(replay_witness(r, inst).certified);
  EXPECT_EQ(run_claim("trivial-collapse", fixtures::load("pt")).status, ClaimStatus::holds);
}

TEST(Claims, SmallBoundsGiveSkippedStatus) {
  Bounds b;
  b.envelope_points = 4;
  const auto r = run_claim("twist-eq-glob", fixtures::load("z4-arcs"), b);
  EXPECT_EQ(r.status, ClaimStatus::skipped_bounds);
}

TEST(Claims, LargerBoundsNeverTurnHoldsIntoFails) {
  std::vector<Bounds> ladder(3);
  ladder[0].envelope_points = 8;
  ladder[0].local_points = 4;
  ladder[0].adjunction_points = 2;
  ladder[1].envelope_points = 32;
  ladder[1].local_points = 8;
  ladder[1].adjunction_points = 3;
  for (const auto& name : fixtures::names()) {
    const auto inst = fixtures::load(name);
    std::map<std::string, ClaimStatus> seen;
    for (const auto& b : ladder)
      for (const auto& r : run_all(inst, b)) {
        auto it = seen.find(r.claim_id);
        if (it != seen.end() && it->second == ClaimStatus::holds) {
          EXPECT_NE(r.status, ClaimStatus::fails) << name << " " << r.claim_id;
        }
        if (it == seen.end() || r.status != ClaimStatus::skipped_bounds) seen[r.claim_id] = r.status;
      }
  }
}

TEST(Replay, ProductComparisonWitness) {
  const auto inst = fixtures::load("z2-pair-sq");
  auto r = run_claim("product-comparison", inst);
  EXPECT_TRUE(replay_witness(r, inst).certified);
  // list a hit point as unhit
  auto tampered = r;
  tampered.witness["unhit"][0] = "([0,a],[0,a])";
  EXPECT_FALSE(replay_witness(tampered, inst).certified);
  tampered = r;
  tampered.witness["source_classes"] = 9;
  EXPECT_FALSE(replay_witness(tampered, inst).certified);
  tampered = r;
  tampered.witness.erase("unhit");
  EXPECT_FALSE(replay_witness(tampered, inst).certified);
}

TEST(Replay, HoldsIsVacuous) {
  const auto inst = fixtures::load("z2-pair");
  const auto r = run_claim("preimage", inst);
  const auto rep = replay_witness(r, inst);
  EXPECT_TRUE(rep.certified);
  EXPECT_FALSE(rep.note.empty());
}

TEST(Reports, DeterministicModuloTiming) {
  for (const auto& name : fixtures::names()) {
    const auto inst = fixtures::load(name);
    const auto a = run_all(inst), b = run_all(inst);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
      EXPECT_EQ(report_json(a[i], false).dump(), report_json(b[i], false).dump());
  }
}

TEST(Reports, JsonShape) {
  const auto r = run_claim("pa-axioms", fixtures::load("pt"));
  const auto j = report_json(r);
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"claim_id", "instance_id", "status", "witness", "elapsed_ms"}));
  EXPECT_EQ(status_from_string(j["status"].get<std::string>()), ClaimStatus::holds);
  EXPECT_EQ(exit_code({r}), 0);
}
