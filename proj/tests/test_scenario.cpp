#include "doctest.h"
#include "orch5g/errors.hpp"
#include "orch5g/scenario.hpp"
#include "support/testutil.hpp"

using namespace orch5g;
using nlohmann::json;

namespace {

ErrorKind load_failure(const json& doc) {
  try {
    load_scenario(doc);
  } catch (const OrchError& e) {
    return e.kind();
  }
  FAIL("expected the document to be rejected");
  return ErrorKind::SchemaError;
}

}  // namespace

TEST_CASE("an empty scenario is a valid zero-domain world") {
  auto s = load_scenario(json::parse(R"({"scenario": {"name": "empty"}})"));
  CHECK(s.name == "empty");
  CHECK(s.world.topo.domains.empty());
  CHECK(s.events.empty());
}

TEST_CASE("the reference topology loads with the documented shape") {
  auto s = load_scenario(testutil::ref_topo_doc());
  CHECK(s.name == "ref-topo");
  CHECK(s.world.topo.domains.size() == 3);
  CHECK(s.world.topo.nodes.size() == 12);
  CHECK(s.world.topo.links.size() == 28);
  CHECK(s.world.topo.dcs.size() == 2);
  CHECK(s.world.topo.tenants.size() == 2);
  CHECK(s.world.vnf_catalog.size() == 4);
  CHECK(s.world.split_table.size() == 3);

  CHECK(s.world.topo.domain("opt1").controller == ControllerKind::PceGmpls);
  CHECK(s.world.topo.node("enb1").kind == NodeKind::Enb);
  CHECK(s.world.topo.node("p1").dc_id == "dc-edge");
  CHECK(s.world.topo.link("o1-o2").optical().grid.slot_count == 16);
  CHECK(s.world.topo.link("rgw-p1").scope == LinkScope::InterDomain);
  CHECK(s.world.topo.link("p1-p2").scope == LinkScope::IntraDomain);
  CHECK(s.world.topo.dc("dc-core").tier == DcTier::Core);

  // loading is deterministic: same document, structurally equal topologies
  auto again = load_scenario(testutil::ref_topo_doc());
  CHECK(snapshot(s.world.topo) == snapshot(again.world.topo));
  CHECK(s.world.topo.links.size() == again.world.topo.links.size());
}

TEST_CASE("dangling and duplicate references are rejected") {
  auto doc = testutil::ref_topo_doc();
  doc["scenario"]["links"][0]["dst"] = "p9";
  CHECK(load_failure(doc) == ErrorKind::ReferenceError);

  doc = testutil::ref_topo_doc();
  doc["scenario"]["links"][1]["id"] = doc["scenario"]["links"][0]["id"];
  CHECK(load_failure(doc) == ErrorKind::ConsistencyError);

  doc = testutil::ref_topo_doc();
  doc["scenario"]["datacenters"][0]["attach_node"] = "nowhere";
  CHECK(load_failure(doc) == ErrorKind::ReferenceError);
}

TEST_CASE("placement rules: roadms in optical domains, optical links inside them") {
  // a roadm declared inside a packet domain
  auto doc = testutil::ref_topo_doc();
  doc["scenario"]["domains"][1]["nodes"].push_back({{"id", "bad"}, {"kind", "roadm"}});
  CHECK(load_failure(doc) == ErrorKind::ConsistencyError);

  // an optical link between domains
  doc = testutil::ref_topo_doc();
  doc["scenario"]["links"].push_back(json{
      {"id", "bad-span"},
      {"src", "o1"},
      {"dst", "p2"},
      {"medium", {{"optical", {{"slot_count", 8}, {"latency_ms", 1}}}}}});
  CHECK(load_failure(doc) == ErrorKind::ConsistencyError);

  // a self-loop
  doc = testutil::ref_topo_doc();
  doc["scenario"]["links"].push_back(json{
      {"id", "loop"},
      {"src", "p1"},
      {"dst", "p1"},
      {"medium", {{"packet", {{"capacity_mbps", 10}, {"latency_ms", 1}}}}}});
  CHECK(load_failure(doc) == ErrorKind::ConsistencyError);
}

TEST_CASE("schema violations name the offending field") {
  auto doc = testutil::ref_topo_doc();
  doc["scenario"]["links"][0]["color"] = "blue";
  try {
    load_scenario(doc);
    FAIL("expected rejection");
  } catch (const OrchError& e) {
    CHECK(e.kind() == ErrorKind::SchemaError);
    CHECK(e.detail().find("color") != std::string::npos);
  }

  doc = testutil::ref_topo_doc();
  doc["scenario"]["domains"][0].erase("tech");
  CHECK(load_failure(doc) == ErrorKind::SchemaError);

  doc = testutil::ref_topo_doc();
  doc["scenario"]["domains"][0]["tech"] = "quantum";
  CHECK(load_failure(doc) == ErrorKind::SchemaError);
}

TEST_CASE("bandwidth and latency values must land on the exact grid") {
  auto doc = testutil::ref_topo_doc();
  doc["scenario"]["links"][0]["medium"]["packet"]["capacity_mbps"] = "0.0001";
  CHECK(load_failure(doc) == ErrorKind::SchemaError);

  // four fractional mbps digits, expressed as a JSON number this time
  doc = testutil::ref_topo_doc();
  doc["scenario"]["links"][0]["medium"]["packet"]["capacity_mbps"] = 0.0001;
  CHECK(load_failure(doc) == ErrorKind::SchemaError);

  // values on the grid are accepted in either spelling
  doc = testutil::ref_topo_doc();
  doc["scenario"]["links"][0]["medium"]["packet"]["capacity_mbps"] = 12.5;
  auto s = load_scenario(doc);
  Id first = doc["scenario"]["links"][0]["id"].get<std::string>();
  CHECK(s.world.topo.link(first).packet().capacity_kbps == 12'500);

  doc["scenario"]["links"][0]["medium"]["packet"]["capacity_mbps"] = "12.5";
  CHECK(load_scenario(doc).world.topo.link(first).packet().capacity_kbps == 12'500);

  // negatives are rejected even when well-formed
  doc["scenario"]["links"][0]["medium"]["packet"]["capacity_mbps"] = -5;
  CHECK(load_failure(doc) == ErrorKind::SchemaError);
}

TEST_CASE("events validate at load time") {
  auto doc = testutil::ref_topo_doc();
  doc["scenario"]["events"] = json::array(
      {{{"seq", 1}, {"action", "create_vm"}, {"cpu", 2}, {"ram_mb", 1024}, {"disk_gb", 5},
        {"image_id", "img-epc"}},
       {{"seq", 2}, {"action", "snapshot_check"}}});
  auto s = load_scenario(doc);
  REQUIRE(s.events.size() == 2);
  CHECK(s.events[0].action == "create_vm");
  CHECK(s.events[0].payload["cpu"] == 2);
  CHECK_FALSE(s.events[0].payload.contains("seq"));
  CHECK_FALSE(s.events[0].payload.contains("action"));

  // unknown action
  doc["scenario"]["events"][0]["action"] = "reticulate";
  CHECK(load_failure(doc) == ErrorKind::SchemaError);

  // seq order must strictly increase
  doc["scenario"]["events"][0]["action"] = "snapshot_check";
  doc["scenario"]["events"][0].erase("cpu");
  doc["scenario"]["events"][0].erase("ram_mb");
  doc["scenario"]["events"][0].erase("disk_gb");
  doc["scenario"]["events"][0].erase("image_id");
  doc["scenario"]["events"][0]["seq"] = 2;
  CHECK(load_failure(doc) == ErrorKind::ConsistencyError);

  // payloads are checked structurally before anything runs
  doc = testutil::ref_topo_doc();
  doc["scenario"]["events"] = json::array(
      {{{"seq", 1}, {"action", "establish_bearer"}, {"enb_id", "enb1"}}});
  CHECK(load_failure(doc) == ErrorKind::SchemaError);  // missing qos
}

TEST_CASE("expect clauses accept both spellings and reject unknown kinds") {
  auto doc = testutil::ref_topo_doc();
  doc["scenario"]["events"] = json::array(
      {{{"seq", 1}, {"action", "link_down"}, {"link_id", "p1-p2"}},
       {{"seq", 2}, {"action", "link_down"}, {"link_id", "p1-p2"}, {"expect", "AlreadyDown"}},
       {{"seq", 3}, {"action", "link_up"}, {"link_id", "p1-p2"},
        {"expect", "error(AlreadyUp)"}}});
  auto s = load_scenario(doc);
  CHECK(s.events[0].expect_error == "");
  CHECK(s.events[1].expect_error == "AlreadyDown");
  CHECK(s.events[2].expect_error == "AlreadyUp");

  doc["scenario"]["events"][1]["expect"] = "NotAnErrorKind";
  CHECK(load_failure(doc) == ErrorKind::SchemaError);
}

TEST_CASE("options block tunes the planner knobs") {
  auto doc = testutil::ref_topo_doc();
  doc["scenario"]["options"] = {{"ksp_k", 2},
                                {"min_lsp_width", 2},
                                {"gbps_per_slot", "0.125"},
                                {"retain_idle_tunnels", true},
                                {"image_copy_allowed", true}};
  auto s = load_scenario(doc);
  CHECK(s.world.options.ksp_k == 2);
  CHECK(s.world.options.min_lsp_width == 2);
  CHECK(s.world.options.kbps_per_slot == 125'000);
  CHECK(s.world.options.retain_idle_tunnels);
  CHECK(s.world.options.image_copy_allowed);

  doc["scenario"]["options"]["gbps_per_slot"] = 0;
  CHECK(load_failure(doc) == ErrorKind::SchemaError);
}

TEST_CASE("the document root carries exactly one scenario") {
  CHECK(load_failure(json::parse(R"({})")) == ErrorKind::SchemaError);
  CHECK(load_failure(json::parse(R"({"scenario": {"name": "x"}, "extra": 1})")) ==
        ErrorKind::SchemaError);
  CHECK(load_failure(json::parse(R"({"scenario": {}})")) == ErrorKind::SchemaError);
}

TEST_CASE("loading a missing file is a schema error") {
  CHECK_THROWS_AS(load_scenario_file("/nonexistent/path.json"), OrchError);
}
