#include "doctest.h"
#include "orch5g/errors.hpp"
#include "orch5g/failpoint.hpp"
#include "orch5g/net_orch.hpp"
#include "orch5g/nfv_orch.hpp"
#include "orch5g/world.hpp"
#include "support/testutil.hpp"

using namespace orch5g;

namespace {

// Endpoint(enb1) -> ranstack -> sgw chain used across the deploy tests.
nfv::ForwardingGraph chain_graph() {
  nfv::ForwardingGraph g;
  g.id = "chain";
  g.tenant_id = "t1";
  g.nodes = {{"term", false, "", "enb1"},
             {"ran", true, "ranstack", ""},
             {"gw", true, "sgw", ""}};
  g.edges = {{"fh", "term", "ran", 100'000, std::nullopt},
             {"bh", "ran", "gw", 50'000, std::nullopt}};
  g.placement_hints = {{"ran", DcTier::Edge}, {"gw", DcTier::Core}};
  return g;
}

}  // namespace

TEST_CASE("vnf lifecycle walks created, configured, running, terminated") {
  World w = testutil::ref_topo_world();
  const auto& inst = nfv::instantiate_vnf(w, "mme", DcTier::Core);
  CHECK(inst.state == nfv::VnfState::Created);
  CHECK(w.cloud_state.vms.at(inst.vm_id).dc_id == "dc-core");

  Id id = inst.id;
  // starting without configuration is a skipped transition
  CHECK_THROWS_AS(nfv::start_vnf(w, id), OrchError);

  nfv::configure_vnf(w, id, {});
  CHECK(w.nfv_state.instances.at(id).state == nfv::VnfState::Configured);
  CHECK_THROWS_AS(nfv::configure_vnf(w, id, {}), OrchError);

  nfv::start_vnf(w, id);
  CHECK(w.nfv_state.instances.at(id).state == nfv::VnfState::Running);

  nfv::terminate_vnf(w, id);
  CHECK(w.nfv_state.instances.at(id).state == nfv::VnfState::Terminated);
  CHECK(w.cloud_state.vms.at(inst.vm_id).state == cloud::VmState::Deleted);
  CHECK_THROWS_AS(nfv::terminate_vnf(w, id), OrchError);
}

TEST_CASE("configuration demands every schema key") {
  World w = testutil::ref_topo_world();
  // a type with a non-empty config schema
  w.vnf_catalog["probe"] = {"probe", nfv::VnfRole::Other, "probe", 1, 512, 5,
                            "img-epc", {"peer.fh", "peer.bh"}};
  Id id = nfv::instantiate_vnf(w, "probe", std::nullopt).id;
  try {
    nfv::configure_vnf(w, id, {{"peer.fh", "tok"}});
    FAIL("expected MissingConfigKey");
  } catch (const OrchError& e) {
    CHECK(e.kind() == ErrorKind::MissingConfigKey);
    CHECK(e.detail().find("peer.bh") != std::string::npos);
  }
  nfv::configure_vnf(w, id, {{"peer.fh", "a"}, {"peer.bh", "b"}});

  CHECK_THROWS_AS(nfv::instantiate_vnf(w, "no-such-type", std::nullopt), OrchError);
}

TEST_CASE("deploying a chain places, wires, and starts everything") {
  World w = testutil::ref_topo_world();
  const auto& emb = nfv::deploy_forwarding_graph(w, chain_graph());
  CHECK(emb.state == nfv::EmbeddingState::Deployed);
  CHECK(emb.placements.size() == 2);
  CHECK(emb.edge_services.size() == 2);

  const auto& dg = w.nfv_state.graphs.at("chain");
  CHECK(nfv::attach_node_of(w, dg.graph, dg.embedding, "term") == "enb1");
  CHECK(nfv::attach_node_of(w, dg.graph, dg.embedding, "ran") == "p1");
  CHECK(nfv::attach_node_of(w, dg.graph, dg.embedding, "gw") == "dcgw");

  for (const auto& [node, inst] : emb.placements)
    CHECK(w.nfv_state.instances.at(inst).state == nfv::VnfState::Running);

  // edge services terminate at the current attach nodes
  for (const auto& [edge, svc] : emb.edge_services) {
    const auto& req = w.orch_state.services.at(svc).request;
    if (edge == "fh") {
      CHECK(req.src_node == "enb1");
      CHECK(req.dst_node == "p1");
    } else {
      CHECK(req.src_node == "p1");
      CHECK(req.dst_node == "dcgw");
    }
  }

  // config auto-derivation hands every vnf its peers' address tokens
  const auto& ran = w.nfv_state.instances.at(emb.placements.at("ran"));
  CHECK(ran.config.count("peer.fh") == 1);
  CHECK(ran.config.count("peer.bh") == 1);
}

TEST_CASE("deploy failures leave nothing behind") {
  World w = testutil::ref_topo_world();
  auto before = snapshot(w.topo);

  auto graph = chain_graph();
  graph.edges[1].max_latency_ns = 1;  // one nanosecond: no path qualifies
  try {
    nfv::deploy_forwarding_graph(w, graph);
    FAIL("expected ConnectivityFailed");
  } catch (const OrchError& e) {
    CHECK(e.kind() == ErrorKind::ConnectivityFailed);
    CHECK(e.detail().find("bh") != std::string::npos);
  }
  CHECK(before == snapshot(w.topo));
  CHECK(w.nfv_state.instances.empty());
  CHECK(w.nfv_state.graphs.empty());

  // placement that cannot fit anywhere reports PlacementFailed
  auto heavy = chain_graph();
  w.vnf_catalog["ranstack"].cpu = 64;
  try {
    nfv::deploy_forwarding_graph(w, heavy);
    FAIL("expected PlacementFailed");
  } catch (const OrchError& e) {
    CHECK(e.kind() == ErrorKind::PlacementFailed);
  }
  CHECK(before == snapshot(w.topo));
}

TEST_CASE("graph validation rejects malformed shapes") {
  World w = testutil::ref_topo_world();

  auto dup = chain_graph();
  dup.nodes.push_back(dup.nodes[0]);
  CHECK_THROWS_AS(nfv::deploy_forwarding_graph(w, dup), OrchError);

  auto dangling = chain_graph();
  dangling.edges[0].to = "ghost";
  CHECK_THROWS_AS(nfv::deploy_forwarding_graph(w, dangling), OrchError);

  auto split = chain_graph();
  split.edges.pop_back();  // gw node left unconnected
  CHECK_THROWS_AS(nfv::deploy_forwarding_graph(w, split), OrchError);

  auto orphan = chain_graph();
  orphan.tenant_id = "t9";
  CHECK_THROWS_AS(nfv::deploy_forwarding_graph(w, orphan), OrchError);
}

TEST_CASE("a graph of two endpoints provisions pure connectivity") {
  World w = testutil::ref_topo_world();
  nfv::ForwardingGraph g;
  g.id = "wire";
  g.tenant_id = "t1";
  g.nodes = {{"a", false, "", "enb1"}, {"b", false, "", "enb2"}};
  g.edges = {{"x2", "a", "b", 10'000, std::nullopt}};
  const auto& emb = nfv::deploy_forwarding_graph(w, g);
  CHECK(emb.placements.empty());
  CHECK(emb.edge_services.size() == 1);
  CHECK(w.cloud_state.vms.empty());
}

TEST_CASE("teardown returns the world to its pre-deploy state") {
  World w = testutil::ref_topo_world();
  auto before = snapshot(w.topo);
  nfv::deploy_forwarding_graph(w, chain_graph());
  nfv::teardown_forwarding_graph(w, "chain");
  CHECK(before == snapshot(w.topo));
  CHECK(w.nfv_state.graphs.at("chain").embedding.state == nfv::EmbeddingState::Torn);
  CHECK_THROWS_AS(nfv::teardown_forwarding_graph(w, "chain"), OrchError);
  CHECK(testutil::check_accounting(w) == "");
}

TEST_CASE("migration re-homes incident services") {
  World w = testutil::ref_topo_world();
  nfv::deploy_forwarding_graph(w, chain_graph());
  Id ran_inst = w.nfv_state.graphs.at("chain").embedding.placements.at("ran");

  const auto& emb = nfv::migrate_vnf(w, ran_inst, "dc-core");
  CHECK(emb.state == nfv::EmbeddingState::Deployed);
  const auto& dg = w.nfv_state.graphs.at("chain");
  CHECK(nfv::attach_node_of(w, dg.graph, dg.embedding, "ran") == "dcgw");
  for (const auto& [edge, svc] : emb.edge_services) {
    const auto& req = w.orch_state.services.at(svc).request;
    if (edge == "fh") CHECK(req.dst_node == "dcgw");
    if (edge == "bh") CHECK(req.src_node == "dcgw");
  }
  CHECK(testutil::check_accounting(w) == "");

  // teardown after migration still releases everything at the new locations
  nfv::teardown_forwarding_graph(w, "chain");
  World fresh = testutil::ref_topo_world();
  CHECK(snapshot(fresh.topo) == snapshot(w.topo));
}

TEST_CASE("migration failures revert the move entirely") {
  World w = testutil::ref_topo_world();
  nfv::deploy_forwarding_graph(w, chain_graph());
  Id ran_inst = w.nfv_state.graphs.at("chain").embedding.placements.at("ran");
  auto before = snapshot(w.topo);

  // a target with no room: 27 + the gateway's 2 leaves 3 of 32 cpus free
  debit_dc(w.topo, "dc-core", 27, 0, 0);
  CHECK_THROWS_AS(nfv::migrate_vnf(w, ran_inst, "dc-core"), OrchError);
  credit_dc(w.topo, "dc-core", 27, 0, 0);
  CHECK(before == snapshot(w.topo));
  CHECK(w.cloud_state.vms.at(w.nfv_state.instances.at(ran_inst).vm_id).dc_id == "dc-edge");

  // a connectivity failure mid-swap reverts the vm as well
  failpoint::handler = [](const std::string& step) {
    if (step == "migrate.edge.bh") throw OrchError(ErrorKind::Injected, step);
  };
  CHECK_THROWS_AS(nfv::migrate_vnf(w, ran_inst, "dc-core"), OrchError);
  failpoint::handler = nullptr;
  CHECK(before == snapshot(w.topo));
  const auto& dg = w.nfv_state.graphs.at("chain");
  CHECK(nfv::attach_node_of(w, dg.graph, dg.embedding, "ran") == "p1");
  CHECK(dg.embedding.state == nfv::EmbeddingState::Deployed);
}
