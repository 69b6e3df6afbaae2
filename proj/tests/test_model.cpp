#include "doctest.h"
#include "orch5g/errors.hpp"
#include "orch5g/model.hpp"
#include "orch5g/world.hpp"
#include "support/testutil.hpp"

using namespace orch5g;

namespace {

// Minimal two-switch substrate for accounting tests.
World tiny_world() {
  auto doc = nlohmann::json::parse(R"({
    "scenario": {
      "name": "tiny",
      "domains": [{"id": "d1", "tech": "packet",
                   "nodes": [{"id": "a", "kind": "packet-switch"},
                             {"id": "b", "kind": "packet-switch"}]}],
      "links": [{"id": "a-b", "src": "a", "dst": "b",
                 "medium": {"packet": {"capacity_mbps": 1000, "latency_ms": 1}}},
                {"id": "b-a", "src": "b", "dst": "a",
                 "medium": {"packet": {"capacity_mbps": 1000, "latency_ms": 1}}}]
    }
  })");
  return load_scenario(doc).world;
}

}  // namespace

TEST_CASE("bandwidth reservation and the ledger") {
  World w = tiny_world();
  reserve_packet_bw(w.topo, "a-b", 400'000, "svc");
  CHECK(w.topo.link("a-b").packet().reserved_kbps == 400'000);

  // over-reserve fails and leaves the books untouched
  CHECK_THROWS_AS(reserve_packet_bw(w.topo, "a-b", 700'000, "svc"), OrchError);
  CHECK(w.topo.link("a-b").packet().reserved_kbps == 400'000);

  release_packet_bw(w.topo, "a-b", 400'000, "svc");
  CHECK(w.topo.link("a-b").packet().reserved_kbps == 0);
  CHECK(w.topo.ledger.size() == 2);
  CHECK(ledger_bw_sum(w.topo, "a-b") == 0);

  CHECK_THROWS_AS(release_packet_bw(w.topo, "a-b", 1, "svc"), OrchError);
  try {
    reserve_packet_bw(w.topo, "a-b", 1'000'001, "svc");
  } catch (const OrchError& e) {
    CHECK(e.kind() == ErrorKind::CapacityExceeded);
  }
}

TEST_CASE("snapshots compare by content, not label") {
  World w = tiny_world();
  auto before = snapshot(w.topo, "before");
  CHECK(before == snapshot(w.topo, "different label"));
  CHECK(before.hash() == snapshot(w.topo).hash());

  reserve_packet_bw(w.topo, "a-b", 1'000, "svc");
  auto during = snapshot(w.topo);
  CHECK_FALSE(before == during);
  CHECK(before.hash() != during.hash());

  release_packet_bw(w.topo, "a-b", 1'000, "svc");
  CHECK(before == snapshot(w.topo));
}

TEST_CASE("fnv1a64 matches the reference constants") {
  CHECK(fnv1a64("") == 0xcbf29ce484222325ull);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cull);
}

TEST_CASE("spectrum grid allocation") {
  World w = testutil::ref_topo_world();
  const Id lid = "o1-o2";
  alloc_slots(w.topo, lid, 0, 4, "lsp-x");
  CHECK(w.topo.link(lid).optical().grid.first_fit(4) == 4);
  CHECK(w.topo.link(lid).optical().grid.range_free(0, 1) == false);

  // overlapping allocation is refused without partial effects
  CHECK_THROWS_AS(alloc_slots(w.topo, lid, 3, 4, "lsp-y"), OrchError);
  CHECK(w.topo.link(lid).optical().grid.owner.size() == 4);
  CHECK(testutil::check_spectrum(w) == "");

  free_slots(w.topo, lid, 0, 4, "lsp-x");
  CHECK(w.topo.link(lid).optical().grid.first_fit(4) == 0);
  CHECK_THROWS_AS(free_slots(w.topo, lid, 0, 4, "lsp-x"), OrchError);
}

TEST_CASE("first fit scans for the smallest contiguous block") {
  World w = testutil::ref_topo_world();
  const Id lid = "o1-o2";
  alloc_slots(w.topo, lid, 0, 2, "a");
  alloc_slots(w.topo, lid, 4, 2, "b");
  const auto& grid = w.topo.link(lid).optical().grid;
  CHECK(grid.first_fit(2) == 2);
  CHECK(grid.first_fit(3) == 6);
  CHECK(grid.first_fit(10) == 6);
  CHECK_FALSE(grid.first_fit(11).has_value());
  CHECK_FALSE(grid.first_fit(0).has_value());
}

TEST_CASE("link state transitions queue releases while down") {
  World w = tiny_world();
  reserve_packet_bw(w.topo, "a-b", 300'000, "svc");
  set_link_down(w.topo, "a-b");
  CHECK_THROWS_AS(set_link_down(w.topo, "a-b"), OrchError);

  // a release against a down link stays on the books
  release_packet_bw(w.topo, "a-b", 300'000, "svc");
  CHECK(w.topo.link("a-b").packet().reserved_kbps == 300'000);
  CHECK(w.topo.link("a-b").packet().pending.size() == 1);

  set_link_up(w.topo, "a-b");
  CHECK(w.topo.link("a-b").packet().reserved_kbps == 0);
  CHECK(w.topo.link("a-b").packet().pending.empty());
  CHECK_THROWS_AS(set_link_up(w.topo, "a-b"), OrchError);
  CHECK_THROWS_AS(set_link_down(w.topo, "no-such-link"), OrchError);
  CHECK(testutil::check_accounting(w) == "");
}

TEST_CASE("slot frees on a down link flush at link-up") {
  World w = testutil::ref_topo_world();
  alloc_slots(w.topo, "o1-o2", 0, 4, "lsp-x");
  set_link_down(w.topo, "o1-o2");
  free_slots(w.topo, "o1-o2", 0, 4, "lsp-x");
  CHECK(w.topo.link("o1-o2").optical().grid.owner.size() == 4);
  set_link_up(w.topo, "o1-o2");
  CHECK(w.topo.link("o1-o2").optical().grid.owner.empty());
  CHECK(testutil::check_accounting(w) == "");
}

TEST_CASE("generated ids are zero-padded and sequential per prefix") {
  World w = tiny_world();
  CHECK(next_id(w, "svc") == "svc-000001");
  CHECK(next_id(w, "svc") == "svc-000002");
  CHECK(next_id(w, "lsp") == "lsp-000001");
  CHECK(next_id(w, "svc") == "svc-000003");
}

TEST_CASE("transaction guard restores on abandonment") {
  World w = tiny_world();
  auto before = snapshot(w.topo);
  {
    TxGuard tx(w);
    reserve_packet_bw(w.topo, "a-b", 500'000, "svc");
    next_id(w, "svc");
    // no commit: destructor rolls everything back, id counter included
  }
  CHECK(before == snapshot(w.topo));
  CHECK(next_id(w, "svc") == "svc-000001");

  {
    TxGuard tx(w);
    reserve_packet_bw(w.topo, "a-b", 500'000, "svc");
    tx.commit();
  }
  CHECK(w.topo.link("a-b").packet().reserved_kbps == 500'000);
}
