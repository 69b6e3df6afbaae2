#include "doctest.h"
#include "orch5g/errors.hpp"
#include "orch5g/optical_ctrl.hpp"
#include "orch5g/world.hpp"
#include "support/testutil.hpp"

using namespace orch5g;

// The optical ring o1-o2-o3-o4 offers two 2-hop routes between o1 and o3.

TEST_CASE("rsa picks the lexicographically smaller route and first fit") {
  World w = testutil::ref_topo_world();
  auto rsa = optical::rsa_compute(w, "o1", "o3", 4);
  CHECK(rsa.route == std::vector<Id>{"o1-o2", "o2-o3"});
  CHECK(rsa.slot_start == 0);

  // an Active block on that route pushes first-fit past it
  optical::signal_lsp(w, {"o1-o2", "o2-o3"}, 0, 4, "svc-a");
  auto next = optical::rsa_compute(w, "o1", "o3", 4);
  CHECK(next.route == std::vector<Id>{"o1-o2", "o2-o3"});
  CHECK(next.slot_start == 4);
}

TEST_CASE("rsa falls over to a later route when spectrum runs out") {
  World w = testutil::ref_topo_world();
  // exhaust the preferred route entirely
  alloc_slots(w.topo, "o1-o2", 0, 16, "blocker");
  auto rsa = optical::rsa_compute(w, "o1", "o3", 4);
  CHECK(rsa.route == std::vector<Id>{"o1-o4", "o4-o3"});
  CHECK(rsa.slot_start == 0);

  // with K=1 only the blocked route is ever examined
  w.options.ksp_k = 1;
  CHECK_THROWS_AS(optical::rsa_compute(w, "o1", "o3", 4), OrchError);
}

TEST_CASE("rsa reports missing continuity as NoSpectrum") {
  World w = testutil::ref_topo_world();
  // both candidate routes keep free slots, but never the same block on
  // consecutive hops
  alloc_slots(w.topo, "o1-o2", 0, 8, "blocker");
  alloc_slots(w.topo, "o2-o3", 8, 8, "blocker");
  alloc_slots(w.topo, "o1-o4", 0, 8, "blocker");
  alloc_slots(w.topo, "o4-o3", 8, 8, "blocker");
  try {
    optical::rsa_compute(w, "o1", "o3", 8);
    FAIL("expected NoSpectrum");
  } catch (const OrchError& e) {
    CHECK(e.kind() == ErrorKind::NoSpectrum);
  }

  // an unreachable destination is NoRoute instead
  std::set<Id> all_out{"o1-o2", "o1-o4"};
  try {
    optical::rsa_compute(w, "o1", "o3", 1, all_out);
    FAIL("expected NoRoute");
  } catch (const OrchError& e) {
    CHECK(e.kind() == ErrorKind::NoRoute);
  }
}

TEST_CASE("signaling runs two phases and records the trace") {
  World w = testutil::ref_topo_world();
  const auto& lsp = optical::signal_lsp(w, {"o1-o2", "o2-o3"}, 0, 4, "svc");
  CHECK(lsp.state == optical::LspState::Active);
  CHECK(lsp.capacity_kbps == 4 * w.options.kbps_per_slot);
  REQUIRE(lsp.trace.size() == 4);
  CHECK(lsp.trace[0].kind == optical::MsgKind::PathMsg);
  CHECK(lsp.trace[1].kind == optical::MsgKind::PathMsg);
  CHECK(lsp.trace[2].kind == optical::MsgKind::ResvMsg);
  CHECK(lsp.trace[3].kind == optical::MsgKind::ResvMsg);
  // reservation phase walks the route backwards
  CHECK(lsp.trace[2].hop_index > lsp.trace[3].hop_index);
  CHECK(testutil::check_spectrum(w) == "");
}

TEST_CASE("admission failure allocates nothing and names the hop") {
  World w = testutil::ref_topo_world();
  alloc_slots(w.topo, "o2-o3", 2, 1, "blocker");
  auto before = snapshot(w.topo);
  try {
    optical::signal_lsp(w, {"o1-o2", "o2-o3"}, 0, 4, "svc");
    FAIL("expected AdmissionFailed");
  } catch (const OrchError& e) {
    CHECK(e.kind() == ErrorKind::AdmissionFailed);
    CHECK(e.detail().find("hop 1") != std::string::npos);
  }
  CHECK(before == snapshot(w.topo));

  // the attempt is retained for inspection with an error trace
  REQUIRE(w.optical_state.lsps.size() == 1);
  const auto& attempt = w.optical_state.lsps.begin()->second;
  CHECK(attempt.state == optical::LspState::Deleted);
  CHECK(attempt.failure_cause != "");
  CHECK(attempt.trace.back().kind == optical::MsgKind::ErrMsg);
}

TEST_CASE("two disjoint LSPs share a route without overlap") {
  World w = testutil::ref_topo_world();
  optical::signal_lsp(w, {"o1-o2", "o2-o3"}, 0, 4, "svc-a");
  optical::signal_lsp(w, {"o1-o2", "o2-o3"}, 4, 4, "svc-b");
  CHECK(testutil::check_spectrum(w) == "");
  CHECK(w.topo.link("o1-o2").optical().grid.owner.size() == 8);
}

TEST_CASE("teardown frees spectrum and keeps the database record") {
  World w = testutil::ref_topo_world();
  auto before = snapshot(w.topo);
  Id id = optical::signal_lsp(w, {"o1-o2", "o2-o3"}, 0, 4, "svc").id;
  optical::teardown_lsp(w, id);
  CHECK(before == snapshot(w.topo));
  CHECK(w.optical_state.lsps.at(id).state == optical::LspState::Deleted);
  CHECK_THROWS_AS(optical::teardown_lsp(w, id), OrchError);
  // TearMsg per hop lands in the trace after the setup messages
  CHECK(w.optical_state.lsps.at(id).trace.size() == 6);
}

TEST_CASE("tearing down a failed LSP frees only up links immediately") {
  World w = testutil::ref_topo_world();
  auto before = snapshot(w.topo);
  Id id = optical::signal_lsp(w, {"o1-o2", "o2-o3"}, 0, 4, "svc").id;
  auto affected = optical::mark_link_down(w, "o2-o3");
  CHECK(affected == std::vector<Id>{id});
  CHECK(w.optical_state.lsps.at(id).state == optical::LspState::Failed);

  optical::teardown_lsp(w, id);
  CHECK(w.topo.link("o1-o2").optical().grid.owner.empty());
  CHECK(w.topo.link("o2-o3").optical().grid.owner.size() == 4);
  CHECK(testutil::check_accounting(w) == "");

  set_link_up(w.topo, "o2-o3");
  CHECK(before == snapshot(w.topo));
}

TEST_CASE("restoration re-signals around the failure") {
  World w = testutil::ref_topo_world();
  Id old = optical::signal_lsp(w, {"o1-o2", "o2-o3"}, 0, 4, "svc").id;
  optical::mark_link_down(w, "o2-o3");
  auto outcomes = optical::restore_lsps(w, "o2-o3");
  REQUIRE(outcomes.count(old) == 1);
  CHECK(outcomes.at(old).restored);

  const auto& fresh = w.optical_state.lsps.at(outcomes.at(old).new_lsp_id);
  CHECK(fresh.route == std::vector<Id>{"o1-o4", "o4-o3"});
  CHECK(fresh.slot_width == 4);
  CHECK(fresh.state == optical::LspState::Active);
  CHECK(w.optical_state.lsps.at(old).state == optical::LspState::Deleted);
  CHECK(testutil::check_spectrum(w) == "");
}

TEST_CASE("restoration with no alternative leaves the LSP failed") {
  World w = testutil::ref_topo_world();
  Id id = optical::signal_lsp(w, {"o1-o2", "o2-o3"}, 0, 4, "svc").id;
  // jam the complementary route so nothing fits anywhere
  alloc_slots(w.topo, "o1-o4", 0, 16, "blocker");
  optical::mark_link_down(w, "o2-o3");
  auto outcomes = optical::restore_lsps(w, "o2-o3");
  REQUIRE(outcomes.count(id) == 1);
  CHECK_FALSE(outcomes.at(id).restored);
  CHECK(w.optical_state.lsps.at(id).state == optical::LspState::Failed);

  // a failure that touches no LSP reports nothing
  World w2 = testutil::ref_topo_world();
  optical::mark_link_down(w2, "o3-o4");
  CHECK(optical::restore_lsps(w2, "o3-o4").empty());
}

TEST_CASE("lsp database dump lists route, range, state, and owner") {
  World w = testutil::ref_topo_world();
  optical::signal_lsp(w, {"o1-o2", "o2-o3"}, 0, 4, "svc-7");
  auto dump = optical::dump_lsp_db(w);
  CHECK(dump.find("lsp-000001 | o1-o2,o2-o3 | [0,4) | active | svc-7") != std::string::npos);
}
