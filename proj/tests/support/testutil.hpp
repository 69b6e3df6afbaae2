#pragma once

// Shared fixture loading and independent state checkers. The checkers
// re-derive module invariants from raw world state (grids, ledger, flow
// tables) without calling back into the code that maintains them, so a test
// failure points at the implementation rather than at itself.

#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "orch5g/scenario.hpp"
#include "orch5g/world.hpp"

namespace testutil {

using nlohmann::json;

inline std::string fixture_path(const std::string& rel) {
  return std::string(ORCH5G_SOURCE_DIR) + "/" + rel;
}

inline json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open fixture " + path);
  return json::parse(in);
}

inline json ref_topo_doc() { return load_json_file(fixture_path("scenarios/ref_topo.json")); }

inline orch5g::World ref_topo_world() { return orch5g::load_scenario(ref_topo_doc()).world; }

// --- independent invariant checks (empty string = holds) ---

// Spectrum: every Active LSP owns its full [start, start+width) block on
// every hop; every grid's occupied bits agree exactly with its owner map.
inline std::string check_spectrum(const orch5g::World& world) {
  using namespace orch5g;
  for (const auto& [id, lsp] : world.optical_state.lsps) {
    if (lsp.state != optical::LspState::Active) continue;
    if (lsp.slot_width < 1) return "lsp " + id + ": non-positive width";
    for (const Id& lid : lsp.route) {
      const auto& grid = world.topo.link(lid).optical().grid;
      for (int s = lsp.slot_start; s < lsp.slot_start + lsp.slot_width; ++s) {
        if (s < 0 || s >= grid.slot_count)
          return "lsp " + id + ": slot " + std::to_string(s) + " outside grid of " + lid;
        if (!grid.occupied[s])
          return "lsp " + id + ": slot " + std::to_string(s) + " not occupied on " + lid;
        auto it = grid.owner.find(s);
        if (it == grid.owner.end() || it->second != id)
          return "lsp " + id + ": slot " + std::to_string(s) + " on " + lid +
                 " owned by someone else";
      }
    }
  }
  for (const auto& [lid, link] : world.topo.links) {
    if (!link.is_optical()) continue;
    const auto& grid = link.optical().grid;
    if (static_cast<int>(grid.occupied.size()) != grid.slot_count)
      return "link " + lid + ": occupied vector size mismatch";
    for (int s = 0; s < grid.slot_count; ++s) {
      bool occ = grid.occupied[s] != 0;
      bool owned = grid.owner.count(s) != 0;
      if (occ != owned)
        return "link " + lid + ": slot " + std::to_string(s) + " occupied/owner disagree";
    }
  }
  return "";
}

// Flow tables: walking each Active path's entries from its ingress by
// (match -> Forward) must emit exactly its link sequence and end in a pop;
// non-Removed paths of one domain never share a label.
inline std::string check_flow_tables(const orch5g::World& world) {
  using namespace orch5g;
  for (const auto& [id, path] : world.packet_state.paths) {
    if (path.state != packet::PathState::Active) continue;
    std::vector<Id> walked;
    Id at = world.topo.link(path.links.front()).src;
    Id in_link = path.links.front();  // ingress classifies on its own out-link
    for (std::size_t step = 0;; ++step) {
      auto node_it = world.packet_state.match_index.find(at);
      if (node_it == world.packet_state.match_index.end())
        return "path " + id + ": no table at node " + at;
      auto ent_it = node_it->second.find({in_link, path.label});
      if (ent_it == node_it->second.end())
        return "path " + id + ": no entry at " + at + " for in=" + in_link;
      const auto& entry = world.packet_state.entries.at(ent_it->second);
      if (entry.actions.empty()) return "path " + id + ": empty action list at " + at;
      const auto& last = entry.actions.back();
      if (last.kind == packet::ActionKind::PopLabel) break;  // egress
      if (last.kind != packet::ActionKind::Forward)
        return "path " + id + ": unterminated entry at " + at;
      walked.push_back(last.out_link);
      at = world.topo.link(last.out_link).dst;
      in_link = last.out_link;
      if (step > path.links.size()) return "path " + id + ": walk does not terminate";
    }
    if (walked != path.links) return "path " + id + ": walk disagrees with link sequence";
  }

  std::map<Id, std::map<std::int64_t, Id>> seen;  // domain -> label -> path
  for (const auto& [id, path] : world.packet_state.paths) {
    if (path.state == packet::PathState::Removed) continue;
    std::set<Id> domains;
    for (const Id& lid : path.links) {
      const Link& link = world.topo.link(lid);
      domains.insert(world.topo.node(link.src).domain_id);
      domains.insert(world.topo.node(link.dst).domain_id);
    }
    for (const Id& d : domains) {
      auto [it, fresh] = seen[d].emplace(path.label, id);
      if (!fresh)
        return "paths " + it->second + " and " + id + " share label " +
               std::to_string(path.label) + " in domain " + d;
    }
  }
  return "";
}

// DC accounting: the sum of non-deleted resident VM demands equals each DC's
// used totals, and the ledger's signed per-link sums match live reservations
// and occupancy.
inline std::string check_accounting(const orch5g::World& world) {
  using namespace orch5g;
  std::map<Id, std::array<std::int64_t, 3>> tally;
  for (const auto& [id, dc] : world.topo.dcs) tally[id] = {0, 0, 0};
  for (const auto& [id, vm] : world.cloud_state.vms) {
    if (vm.state == cloud::VmState::Deleted) continue;
    auto& t = tally.at(vm.dc_id);
    t[0] += vm.cpu;
    t[1] += vm.ram_mb;
    t[2] += vm.disk_gb;
  }
  for (const auto& [id, dc] : world.topo.dcs) {
    const auto& t = tally.at(id);
    if (t[0] != dc.cpu_used || t[1] != dc.ram_used || t[2] != dc.disk_used)
      return "dc " + id + ": resident VM sum disagrees with used totals";
    if (dc.cpu_used < 0 || dc.cpu_used > dc.cpu_total || dc.ram_used > dc.ram_total ||
        dc.disk_used > dc.disk_total)
      return "dc " + id + ": usage outside [0, total]";
  }

  for (const auto& [lid, link] : world.topo.links) {
    if (link.is_packet()) {
      const auto& m = link.packet();
      if (m.reserved_kbps < 0 || m.reserved_kbps > m.capacity_kbps)
        return "link " + lid + ": reservation outside [0, capacity]";
      if (ledger_bw_sum(world.topo, lid) != m.reserved_kbps)
        return "link " + lid + ": ledger sum disagrees with reserved bandwidth";
    } else {
      std::int64_t alloc = 0;
      for (const auto& e : world.topo.ledger) {
        if (e.link_id != lid) continue;
        if (e.op == LedgerOp::SlotAlloc) alloc += e.amount;
        if (e.op == LedgerOp::SlotFree) alloc -= e.amount;
      }
      std::int64_t occ = 0;
      for (auto b : link.optical().grid.occupied) occ += b;
      if (alloc != occ) return "link " + lid + ": slot ledger disagrees with occupancy";
    }
  }
  return "";
}

// QoS of one bearer, re-derived from raw state: every resource the plan
// names carries at least the bearer's guaranteed rate, and summing segment
// and stitch latencies reproduces the recorded total within its bound.
inline std::string check_bearer_qos(const orch5g::World& world, const orch5g::Id& bearer_id) {
  using namespace orch5g;
  if (!world.uc_state.epc) return "no EPC";
  const auto& epc = *world.uc_state.epc;
  auto bit = epc.bearers.find(bearer_id);
  if (bit == epc.bearers.end()) return "unknown bearer " + bearer_id;
  const uc::Bearer& bearer = bit->second;
  if (bearer.state != uc::BearerState::Active) return "bearer " + bearer_id + " not active";
  auto sit = world.orch_state.services.find(bearer.transport_service);
  if (sit == world.orch_state.services.end()) return "bearer service missing";
  const netorch::Service& svc = sit->second;

  LatencyNs total = 0;
  for (const auto& seg : svc.plan.segments) {
    if (seg.realized == netorch::RealizedKind::PacketPath) {
      const auto& path = world.packet_state.paths.at(seg.realized_id);
      if (path.state != packet::PathState::Active) return "segment path not active";
      if (path.bw_kbps < bearer.qos.gbr_kbps) return "segment path below gbr";
      for (const Id& lid : path.links) {
        total += world.topo.link(lid).latency_ns();
        if (path.reserves_bw &&
            ledger_bw_sum(world.topo, lid, path.id) < bearer.qos.gbr_kbps)
          return "link " + lid + " reserves less than gbr for " + path.id;
      }
    } else {
      const auto& lsp = world.optical_state.lsps.at(seg.realized_id);
      if (lsp.state != optical::LspState::Active) return "segment LSP not active";
      auto git = world.orch_state.groomed_kbps.find(lsp.id);
      BwKbps load = git == world.orch_state.groomed_kbps.end() ? 0 : git->second;
      if (load < bearer.qos.gbr_kbps) return "LSP groomed load below gbr";
      if (load > lsp.capacity_kbps) return "LSP overbooked";
      total += lsp.route_latency(world);
    }
  }
  for (const Id& lid : svc.plan.stitch_links) {
    total += world.topo.link(lid).latency_ns();
    if (ledger_bw_sum(world.topo, lid, svc.id) < bearer.qos.gbr_kbps)
      return "stitch link " + lid + " reserves less than gbr";
  }
  if (total != svc.plan.total_latency_ns) return "recomputed latency disagrees with plan";
  if (bearer.qos.max_latency_ns && total > *bearer.qos.max_latency_ns)
    return "plan latency exceeds the bearer bound";
  return "";
}

}  // namespace testutil
