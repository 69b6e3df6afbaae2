#include "orch5g/optical_ctrl.hpp"

#include <algorithm>
#include <sstream>

#include "orch5g/errors.hpp"
#include "orch5g/pathing.hpp"
#include "orch5g/world.hpp"

namespace orch5g::optical {

const char* lsp_state_name(LspState s) {
  switch (s) {
    case LspState::Requested: return "requested";
    case LspState::Signaled: return "signaled";
    case LspState::Active: return "active";
    case LspState::Failed: return "failed";
    case LspState::Deleted: return "deleted";
  }
  return "?";
}

const char* msg_kind_name(MsgKind k) {
  switch (k) {
    case MsgKind::PathMsg: return "PathMsg";
    case MsgKind::ResvMsg: return "ResvMsg";
    case MsgKind::ErrMsg: return "ErrMsg";
    case MsgKind::TearMsg: return "TearMsg";
  }
  return "?";
}

LatencyNs OpticalLsp::route_latency(const World& world) const {
  LatencyNs total = 0;
  for (const Id& lid : route) total += world.topo.link(lid).latency_ns();
  return total;
}

Id OpticalLsp::src_roadm(const World& world) const { return world.topo.link(route.front()).src; }
Id OpticalLsp::dst_roadm(const World& world) const { return world.topo.link(route.back()).dst; }

namespace {

std::vector<pathing::Edge> optical_edges(const World& world, const std::set<Id>& avoid) {
  std::vector<pathing::Edge> edges;
  for (const auto& [id, link] : world.topo.links) {
    if (!link.is_optical() || !link.up || avoid.count(id)) continue;
    edges.push_back({id, link.src, link.dst, link.latency_ns()});
  }
  return edges;
}

// Smallest start index at which every link of the route has `width` free
// contiguous slots, or nullopt.
std::optional<int> common_first_fit(const World& world, const std::vector<Id>& route, int width) {
  int max_start = INT32_MAX;
  for (const Id& lid : route)
    max_start = std::min(max_start, world.topo.link(lid).optical().grid.slot_count - width);
  for (int start = 0; start <= max_start; ++start) {
    bool ok = true;
    for (const Id& lid : route)
      if (!world.topo.link(lid).optical().grid.range_free(start, width)) {
        ok = false;
        break;
      }
    if (ok) return start;
  }
  return std::nullopt;
}

void check_optical_route(const World& world, const std::vector<Id>& route) {
  if (route.empty()) throw OrchError(ErrorKind::ConsistencyError, "LSP route has no links");
  for (std::size_t i = 0; i < route.size(); ++i) {
    const Link& link = world.topo.link(route[i]);
    if (!link.is_optical())
      throw OrchError(ErrorKind::ConsistencyError,
                      "link '" + route[i] + "' is not an optical link");
    if (i > 0 && world.topo.link(route[i - 1]).dst != link.src)
      throw OrchError(ErrorKind::ConsistencyError,
                      "links '" + route[i - 1] + "' and '" + route[i] + "' are not contiguous");
  }
}

}  // namespace

RsaResult rsa_compute(const World& world, const Id& src_roadm, const Id& dst_roadm,
                      int slot_width, const std::set<Id>& avoid_links) {
  if (slot_width < 1)
    throw OrchError(ErrorKind::ConsistencyError, "slot width must be at least 1");
  if (src_roadm == dst_roadm)
    throw OrchError(ErrorKind::ConsistencyError, "LSP endpoints are the same node");

  auto edges = optical_edges(world, avoid_links);
  auto routes = pathing::k_shortest_paths(edges, src_roadm, dst_roadm, world.options.ksp_k);
  if (routes.empty())
    throw OrchError(ErrorKind::NoRoute, src_roadm + " -> " + dst_roadm + ": no optical route");

  for (const auto& candidate : routes) {
    std::vector<Id> route;
    for (int e : candidate.edges) route.push_back(edges[e].id);
    if (auto start = common_first_fit(world, route, slot_width))
      return {route, *start};
  }
  throw OrchError(ErrorKind::NoSpectrum,
                  src_roadm + " -> " + dst_roadm + ": no common contiguous block of width " +
                      std::to_string(slot_width) + " on any candidate route");
}

const OpticalLsp& signal_lsp(World& world, const std::vector<Id>& route, int slot_start,
                             int slot_width, const Id& owner_service) {
  check_optical_route(world, route);
  if (slot_width < 1)
    throw OrchError(ErrorKind::ConsistencyError, "slot width must be at least 1");

  OpticalLsp lsp;
  lsp.id = next_id(world, "lsp");
  lsp.route = route;
  lsp.slot_start = slot_start;
  lsp.slot_width = slot_width;
  lsp.capacity_kbps = slot_width * world.options.kbps_per_slot;
  lsp.owner_service = owner_service;
  lsp.state = LspState::Requested;

  // Phase one: PathMsg admission hop by hop. Nothing is allocated yet, so a
  // rejection at any hop leaves every grid untouched.
  for (int hop = 0; hop < static_cast<int>(route.size()); ++hop) {
    lsp.trace.push_back({MsgKind::PathMsg, lsp.id, hop, slot_start, slot_width});
    const Link& link = world.topo.link(route[hop]);
    bool admitted = link.up && link.optical().grid.range_free(slot_start, slot_width);
    if (!admitted) {
      lsp.trace.push_back({MsgKind::ErrMsg, lsp.id, hop, slot_start, slot_width});
      lsp.state = LspState::Deleted;
      lsp.failure_cause = "admission failed at hop " + std::to_string(hop) + " (" + route[hop] +
                          (link.up ? ": slots taken)" : ": link down)");
      Id id = lsp.id;
      std::string cause = lsp.failure_cause;
      world.optical_state.lsps[id] = std::move(lsp);
      throw OrchError(ErrorKind::AdmissionFailed, cause);
    }
  }
  lsp.state = LspState::Signaled;

  // Phase two: ResvMsg in reverse, committing the allocation.
  for (int hop = static_cast<int>(route.size()) - 1; hop >= 0; --hop) {
    alloc_slots(world.topo, route[hop], slot_start, slot_width, lsp.id);
    lsp.trace.push_back({MsgKind::ResvMsg, lsp.id, hop, slot_start, slot_width});
  }
  lsp.state = LspState::Active;

  Id id = lsp.id;
  world.optical_state.lsps[id] = std::move(lsp);
  return world.optical_state.lsps[id];
}

void teardown_lsp(World& world, const Id& lsp_id) {
  auto it = world.optical_state.lsps.find(lsp_id);
  if (it == world.optical_state.lsps.end() || it->second.state == LspState::Deleted)
    throw OrchError(ErrorKind::UnknownLsp, "LSP '" + lsp_id + "' does not exist");
  OpticalLsp& lsp = it->second;

  for (int hop = 0; hop < static_cast<int>(lsp.route.size()); ++hop) {
    lsp.trace.push_back({MsgKind::TearMsg, lsp.id, hop, lsp.slot_start, lsp.slot_width});
    // Down links queue the release and apply it on link-up.
    free_slots(world.topo, lsp.route[hop], lsp.slot_start, lsp.slot_width, lsp.id);
  }
  lsp.state = LspState::Deleted;
}

std::vector<Id> mark_link_down(World& world, const Id& link_id) {
  set_link_down(world.topo, link_id);
  std::vector<Id> affected;
  for (auto& [id, lsp] : world.optical_state.lsps) {
    if (lsp.state != LspState::Active) continue;
    if (std::find(lsp.route.begin(), lsp.route.end(), link_id) != lsp.route.end()) {
      lsp.state = LspState::Failed;
      affected.push_back(id);
    }
  }
  return affected;
}

std::map<Id, RestoreOutcome> restore_lsps(World& world, const Id& failed_link_id) {
  (void)failed_link_id;  // all down links are avoided, not just the trigger
  std::map<Id, RestoreOutcome> outcomes;
  std::vector<Id> failed;
  for (const auto& [id, lsp] : world.optical_state.lsps)
    if (lsp.state == LspState::Failed) failed.push_back(id);

  for (const Id& old_id : failed) {
    const OpticalLsp& old_lsp = world.optical_state.lsps.at(old_id);
    try {
      RsaResult rsa = rsa_compute(world, old_lsp.src_roadm(world), old_lsp.dst_roadm(world),
                                  old_lsp.slot_width);
      const OpticalLsp& fresh =
          signal_lsp(world, rsa.route, rsa.slot_start, old_lsp.slot_width,
                     old_lsp.owner_service);
      Id new_id = fresh.id;
      teardown_lsp(world, old_id);
      outcomes[old_id] = {true, new_id};
    } catch (const OrchError&) {
      outcomes[old_id] = {false, ""};
    }
  }
  return outcomes;
}

std::string dump_lsp_db(const World& world) {
  std::ostringstream out;
  for (const auto& [id, lsp] : world.optical_state.lsps) {
    out << id << " | ";
    for (std::size_t i = 0; i < lsp.route.size(); ++i) out << (i ? "," : "") << lsp.route[i];
    out << " | [" << lsp.slot_start << "," << lsp.slot_start + lsp.slot_width << ") | "
        << lsp_state_name(lsp.state) << " | " << lsp.owner_service << "\n";
  }
  return out.str();
}

}  // namespace orch5g::optical
