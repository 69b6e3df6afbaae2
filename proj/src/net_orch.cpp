#include "orch5g/net_orch.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "orch5g/errors.hpp"
#include "orch5g/failpoint.hpp"
#include "orch5g/optical_ctrl.hpp"
#include "orch5g/packet_ctrl.hpp"
#include "orch5g/pathing.hpp"
#include "orch5g/world.hpp"

namespace orch5g::netorch {

namespace {

// One edge of the flattened provisioning graph: a physical packet link, an
// existing LSP with groomable headroom, or a not-yet-signaled LSP between a
// ROADM pair that the PCE could establish right now.
struct FlatEdge {
  enum Kind { Phys, Groom, NewLsp } kind = Phys;
  Id ref;  // link id or LSP id (empty for NewLsp)
  Id src;
  Id dst;
};

BwKbps lsp_free_kbps(const World& world, const Id& lsp_id) {
  const auto& lsp = world.optical_state.lsps.at(lsp_id);
  auto it = world.orch_state.groomed_kbps.find(lsp_id);
  BwKbps load = it == world.orch_state.groomed_kbps.end() ? 0 : it->second;
  return lsp.capacity_kbps - load;
}

int lsp_width_for(const World& world, BwKbps bw_kbps) {
  int width = bw_kbps > 0 ? static_cast<int>(ceil_div(bw_kbps, world.options.kbps_per_slot)) : 1;
  return std::max(width, world.options.min_lsp_width);
}

// Flattened graph over the whole substrate. Edge ids get a type prefix so
// the deterministic tie-break never confuses a link with a tunnel.
std::pair<std::vector<pathing::Edge>, std::vector<FlatEdge>> flat_graph(const World& world,
                                                                        BwKbps bw_kbps) {
  std::vector<pathing::Edge> edges;
  std::vector<FlatEdge> info;
  for (const auto& [id, link] : world.topo.links) {
    if (!link.is_packet() || !link.up || link.free_kbps() < bw_kbps) continue;
    edges.push_back({"L|" + id, link.src, link.dst, link.latency_ns()});
    info.push_back({FlatEdge::Phys, id, link.src, link.dst});
  }
  for (const auto& [id, lsp] : world.optical_state.lsps) {
    if (lsp.state != optical::LspState::Active || lsp_free_kbps(world, id) < bw_kbps) continue;
    Id s = lsp.src_roadm(world), d = lsp.dst_roadm(world);
    edges.push_back({"G|" + id, s, d, lsp.route_latency(world)});
    info.push_back({FlatEdge::Groom, id, s, d});
  }
  int width = lsp_width_for(world, bw_kbps);
  std::vector<Id> roadms;
  for (const auto& [id, node] : world.topo.nodes)
    if (node.kind == NodeKind::Roadm) roadms.push_back(id);
  for (const Id& s : roadms)
    for (const Id& d : roadms) {
      if (s == d) continue;
      try {
        auto rsa = optical::rsa_compute(world, s, d, width);
        LatencyNs lat = 0;
        for (const Id& lid : rsa.route) lat += world.topo.link(lid).latency_ns();
        edges.push_back({"N|" + s + "|" + d, s, d, lat});
        info.push_back({FlatEdge::NewLsp, "", s, d});
      } catch (const OrchError&) {
        // no spectrum or no route between this pair right now
      }
    }
  return {std::move(edges), std::move(info)};
}

Segment make_segment(const World& world, const Id& src, const Id& dst, RealizedKind kind,
                     const Id& realized_id) {
  const Domain& domain = world.topo.domain_of_node(src);
  return {domain.id, domain.controller, src, dst, kind, realized_id};
}

void validate_request(const World& world, const E2ERequest& request) {
  if (!world.topo.tenants.count(request.tenant_id))
    throw OrchError(ErrorKind::UnknownTenant, "tenant '" + request.tenant_id + "' does not exist");
  world.topo.node(request.src_node);
  world.topo.node(request.dst_node);
  if (request.bw_kbps < 0)
    throw OrchError(ErrorKind::ConsistencyError, "negative bandwidth demand");
  if (request.slice_id) {
    auto it = world.orch_state.slices.find(*request.slice_id);
    if (it == world.orch_state.slices.end())
      throw OrchError(ErrorKind::UnknownSlice, "slice '" + *request.slice_id + "' does not exist");
    const Slice& slice = it->second;
    if (slice.tenant_id != request.tenant_id)
      throw OrchError(ErrorKind::ConsistencyError,
                      "request tenant does not own slice '" + slice.id + "'");
    if (!slice.member_nodes.count(request.src_node) || !slice.member_nodes.count(request.dst_node))
      throw OrchError(ErrorKind::ConsistencyError,
                      "request endpoints are not members of slice '" + slice.id + "'");
  }
}

// Realizes one chosen flat path. Packet links are grouped into per-domain
// runs (one programmed path each); inter-domain links become direct
// reservations stitching consecutive segments; optical edges either groom
// onto the referenced LSP or signal a new one.
void realize(World& world, Service& svc, const std::vector<FlatEdge>& info,
             const std::vector<int>& chosen) {
  const E2ERequest& req = svc.request;
  bool sliced = req.slice_id.has_value();
  Slice* slice = sliced ? &world.orch_state.slices.at(*req.slice_id) : nullptr;
  LatencyNs total = 0;

  std::vector<Id> run;
  auto flush_run = [&]() {
    if (run.empty()) return;
    failpoint::hit("provision.path");
    const auto& path = packet::program_path(world, run, req.bw_kbps, svc.id, !sliced);
    for (const Id& lid : run) total += world.topo.link(lid).latency_ns();
    svc.plan.segments.push_back(make_segment(world, world.topo.link(run.front()).src,
                                             world.topo.link(run.back()).dst,
                                             RealizedKind::PacketPath, path.id));
    run.clear();
  };

  for (int idx : chosen) {
    const FlatEdge& fe = info[idx];
    if (fe.kind == FlatEdge::Phys) {
      const Link& link = world.topo.link(fe.ref);
      bool inter = world.topo.node(link.src).domain_id != world.topo.node(link.dst).domain_id;
      if (inter) {
        flush_run();
        failpoint::hit("provision.stitch");
        if (!sliced && req.bw_kbps > 0)
          reserve_packet_bw(world.topo, fe.ref, req.bw_kbps, svc.id);
        svc.plan.stitch_links.push_back(fe.ref);
        total += link.latency_ns();
      } else {
        run.push_back(fe.ref);
      }
      if (sliced) slice->used_kbps[fe.ref] += req.bw_kbps;
      continue;
    }
    flush_run();
    if (fe.kind == FlatEdge::Groom) {
      failpoint::hit("provision.groom");
      const auto& lsp = world.optical_state.lsps.at(fe.ref);
      world.orch_state.groomed_kbps[fe.ref] += req.bw_kbps;
      svc.lsp_id = fe.ref;
      total += lsp.route_latency(world);
      svc.plan.segments.push_back(
          make_segment(world, fe.src, fe.dst, RealizedKind::GroomedOnto, fe.ref));
    } else {
      failpoint::hit("provision.lsp");
      auto rsa = optical::rsa_compute(world, fe.src, fe.dst, lsp_width_for(world, req.bw_kbps));
      const auto& lsp = optical::signal_lsp(world, rsa.route, rsa.slot_start,
                                            lsp_width_for(world, req.bw_kbps), svc.id);
      world.orch_state.groomed_kbps[lsp.id] = req.bw_kbps;
      world.orch_state.orch_owned_lsps.insert(lsp.id);
      svc.lsp_id = lsp.id;
      total += lsp.route_latency(world);
      svc.plan.segments.push_back(make_segment(world, fe.src, fe.dst, RealizedKind::Lsp, lsp.id));
    }
  }
  flush_run();
  svc.plan.total_latency_ns = total;

  if (sliced) slice->services.insert(svc.id);
}

void throw_no_sequence(const E2ERequest& req, const std::vector<pathing::Edge>& relaxed_edges,
                       const std::optional<pathing::Path>& best) {
  auto reachable = pathing::min_compact_path(relaxed_edges, req.src_node, req.dst_node);
  if (!reachable)
    throw OrchError(ErrorKind::NoDomainSequence,
                    req.src_node + " -> " + req.dst_node + ": disconnected");
  if (!best)
    throw OrchError(ErrorKind::NoDomainSequence,
                    req.src_node + " -> " + req.dst_node + ": no sequence with " +
                        format_mbps(req.bw_kbps) + " mbps available");
  throw OrchError(ErrorKind::NoDomainSequence,
                  req.src_node + " -> " + req.dst_node + ": best latency " +
                      format_ms(best->total_ns) + " ms exceeds " +
                      format_ms(*req.max_latency_ns) + " ms");
}

// Undo bookkeeping shared by teardown and recovery: releases everything the
// service holds, tolerating links that are currently down (their releases
// are queued by the core accounting).
void release_service(World& world, Service& svc) {
  bool sliced = svc.request.slice_id.has_value();
  Slice* slice = nullptr;
  if (sliced) {
    auto it = world.orch_state.slices.find(*svc.request.slice_id);
    if (it != world.orch_state.slices.end()) slice = &it->second;
  }

  for (const Segment& seg : svc.plan.segments) {
    if (seg.realized == RealizedKind::PacketPath) {
      failpoint::hit("teardown.path");
      const auto& path = world.packet_state.paths.at(seg.realized_id);
      if (slice)
        for (const Id& lid : path.links) slice->used_kbps[lid] -= svc.request.bw_kbps;
      if (path.state != packet::PathState::Removed) packet::unprogram_path(world, seg.realized_id);
    } else {
      failpoint::hit("teardown.lsp");
      BwKbps& load = world.orch_state.groomed_kbps[seg.realized_id];
      load -= svc.request.bw_kbps;
      if (load <= 0) {
        world.orch_state.groomed_kbps.erase(seg.realized_id);
        bool owned = world.orch_state.orch_owned_lsps.count(seg.realized_id) > 0;
        if (owned && !world.options.retain_idle_tunnels) {
          const auto& lsp = world.optical_state.lsps.at(seg.realized_id);
          if (lsp.state == optical::LspState::Active || lsp.state == optical::LspState::Failed)
            optical::teardown_lsp(world, seg.realized_id);
          world.orch_state.orch_owned_lsps.erase(seg.realized_id);
        }
      }
    }
  }
  for (const Id& lid : svc.plan.stitch_links) {
    failpoint::hit("teardown.stitch");
    if (slice)
      slice->used_kbps[lid] -= svc.request.bw_kbps;
    else if (svc.request.bw_kbps > 0)
      release_packet_bw(world.topo, lid, svc.request.bw_kbps, svc.id);
  }
  if (slice) {
    std::erase_if(slice->used_kbps, [](const auto& kv) { return kv.second <= 0; });
    slice->services.erase(svc.id);
  }
}

std::vector<pathing::Edge> slice_edges(const World& world, const Slice& slice, BwKbps bw_kbps,
                                       bool capacity_filter) {
  std::vector<pathing::Edge> edges;
  for (const auto& [lid, carved] : slice.carve_kbps) {
    const Link& link = world.topo.link(lid);
    if (!link.up) continue;
    auto used_it = slice.used_kbps.find(lid);
    BwKbps used = used_it == slice.used_kbps.end() ? 0 : used_it->second;
    if (capacity_filter && carved - used < bw_kbps) continue;
    edges.push_back({"L|" + lid, link.src, link.dst, link.latency_ns()});
  }
  return edges;
}

}  // namespace

AbstractTopology build_abstract_topology(const World& world, const std::optional<Id>& slice_scope) {
  AbstractTopology out;

  if (slice_scope) {
    auto it = world.orch_state.slices.find(*slice_scope);
    if (it == world.orch_state.slices.end())
      throw OrchError(ErrorKind::UnknownSlice, "slice '" + *slice_scope + "' does not exist");
    const Slice& slice = it->second;
    out.nodes = slice.member_nodes;
    for (const auto& [lid, carved] : slice.carve_kbps) {
      const Link& link = world.topo.link(lid);
      auto used_it = slice.used_kbps.find(lid);
      BwKbps used = used_it == slice.used_kbps.end() ? 0 : used_it->second;
      out.links.push_back({lid, link.src, link.dst, AbstractLinkKind::IntraReach,
                           world.topo.node(link.src).domain_id, carved - used,
                           link.latency_ns()});
    }
    return out;
  }

  // Abstract nodes: every endpoint of an inter-domain link, plus the service
  // endpoints (eNBs and DC attach points).
  for (const auto& [lid, link] : world.topo.links) {
    if (link.scope != LinkScope::InterDomain) continue;
    out.nodes.insert(link.src);
    out.nodes.insert(link.dst);
  }
  for (const auto& [nid, node] : world.topo.nodes)
    if (node.kind == NodeKind::Enb) out.nodes.insert(nid);
  for (const auto& [did, dc] : world.topo.dcs) out.nodes.insert(dc.attach_node);

  for (const auto& [lid, link] : world.topo.links)
    if (link.scope == LinkScope::InterDomain && link.up)
      out.links.push_back({lid, link.src, link.dst, AbstractLinkKind::InterDomain, "",
                           link.free_kbps(), link.latency_ns()});

  for (const auto& [did, domain] : world.topo.domains) {
    std::vector<Id> members;
    for (const Id& nid : domain.node_ids)
      if (out.nodes.count(nid)) members.push_back(nid);

    if (domain.tech != DomainTech::Optical) {
      std::vector<pathing::Edge> edges;
      for (const auto& [lid, link] : world.topo.links) {
        if (!link.is_packet() || !link.up || link.scope != LinkScope::IntraDomain) continue;
        if (world.topo.node(link.src).domain_id != did) continue;
        edges.push_back({lid, link.src, link.dst, link.latency_ns()});
      }
      for (const Id& a : members)
        for (const Id& b : members) {
          if (a == b) continue;
          auto paths = pathing::all_simple_paths(edges, a, b);
          if (paths.empty()) continue;
          BwKbps widest = 0;
          LatencyNs min_lat = paths.front().total_ns;
          for (const auto& p : paths) {
            BwKbps bottleneck = std::numeric_limits<BwKbps>::max();
            for (int e : p.edges)
              bottleneck = std::min(bottleneck, world.topo.link(edges[e].id).free_kbps());
            widest = std::max(widest, bottleneck);
            min_lat = std::min(min_lat, p.total_ns);
          }
          out.links.push_back({"reach|" + did + "|" + a + "|" + b, a, b,
                               AbstractLinkKind::IntraReach, did, widest, min_lat});
        }
    } else {
      // Optical reachability: headroom on an existing tunnel or the capacity
      // a fresh minimum-width LSP would provide, whichever is larger.
      for (const Id& a : members)
        for (const Id& b : members) {
          if (a == b) continue;
          BwKbps best_bw = -1;
          std::optional<LatencyNs> best_lat;
          for (const auto& [lsp_id, lsp] : world.optical_state.lsps) {
            if (lsp.state != optical::LspState::Active) continue;
            if (lsp.src_roadm(world) != a || lsp.dst_roadm(world) != b) continue;
            best_bw = std::max(best_bw, lsp_free_kbps(world, lsp_id));
            LatencyNs lat = lsp.route_latency(world);
            if (!best_lat || lat < *best_lat) best_lat = lat;
          }
          try {
            auto rsa = optical::rsa_compute(world, a, b, world.options.min_lsp_width);
            LatencyNs lat = 0;
            for (const Id& lid : rsa.route) lat += world.topo.link(lid).latency_ns();
            best_bw = std::max(best_bw,
                               world.options.min_lsp_width * world.options.kbps_per_slot);
            if (!best_lat || lat < *best_lat) best_lat = lat;
          } catch (const OrchError&) {
          }
          if (best_bw >= 0 && best_lat)
            out.links.push_back({"reach|" + did + "|" + a + "|" + b, a, b,
                                 AbstractLinkKind::IntraReach, did, best_bw, *best_lat});
        }
    }
  }
  return out;
}

const Service& provision_e2e(World& world, const E2ERequest& request) {
  validate_request(world, request);

  Service svc;
  svc.request = request;
  svc.id = request.id.empty() ? next_id(world, "svc") : request.id;
  svc.request.id = svc.id;
  if (world.orch_state.services.count(svc.id))
    throw OrchError(ErrorKind::ConsistencyError, "service '" + svc.id + "' already exists");

  if (request.src_node == request.dst_node) {
    // Co-located endpoints (e.g. two VNFs in one DC) need no transport.
    Id id = svc.id;
    world.orch_state.services[id] = std::move(svc);
    if (request.slice_id)
      world.orch_state.slices.at(*request.slice_id).services.insert(id);
    return world.orch_state.services[id];
  }

  TxGuard tx(world);
  try {
    std::vector<pathing::Edge> edges;
    std::vector<FlatEdge> info;
    if (request.slice_id) {
      const Slice& slice = world.orch_state.slices.at(*request.slice_id);
      edges = slice_edges(world, slice, request.bw_kbps, true);
      for (const auto& e : edges) {
        const Link& link = world.topo.link(e.id.substr(2));
        info.push_back({FlatEdge::Phys, e.id.substr(2), link.src, link.dst});
      }
    } else {
      std::tie(edges, info) = flat_graph(world, request.bw_kbps);
    }

    auto best = pathing::min_compact_path(edges, request.src_node, request.dst_node);
    if (!best || (request.max_latency_ns && best->total_ns > *request.max_latency_ns)) {
      std::vector<pathing::Edge> relaxed;
      if (request.slice_id) {
        relaxed = slice_edges(world, world.orch_state.slices.at(*request.slice_id),
                              request.bw_kbps, false);
      } else {
        relaxed = flat_graph(world, 0).first;
      }
      throw_no_sequence(svc.request, relaxed, best);
    }

    realize(world, svc, info, best->edges);
    tx.commit();
  } catch (const OrchError& e) {
    if (e.kind() == ErrorKind::NoDomainSequence || e.kind() == ErrorKind::Injected ||
        e.kind() == ErrorKind::UnknownSlice)
      throw;
    throw OrchError(ErrorKind::SegmentProvisioningFailed,
                    "service '" + svc.id + "': " + e.what());
  }

  Id id = svc.id;
  world.orch_state.services[id] = std::move(svc);
  return world.orch_state.services[id];
}

void teardown_e2e(World& world, const Id& service_id) {
  auto it = world.orch_state.services.find(service_id);
  if (it == world.orch_state.services.end())
    throw OrchError(ErrorKind::UnknownService, "service '" + service_id + "' does not exist");
  release_service(world, it->second);
  world.orch_state.services.erase(it);
}

const Slice& create_slice(World& world, const Id& tenant_id, const std::set<Id>& member_nodes,
                          const std::map<Id, BwKbps>& carve_kbps, const Id& slice_id) {
  if (!world.topo.tenants.count(tenant_id))
    throw OrchError(ErrorKind::UnknownTenant, "tenant '" + tenant_id + "' does not exist");
  for (const Id& nid : member_nodes) world.topo.node(nid);

  Slice slice;
  slice.id = slice_id.empty() ? next_id(world, "slc") : slice_id;
  slice.tenant_id = tenant_id;
  slice.member_nodes = member_nodes;
  slice.carve_kbps = carve_kbps;
  if (world.orch_state.slices.count(slice.id))
    throw OrchError(ErrorKind::ConsistencyError, "slice '" + slice.id + "' already exists");

  TxGuard tx(world);
  for (const auto& [lid, kbps] : carve_kbps) {
    const Link& link = world.topo.link(lid);
    if (!link.is_packet())
      throw OrchError(ErrorKind::ConsistencyError,
                      "slice carve on non-packet link '" + lid + "'");
    if (kbps <= 0)
      throw OrchError(ErrorKind::ConsistencyError, "non-positive carve on '" + lid + "'");
    reserve_packet_bw(world.topo, lid, kbps, "slice:" + slice.id);
  }
  tx.commit();

  Id id = slice.id;
  world.orch_state.slices[id] = std::move(slice);
  return world.orch_state.slices[id];
}

void delete_slice(World& world, const Id& slice_id) {
  auto it = world.orch_state.slices.find(slice_id);
  if (it == world.orch_state.slices.end())
    throw OrchError(ErrorKind::UnknownSlice, "slice '" + slice_id + "' does not exist");
  if (!it->second.services.empty())
    throw OrchError(ErrorKind::SliceNotEmpty,
                    "slice '" + slice_id + "' still carries " +
                        std::to_string(it->second.services.size()) + " service(s)");
  for (const auto& [lid, kbps] : it->second.carve_kbps)
    release_packet_bw(world.topo, lid, kbps, "slice:" + slice_id);
  world.orch_state.slices.erase(it);
}

std::map<Id, RecoverOutcome> recover_services(World& world, const Id& failed_link_id) {
  std::map<Id, RecoverOutcome> outcomes;

  // Optical restoration first. Services riding a restored LSP are remapped in
  // place; their realization kind is unchanged, only the id moves.
  auto restored = optical::restore_lsps(world, failed_link_id);
  for (const auto& [old_id, outcome] : restored) {
    if (!outcome.restored) continue;
    auto load = world.orch_state.groomed_kbps.find(old_id);
    if (load != world.orch_state.groomed_kbps.end()) {
      world.orch_state.groomed_kbps[outcome.new_lsp_id] = load->second;
      world.orch_state.groomed_kbps.erase(load);
    }
    if (world.orch_state.orch_owned_lsps.erase(old_id))
      world.orch_state.orch_owned_lsps.insert(outcome.new_lsp_id);
    for (auto& [sid, svc] : world.orch_state.services) {
      if (svc.lsp_id != old_id) continue;
      svc.lsp_id = outcome.new_lsp_id;
      outcomes[sid] = {true, "tunnel restored as " + outcome.new_lsp_id};
      LatencyNs total = 0;
      for (auto& seg : svc.plan.segments) {
        if ((seg.realized == RealizedKind::Lsp || seg.realized == RealizedKind::GroomedOnto) &&
            seg.realized_id == old_id)
          seg.realized_id = outcome.new_lsp_id;
        if (seg.realized == RealizedKind::PacketPath) {
          for (const Id& lid : world.packet_state.paths.at(seg.realized_id).links)
            total += world.topo.link(lid).latency_ns();
        } else {
          total += world.optical_state.lsps.at(seg.realized_id).route_latency(world);
        }
      }
      for (const Id& lid : svc.plan.stitch_links) total += world.topo.link(lid).latency_ns();
      svc.plan.total_latency_ns = total;
    }
  }

  // A service needs end-to-end re-provisioning when its LSP was lost, any of
  // its packet paths failed, a stitch link is down, or the restored tunnel no
  // longer honors its latency bound.
  std::vector<Id> affected;
  for (const auto& [sid, svc] : world.orch_state.services) {
    bool broken = false;
    if (svc.lsp_id) {
      const auto& lsp = world.optical_state.lsps.at(*svc.lsp_id);
      if (lsp.state != optical::LspState::Active) broken = true;
    }
    for (const Segment& seg : svc.plan.segments)
      if (seg.realized == RealizedKind::PacketPath &&
          world.packet_state.paths.at(seg.realized_id).state == packet::PathState::Failed)
        broken = true;
    for (const Id& lid : svc.plan.stitch_links)
      if (!world.topo.link(lid).up) broken = true;
    if (!broken && svc.request.max_latency_ns &&
        svc.plan.total_latency_ns > *svc.request.max_latency_ns)
      broken = true;
    if (broken) affected.push_back(sid);
  }

  for (const Id& sid : affected) {
    Service& svc = world.orch_state.services.at(sid);
    E2ERequest request = svc.request;
    release_service(world, svc);
    world.orch_state.services.erase(sid);
    try {
      const Service& fresh = provision_e2e(world, request);
      outcomes[sid] = {true, "re-provisioned, latency " + format_ms(fresh.plan.total_latency_ns) +
                                 " ms"};
    } catch (const OrchError& e) {
      outcomes[sid] = {false, e.what()};
    }
  }
  return outcomes;
}

std::string dump_plan(const World& world, const Id& service_id) {
  auto it = world.orch_state.services.find(service_id);
  if (it == world.orch_state.services.end())
    throw OrchError(ErrorKind::UnknownService, "service '" + service_id + "' does not exist");
  const Service& svc = it->second;
  std::ostringstream out;
  for (std::size_t i = 0; i < svc.plan.segments.size(); ++i) {
    const Segment& s = svc.plan.segments[i];
    out << i << " | " << s.domain_id << " | " << controller_name(s.controller) << " | " << s.src
        << " -> " << s.dst << " | ";
    switch (s.realized) {
      case RealizedKind::PacketPath: out << "path " << s.realized_id; break;
      case RealizedKind::Lsp: out << "lsp " << s.realized_id; break;
      case RealizedKind::GroomedOnto: out << "groomed-onto " << s.realized_id; break;
    }
    out << "\n";
  }
  out << "stitches |";
  for (const Id& lid : svc.plan.stitch_links) out << " " << lid;
  out << "\ntotal | " << format_ms(svc.plan.total_latency_ns) << " ms\n";
  return out.str();
}

}  // namespace orch5g::netorch
