#include "orch5g/packet_ctrl.hpp"

#include <algorithm>
#include <sstream>

#include "orch5g/errors.hpp"
#include "orch5g/pathing.hpp"
#include "orch5g/world.hpp"

namespace orch5g::packet {

const char* path_state_name(PathState s) {
  switch (s) {
    case PathState::Active: return "active";
    case PathState::Failed: return "failed";
    case PathState::Removed: return "removed";
  }
  return "?";
}

std::string Action::to_string() const {
  switch (kind) {
    case ActionKind::PushLabel: return "push(" + std::to_string(label) + ")";
    case ActionKind::PopLabel: return "pop";
    case ActionKind::Forward: return "fwd(" + out_link + ")";
  }
  return "?";
}

std::string Match::to_string() const {
  return "in=" + in_link + ",label=" + (label ? std::to_string(*label) : "-");
}

namespace {

// The domains every node of the path belongs to; the label must be unique in
// all of them.
std::set<Id> touched_domains(const World& world, const std::vector<Id>& links) {
  std::set<Id> domains;
  for (const Id& lid : links) {
    const Link& link = world.topo.link(lid);
    domains.insert(world.topo.node(link.src).domain_id);
    domains.insert(world.topo.node(link.dst).domain_id);
  }
  return domains;
}

std::int64_t allocate_label(World& world, const std::set<Id>& domains) {
  std::int64_t label = 0;
  auto taken = [&](std::int64_t n) {
    for (const Id& d : domains) {
      auto it = world.packet_state.labels.find(d);
      if (it != world.packet_state.labels.end() && it->second.count(n)) return true;
    }
    return false;
  };
  while (taken(label)) ++label;
  for (const Id& d : domains) world.packet_state.labels[d].insert(label);
  return label;
}

void check_contiguous(const World& world, const std::vector<Id>& links) {
  if (links.empty())
    throw OrchError(ErrorKind::ConsistencyError, "path has no links");
  std::set<Id> seen;
  for (std::size_t i = 0; i < links.size(); ++i) {
    const Link& link = world.topo.link(links[i]);
    if (!link.is_packet())
      throw OrchError(ErrorKind::NotPacketLink, "link '" + links[i] + "' is not a packet link");
    if (!link.up)
      throw OrchError(ErrorKind::ConsistencyError, "link '" + links[i] + "' is down");
    if (!seen.insert(links[i]).second)
      throw OrchError(ErrorKind::ConsistencyError, "path revisits link '" + links[i] + "'");
    if (i > 0 && world.topo.link(links[i - 1]).dst != link.src)
      throw OrchError(ErrorKind::ConsistencyError,
                      "links '" + links[i - 1] + "' and '" + links[i] + "' are not contiguous");
  }
}

void install_entry(World& world, PacketPath& path, const Id& node, Match match,
                   std::vector<Action> actions) {
  auto& index = world.packet_state.match_index[node];
  if (index.count(match))
    throw OrchError(ErrorKind::DuplicateMatch,
                    "node '" + node + "' already matches " + match.to_string());
  FlowEntry entry;
  entry.id = next_id(world, "fe");
  entry.node_id = node;
  entry.match = match;
  entry.actions = std::move(actions);
  entry.owner_service = path.owner_service;
  index[match] = entry.id;
  path.entries.push_back(entry.id);
  world.packet_state.entries[entry.id] = std::move(entry);
}

}  // namespace

std::vector<Id> compute_packet_path(const World& world, const Id& src_node, const Id& dst_node,
                                    BwKbps bw_kbps, std::optional<LatencyNs> max_latency,
                                    const std::set<Id>& avoid_links,
                                    std::optional<std::set<Id>> domain_scope) {
  if (src_node == dst_node)
    throw OrchError(ErrorKind::ConsistencyError, "path endpoints are the same node");
  const Node& src = world.topo.node(src_node);
  const Node& dst = world.topo.node(dst_node);
  std::set<Id> scope;
  if (domain_scope) {
    scope = *domain_scope;
  } else {
    if (src.domain_id != dst.domain_id)
      throw OrchError(ErrorKind::ConsistencyError,
                      "endpoints in different domains; pass an explicit domain scope");
    scope = {src.domain_id};
  }

  auto collect = [&](bool capacity_filter) {
    std::vector<pathing::Edge> edges;
    for (const auto& [id, link] : world.topo.links) {
      if (!link.is_packet() || !link.up || avoid_links.count(id)) continue;
      if (!scope.count(world.topo.node(link.src).domain_id) ||
          !scope.count(world.topo.node(link.dst).domain_id))
        continue;
      if (capacity_filter && link.free_kbps() < bw_kbps) continue;
      edges.push_back({id, link.src, link.dst, link.latency_ns()});
    }
    return edges;
  };

  auto edges = collect(true);
  auto best = pathing::min_latency_path(edges, src_node, dst_node);
  if (best && (!max_latency || best->total_ns <= *max_latency)) {
    std::vector<Id> links;
    for (int e : best->edges) links.push_back(edges[e].id);
    return links;
  }

  // Distinguish why nothing qualified: no connectivity at all, none with
  // enough free capacity, or feasible-capacity paths all over the bound.
  auto relaxed = collect(false);
  if (!pathing::min_latency_path(relaxed, src_node, dst_node))
    throw OrchError(ErrorKind::NoFeasiblePath,
                    src_node + " -> " + dst_node + ": disconnected");
  if (!best)
    throw OrchError(ErrorKind::NoFeasiblePath,
                    src_node + " -> " + dst_node + ": capacity-infeasible for " +
                        format_mbps(bw_kbps) + " mbps");
  throw OrchError(ErrorKind::NoFeasiblePath,
                  src_node + " -> " + dst_node + ": latency-infeasible, best " +
                      format_ms(best->total_ns) + " ms exceeds " + format_ms(*max_latency) +
                      " ms");
}

const PacketPath& program_path(World& world, const std::vector<Id>& links, BwKbps bw_kbps,
                               const Id& owner_service, bool reserve_bw) {
  check_contiguous(world, links);
  if (reserve_bw) {
    // Check the whole path before touching anything so a late-link failure
    // leaves no partial reservation.
    for (const Id& lid : links) {
      const Link& link = world.topo.link(lid);
      if (link.free_kbps() < bw_kbps)
        throw OrchError(ErrorKind::CapacityExceeded,
                        "link '" + lid + "': requested " + format_mbps(bw_kbps) +
                            " mbps, free " + format_mbps(link.free_kbps()) + " mbps");
    }
  }

  PacketPath path;
  path.id = next_id(world, "pth");
  path.links = links;
  path.bw_kbps = bw_kbps;
  path.owner_service = owner_service;
  path.reserves_bw = reserve_bw;
  std::set<Id> domains = touched_domains(world, links);
  path.label = allocate_label(world, domains);

  if (reserve_bw)
    for (const Id& lid : links) reserve_packet_bw(world.topo, lid, bw_kbps, path.id);

  // Ingress classifies on the allocated label (the service key), pushes and
  // forwards; transit hops match (in-link, label); egress pops.
  const Id ingress = world.topo.link(links.front()).src;
  const Id egress = world.topo.link(links.back()).dst;
  install_entry(world, path, ingress, {links.front(), path.label},
                {{ActionKind::PushLabel, path.label, ""}, {ActionKind::Forward, 0, links.front()}});
  for (std::size_t k = 1; k < links.size(); ++k)
    install_entry(world, path, world.topo.link(links[k]).src, {links[k - 1], path.label},
                  {{ActionKind::Forward, 0, links[k]}});
  install_entry(world, path, egress, {links.back(), path.label}, {{ActionKind::PopLabel, 0, ""}});

  Id id = path.id;
  world.packet_state.paths[id] = std::move(path);
  return world.packet_state.paths[id];
}

void unprogram_path(World& world, const Id& path_id) {
  auto it = world.packet_state.paths.find(path_id);
  if (it == world.packet_state.paths.end() || it->second.state == PathState::Removed)
    throw OrchError(ErrorKind::UnknownPath, "packet path '" + path_id + "' does not exist");
  PacketPath& path = it->second;

  for (const Id& eid : path.entries) {
    auto eit = world.packet_state.entries.find(eid);
    if (eit == world.packet_state.entries.end()) continue;
    world.packet_state.match_index[eit->second.node_id].erase(eit->second.match);
    world.packet_state.entries.erase(eit);
  }
  path.entries.clear();

  if (path.reserves_bw)
    for (const Id& lid : path.links) release_packet_bw(world.topo, lid, path.bw_kbps, path.id);

  for (const Id& d : touched_domains(world, path.links))
    world.packet_state.labels[d].erase(path.label);
  path.state = PathState::Removed;
}

std::vector<Id> mark_link_down(World& world, const Id& link_id) {
  set_link_down(world.topo, link_id);
  std::vector<Id> affected;
  for (auto& [id, path] : world.packet_state.paths) {
    if (path.state != PathState::Active) continue;
    if (std::find(path.links.begin(), path.links.end(), link_id) != path.links.end()) {
      path.state = PathState::Failed;
      affected.push_back(id);
    }
  }
  return affected;
}

std::string dump_flow_tables(const World& world) {
  std::ostringstream out;
  for (const auto& [node, index] : world.packet_state.match_index) {
    for (const auto& [match, eid] : index) {
      const FlowEntry& e = world.packet_state.entries.at(eid);
      out << node << " | " << match.to_string() << " | ";
      for (std::size_t i = 0; i < e.actions.size(); ++i)
        out << (i ? "," : "") << e.actions[i].to_string();
      out << " | " << e.owner_service << "\n";
    }
  }
  return out.str();
}

}  // namespace orch5g::packet
