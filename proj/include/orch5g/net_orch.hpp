#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "orch5g/model.hpp"

namespace orch5g {

struct World;

namespace netorch {

enum class AbstractLinkKind { InterDomain, IntraReach };

struct AbstractLink {
  Id id;
  Id src;
  Id dst;
  AbstractLinkKind kind = AbstractLinkKind::IntraReach;
  Id domain_id;  // IntraReach only
  BwKbps max_free_bw_kbps = 0;
  LatencyNs min_latency_ns = 0;
};

struct AbstractTopology {
  std::set<Id> nodes;  // domain border nodes + service endpoints
  std::vector<AbstractLink> links;
};

struct E2ERequest {
  Id id;
  Id tenant_id;
  Id src_node;
  Id dst_node;
  BwKbps bw_kbps = 0;
  std::optional<LatencyNs> max_latency_ns;
  std::optional<Id> slice_id;
};

enum class RealizedKind { PacketPath, Lsp, GroomedOnto };

struct Segment {
  Id domain_id;
  ControllerKind controller = ControllerKind::SdnPacket;
  Id src;
  Id dst;
  RealizedKind realized = RealizedKind::PacketPath;
  Id realized_id;  // packet path id, or LSP id for Lsp/GroomedOnto
};

struct SegmentPlan {
  std::vector<Segment> segments;
  // Inter-domain links joining consecutive segments; their bandwidth is
  // reserved directly under the service id (no flow state at a hand-off).
  std::vector<Id> stitch_links;
  LatencyNs total_latency_ns = 0;
};

struct Service {
  Id id;
  E2ERequest request;
  SegmentPlan plan;
  std::optional<Id> lsp_id;  // the LSP this service rides, new or groomed
};

struct Slice {
  Id id;
  Id tenant_id;
  std::set<Id> member_nodes;
  std::map<Id, BwKbps> carve_kbps;  // link -> bandwidth carved out
  std::map<Id, BwKbps> used_kbps;   // link -> bandwidth claimed by services
  std::set<Id> services;
};

struct RecoverOutcome {
  bool recovered = false;
  std::string detail;
};

struct State {
  std::map<Id, Service> services;
  std::map<Id, Slice> slices;
  std::map<Id, BwKbps> groomed_kbps;  // lsp id -> packet load groomed onto it
  std::set<Id> orch_owned_lsps;       // LSPs this orchestrator created
};

// Domain abstraction: border nodes and service endpoints connected by
// inter-domain links (verbatim) and per-domain reachability links annotated
// with widest-path free bandwidth and minimum latency. Scoped to a slice it
// shows only member nodes and remaining carved capacity.
AbstractTopology build_abstract_topology(const World& world,
                                         const std::optional<Id>& slice_scope = std::nullopt);

// End-to-end provisioning across domains. Picks the minimum-latency feasible
// path over packet links, existing groomable LSPs and candidate new LSPs,
// then realizes it: packet segments are programmed per domain, hand-off links
// reserved, optical crossings groomed onto an existing LSP with free capacity
// or carried by a newly signaled one. All-or-nothing.
const Service& provision_e2e(World& world, const E2ERequest& request);

void teardown_e2e(World& world, const Id& service_id);

const Slice& create_slice(World& world, const Id& tenant_id, const std::set<Id>& member_nodes,
                          const std::map<Id, BwKbps>& carve_kbps, const Id& slice_id = "");

void delete_slice(World& world, const Id& slice_id);

/// Recovery after a link failure: optical restoration first (services riding a
// restored LSP are remapped in place), then every service still broken is
// re-provisioned end-to-end avoiding down links, in service-id order.
// Unrecoverable services release what survives and are removed.
std::map<Id, RecoverOutcome> recover_services(World& world, const Id& failed_link_id);

std::string dump_plan(const World& world, const Id& service_id);

}  // namespace netorch
}  // namespace orch5g
