#include "orch5g/nfv_orch.hpp"

#include <algorithm>
#include <sstream>

#include "orch5g/cloud_orch.hpp"
#include "orch5g/errors.hpp"
#include "orch5g/failpoint.hpp"
#include "orch5g/net_orch.hpp"
#include "orch5g/world.hpp"

namespace orch5g::nfv {

const char* role_name(VnfRole r) {
  switch (r) {
    case VnfRole::Mme: return "mme";
    case VnfRole::Sgw: return "sgw";
    case VnfRole::Pgw: return "pgw";
    case VnfRole::RanStack: return "ran-stack";
    case VnfRole::Firewall: return "firewall";
    case VnfRole::LoadBalancer: return "load-balancer";
    case VnfRole::Other: return "other";
  }
  return "?";
}

const char* vnf_state_name(VnfState s) {
  switch (s) {
    case VnfState::Created: return "created";
    case VnfState::Configured: return "configured";
    case VnfState::Running: return "running";
    case VnfState::Terminated: return "terminated";
  }
  return "?";
}

const char* embedding_state_name(EmbeddingState s) {
  switch (s) {
    case EmbeddingState::Deployed: return "deployed";
    case EmbeddingState::Degraded: return "degraded";
    case EmbeddingState::Torn: return "torn";
  }
  return "?";
}

namespace {

VnfInstance& instance_mut(World& world, const Id& instance_id) {
  auto it = world.nfv_state.instances.find(instance_id);
  if (it == world.nfv_state.instances.end())
    throw OrchError(ErrorKind::UnknownVnf, "VNF instance '" + instance_id + "' does not exist");
  return it->second;
}

const VnfDescriptor& descriptor(const World& world, const Id& type_id) {
  auto it = world.vnf_catalog.find(type_id);
  if (it == world.vnf_catalog.end())
    throw OrchError(ErrorKind::UnknownType, "VNF type '" + type_id + "' is not in the catalog");
  return it->second;
}

void validate_graph(const World& world, const ForwardingGraph& graph) {
  if (!world.topo.tenants.count(graph.tenant_id))
    throw OrchError(ErrorKind::UnknownTenant, "tenant '" + graph.tenant_id + "' does not exist");
  if (graph.nodes.empty())
    throw OrchError(ErrorKind::ConsistencyError, "forwarding graph has no nodes");
  std::set<Id> node_ids;
  for (const GraphNode& n : graph.nodes) {
    if (!node_ids.insert(n.id).second)
      throw OrchError(ErrorKind::ConsistencyError, "duplicate graph node '" + n.id + "'");
    if (n.is_vnf)
      descriptor(world, n.vnf_type);
    else
      world.topo.node(n.endpoint);
  }
  std::map<Id, std::set<Id>> adj;
  for (const GraphEdge& e : graph.edges) {
    if (!node_ids.count(e.from) || !node_ids.count(e.to))
      throw OrchError(ErrorKind::ReferenceError,
                      "edge '" + e.id + "' references an undeclared graph node");
    adj[e.from].insert(e.to);
    adj[e.to].insert(e.from);
  }
  // Connectivity over the undirected edge relation.
  std::set<Id> seen{graph.nodes.front().id};
  std::vector<Id> frontier{graph.nodes.front().id};
  while (!frontier.empty()) {
    Id n = frontier.back();
    frontier.pop_back();
    for (const Id& m : adj[n])
      if (seen.insert(m).second) frontier.push_back(m);
  }
  if (seen.size() != node_ids.size())
    throw OrchError(ErrorKind::ConsistencyError, "forwarding graph is not connected");
}

std::string peer_token(const ForwardingGraph& graph, const std::map<Id, Id>& placements,
                       const Id& graph_node_id) {
  for (const GraphNode& n : graph.nodes) {
    if (n.id != graph_node_id) continue;
    if (n.is_vnf) return "vnf:" + placements.at(n.id);
    return "node:" + n.endpoint;
  }
  throw OrchError(ErrorKind::ReferenceError, "graph node '" + graph_node_id + "' not declared");
}

}  // namespace

const VnfInstance& instantiate_vnf(World& world, const Id& type_id,
                                   std::optional<DcTier> placement_hint) {
  const VnfDescriptor& desc = descriptor(world, type_id);
  cloud::VmSpec spec{desc.cpu, desc.ram_mb, desc.disk_gb, desc.image_id, placement_hint};
  const cloud::Vm& vm = cloud::create_vm(world, spec);

  VnfInstance inst;
  inst.id = next_id(world, "vnf");
  inst.type_id = type_id;
  inst.vm_id = vm.id;
  inst.state = VnfState::Created;
  Id id = inst.id;
  world.nfv_state.instances[id] = std::move(inst);
  return world.nfv_state.instances[id];
}

const VnfInstance& configure_vnf(World& world, const Id& instance_id,
                                 const std::map<std::string, std::string>& config) {
  VnfInstance& inst = instance_mut(world, instance_id);
  if (inst.state != VnfState::Created)
    throw OrchError(ErrorKind::InvalidTransition,
                    std::string("configure from state ") + vnf_state_name(inst.state));
  for (const std::string& key : descriptor(world, inst.type_id).config_schema)
    if (!config.count(key))
      throw OrchError(ErrorKind::MissingConfigKey, "required config key '" + key + "' missing");
  inst.config = config;
  inst.state = VnfState::Configured;
  return inst;
}

const VnfInstance& start_vnf(World& world, const Id& instance_id) {
  VnfInstance& inst = instance_mut(world, instance_id);
  if (inst.state != VnfState::Configured)
    throw OrchError(ErrorKind::InvalidTransition,
                    std::string("start from state ") + vnf_state_name(inst.state));
  inst.state = VnfState::Running;
  return inst;
}

void terminate_vnf(World& world, const Id& instance_id) {
  VnfInstance& inst = instance_mut(world, instance_id);
  if (inst.state == VnfState::Terminated)
    throw OrchError(ErrorKind::InvalidTransition, "instance already terminated");
  inst.state = VnfState::Terminated;
  auto vm = world.cloud_state.vms.find(inst.vm_id);
  if (vm != world.cloud_state.vms.end() && vm->second.state != cloud::VmState::Deleted)
    cloud::delete_vm(world, inst.vm_id);
}

Id attach_node_of(const World& world, const ForwardingGraph& graph, const GraphEmbedding& emb,
                  const Id& graph_node_id) {
  for (const GraphNode& n : graph.nodes) {
    if (n.id != graph_node_id) continue;
    if (!n.is_vnf) return n.endpoint;
    const auto& vm = world.cloud_state.vms.at(world.nfv_state.instances.at(emb.placements.at(n.id)).vm_id);
    return world.topo.dc(vm.dc_id).attach_node;
  }
  throw OrchError(ErrorKind::ReferenceError, "graph node '" + graph_node_id + "' not declared");
}

const GraphEmbedding& deploy_forwarding_graph(World& world, const ForwardingGraph& graph_in) {
  ForwardingGraph graph = graph_in;
  if (graph.id.empty()) graph.id = next_id(world, "gr");
  if (world.nfv_state.graphs.count(graph.id))
    throw OrchError(ErrorKind::ConsistencyError, "graph '" + graph.id + "' already deployed");
  validate_graph(world, graph);

  TxGuard tx(world);
  GraphEmbedding emb;
  emb.graph_id = graph.id;
  try {
    // Place and boot every VNF first so peer config can reference them all.
    for (const GraphNode& n : graph.nodes) {
      if (!n.is_vnf) continue;
      failpoint::hit("deploy.place." + n.id);
      std::optional<DcTier> hint;
      auto h = graph.placement_hints.find(n.id);
      if (h != graph.placement_hints.end()) hint = h->second;
      emb.placements[n.id] = instantiate_vnf(world, n.vnf_type, hint).id;
    }
    for (const GraphNode& n : graph.nodes) {
      if (!n.is_vnf) continue;
      failpoint::hit("deploy.configure." + n.id);
      std::map<std::string, std::string> config;
      for (const GraphEdge& e : graph.edges) {
        if (e.from == n.id) config["peer." + e.id] = peer_token(graph, emb.placements, e.to);
        if (e.to == n.id) config["peer." + e.id] = peer_token(graph, emb.placements, e.from);
      }
      configure_vnf(world, emb.placements[n.id], config);
      start_vnf(world, emb.placements[n.id]);
    }
  } catch (const OrchError& e) {
    if (e.kind() == ErrorKind::NoCapacity || e.kind() == ErrorKind::ImageUnavailable)
      throw OrchError(ErrorKind::PlacementFailed, std::string("graph '") + graph.id + "': " +
                                                      e.what());
    throw;
  }

  for (const GraphEdge& e : graph.edges) {
    failpoint::hit("deploy.edge." + e.id);
    netorch::E2ERequest req;
    req.tenant_id = graph.tenant_id;
    req.src_node = attach_node_of(world, graph, emb, e.from);
    req.dst_node = attach_node_of(world, graph, emb, e.to);
    req.bw_kbps = e.bw_kbps;
    req.max_latency_ns = e.max_latency_ns;
    try {
      emb.edge_services[e.id] = netorch::provision_e2e(world, req).id;
    } catch (const OrchError& err) {
      if (err.kind() == ErrorKind::Injected) throw;
      throw OrchError(ErrorKind::ConnectivityFailed,
                      "edge '" + e.id + "': " + err.what());
    }
  }

  emb.state = EmbeddingState::Deployed;
  Id gid = graph.id;
  world.nfv_state.graphs[gid] = {std::move(graph), std::move(emb)};
  tx.commit();
  return world.nfv_state.graphs[gid].embedding;
}

void teardown_forwarding_graph(World& world, const Id& graph_id) {
  auto it = world.nfv_state.graphs.find(graph_id);
  if (it == world.nfv_state.graphs.end() || it->second.embedding.state == EmbeddingState::Torn)
    throw OrchError(ErrorKind::UnknownGraph, "graph '" + graph_id + "' is not deployed");
  DeployedGraph& dg = it->second;

  TxGuard tx(world);
  for (const auto& [edge_id, service_id] : dg.embedding.edge_services)
    netorch::teardown_e2e(world, service_id);
  dg.embedding.edge_services.clear();
  for (const auto& [node_id, instance_id] : dg.embedding.placements)
    terminate_vnf(world, instance_id);
  dg.embedding.state = EmbeddingState::Torn;
  tx.commit();
}

const GraphEmbedding& migrate_vnf(World& world, const Id& instance_id, const Id& target_dc) {
  const VnfInstance& inst = instance_mut(world, instance_id);
  if (inst.state != VnfState::Running)
    throw OrchError(ErrorKind::InvalidTransition,
                    std::string("migrate from state ") + vnf_state_name(inst.state));

  DeployedGraph* dg = nullptr;
  Id graph_node;
  for (auto& [gid, candidate] : world.nfv_state.graphs) {
    if (candidate.embedding.state != EmbeddingState::Deployed) continue;
    for (const auto& [node_id, iid] : candidate.embedding.placements)
      if (iid == instance_id) {
        dg = &candidate;
        graph_node = node_id;
      }
  }
  if (!dg)
    throw OrchError(ErrorKind::ConsistencyError,
                    "instance '" + instance_id + "' is not part of a deployed embedding");

  TxGuard tx(world);
  try {
    failpoint::hit("migrate.vm");
    cloud::migrate_vm(world, inst.vm_id, target_dc);

    // Re-provision every incident edge against the new attach node. The old
    // services go first so their resources are reusable by the new plans.
    for (const GraphEdge& e : dg->graph.edges) {
      if (e.from != graph_node && e.to != graph_node) continue;
      failpoint::hit("migrate.teardown." + e.id);
      netorch::teardown_e2e(world, dg->embedding.edge_services.at(e.id));
    }
    for (const GraphEdge& e : dg->graph.edges) {
      if (e.from != graph_node && e.to != graph_node) continue;
      failpoint::hit("migrate.edge." + e.id);
      netorch::E2ERequest req;
      req.tenant_id = dg->graph.tenant_id;
      req.src_node = attach_node_of(world, dg->graph, dg->embedding, e.from);
      req.dst_node = attach_node_of(world, dg->graph, dg->embedding, e.to);
      req.bw_kbps = e.bw_kbps;
      req.max_latency_ns = e.max_latency_ns;
      dg->embedding.edge_services[e.id] = netorch::provision_e2e(world, req).id;
    }
  } catch (const OrchError& e) {
    if (e.kind() == ErrorKind::NoCapacity || e.kind() == ErrorKind::ImageUnavailable ||
        e.kind() == ErrorKind::Injected)
      throw;
    throw OrchError(ErrorKind::ConnectivityFailed,
                    "migrating '" + instance_id + "': " + e.what());
  }
  tx.commit();
  return dg->embedding;
}

std::string dump_embeddings(const World& world) {
  std::ostringstream out;
  for (const auto& [gid, dg] : world.nfv_state.graphs) {
    for (const auto& [node_id, iid] : dg.embedding.placements) {
      const VnfInstance& inst = world.nfv_state.instances.at(iid);
      const cloud::Vm& vm = world.cloud_state.vms.at(inst.vm_id);
      out << gid << " | node " << node_id << " | " << iid << " @ " << vm.dc_id << " | "
          << vnf_state_name(inst.state) << "\n";
    }
    for (const auto& [edge_id, sid] : dg.embedding.edge_services)
      out << gid << " | edge " << edge_id << " | " << sid << "\n";
    out << gid << " | state | " << embedding_state_name(dg.embedding.state) << "\n";
  }
  return out.str();
}

}  // namespace orch5g::nfv
