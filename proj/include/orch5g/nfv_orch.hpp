#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "orch5g/model.hpp"

namespace orch5g {

struct World;

namespace nfv {

enum class VnfRole { Mme, Sgw, Pgw, RanStack, Firewall, LoadBalancer, Other };

const char* role_name(VnfRole r);

struct VnfDescriptor {
  Id type_id;
  VnfRole role = VnfRole::Other;
  std::string role_tag;  // Other only
  std::int64_t cpu = 0;
  std::int64_t ram_mb = 0;
  std::int64_t disk_gb = 0;
  Id image_id;
  std::vector<std::string> config_schema;
};

enum class VnfState { Created, Configured, Running, Terminated };

const char* vnf_state_name(VnfState s);

struct VnfInstance {
  Id id;
  Id type_id;
  Id vm_id;
  VnfState state = VnfState::Created;
  std::map<std::string, std::string> config;
};

struct GraphNode {
  Id id;
  bool is_vnf = false;
  Id vnf_type;  // VnfRef
  Id endpoint;  // Endpoint: a topology node id
};

struct GraphEdge {
  Id id;
  Id from;
  Id to;
  BwKbps bw_kbps = 0;
  std::optional<LatencyNs> max_latency_ns;
};

struct ForwardingGraph {
  Id id;
  Id tenant_id;
  std::vector<GraphNode> nodes;
  std::vector<GraphEdge> edges;
  std::map<Id, DcTier> placement_hints;  // graph node id -> tier
};

enum class EmbeddingState { Deployed, Degraded, Torn };

const char* embedding_state_name(EmbeddingState s);

struct GraphEmbedding {
  Id graph_id;
  std::map<Id, Id> placements;     // graph node id -> vnf instance id
  std::map<Id, Id> edge_services;  // graph edge id -> e2e service id
  EmbeddingState state = EmbeddingState::Deployed;
};

struct DeployedGraph {
  ForwardingGraph graph;
  GraphEmbedding embedding;
};

struct State {
  std::map<Id, VnfInstance> instances;
  std::map<Id, DeployedGraph> graphs;
};

const VnfInstance& instantiate_vnf(World& world, const Id& type_id,
                                   std::optional<DcTier> placement_hint = std::nullopt);

const VnfInstance& configure_vnf(World& world, const Id& instance_id,
                                 const std::map<std::string, std::string>& config);

const VnfInstance& start_vnf(World& world, const Id& instance_id);

void terminate_vnf(World& world, const Id& instance_id);

// Transactional joint deployment: place + instantiate + configure + start
// every VNF node (config auto-derived as peer.<edge-id> address tokens), then
// provision one e2e service per edge between the nodes' attach points.
// Any failure rolls everything back.
const GraphEmbedding& deploy_forwarding_graph(World& world, const ForwardingGraph& graph);

void teardown_forwarding_graph(World& world, const Id& graph_id);

// Migrates the backing VM, then re-provisions every incident graph edge to
// the new attach node; a connectivity failure reverts the whole move.
const GraphEmbedding& migrate_vnf(World& world, const Id& instance_id, const Id& target_dc);

// The topology node a graph node attaches to under the given embedding.
Id attach_node_of(const World& world, const ForwardingGraph& graph, const GraphEmbedding& emb,
                  const Id& graph_node_id);

std::string dump_embeddings(const World& world);

}  // namespace nfv
}  // namespace orch5g
