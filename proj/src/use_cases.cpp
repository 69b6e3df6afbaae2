#include "orch5g/use_cases.hpp"

#include <algorithm>

#include "orch5g/errors.hpp"
#include "orch5g/net_orch.hpp"
#include "orch5g/nfv_orch.hpp"
#include "orch5g/world.hpp"

namespace orch5g::uc {

namespace {

// Demands for the control edges of the EPC chain and the RanStack-to-SGW leg;
// these are emulator defaults, scenario links just need the headroom.
constexpr BwKbps kControlEdgeBwKbps = 10'000;  // 10 mbps
constexpr BwKbps kS1EdgeBwKbps = 50'000;       // 50 mbps

}  // namespace

const char* iface_name(IfaceKind k) {
  switch (k) {
    case IfaceKind::S1: return "S1";
    case IfaceKind::S11: return "S11";
    case IfaceKind::X2: return "X2";
  }
  return "?";
}

const char* bearer_state_name(BearerState s) {
  switch (s) {
    case BearerState::Active: return "active";
    case BearerState::Recovering: return "recovering";
    case BearerState::Released: return "released";
    case BearerState::Lost: return "lost";
  }
  return "?";
}

const char* boundary_name(SplitBoundary b) {
  switch (b) {
    case SplitBoundary::BelowPhy: return "below-phy";
    case SplitBoundary::PhyMac: return "phy-mac";
    case SplitBoundary::MacRlc: return "mac-rlc";
    case SplitBoundary::RlcPdcp: return "rlc-pdcp";
    case SplitBoundary::PdcpRrc: return "pdcp-rrc";
    case SplitBoundary::AboveRrc: return "above-rrc";
  }
  return "?";
}

int centralization_depth(SplitBoundary b) {
  switch (b) {
    case SplitBoundary::BelowPhy: return 5;
    case SplitBoundary::PhyMac: return 4;
    case SplitBoundary::MacRlc: return 3;
    case SplitBoundary::RlcPdcp: return 2;
    case SplitBoundary::PdcpRrc: return 1;
    case SplitBoundary::AboveRrc: return 0;
  }
  return 0;
}

std::set<std::string> central_layers(SplitBoundary b) {
  static const std::vector<std::string> stack{"PHY", "MAC", "RLC", "PDCP", "RRC"};
  std::set<std::string> central;
  for (int i = 5 - centralization_depth(b); i < 5; ++i) central.insert(stack[i]);
  return central;
}

std::set<std::string> local_layers(SplitBoundary b) {
  static const std::vector<std::string> stack{"PHY", "MAC", "RLC", "PDCP", "RRC"};
  std::set<std::string> local;
  for (int i = 0; i < 5 - centralization_depth(b); ++i) local.insert(stack[i]);
  return local;
}

namespace {

EpcState& epc_mut(World& world) {
  if (!world.uc_state.epc)
    throw OrchError(ErrorKind::ConsistencyError, "EPC has not been bootstrapped");
  return *world.uc_state.epc;
}

Id type_with_role(const World& world, nfv::VnfRole role) {
  for (const auto& [tid, desc] : world.vnf_catalog)
    if (desc.role == role) return tid;
  throw OrchError(ErrorKind::UnknownType,
                  std::string("no VNF type with role '") + nfv::role_name(role) +
                      "' in the catalog");
}

Id epc_tenant(const World& world) {
  return world.nfv_state.graphs.at(world.uc_state.epc->graph_id).graph.tenant_id;
}

}  // namespace

const EpcState& bootstrap_epc(World& world, const Id& tenant_id,
                              const std::map<nfv::VnfRole, DcTier>& placement) {
  if (world.uc_state.epc)
    throw OrchError(ErrorKind::ConsistencyError, "EPC already bootstrapped");

  auto tier_of = [&](nfv::VnfRole role) {
    auto it = placement.find(role);
    return it == placement.end() ? DcTier::Core : it->second;
  };

  nfv::ForwardingGraph graph;
  graph.tenant_id = tenant_id;
  graph.nodes = {{"mme", true, type_with_role(world, nfv::VnfRole::Mme), ""},
                 {"sgw", true, type_with_role(world, nfv::VnfRole::Sgw), ""},
                 {"pgw", true, type_with_role(world, nfv::VnfRole::Pgw), ""}};
  graph.edges = {{"s11", "mme", "sgw", kControlEdgeBwKbps, std::nullopt},
                 {"s5", "sgw", "pgw", kControlEdgeBwKbps, std::nullopt}};
  graph.placement_hints = {{"mme", tier_of(nfv::VnfRole::Mme)},
                           {"sgw", tier_of(nfv::VnfRole::Sgw)},
                           {"pgw", tier_of(nfv::VnfRole::Pgw)}};

  const nfv::GraphEmbedding& emb = nfv::deploy_forwarding_graph(world, graph);
  const nfv::DeployedGraph& dg = world.nfv_state.graphs.at(emb.graph_id);

  EpcState epc;
  epc.graph_id = emb.graph_id;
  epc.mme_instance = emb.placements.at("mme");
  epc.sgw_instance = emb.placements.at("sgw");
  epc.pgw_instance = emb.placements.at("pgw");
  epc.sgw_attach = nfv::attach_node_of(world, dg.graph, emb, "sgw");
  epc.interfaces.push_back({IfaceKind::S11,
                            nfv::attach_node_of(world, dg.graph, emb, "mme"), epc.sgw_attach});

  // X2 neighbor relations between all eNB pairs; they stay dormant unless a
  // scenario provisions an eNB-to-eNB service.
  std::vector<Id> enbs;
  for (const auto& [nid, node] : world.topo.nodes)
    if (node.kind == NodeKind::Enb) enbs.push_back(nid);
  for (std::size_t i = 0; i < enbs.size(); ++i)
    for (std::size_t j = i + 1; j < enbs.size(); ++j)
      epc.interfaces.push_back({IfaceKind::X2, enbs[i], enbs[j]});

  world.uc_state.epc = std::move(epc);
  return *world.uc_state.epc;
}

const Bearer& establish_bearer(World& world, const Id& enb_id, const Qos& qos) {
  EpcState& epc = epc_mut(world);
  const Node& enb = world.topo.node(enb_id);
  if (enb.kind != NodeKind::Enb)
    throw OrchError(ErrorKind::ConsistencyError, "node '" + enb_id + "' is not an eNodeB");
  if (qos.gbr_kbps <= 0)
    throw OrchError(ErrorKind::ConsistencyError, "bearer GBR must be positive");

  netorch::E2ERequest req;
  req.tenant_id = epc_tenant(world);
  req.src_node = enb_id;
  req.dst_node = epc.sgw_attach;
  req.bw_kbps = qos.gbr_kbps;
  req.max_latency_ns = qos.max_latency_ns;

  Id service_id;
  try {
    service_id = netorch::provision_e2e(world, req).id;
  } catch (const OrchError& e) {
    throw OrchError(ErrorKind::TransportInfeasible,
                    "bearer for '" + enb_id + "': " + e.what());
  }

  Bearer bearer;
  bearer.id = next_id(world, "brr");
  bearer.enb_id = enb_id;
  bearer.qos = qos;
  bearer.transport_service = service_id;
  bearer.state = BearerState::Active;

  bool have_s1 = false;
  for (const InterfacePair& p : epc.interfaces)
    if (p.kind == IfaceKind::S1 && p.a == enb_id) have_s1 = true;
  if (!have_s1) epc.interfaces.push_back({IfaceKind::S1, enb_id, epc.sgw_attach});

  Id id = bearer.id;
  epc.bearers[id] = std::move(bearer);
  return epc.bearers[id];
}

void release_bearer(World& world, const Id& bearer_id) {
  EpcState& epc = epc_mut(world);
  auto it = epc.bearers.find(bearer_id);
  if (it == epc.bearers.end() || it->second.state != BearerState::Active)
    throw OrchError(ErrorKind::UnknownBearer, "bearer '" + bearer_id + "' is not active");
  netorch::teardown_e2e(world, it->second.transport_service);
  it->second.state = BearerState::Released;
}

std::map<Id, FailureOutcome> on_transport_failure(World& world, const Id& failed_link_id) {
  auto service_outcomes = netorch::recover_services(world, failed_link_id);
  std::map<Id, FailureOutcome> bearer_outcomes;
  if (!world.uc_state.epc) return bearer_outcomes;

  for (auto& [bid, bearer] : world.uc_state.epc->bearers) {
    if (bearer.state != BearerState::Active) continue;
    auto it = service_outcomes.find(bearer.transport_service);
    if (it == service_outcomes.end()) continue;  // transport untouched
    bearer.state = BearerState::Recovering;
    if (it->second.recovered) {
      bearer.state = BearerState::Active;
      bearer_outcomes[bid] = {true};
    } else {
      bearer.state = BearerState::Lost;
      bearer_outcomes[bid] = {false};
    }
  }
  return bearer_outcomes;
}

Id select_split(const std::vector<SplitOption>& options, const FronthaulState& state) {
  if (options.empty()) throw OrchError(ErrorKind::NoOptions, "split option table is empty");
  std::set<SplitBoundary> boundaries;
  for (const SplitOption& opt : options) {
    if (!boundaries.insert(opt.boundary).second)
      throw OrchError(ErrorKind::ConsistencyError,
                      std::string("duplicate boundary '") + boundary_name(opt.boundary) + "'");
    if (opt.boundary == SplitBoundary::AboveRrc && opt.fronthaul_bw_kbps != 0)
      throw OrchError(ErrorKind::InvalidOption,
                      "the all-local option must have zero fronthaul demand");
  }

  const SplitOption* best = nullptr;
  for (const SplitOption& opt : options) {
    bool feasible = opt.fronthaul_bw_kbps <= state.available_bw_kbps &&
                    (!opt.fronthaul_latency_budget_ns ||
                     *opt.fronthaul_latency_budget_ns >= state.path_latency_ns);
    if (!feasible) continue;
    if (!best ||
        std::tuple(opt.energy_cost_milli, -centralization_depth(opt.boundary), opt.id) <
            std::tuple(best->energy_cost_milli, -centralization_depth(best->boundary), best->id))
      best = &opt;
  }
  if (best) return best->id;

  for (const SplitOption& opt : options)
    if (opt.boundary == SplitBoundary::AboveRrc) return opt.id;
  throw OrchError(ErrorKind::NoFeasibleSplit,
                  "no option fits the fronthaul state and no all-local fallback exists");
}

const SplitOption& split_option(const World& world, const Id& option_id) {
  for (const SplitOption& opt : world.split_table)
    if (opt.id == option_id) return opt;
  throw OrchError(ErrorKind::InvalidOption, "split option '" + option_id + "' is not in the table");
}

const SplitPlan& deploy_split(World& world, const Id& enb_id, const SplitOption& chosen,
                              DcTier tier) {
  EpcState& epc = epc_mut(world);
  const Node& enb = world.topo.node(enb_id);
  if (enb.kind != NodeKind::Enb)
    throw OrchError(ErrorKind::ConsistencyError, "node '" + enb_id + "' is not an eNodeB");
  if (world.uc_state.splits.count(enb_id))
    throw OrchError(ErrorKind::ConsistencyError,
                    "split plan for '" + enb_id + "' already exists; re-evaluate instead");

  SplitPlan plan;
  plan.enb_id = enb_id;
  plan.chosen_option = chosen.id;
  plan.tier = tier;

  if (chosen.boundary != SplitBoundary::AboveRrc) {
    nfv::ForwardingGraph graph;
    graph.tenant_id = epc_tenant(world);
    graph.nodes = {{"enb", false, "", enb_id},
                   {"ranstack", true, type_with_role(world, nfv::VnfRole::RanStack), ""},
                   {"sgw", false, "", epc.sgw_attach}};
    graph.edges = {{"fronthaul", "enb", "ranstack", chosen.fronthaul_bw_kbps,
                    chosen.fronthaul_latency_budget_ns},
                   {"s1", "ranstack", "sgw", kS1EdgeBwKbps, std::nullopt}};
    graph.placement_hints = {{"ranstack", tier}};
    plan.graph_id = nfv::deploy_forwarding_graph(world, graph).graph_id;
  }

  world.uc_state.splits[enb_id] = std::move(plan);
  return world.uc_state.splits[enb_id];
}

const SplitPlan& reevaluate_split(World& world, const Id& enb_id, const FronthaulState& state) {
  auto it = world.uc_state.splits.find(enb_id);
  if (it == world.uc_state.splits.end())
    throw OrchError(ErrorKind::ConsistencyError, "no split plan for '" + enb_id + "'");

  Id choice = select_split(world.split_table, state);
  if (choice == it->second.chosen_option) return it->second;  // nothing to change

  const SplitOption& fresh = split_option(world, choice);
  TxGuard tx(world);
  SplitPlan& plan = world.uc_state.splits.at(enb_id);
  if (plan.graph_id) nfv::teardown_forwarding_graph(world, *plan.graph_id);
  DcTier tier = plan.tier;
  world.uc_state.splits.erase(enb_id);
  // deploy_split re-checks preconditions and records the new plan.
  deploy_split(world, enb_id, fresh, tier);
  tx.commit();
  return world.uc_state.splits.at(enb_id);
}

}  // namespace orch5g::uc
