#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "orch5g/model.hpp"
#include "orch5g/nfv_orch.hpp"

namespace orch5g {

struct World;

namespace uc {

enum class IfaceKind { S1, S11, X2 };

const char* iface_name(IfaceKind k);

struct InterfacePair {
  IfaceKind kind = IfaceKind::S1;
  Id a;  // attach node
  Id b;
};

enum class BearerState { Active, Recovering, Released, Lost };

const char* bearer_state_name(BearerState s);

struct Qos {
  BwKbps gbr_kbps = 0;
  std::optional<LatencyNs> max_latency_ns;
  int priority = 0;
};

struct Bearer {
  Id id;
  Id enb_id;
  Qos qos;
  Id transport_service;
  BearerState state = BearerState::Active;
};

struct EpcState {
  Id graph_id;  // the MME-SGW-PGW forwarding graph
  Id mme_instance;
  Id sgw_instance;
  Id pgw_instance;
  Id sgw_attach;  // attach node bearers terminate at (S1-U style)
  std::vector<InterfacePair> interfaces;
  std::map<Id, Bearer> bearers;
};

// Protocol-stack boundaries ordered from full centralization down to all-local.
enum class SplitBoundary { BelowPhy, PhyMac, MacRlc, RlcPdcp, PdcpRrc, AboveRrc };

const char* boundary_name(SplitBoundary b);
int centralization_depth(SplitBoundary b);  // higher = more layers central
std::set<std::string> central_layers(SplitBoundary b);
std::set<std::string> local_layers(SplitBoundary b);

struct SplitOption {
  Id id;
  SplitBoundary boundary = SplitBoundary::AboveRrc;
  BwKbps fronthaul_bw_kbps = 0;
  std::optional<LatencyNs> fronthaul_latency_budget_ns;  // absent = unbounded
  std::int64_t energy_cost_milli = 0;                    // lower is better
};

struct FronthaulState {
  BwKbps available_bw_kbps = 0;
  LatencyNs path_latency_ns = 0;
};

struct SplitPlan {
  Id enb_id;
  Id chosen_option;
  std::optional<Id> graph_id;  // absent for the all-local split
  DcTier tier = DcTier::Edge;  // where the central layers run
};

struct State {
  std::optional<EpcState> epc;
  std::map<Id, SplitPlan> splits;  // keyed by eNB id
};

// Deploys the MME-SGW-PGW chain (S11 edge plus SGW-PGW edge) and registers
// the interface registry; S1 entries are added lazily as bearers attach.
const EpcState& bootstrap_epc(World& world, const Id& tenant_id,
                              const std::map<nfv::VnfRole, DcTier>& placement = {});

// Bearer establishment triggers transport provisioning: the QoS demand maps
// to an e2e request from the eNB to the SGW attach node, which grooms onto
// existing optical tunnels when one has room.
const Bearer& establish_bearer(World& world, const Id& enb_id, const Qos& qos);

void release_bearer(World& world, const Id& bearer_id);

struct FailureOutcome {
  bool recovered = false;
};

// Delegates to transport recovery and remaps bearer states; Lost bearers
// leave no residual reservations behind.
std::map<Id, FailureOutcome> on_transport_failure(World& world, const Id& failed_link_id);

// Among options whose fronthaul demand fits the given state, picks minimal
// energy, then deeper centralization, then id. Falls back to the all-local
// option when nothing else fits.
Id select_split(const std::vector<SplitOption>& options, const FronthaulState& state);

// Deploys eNB -> RanStack(central layers) -> SGW with the chosen option's
// fronthaul demand on the first edge. The all-local split deploys nothing.
const SplitPlan& deploy_split(World& world, const Id& enb_id, const SplitOption& chosen,
                              DcTier tier);

// Re-runs selection under new conditions; when the choice changes, swaps the
// deployment transactionally (the old plan survives any failure).
const SplitPlan& reevaluate_split(World& world, const Id& enb_id, const FronthaulState& state);

const SplitOption& split_option(const World& world, const Id& option_id);

}  // namespace uc
}  // namespace orch5g
