#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "orch5g/model.hpp"

namespace orch5g {

struct World;

namespace packet {

enum class ActionKind { PushLabel, PopLabel, Forward };

struct Action {
  ActionKind kind = ActionKind::Forward;
  std::int64_t label = 0;  // PushLabel only
  Id out_link;             // Forward only

  std::string to_string() const;
};

struct Match {
  Id in_link;
  std::optional<std::int64_t> label;

  auto operator<=>(const Match&) const = default;
  std::string to_string() const;
};

struct FlowEntry {
  Id id;
  Id node_id;
  Match match;
  std::vector<Action> actions;
  Id owner_service;
};

enum class PathState { Active, Failed, Removed };

const char* path_state_name(PathState s);

struct PacketPath {
  Id id;
  std::vector<Id> links;
  BwKbps bw_kbps = 0;
  std::int64_t label = 0;
  std::vector<Id> entries;
  PathState state = PathState::Active;
  Id owner_service;
  // Slice-scoped paths draw on bandwidth the slice carved out up front, so
  // they install forwarding state without adding their own reservation.
  bool reserves_bw = true;
};

struct State {
  std::map<Id, PacketPath> paths;
  std::map<Id, FlowEntry> entries;
  // Per-node match index enforcing (node, match) uniqueness.
  std::map<Id, std::map<Match, Id>> match_index;
  // Labels in use, per domain.
  std::map<Id, std::set<std::int64_t>> labels;
};

// Minimum-total-latency path between two nodes over up packet links with
// enough free capacity, restricted to `domain_scope` (defaults to the common
// domain of src and dst). Inter-domain links are usable when both endpoints'
// domains are in scope. Ties break on the lexicographic link-id sequence.
std::vector<Id> compute_packet_path(const World& world, const Id& src_node, const Id& dst_node,
                                    BwKbps bw_kbps, std::optional<LatencyNs> max_latency,
                                    const std::set<Id>& avoid_links = {},
                                    std::optional<std::set<Id>> domain_scope = std::nullopt);

// Reserves bandwidth on every link (all-or-nothing), allocates the smallest
/// free label in the touched domains and installs per-node flow entries:
// ingress classifier (keyed by the allocated label) + PushLabel + Forward,
// transit match + Forward, egress match + PopLabel.
const PacketPath& program_path(World& world, const std::vector<Id>& links, BwKbps bw_kbps,
                               const Id& owner_service, bool reserve_bw = true);

void unprogram_path(World& world, const Id& path_id);

// Marks the link down and flips every Active path crossing it to Failed.
// Reservations are untouched; recovery happens at the orchestration layer.
std::vector<Id> mark_link_down(World& world, const Id& link_id);

std::string dump_flow_tables(const World& world);

}  // namespace packet
}  // namespace orch5g
