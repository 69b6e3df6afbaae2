#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "orch5g/model.hpp"

namespace orch5g {

struct World;

namespace optical {

enum class LspState { Requested, Signaled, Active, Failed, Deleted };

const char* lsp_state_name(LspState s);

enum class MsgKind { PathMsg, ResvMsg, ErrMsg, TearMsg };

const char* msg_kind_name(MsgKind k);

struct SignalingMessage {
  MsgKind kind = MsgKind::PathMsg;
  Id lsp_id;
  int hop_index = 0;
  int slot_start = 0;
  int slot_width = 0;
};

struct OpticalLsp {
  Id id;
  std::vector<Id> route;
  int slot_start = 0;
  int slot_width = 0;
  BwKbps capacity_kbps = 0;  // slot_width x kbps_per_slot
  LspState state = LspState::Requested;
  Id owner_service;
  std::vector<SignalingMessage> trace;
  std::string failure_cause;  // set when signaling was rejected

  LatencyNs route_latency(const World& world) const;
  Id src_roadm(const World& world) const;
  Id dst_roadm(const World& world) const;
};

struct State {
  std::map<Id, OpticalLsp> lsps;  // the stateful PCE's LSP database
};

struct RsaResult {
  std::vector<Id> route;
  int slot_start = 0;
};

struct RestoreOutcome {
  bool restored = false;
  Id new_lsp_id;  // empty when unrestorable
};

// Routing and spectrum assignment: among the K shortest routes by latency
// (ties lexicographic on the link-id sequence), picks the first with a common
// contiguous free block of slot_width on every hop, first-fit slot_start.
RsaResult rsa_compute(const World& world, const Id& src_roadm, const Id& dst_roadm,
                      int slot_width, const std::set<Id>& avoid_links = {});

// Two-phase signaling: PathMsg admission hop-by-hop, then ResvMsg allocation
// in reverse. Admission failure at hop h emits an ErrMsg, allocates nothing
// and records the attempt as a Deleted LSP with its cause.
const OpticalLsp& signal_lsp(World& world, const std::vector<Id>& route, int slot_start,
                             int slot_width, const Id& owner_service);

// TearMsg per hop; slots are freed immediately on up links and queued for
// links currently down. The record stays in the database as Deleted.
void teardown_lsp(World& world, const Id& lsp_id);

// Marks the link down and flips every Active LSP routed over it to Failed.
std::vector<Id> mark_link_down(World& world, const Id& link_id);

// Re-signals every Failed LSP (in id order) on a route avoiding down links,
// keeping its slot width; spectrum may move. Old LSPs are torn down on
// success and left Failed when no placement exists.
std::map<Id, RestoreOutcome> restore_lsps(World& world, const Id& failed_link_id);

std::string dump_lsp_db(const World& world);

}  // namespace optical
}  // namespace orch5g
