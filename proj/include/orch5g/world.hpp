#pragma once

#include <map>
#include <string>
#include <vector>

#include "orch5g/cloud_orch.hpp"
#include "orch5g/model.hpp"
#include "orch5g/net_orch.hpp"
#include "orch5g/nfv_orch.hpp"
#include "orch5g/optical_ctrl.hpp"
#include "orch5g/packet_ctrl.hpp"
#include "orch5g/use_cases.hpp"

namespace orch5g {

struct Options {
  int ksp_k = 3;            // candidate routes examined by the optical PCE
  int min_lsp_width = 4;    // smallest slot width a new LSP is signaled with
  BwKbps kbps_per_slot = 12'500'000;  // 12.5 gbps per frequency slot
  bool retain_idle_tunnels = false;
  bool image_copy_allowed = false;
};

// The entire emulated system. A plain value: orchestration transactions take
// a copy on entry and restore it on failure, which is what makes every
// multi-step operation all-or-nothing.
struct World {
  Topology topo;
  Options options;
  std::map<Id, nfv::VnfDescriptor> vnf_catalog;
  std::vector<uc::SplitOption> split_table;

  packet::State packet_state;
  optical::State optical_state;
  netorch::State orch_state;
  cloud::State cloud_state;
  nfv::State nfv_state;
  uc::State uc_state;

  std::map<std::string, std::int64_t> id_counters;
};

// Generated ids are zero-padded ("svc-000001") so iteration order matches
// creation order in every registry.
Id next_id(World& world, const std::string& prefix);

// Copy-on-entry transaction guard. Anything thrown before commit() restores
// the world to the state captured at construction.
class TxGuard {
 public:
  explicit TxGuard(World& world) : live_(world), saved_(world) {}
  TxGuard(const TxGuard&) = delete;
  TxGuard& operator=(const TxGuard&) = delete;
  ~TxGuard() {
    if (!committed_) live_ = saved_;
  }
  void commit() { committed_ = true; }

 private:
  World& live_;
  World saved_;
  bool committed_ = false;
};

}  // namespace orch5g
