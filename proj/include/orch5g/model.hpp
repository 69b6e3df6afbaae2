#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "orch5g/units.hpp"

namespace orch5g {

using Id = std::string;

enum class DomainTech { Ran, Packet, Optical };
enum class ControllerKind { SdnRan, SdnPacket, PceGmpls };
enum class NodeKind { Enb, PacketSwitch, Roadm, RanGateway, DcGateway };
enum class LinkScope { IntraDomain, InterDomain };
enum class DcTier { Edge, Core };

const char* tech_name(DomainTech t);
const char* controller_name(ControllerKind c);
const char* node_kind_name(NodeKind k);
const char* tier_name(DcTier t);

// Controller kind is fully determined by the domain technology.
ControllerKind controller_for(DomainTech tech);

struct Domain {
  Id id;
  DomainTech tech = DomainTech::Packet;
  ControllerKind controller = ControllerKind::SdnPacket;
  std::set<Id> node_ids;
};

struct Node {
  Id id;
  Id domain_id;
  NodeKind kind = NodeKind::PacketSwitch;
  std::optional<Id> dc_id;  // set iff a data center attaches here
};

// A release that could not be applied because the link was down at the time.
// It is flushed (and only then hits the reservation/grid) when the link
// comes back up.
struct PendingBwRelease {
  Id owner;
  BwKbps kbps = 0;
};
struct PendingSlotRelease {
  Id owner;
  int slot_start = 0;
  int slot_width = 0;
};

struct PacketMedium {
  BwKbps capacity_kbps = 0;
  BwKbps reserved_kbps = 0;
  LatencyNs latency_ns = 0;
  std::vector<PendingBwRelease> pending;
};

struct SpectrumGrid {
  int slot_count = 0;
  std::vector<std::uint8_t> occupied;  // 1 = allocated
  std::map<int, Id> owner;             // slot index -> lsp id, iff occupied

  bool range_free(int start, int width) const;
  // First-fit: smallest start index with `width` contiguous free slots.
  std::optional<int> first_fit(int width) const;
};

struct OpticalMedium {
  SpectrumGrid grid;
  LatencyNs latency_ns = 0;
  std::vector<PendingSlotRelease> pending;
};

struct Link {
  Id id;
  Id src;
  Id dst;
  LinkScope scope = LinkScope::IntraDomain;
  bool up = true;
  std::variant<PacketMedium, OpticalMedium> medium;

  bool is_packet() const { return std::holds_alternative<PacketMedium>(medium); }
  bool is_optical() const { return std::holds_alternative<OpticalMedium>(medium); }
  PacketMedium& packet() { return std::get<PacketMedium>(medium); }
  const PacketMedium& packet() const { return std::get<PacketMedium>(medium); }
  OpticalMedium& optical() { return std::get<OpticalMedium>(medium); }
  const OpticalMedium& optical() const { return std::get<OpticalMedium>(medium); }
  LatencyNs latency_ns() const {
    return is_packet() ? packet().latency_ns : optical().latency_ns;
  }
  BwKbps free_kbps() const { return packet().capacity_kbps - packet().reserved_kbps; }
};

struct DataCenter {
  Id id;
  DcTier tier = DcTier::Edge;
  std::int64_t cpu_total = 0, cpu_used = 0;    // vCPU
  std::int64_t ram_total = 0, ram_used = 0;    // MB
  std::int64_t disk_total = 0, disk_used = 0;  // GB
  Id attach_node;
  std::set<Id> images;

  std::int64_t cpu_free() const { return cpu_total - cpu_used; }
};

struct Tenant {
  Id id;
  std::string name;
};

enum class LedgerOp { Reserve, Release, SlotAlloc, SlotFree };

struct LedgerEntry {
  std::int64_t seq = 0;
  LedgerOp op = LedgerOp::Reserve;
  Id link_id;
  std::int64_t amount = 0;  // kbps for bw entries, slot count for grid entries
  Id owner;
};

// The multi-domain substrate plus all resource accounting. Every reservation,
// spectrum allocation and DC debit anywhere in the emulator goes through the
// functions below so the ledger stays authoritative.
struct Topology {
  std::string name;
  std::map<Id, Domain> domains;
  std::map<Id, Node> nodes;
  std::map<Id, Link> links;
  std::map<Id, DataCenter> dcs;
  std::map<Id, Tenant> tenants;
  std::vector<LedgerEntry> ledger;
  std::int64_t ledger_seq = 0;

  const Node& node(const Id& id) const;
  const Link& link(const Id& id) const;
  Link& link_mut(const Id& id);
  const Domain& domain(const Id& id) const;
  const DataCenter& dc(const Id& id) const;
  DataCenter& dc_mut(const Id& id);
  const Domain& domain_of_node(const Id& node_id) const;
  bool packet_capable(const Id& domain_id) const;
};

// Immutable capture of every link reservation, grid occupancy vector and DC
// usage triple. Owner ids are deliberately excluded so that a torn-down and
// re-established world hashes identically.
struct ResourceSnapshot {
  std::string label;
  std::map<Id, BwKbps> link_reserved;
  std::map<Id, std::vector<std::uint8_t>> grid_occupied;
  std::map<Id, std::array<std::int64_t, 3>> dc_used;

  // label is metadata and takes no part in equality or hashing.
  friend bool operator==(const ResourceSnapshot& a, const ResourceSnapshot& b) {
    return a.link_reserved == b.link_reserved && a.grid_occupied == b.grid_occupied &&
           a.dc_used == b.dc_used;
  }
  std::string canonical() const;
  std::uint64_t hash() const;
};

std::uint64_t fnv1a64(const std::string& bytes);

ResourceSnapshot snapshot(const Topology& topo, std::string label = "");

// Packet bandwidth accounting. Both ops are atomic and append to the ledger.
void reserve_packet_bw(Topology& topo, const Id& link_id, BwKbps kbps, const Id& owner);
void release_packet_bw(Topology& topo, const Id& link_id, BwKbps kbps, const Id& owner);

// Spectrum accounting. alloc fails (no ledger entry, no mutation) if any slot
// in the range is taken. free on a down link is queued and applied on link-up.
void alloc_slots(Topology& topo, const Id& link_id, int start, int width, const Id& owner);
void free_slots(Topology& topo, const Id& link_id, int start, int width, const Id& owner);

// DC usage accounting.
void debit_dc(Topology& topo, const Id& dc_id, std::int64_t cpu, std::int64_t ram,
              std::int64_t disk);
void credit_dc(Topology& topo, const Id& dc_id, std::int64_t cpu, std::int64_t ram,
               std::int64_t disk);

// Link state. Marking down never touches reservations; bringing a link up
// flushes the pending releases queued while it was down.
void set_link_down(Topology& topo, const Id& link_id);
void set_link_up(Topology& topo, const Id& link_id);

// Signed reserve/release sum for one link and (optionally) one owner;
// the ledger-conservation invariant compares this with reserved_kbps.
BwKbps ledger_bw_sum(const Topology& topo, const Id& link_id,
                     const std::optional<Id>& owner = std::nullopt);

}  // namespace orch5g
