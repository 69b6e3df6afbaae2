#include "orch5g/model.hpp"

#include <algorithm>
#include <sstream>

#include "orch5g/errors.hpp"

namespace orch5g {

const char* tech_name(DomainTech t) {
  switch (t) {
    case DomainTech::Ran: return "ran";
    case DomainTech::Packet: return "packet";
    case DomainTech::Optical: return "optical";
  }
  return "?";
}

const char* controller_name(ControllerKind c) {
  switch (c) {
    case ControllerKind::SdnRan: return "sdn-ran";
    case ControllerKind::SdnPacket: return "sdn-packet";
    case ControllerKind::PceGmpls: return "pce-gmpls";
  }
  return "?";
}

const char* node_kind_name(NodeKind k) {
  switch (k) {
    case NodeKind::Enb: return "enb";
    case NodeKind::PacketSwitch: return "packet-switch";
    case NodeKind::Roadm: return "roadm";
    case NodeKind::RanGateway: return "ran-gateway";
    case NodeKind::DcGateway: return "dc-gateway";
  }
  return "?";
}

const char* tier_name(DcTier t) {
  return t == DcTier::Edge ? "edge" : "core";
}

ControllerKind controller_for(DomainTech tech) {
  switch (tech) {
    case DomainTech::Ran: return ControllerKind::SdnRan;
    case DomainTech::Packet: return ControllerKind::SdnPacket;
    case DomainTech::Optical: return ControllerKind::PceGmpls;
  }
  return ControllerKind::SdnPacket;
}

bool SpectrumGrid::range_free(int start, int width) const {
  if (start < 0 || width <= 0 || start + width > slot_count) return false;
  for (int s = start; s < start + width; ++s)
    if (occupied[s]) return false;
  return true;
}

std::optional<int> SpectrumGrid::first_fit(int width) const {
  if (width <= 0) return std::nullopt;
  int run = 0;
  for (int s = 0; s < slot_count; ++s) {
    run = occupied[s] ? 0 : run + 1;
    if (run == width) return s - width + 1;
  }
  return std::nullopt;
}

namespace {

template <typename Map>
const typename Map::mapped_type& find_or_throw(const Map& m, const Id& id, ErrorKind kind,
                                               const char* what) {
  auto it = m.find(id);
  if (it == m.end())
    throw OrchError(kind, std::string(what) + " '" + id + "' does not exist");
  return it->second;
}

}  // namespace

const Node& Topology::node(const Id& id) const {
  return find_or_throw(nodes, id, ErrorKind::ReferenceError, "node");
}

const Link& Topology::link(const Id& id) const {
  return find_or_throw(links, id, ErrorKind::UnknownLink, "link");
}

Link& Topology::link_mut(const Id& id) {
  auto it = links.find(id);
  if (it == links.end())
    throw OrchError(ErrorKind::UnknownLink, "link '" + id + "' does not exist");
  return it->second;
}

const Domain& Topology::domain(const Id& id) const {
  return find_or_throw(domains, id, ErrorKind::ReferenceError, "domain");
}

const DataCenter& Topology::dc(const Id& id) const {
  return find_or_throw(dcs, id, ErrorKind::UnknownDc, "data center");
}

DataCenter& Topology::dc_mut(const Id& id) {
  auto it = dcs.find(id);
  if (it == dcs.end())
    throw OrchError(ErrorKind::UnknownDc, "data center '" + id + "' does not exist");
  return it->second;
}

const Domain& Topology::domain_of_node(const Id& node_id) const {
  return domain(node(node_id).domain_id);
}

bool Topology::packet_capable(const Id& domain_id) const {
  return domain(domain_id).tech != DomainTech::Optical;
}

std::string ResourceSnapshot::canonical() const {
  std::ostringstream out;
  for (const auto& [id, kbps] : link_reserved) out << "L|" << id << "|" << kbps << "\n";
  for (const auto& [id, bits] : grid_occupied) {
    out << "G|" << id << "|";
    for (std::uint8_t b : bits) out << (b ? '1' : '0');
    out << "\n";
  }
  for (const auto& [id, used] : dc_used)
    out << "D|" << id << "|" << used[0] << "|" << used[1] << "|" << used[2] << "\n";
  return out.str();
}

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::uint64_t ResourceSnapshot::hash() const { return fnv1a64(canonical()); }

ResourceSnapshot snapshot(const Topology& topo, std::string label) {
  ResourceSnapshot snap;
  snap.label = std::move(label);
  for (const auto& [id, link] : topo.links) {
    if (link.is_packet())
      snap.link_reserved[id] = link.packet().reserved_kbps;
    else
      snap.grid_occupied[id] = link.optical().grid.occupied;
  }
  for (const auto& [id, dc] : topo.dcs)
    snap.dc_used[id] = {dc.cpu_used, dc.ram_used, dc.disk_used};
  return snap;
}

namespace {

void append_ledger(Topology& topo, LedgerOp op, const Id& link_id, std::int64_t amount,
                   const Id& owner) {
  topo.ledger.push_back({topo.ledger_seq++, op, link_id, amount, owner});
}

PacketMedium& packet_medium(Topology& topo, const Id& link_id) {
  Link& link = topo.link_mut(link_id);
  if (!link.is_packet())
    throw OrchError(ErrorKind::NotPacketLink, "link '" + link_id + "' is not a packet link");
  return link.packet();
}

OpticalMedium& optical_medium(Topology& topo, const Id& link_id) {
  Link& link = topo.link_mut(link_id);
  if (!link.is_optical())
    throw OrchError(ErrorKind::ConsistencyError,
                    "link '" + link_id + "' carries no spectrum grid");
  return link.optical();
}

}  // namespace

void reserve_packet_bw(Topology& topo, const Id& link_id, BwKbps kbps, const Id& owner) {
  PacketMedium& m = packet_medium(topo, link_id);
  if (kbps <= 0)
    throw OrchError(ErrorKind::ConsistencyError, "reserve of non-positive bandwidth");
  if (m.reserved_kbps + kbps > m.capacity_kbps)
    throw OrchError(ErrorKind::CapacityExceeded,
                    "link '" + link_id + "': requested " + format_mbps(kbps) + " mbps, free " +
                        format_mbps(m.capacity_kbps - m.reserved_kbps) + " mbps");
  m.reserved_kbps += kbps;
  append_ledger(topo, LedgerOp::Reserve, link_id, kbps, owner);
}

void release_packet_bw(Topology& topo, const Id& link_id, BwKbps kbps, const Id& owner) {
  Link& link = topo.link_mut(link_id);
  PacketMedium& m = packet_medium(topo, link_id);
  if (kbps <= 0)
    throw OrchError(ErrorKind::ConsistencyError, "release of non-positive bandwidth");
  if (!link.up) {
    // Releases against a failed link are deferred; the reservation stays on
    // the books until the link is restored.
    m.pending.push_back({owner, kbps});
    return;
  }
  if (kbps > m.reserved_kbps)
    throw OrchError(ErrorKind::UnderflowRelease,
                    "link '" + link_id + "': releasing " + format_mbps(kbps) +
                        " mbps with only " + format_mbps(m.reserved_kbps) + " mbps reserved");
  m.reserved_kbps -= kbps;
  append_ledger(topo, LedgerOp::Release, link_id, kbps, owner);
}

void alloc_slots(Topology& topo, const Id& link_id, int start, int width, const Id& owner) {
  OpticalMedium& m = optical_medium(topo, link_id);
  if (!m.grid.range_free(start, width))
    throw OrchError(ErrorKind::NoSpectrum, "link '" + link_id + "': slots [" +
                                               std::to_string(start) + "," +
                                               std::to_string(start + width) + ") unavailable");
  for (int s = start; s < start + width; ++s) {
    m.grid.occupied[s] = 1;
    m.grid.owner[s] = owner;
  }
  append_ledger(topo, LedgerOp::SlotAlloc, link_id, width, owner);
}

void free_slots(Topology& topo, const Id& link_id, int start, int width, const Id& owner) {
  Link& link = topo.link_mut(link_id);
  OpticalMedium& m = optical_medium(topo, link_id);
  if (!link.up) {
    m.pending.push_back({owner, start, width});
    return;
  }
  for (int s = start; s < start + width; ++s) {
    if (s < 0 || s >= m.grid.slot_count || !m.grid.occupied[s])
      throw OrchError(ErrorKind::UnderflowRelease,
                      "link '" + link_id + "': slot " + std::to_string(s) + " not allocated");
    m.grid.occupied[s] = 0;
    m.grid.owner.erase(s);
  }
  append_ledger(topo, LedgerOp::SlotFree, link_id, width, owner);
}

void debit_dc(Topology& topo, const Id& dc_id, std::int64_t cpu, std::int64_t ram,
              std::int64_t disk) {
  DataCenter& dc = topo.dc_mut(dc_id);
  if (dc.cpu_used + cpu > dc.cpu_total || dc.ram_used + ram > dc.ram_total ||
      dc.disk_used + disk > dc.disk_total)
    throw OrchError(ErrorKind::NoCapacity, "data center '" + dc_id + "' cannot host " +
                                               std::to_string(cpu) + " vcpu/" +
                                               std::to_string(ram) + " mb/" +
                                               std::to_string(disk) + " gb");
  dc.cpu_used += cpu;
  dc.ram_used += ram;
  dc.disk_used += disk;
}

void credit_dc(Topology& topo, const Id& dc_id, std::int64_t cpu, std::int64_t ram,
               std::int64_t disk) {
  DataCenter& dc = topo.dc_mut(dc_id);
  if (cpu > dc.cpu_used || ram > dc.ram_used || disk > dc.disk_used)
    throw OrchError(ErrorKind::UnderflowRelease,
                    "data center '" + dc_id + "' released below zero usage");
  dc.cpu_used -= cpu;
  dc.ram_used -= ram;
  dc.disk_used -= disk;
}

void set_link_down(Topology& topo, const Id& link_id) {
  Link& link = topo.link_mut(link_id);
  if (!link.up) throw OrchError(ErrorKind::AlreadyDown, "link '" + link_id + "' already down");
  link.up = false;
}

void set_link_up(Topology& topo, const Id& link_id) {
  Link& link = topo.link_mut(link_id);
  if (link.up) throw OrchError(ErrorKind::AlreadyUp, "link '" + link_id + "' already up");
  link.up = true;
  if (link.is_packet()) {
    auto pend = std::move(link.packet().pending);
    link.packet().pending.clear();
    for (const auto& p : pend) release_packet_bw(topo, link_id, p.kbps, p.owner);
  } else {
    auto pend = std::move(link.optical().pending);
    link.optical().pending.clear();
    for (const auto& p : pend) free_slots(topo, link_id, p.slot_start, p.slot_width, p.owner);
  }
}

BwKbps ledger_bw_sum(const Topology& topo, const Id& link_id, const std::optional<Id>& owner) {
  BwKbps sum = 0;
  for (const auto& e : topo.ledger) {
    if (e.link_id != link_id) continue;
    if (owner && e.owner != *owner) continue;
    if (e.op == LedgerOp::Reserve) sum += e.amount;
    if (e.op == LedgerOp::Release) sum -= e.amount;
  }
  return sum;
}

}  // namespace orch5g
