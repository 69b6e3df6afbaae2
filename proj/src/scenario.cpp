#include "orch5g/scenario.hpp"

#include <algorithm>
#include <fstream>
#include <set>

#include "orch5g/errors.hpp"

namespace orch5g {

using nlohmann::json;

namespace {

// nlohmann rejects malformed documents itself; everything below enforces the
// scenario schema on top of well-formed JSON.

const json& expect_object(const json& value, const std::string& where) {
  if (!value.is_object())
    throw OrchError(ErrorKind::SchemaError, where + " must be an object");
  return value;
}

const json& expect_array(const json& value, const std::string& where) {
  if (!value.is_array())
    throw OrchError(ErrorKind::SchemaError, where + " must be an array");
  return value;
}

std::string get_string(const json& object, const std::string& key, const std::string& where) {
  const json& v = object.at(key);
  if (!v.is_string() || v.get<std::string>().empty())
    throw OrchError(ErrorKind::SchemaError, where + "." + key + " must be a non-empty string");
  return v.get<std::string>();
}

std::int64_t get_nonneg_int(const json& object, const std::string& key, const std::string& where) {
  const json& v = object.at(key);
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0)
    throw OrchError(ErrorKind::SchemaError, where + "." + key + " must be a non-negative integer");
  return v.get<std::int64_t>();
}

std::int64_t get_positive_int(const json& object, const std::string& key,
                              const std::string& where) {
  std::int64_t v = get_nonneg_int(object, key, where);
  if (v == 0)
    throw OrchError(ErrorKind::SchemaError, where + "." + key + " must be positive");
  return v;
}

bool get_bool(const json& object, const std::string& key, const std::string& where) {
  const json& v = object.at(key);
  if (!v.is_boolean())
    throw OrchError(ErrorKind::SchemaError, where + "." + key + " must be a boolean");
  return v.get<bool>();
}

std::int64_t read_scaled(const json& value, int frac_digits, const std::string& field) {
  std::string text;
  if (value.is_string()) {
    text = value.get<std::string>();
  } else if (value.is_number()) {
    // dump() renders integers exactly and doubles in shortest round-trip
    // form, so any value on the grid survives the trip unchanged.
    text = value.dump();
  } else {
    throw OrchError(ErrorKind::SchemaError, field + " must be a number or a decimal string");
  }
  std::int64_t scaled = parse_scaled_decimal(text, frac_digits, field);
  if (scaled < 0)
    throw OrchError(ErrorKind::SchemaError, field + " must be non-negative");
  return scaled;
}

DomainTech parse_tech(const std::string& text, const std::string& where) {
  if (text == "ran") return DomainTech::Ran;
  if (text == "packet") return DomainTech::Packet;
  if (text == "optical") return DomainTech::Optical;
  throw OrchError(ErrorKind::SchemaError, where + ": unknown domain tech '" + text + "'");
}

NodeKind parse_node_kind(const std::string& text, const std::string& where) {
  if (text == "enb") return NodeKind::Enb;
  if (text == "packet-switch") return NodeKind::PacketSwitch;
  if (text == "roadm") return NodeKind::Roadm;
  if (text == "ran-gateway") return NodeKind::RanGateway;
  if (text == "dc-gateway") return NodeKind::DcGateway;
  throw OrchError(ErrorKind::SchemaError, where + ": unknown node kind '" + text + "'");
}

bool kind_allowed_in(NodeKind kind, DomainTech tech) {
  switch (tech) {
    case DomainTech::Ran:
      return kind == NodeKind::Enb || kind == NodeKind::RanGateway ||
             kind == NodeKind::PacketSwitch;
    case DomainTech::Packet:
      return kind == NodeKind::PacketSwitch || kind == NodeKind::DcGateway;
    case DomainTech::Optical:
      return kind == NodeKind::Roadm;
  }
  return false;
}

template <typename Map>
void check_unique(const Map& registry, const Id& id, const std::string& what) {
  if (registry.count(id))
    throw OrchError(ErrorKind::ConsistencyError, "duplicate " + what + " id '" + id + "'");
}

void load_domains(World& world, const json& domains) {
  for (const json& dj : expect_array(domains, "scenario.domains")) {
    expect_object(dj, "domain");
    require_keys(dj, {"id", "tech", "nodes"}, {}, "domain");
    Domain dom;
    dom.id = get_string(dj, "id", "domain");
    check_unique(world.topo.domains, dom.id, "domain");
    dom.tech = parse_tech(get_string(dj, "tech", "domain"), "domain '" + dom.id + "'");
    dom.controller = controller_for(dom.tech);

    for (const json& nj : expect_array(dj.at("nodes"), "domain '" + dom.id + "'.nodes")) {
      expect_object(nj, "node");
      require_keys(nj, {"id", "kind"}, {"dc"}, "node");
      Node node;
      node.id = get_string(nj, "id", "node");
      check_unique(world.topo.nodes, node.id, "node");
      node.domain_id = dom.id;
      node.kind = parse_node_kind(get_string(nj, "kind", "node"), "node '" + node.id + "'");
      if (!kind_allowed_in(node.kind, dom.tech))
        throw OrchError(ErrorKind::ConsistencyError,
                        std::string(node_kind_name(node.kind)) + " '" + node.id +
                            "' cannot live in " + tech_name(dom.tech) + " domain '" + dom.id +
                            "'");
      dom.node_ids.insert(node.id);
      world.topo.nodes[node.id] = std::move(node);
    }
    world.topo.domains[dom.id] = std::move(dom);
  }
}

void load_links(World& world, const json& links) {
  for (const json& lj : expect_array(links, "scenario.links")) {
    expect_object(lj, "link");
    require_keys(lj, {"id", "src", "dst", "medium"}, {}, "link");
    Link link;
    link.id = get_string(lj, "id", "link");
    check_unique(world.topo.links, link.id, "link");
    link.src = get_string(lj, "src", "link");
    link.dst = get_string(lj, "dst", "link");
    const std::string where = "link '" + link.id + "'";
    for (const Id& end : {link.src, link.dst})
      if (!world.topo.nodes.count(end))
        throw OrchError(ErrorKind::ReferenceError, where + " references unknown node '" + end + "'");
    if (link.src == link.dst)
      throw OrchError(ErrorKind::ConsistencyError, where + " is a self-loop");

    const Id& src_dom = world.topo.nodes.at(link.src).domain_id;
    const Id& dst_dom = world.topo.nodes.at(link.dst).domain_id;
    link.scope = src_dom == dst_dom ? LinkScope::IntraDomain : LinkScope::InterDomain;

    const json& mj = expect_object(lj.at("medium"), where + ".medium");
    require_keys(mj, {}, {"packet", "optical"}, where + ".medium");
    if (mj.contains("packet") == mj.contains("optical"))
      throw OrchError(ErrorKind::SchemaError,
                      where + ".medium must carry exactly one of packet/optical");

    if (mj.contains("packet")) {
      const json& pj = expect_object(mj.at("packet"), where + ".medium.packet");
      require_keys(pj, {"capacity_mbps", "latency_ms"}, {}, where + ".medium.packet");
      PacketMedium med;
      med.capacity_kbps = read_mbps(pj.at("capacity_mbps"), where + ".capacity_mbps");
      med.latency_ns = read_ms(pj.at("latency_ms"), where + ".latency_ms");
      link.medium = std::move(med);
      // Packet bits terminate on packet-capable gear; a packet link wholly
      // inside an optical domain has no forwarding plane to live on.
      if (link.scope == LinkScope::IntraDomain && !world.topo.packet_capable(src_dom))
        throw OrchError(ErrorKind::ConsistencyError,
                        where + " is a packet link inside optical domain '" + src_dom + "'");
    } else {
      const json& oj = expect_object(mj.at("optical"), where + ".medium.optical");
      require_keys(oj, {"slot_count", "latency_ms"}, {}, where + ".medium.optical");
      OpticalMedium med;
      med.grid.slot_count = static_cast<int>(get_positive_int(oj, "slot_count", where));
      med.grid.occupied.assign(static_cast<std::size_t>(med.grid.slot_count), 0);
      med.latency_ns = read_ms(oj.at("latency_ms"), where + ".latency_ms");
      link.medium = std::move(med);
      if (link.scope == LinkScope::InterDomain)
        throw OrchError(ErrorKind::ConsistencyError,
                        where + ": inter-domain links hand off at the packet layer");
      if (world.topo.domains.at(src_dom).tech != DomainTech::Optical)
        throw OrchError(ErrorKind::ConsistencyError,
                        where + " is an optical link outside an optical domain");
    }
    world.topo.links[link.id] = std::move(link);
  }
}

void load_datacenters(World& world, const json& dcs) {
  for (const json& dj : expect_array(dcs, "scenario.datacenters")) {
    expect_object(dj, "datacenter");
    require_keys(dj, {"id", "tier", "attach_node", "cpu", "ram_mb", "disk_gb", "images"}, {},
                 "datacenter");
    DataCenter dc;
    dc.id = get_string(dj, "id", "datacenter");
    check_unique(world.topo.dcs, dc.id, "datacenter");
    const std::string where = "datacenter '" + dc.id + "'";
    dc.tier = parse_tier(dj.at("tier"), where);
    dc.attach_node = get_string(dj, "attach_node", "datacenter");
    auto node_it = world.topo.nodes.find(dc.attach_node);
    if (node_it == world.topo.nodes.end())
      throw OrchError(ErrorKind::ReferenceError,
                      where + " attaches at unknown node '" + dc.attach_node + "'");
    if (!world.topo.packet_capable(node_it->second.domain_id))
      throw OrchError(ErrorKind::ConsistencyError,
                      where + " must attach inside a packet-capable domain");
    if (node_it->second.dc_id)
      throw OrchError(ErrorKind::ConsistencyError,
                      "node '" + dc.attach_node + "' already hosts datacenter '" +
                          *node_it->second.dc_id + "'");
    node_it->second.dc_id = dc.id;
    dc.cpu_total = get_nonneg_int(dj, "cpu", where);
    dc.ram_total = get_nonneg_int(dj, "ram_mb", where);
    dc.disk_total = get_nonneg_int(dj, "disk_gb", where);
    for (const json& ij : expect_array(dj.at("images"), where + ".images")) {
      if (!ij.is_string() || ij.get<std::string>().empty())
        throw OrchError(ErrorKind::SchemaError, where + ".images entries must be strings");
      dc.images.insert(ij.get<std::string>());
    }
    world.topo.dcs[dc.id] = std::move(dc);
  }
}

// The optional per-node `dc` annotation is a readability cross-check against
// the datacenter's attach_node, not a second source of truth.
void check_node_dc_annotations(World& world, const json& domains) {
  for (const json& dj : expect_array(domains, "scenario.domains"))
    for (const json& nj : dj.at("nodes")) {
      if (!nj.contains("dc")) continue;
      std::string node_id = nj.at("id").get<std::string>();
      std::string dc_id = get_string(nj, "dc", "node '" + node_id + "'");
      auto it = world.topo.dcs.find(dc_id);
      if (it == world.topo.dcs.end())
        throw OrchError(ErrorKind::ReferenceError,
                        "node '" + node_id + "' names unknown datacenter '" + dc_id + "'");
      if (it->second.attach_node != node_id)
        throw OrchError(ErrorKind::ConsistencyError,
                        "node '" + node_id + "' names datacenter '" + dc_id +
                            "' but it attaches at '" + it->second.attach_node + "'");
    }
}

void load_tenants(World& world, const json& tenants) {
  for (const json& tj : expect_array(tenants, "scenario.tenants")) {
    expect_object(tj, "tenant");
    require_keys(tj, {"id", "name"}, {}, "tenant");
    Tenant t;
    t.id = get_string(tj, "id", "tenant");
    check_unique(world.topo.tenants, t.id, "tenant");
    t.name = get_string(tj, "name", "tenant");
    world.topo.tenants[t.id] = std::move(t);
  }
}

void load_catalog(World& world, const json& catalog) {
  for (const json& cj : expect_array(catalog, "scenario.vnf_catalog")) {
    expect_object(cj, "vnf_catalog entry");
    require_keys(cj, {"type_id", "role", "cpu", "ram_mb", "disk_gb", "image_id", "config_schema"},
                 {}, "vnf_catalog entry");
    nfv::VnfDescriptor d;
    d.type_id = get_string(cj, "type_id", "vnf_catalog entry");
    check_unique(world.vnf_catalog, d.type_id, "vnf type");
    const std::string where = "vnf type '" + d.type_id + "'";
    std::string role = get_string(cj, "role", "vnf_catalog entry");
    d.role = parse_role(role, where);
    if (d.role == nfv::VnfRole::Other) d.role_tag = role;
    d.cpu = get_nonneg_int(cj, "cpu", where);
    d.ram_mb = get_nonneg_int(cj, "ram_mb", where);
    d.disk_gb = get_nonneg_int(cj, "disk_gb", where);
    d.image_id = get_string(cj, "image_id", "vnf_catalog entry");
    for (const json& kj : expect_array(cj.at("config_schema"), where + ".config_schema")) {
      if (!kj.is_string() || kj.get<std::string>().empty())
        throw OrchError(ErrorKind::SchemaError, where + ".config_schema entries must be strings");
      d.config_schema.push_back(kj.get<std::string>());
    }
    world.vnf_catalog[d.type_id] = std::move(d);
  }
}

void load_split_table(World& world, const json& table) {
  std::set<Id> seen;
  for (const json& sj : expect_array(table, "scenario.split_table")) {
    expect_object(sj, "split option");
    require_keys(sj,
                 {"id", "boundary", "fronthaul_bw_mbps", "fronthaul_latency_budget_ms",
                  "energy_cost"},
                 {}, "split option");
    uc::SplitOption opt;
    opt.id = get_string(sj, "id", "split option");
    if (!seen.insert(opt.id).second)
      throw OrchError(ErrorKind::ConsistencyError, "duplicate split option id '" + opt.id + "'");
    const std::string where = "split option '" + opt.id + "'";
    opt.boundary = parse_boundary(get_string(sj, "boundary", "split option"), where);
    opt.fronthaul_bw_kbps = read_mbps(sj.at("fronthaul_bw_mbps"), where + ".fronthaul_bw_mbps");
    const json& budget = sj.at("fronthaul_latency_budget_ms");
    if (!budget.is_null())  // null = unbounded
      opt.fronthaul_latency_budget_ns = read_ms(budget, where + ".fronthaul_latency_budget_ms");
    opt.energy_cost_milli = read_milli(sj.at("energy_cost"), where + ".energy_cost");
    world.split_table.push_back(std::move(opt));
  }
}

void load_options(World& world, const json& options) {
  expect_object(options, "scenario.options");
  require_keys(options, {},
               {"ksp_k", "min_lsp_width", "gbps_per_slot", "retain_idle_tunnels",
                "image_copy_allowed"},
               "scenario.options");
  if (options.contains("ksp_k"))
    world.options.ksp_k = static_cast<int>(get_positive_int(options, "ksp_k", "options"));
  if (options.contains("min_lsp_width"))
    world.options.min_lsp_width =
        static_cast<int>(get_positive_int(options, "min_lsp_width", "options"));
  if (options.contains("gbps_per_slot")) {
    // gbps on a 6-digit grid lands exactly on the kbps integer lattice.
    std::int64_t kbps = read_scaled(options.at("gbps_per_slot"), 6, "options.gbps_per_slot");
    if (kbps <= 0)
      throw OrchError(ErrorKind::SchemaError, "options.gbps_per_slot must be positive");
    world.options.kbps_per_slot = kbps;
  }
  if (options.contains("retain_idle_tunnels"))
    world.options.retain_idle_tunnels = get_bool(options, "retain_idle_tunnels", "options");
  if (options.contains("image_copy_allowed"))
    world.options.image_copy_allowed = get_bool(options, "image_copy_allowed", "options");
}

std::vector<ScenarioEvent> load_events(const json& events) {
  std::vector<ScenarioEvent> out;
  std::int64_t last_seq = -1;
  for (const json& ej : expect_array(events, "scenario.events")) {
    expect_object(ej, "event");
    if (!ej.contains("seq") || !ej.at("seq").is_number_integer() ||
        ej.at("seq").get<std::int64_t>() < 0)
      throw OrchError(ErrorKind::SchemaError, "event.seq must be a non-negative integer");
    ScenarioEvent ev;
    ev.seq = ej.at("seq").get<std::int64_t>();
    if (ev.seq <= last_seq)
      throw OrchError(ErrorKind::ConsistencyError,
                      "event seq " + std::to_string(ev.seq) + " is not strictly increasing");
    last_seq = ev.seq;
    ev.action = get_string(ej, "action", "event");
    if (!known_action(ev.action))
      throw OrchError(ErrorKind::SchemaError, "unknown event action '" + ev.action + "'");
    if (ej.contains("expect")) {
      std::string expect = get_string(ej, "expect", "event");
      // Both "CapacityExceeded" and the sugar "error(CapacityExceeded)" work.
      if (expect.rfind("error(", 0) == 0 && expect.back() == ')')
        expect = expect.substr(6, expect.size() - 7);
      ErrorKind kind;
      if (!parse_error_kind(expect, kind))
        throw OrchError(ErrorKind::SchemaError, "event.expect names unknown error kind '" +
                                                    expect + "'");
      ev.expect_error = expect;
    }
    ev.payload = ej;
    ev.payload.erase("seq");
    ev.payload.erase("action");
    ev.payload.erase("expect");
    validate_event_payload(ev.action, ev.payload);
    out.push_back(std::move(ev));
  }
  return out;
}

// Payload validators; the execution layer in the harness re-reads the same
// fields, so mistakes surface here, before any event has run.

void validate_qos(const json& qos, const std::string& where) {
  expect_object(qos, where);
  require_keys(qos, {"gbr_mbps"}, {"max_latency_ms", "priority"}, where);
  read_mbps(qos.at("gbr_mbps"), where + ".gbr_mbps");
  if (qos.contains("max_latency_ms")) read_ms(qos.at("max_latency_ms"), where + ".max_latency_ms");
  if (qos.contains("priority") && !qos.at("priority").is_number_integer())
    throw OrchError(ErrorKind::SchemaError, where + ".priority must be an integer");
}

void validate_fronthaul_state(const json& st, const std::string& where) {
  expect_object(st, where);
  require_keys(st, {"available_bw_mbps", "path_latency_ms"}, {}, where);
  read_mbps(st.at("available_bw_mbps"), where + ".available_bw_mbps");
  read_ms(st.at("path_latency_ms"), where + ".path_latency_ms");
}

void validate_graph(const json& graph) {
  expect_object(graph, "deploy_graph.graph");
  require_keys(graph, {"tenant_id", "nodes", "edges"}, {"id", "placement_hints"},
               "deploy_graph.graph");
  get_string(graph, "tenant_id", "graph");
  if (graph.contains("id")) get_string(graph, "id", "graph");
  std::set<std::string> node_ids;
  for (const json& nj : expect_array(graph.at("nodes"), "graph.nodes")) {
    expect_object(nj, "graph node");
    require_keys(nj, {"id"}, {"vnf_type", "endpoint"}, "graph node");
    std::string id = get_string(nj, "id", "graph node");
    if (nj.contains("vnf_type") == nj.contains("endpoint"))
      throw OrchError(ErrorKind::SchemaError,
                      "graph node '" + id + "' must carry exactly one of vnf_type/endpoint");
    if (nj.contains("vnf_type")) get_string(nj, "vnf_type", "graph node");
    if (nj.contains("endpoint")) get_string(nj, "endpoint", "graph node");
    node_ids.insert(id);
  }
  for (const json& ej : expect_array(graph.at("edges"), "graph.edges")) {
    expect_object(ej, "graph edge");
    require_keys(ej, {"id", "from", "to", "bw_mbps"}, {"max_latency_ms"}, "graph edge");
    std::string id = get_string(ej, "id", "graph edge");
    get_string(ej, "from", "graph edge");
    get_string(ej, "to", "graph edge");
    read_mbps(ej.at("bw_mbps"), "graph edge '" + id + "'.bw_mbps");
    if (ej.contains("max_latency_ms"))
      read_ms(ej.at("max_latency_ms"), "graph edge '" + id + "'.max_latency_ms");
  }
  if (graph.contains("placement_hints")) {
    const json& hints = expect_object(graph.at("placement_hints"), "graph.placement_hints");
    for (const auto& [node_id, tier] : hints.items()) {
      if (!node_ids.count(node_id))
        throw OrchError(ErrorKind::SchemaError,
                        "placement hint names unknown graph node '" + node_id + "'");
      parse_tier(tier, "placement hint for '" + node_id + "'");
    }
  }
}

}  // namespace

BwKbps read_mbps(const json& value, const std::string& field) {
  return read_scaled(value, 3, field);
}

LatencyNs read_ms(const json& value, const std::string& field) {
  return read_scaled(value, 6, field);
}

std::int64_t read_milli(const json& value, const std::string& field) {
  return read_scaled(value, 3, field);
}

void require_keys(const json& object, const std::vector<std::string>& required,
                  const std::vector<std::string>& optional, const std::string& where) {
  expect_object(object, where);
  for (const std::string& key : required)
    if (!object.contains(key))
      throw OrchError(ErrorKind::SchemaError, where + " is missing required field '" + key + "'");
  for (const auto& [key, value] : object.items()) {
    (void)value;
    bool ok = std::find(required.begin(), required.end(), key) != required.end() ||
              std::find(optional.begin(), optional.end(), key) != optional.end();
    if (!ok)
      throw OrchError(ErrorKind::SchemaError, where + " has unknown field '" + key + "'");
  }
}

DcTier parse_tier(const json& value, const std::string& where) {
  if (value.is_string()) {
    std::string text = value.get<std::string>();
    if (text == "edge") return DcTier::Edge;
    if (text == "core") return DcTier::Core;
  }
  throw OrchError(ErrorKind::SchemaError, where + ": tier must be \"edge\" or \"core\"");
}

nfv::VnfRole parse_role(const std::string& text, const std::string& where) {
  if (text == "mme") return nfv::VnfRole::Mme;
  if (text == "sgw") return nfv::VnfRole::Sgw;
  if (text == "pgw") return nfv::VnfRole::Pgw;
  if (text == "ran-stack") return nfv::VnfRole::RanStack;
  if (text == "firewall") return nfv::VnfRole::Firewall;
  if (text == "load-balancer") return nfv::VnfRole::LoadBalancer;
  if (text == "other") return nfv::VnfRole::Other;
  throw OrchError(ErrorKind::SchemaError, where + ": unknown VNF role '" + text + "'");
}

uc::SplitBoundary parse_boundary(const std::string& text, const std::string& where) {
  if (text == "below-phy") return uc::SplitBoundary::BelowPhy;
  if (text == "phy-mac") return uc::SplitBoundary::PhyMac;
  if (text == "mac-rlc") return uc::SplitBoundary::MacRlc;
  if (text == "rlc-pdcp") return uc::SplitBoundary::RlcPdcp;
  if (text == "pdcp-rrc") return uc::SplitBoundary::PdcpRrc;
  if (text == "above-rrc") return uc::SplitBoundary::AboveRrc;
  throw OrchError(ErrorKind::SchemaError, where + ": unknown split boundary '" + text + "'");
}

bool known_action(const std::string& action) {
  static const std::set<std::string> actions{
      "provision_e2e", "teardown_e2e", "create_slice", "delete_slice", "create_vm",
      "migrate_vm", "delete_vm", "deploy_graph", "teardown_graph", "migrate_vnf",
      "bootstrap_epc", "establish_bearer", "release_bearer", "link_down", "link_up",
      "select_and_deploy_split", "reevaluate_split", "snapshot_check"};
  return actions.count(action) > 0;
}

void validate_event_payload(const std::string& action, const json& payload) {
  const std::string where = "event " + action;
  if (action == "provision_e2e") {
    require_keys(payload, {"tenant_id", "src_node", "dst_node", "bw_mbps"},
                 {"id", "max_latency_ms", "slice_id"}, where);
    get_string(payload, "tenant_id", where);
    get_string(payload, "src_node", where);
    get_string(payload, "dst_node", where);
    read_mbps(payload.at("bw_mbps"), where + ".bw_mbps");
    if (payload.contains("id")) get_string(payload, "id", where);
    if (payload.contains("max_latency_ms"))
      read_ms(payload.at("max_latency_ms"), where + ".max_latency_ms");
    if (payload.contains("slice_id")) get_string(payload, "slice_id", where);
  } else if (action == "teardown_e2e") {
    require_keys(payload, {"service_id"}, {}, where);
    get_string(payload, "service_id", where);
  } else if (action == "create_slice") {
    require_keys(payload, {"tenant_id", "member_nodes", "carve"}, {"id"}, where);
    get_string(payload, "tenant_id", where);
    if (payload.contains("id")) get_string(payload, "id", where);
    for (const json& nj : expect_array(payload.at("member_nodes"), where + ".member_nodes"))
      if (!nj.is_string() || nj.get<std::string>().empty())
        throw OrchError(ErrorKind::SchemaError, where + ".member_nodes entries must be strings");
    const json& carve = expect_object(payload.at("carve"), where + ".carve");
    for (const auto& [link_id, mbps] : carve.items())
      read_mbps(mbps, where + ".carve['" + link_id + "']");
  } else if (action == "delete_slice") {
    require_keys(payload, {"slice_id"}, {}, where);
    get_string(payload, "slice_id", where);
  } else if (action == "create_vm") {
    require_keys(payload, {"cpu", "ram_mb", "disk_gb", "image_id"}, {"preferred_tier"}, where);
    get_nonneg_int(payload, "cpu", where);
    get_nonneg_int(payload, "ram_mb", where);
    get_nonneg_int(payload, "disk_gb", where);
    get_string(payload, "image_id", where);
    if (payload.contains("preferred_tier")) parse_tier(payload.at("preferred_tier"), where);
  } else if (action == "migrate_vm") {
    require_keys(payload, {"vm_id", "target_dc"}, {}, where);
    get_string(payload, "vm_id", where);
    get_string(payload, "target_dc", where);
  } else if (action == "delete_vm") {
    require_keys(payload, {"vm_id"}, {}, where);
    get_string(payload, "vm_id", where);
  } else if (action == "deploy_graph") {
    require_keys(payload, {"graph"}, {}, where);
    validate_graph(payload.at("graph"));
  } else if (action == "teardown_graph") {
    require_keys(payload, {"graph_id"}, {}, where);
    get_string(payload, "graph_id", where);
  } else if (action == "migrate_vnf") {
    require_keys(payload, {"instance_id", "target_dc"}, {}, where);
    get_string(payload, "instance_id", where);
    get_string(payload, "target_dc", where);
  } else if (action == "bootstrap_epc") {
    require_keys(payload, {"tenant_id"}, {"placement"}, where);
    get_string(payload, "tenant_id", where);
    if (payload.contains("placement")) {
      const json& pl = expect_object(payload.at("placement"), where + ".placement");
      for (const auto& [role, tier] : pl.items()) {
        parse_role(role, where + ".placement");
        parse_tier(tier, where + ".placement['" + role + "']");
      }
    }
  } else if (action == "establish_bearer") {
    require_keys(payload, {"enb_id", "qos"}, {}, where);
    get_string(payload, "enb_id", where);
    validate_qos(payload.at("qos"), where + ".qos");
  } else if (action == "release_bearer") {
    require_keys(payload, {"bearer_id"}, {}, where);
    get_string(payload, "bearer_id", where);
  } else if (action == "link_down" || action == "link_up") {
    require_keys(payload, {"link_id"}, {}, where);
    get_string(payload, "link_id", where);
  } else if (action == "select_and_deploy_split") {
    require_keys(payload, {"enb_id", "fronthaul_state"}, {"tier"}, where);
    get_string(payload, "enb_id", where);
    validate_fronthaul_state(payload.at("fronthaul_state"), where + ".fronthaul_state");
    if (payload.contains("tier")) parse_tier(payload.at("tier"), where);
  } else if (action == "reevaluate_split") {
    require_keys(payload, {"enb_id", "fronthaul_state"}, {}, where);
    get_string(payload, "enb_id", where);
    validate_fronthaul_state(payload.at("fronthaul_state"), where + ".fronthaul_state");
  } else if (action == "snapshot_check") {
    require_keys(payload, {}, {"label"}, where);
    if (payload.contains("label")) get_string(payload, "label", where);
  } else {
    throw OrchError(ErrorKind::SchemaError, "unknown event action '" + action + "'");
  }
}

Scenario load_scenario(const json& document) {
  expect_object(document, "document root");
  require_keys(document, {"scenario"}, {}, "document root");
  const json& sc = expect_object(document.at("scenario"), "scenario");
  require_keys(sc, {"name"},
               {"domains", "links", "datacenters", "tenants", "vnf_catalog", "split_table",
                "events", "options"},
               "scenario");

  Scenario out;
  out.name = get_string(sc, "name", "scenario");
  out.world.topo.name = out.name;

  if (sc.contains("options")) load_options(out.world, sc.at("options"));
  if (sc.contains("domains")) load_domains(out.world, sc.at("domains"));
  if (sc.contains("links")) load_links(out.world, sc.at("links"));
  if (sc.contains("datacenters")) load_datacenters(out.world, sc.at("datacenters"));
  if (sc.contains("domains")) check_node_dc_annotations(out.world, sc.at("domains"));
  if (sc.contains("tenants")) load_tenants(out.world, sc.at("tenants"));
  if (sc.contains("vnf_catalog")) load_catalog(out.world, sc.at("vnf_catalog"));
  if (sc.contains("split_table")) load_split_table(out.world, sc.at("split_table"));
  if (sc.contains("events")) out.events = load_events(sc.at("events"));
  return out;
}

Scenario load_scenario_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw OrchError(ErrorKind::SchemaError, "cannot open scenario file '" + path + "'");
  json document;
  try {
    document = json::parse(in);
  } catch (const json::parse_error& e) {
    throw OrchError(ErrorKind::SchemaError,
                    "scenario file '" + path + "' is not valid JSON: " + e.what());
  }
  return load_scenario(document);
}

}  // namespace orch5g
