#include "orch5g/harness.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "orch5g/cloud_orch.hpp"
#include "orch5g/errors.hpp"
#include "orch5g/net_orch.hpp"
#include "orch5g/nfv_orch.hpp"
#include "orch5g/optical_ctrl.hpp"
#include "orch5g/packet_ctrl.hpp"
#include "orch5g/use_cases.hpp"

namespace orch5g::harness {

using nlohmann::json;

namespace {

std::string hash_hex(std::uint64_t hash) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

std::string normalize_expect(std::string expect) {
  if (expect.rfind("error(", 0) == 0 && !expect.empty() && expect.back() == ')')
    expect = expect.substr(6, expect.size() - 7);
  return expect;
}

// ---- event execution ------------------------------------------------------

std::string do_provision_e2e(World& world, const json& p) {
  netorch::E2ERequest req;
  if (p.contains("id")) req.id = p.at("id").get<std::string>();
  req.tenant_id = p.at("tenant_id").get<std::string>();
  req.src_node = p.at("src_node").get<std::string>();
  req.dst_node = p.at("dst_node").get<std::string>();
  req.bw_kbps = read_mbps(p.at("bw_mbps"), "bw_mbps");
  if (p.contains("max_latency_ms"))
    req.max_latency_ns = read_ms(p.at("max_latency_ms"), "max_latency_ms");
  if (p.contains("slice_id")) req.slice_id = p.at("slice_id").get<std::string>();
  const netorch::Service& svc = netorch::provision_e2e(world, req);
  return "service " + svc.id + " latency=" + format_ms(svc.plan.total_latency_ns) +
         "ms segments=" + std::to_string(svc.plan.segments.size()) +
         " stitches=" + std::to_string(svc.plan.stitch_links.size());
}

std::string do_create_slice(World& world, const json& p) {
  std::set<Id> members;
  for (const json& n : p.at("member_nodes")) members.insert(n.get<std::string>());
  std::map<Id, BwKbps> carve;
  for (const auto& [link_id, mbps] : p.at("carve").items())
    carve[link_id] = read_mbps(mbps, "carve");
  Id slice_id = p.contains("id") ? p.at("id").get<std::string>() : Id{};
  const netorch::Slice& slice = netorch::create_slice(world, p.at("tenant_id").get<std::string>(),
                                                      members, carve, slice_id);
  return "slice " + slice.id + " carved " + std::to_string(slice.carve_kbps.size()) + " links";
}

std::string do_create_vm(World& world, const json& p) {
  cloud::VmSpec spec;
  spec.cpu = p.at("cpu").get<std::int64_t>();
  spec.ram_mb = p.at("ram_mb").get<std::int64_t>();
  spec.disk_gb = p.at("disk_gb").get<std::int64_t>();
  spec.image_id = p.at("image_id").get<std::string>();
  if (p.contains("preferred_tier"))
    spec.preferred_tier = parse_tier(p.at("preferred_tier"), "preferred_tier");
  const cloud::Vm& vm = cloud::create_vm(world, spec);
  return "vm " + vm.id + " at " + vm.dc_id;
}

nfv::ForwardingGraph graph_from_json(const json& g) {
  nfv::ForwardingGraph graph;
  if (g.contains("id")) graph.id = g.at("id").get<std::string>();
  graph.tenant_id = g.at("tenant_id").get<std::string>();
  for (const json& nj : g.at("nodes")) {
    nfv::GraphNode node;
    node.id = nj.at("id").get<std::string>();
    node.is_vnf = nj.contains("vnf_type");
    if (node.is_vnf)
      node.vnf_type = nj.at("vnf_type").get<std::string>();
    else
      node.endpoint = nj.at("endpoint").get<std::string>();
    graph.nodes.push_back(std::move(node));
  }
  for (const json& ej : g.at("edges")) {
    nfv::GraphEdge edge;
    edge.id = ej.at("id").get<std::string>();
    edge.from = ej.at("from").get<std::string>();
    edge.to = ej.at("to").get<std::string>();
    edge.bw_kbps = read_mbps(ej.at("bw_mbps"), "bw_mbps");
    if (ej.contains("max_latency_ms"))
      edge.max_latency_ns = read_ms(ej.at("max_latency_ms"), "max_latency_ms");
    graph.edges.push_back(std::move(edge));
  }
  if (g.contains("placement_hints"))
    for (const auto& [node_id, tier] : g.at("placement_hints").items())
      graph.placement_hints[node_id] = parse_tier(tier, "placement_hints");
  return graph;
}

std::string do_bootstrap_epc(World& world, const json& p) {
  std::map<nfv::VnfRole, DcTier> placement;
  if (p.contains("placement"))
    for (const auto& [role, tier] : p.at("placement").items())
      placement[parse_role(role, "placement")] = parse_tier(tier, "placement");
  const uc::EpcState& epc = uc::bootstrap_epc(world, p.at("tenant_id").get<std::string>(),
                                              placement);
  return "epc graph " + epc.graph_id + " sgw-attach=" + epc.sgw_attach +
         " interfaces=" + std::to_string(epc.interfaces.size());
}

std::string do_establish_bearer(World& world, const json& p) {
  const json& q = p.at("qos");
  uc::Qos qos;
  qos.gbr_kbps = read_mbps(q.at("gbr_mbps"), "gbr_mbps");
  if (q.contains("max_latency_ms"))
    qos.max_latency_ns = read_ms(q.at("max_latency_ms"), "max_latency_ms");
  if (q.contains("priority")) qos.priority = q.at("priority").get<int>();
  const uc::Bearer& bearer = uc::establish_bearer(world, p.at("enb_id").get<std::string>(), qos);
  return "bearer " + bearer.id + " via " + bearer.transport_service;
}

std::string do_link_down(World& world, const json& p) {
  Id link_id = p.at("link_id").get<std::string>();
  std::set<Id> before;
  for (const auto& [sid, svc] : world.orch_state.services) {
    (void)svc;
    before.insert(sid);
  }
  if (world.topo.link(link_id).is_packet())
    packet::mark_link_down(world, link_id);
  else
    optical::mark_link_down(world, link_id);
  auto outcomes = uc::on_transport_failure(world, link_id);

  std::string detail = "link " + link_id + " down";
  for (const auto& [bid, outcome] : outcomes)
    detail += "; " + bid + (outcome.recovered ? "=recovered" : "=lost");
  for (const Id& sid : before)
    if (!world.orch_state.services.count(sid)) detail += "; " + sid + "=removed";
  return detail;
}

std::string do_select_and_deploy_split(World& world, const json& p) {
  uc::FronthaulState st;
  const json& fs = p.at("fronthaul_state");
  st.available_bw_kbps = read_mbps(fs.at("available_bw_mbps"), "available_bw_mbps");
  st.path_latency_ns = read_ms(fs.at("path_latency_ms"), "path_latency_ms");
  DcTier tier = p.contains("tier") ? parse_tier(p.at("tier"), "tier") : DcTier::Edge;
  Id enb = p.at("enb_id").get<std::string>();
  Id choice = uc::select_split(world.split_table, st);
  const uc::SplitPlan& plan = uc::deploy_split(world, enb, uc::split_option(world, choice), tier);
  return "enb " + enb + " option " + plan.chosen_option +
         (plan.graph_id ? " graph " + *plan.graph_id : std::string(" all-local"));
}

std::string do_reevaluate_split(World& world, const json& p) {
  uc::FronthaulState st;
  const json& fs = p.at("fronthaul_state");
  st.available_bw_kbps = read_mbps(fs.at("available_bw_mbps"), "available_bw_mbps");
  st.path_latency_ns = read_ms(fs.at("path_latency_ms"), "path_latency_ms");
  Id enb = p.at("enb_id").get<std::string>();
  const uc::SplitPlan& plan = uc::reevaluate_split(world, enb, st);
  return "enb " + enb + " option " + plan.chosen_option +
         (plan.graph_id ? " graph " + *plan.graph_id : std::string(" all-local"));
}

std::string dispatch(World& world, const std::string& action, const json& p) {
  if (action == "provision_e2e") return do_provision_e2e(world, p);
  if (action == "teardown_e2e") {
    Id id = p.at("service_id").get<std::string>();
    netorch::teardown_e2e(world, id);
    return "service " + id + " removed";
  }
  if (action == "create_slice") return do_create_slice(world, p);
  if (action == "delete_slice") {
    Id id = p.at("slice_id").get<std::string>();
    netorch::delete_slice(world, id);
    return "slice " + id + " deleted";
  }
  if (action == "create_vm") return do_create_vm(world, p);
  if (action == "migrate_vm") {
    const cloud::Vm& vm = cloud::migrate_vm(world, p.at("vm_id").get<std::string>(),
                                            p.at("target_dc").get<std::string>());
    return "vm " + vm.id + " at " + vm.dc_id;
  }
  if (action == "delete_vm") {
    Id id = p.at("vm_id").get<std::string>();
    cloud::delete_vm(world, id);
    return "vm " + id + " deleted";
  }
  if (action == "deploy_graph") {
    const nfv::GraphEmbedding& emb =
        nfv::deploy_forwarding_graph(world, graph_from_json(p.at("graph")));
    return "graph " + emb.graph_id + " vnfs=" + std::to_string(emb.placements.size()) +
           " edges=" + std::to_string(emb.edge_services.size());
  }
  if (action == "teardown_graph") {
    Id id = p.at("graph_id").get<std::string>();
    nfv::teardown_forwarding_graph(world, id);
    return "graph " + id + " torn down";
  }
  if (action == "migrate_vnf") {
    Id id = p.at("instance_id").get<std::string>();
    nfv::migrate_vnf(world, id, p.at("target_dc").get<std::string>());
    const Id& vm_id = world.nfv_state.instances.at(id).vm_id;
    return "vnf " + id + " at " + world.cloud_state.vms.at(vm_id).dc_id;
  }
  if (action == "bootstrap_epc") return do_bootstrap_epc(world, p);
  if (action == "establish_bearer") return do_establish_bearer(world, p);
  if (action == "release_bearer") {
    Id id = p.at("bearer_id").get<std::string>();
    uc::release_bearer(world, id);
    return "bearer " + id + " released";
  }
  if (action == "link_down") return do_link_down(world, p);
  if (action == "link_up") {
    Id id = p.at("link_id").get<std::string>();
    set_link_up(world.topo, id);
    return "link " + id + " up";
  }
  if (action == "select_and_deploy_split") return do_select_and_deploy_split(world, p);
  if (action == "reevaluate_split") return do_reevaluate_split(world, p);
  throw OrchError(ErrorKind::SchemaError, "unknown event action '" + action + "'");
}

LogRecord execute_event(RunContext& ctx, const ScenarioEvent& ev) {
  World& world = ctx.scenario.world;
  LogRecord rec;
  rec.seq = ev.seq;
  rec.action = ev.action;

  if (ev.action == "snapshot_check") {
    ResourceSnapshot now = snapshot(world.topo);
    bool pass = now.hash() == ctx.initial_hash;
    rec.outcome = pass ? "check-pass" : "check-fail";
    rec.detail = pass ? "snapshot matches the initial capture"
                      : "snapshot differs from the initial capture";
    rec.snapshot_hash = now.hash();
    rec.expectation_met = pass;
    return rec;
  }

  try {
    TxGuard tx(world);
    rec.detail = dispatch(world, ev.action, ev.payload);
    tx.commit();
    rec.outcome = "ok";
  } catch (const OrchError& e) {
    rec.outcome = std::string("error:") + error_kind_name(e.kind());
    rec.detail = e.detail();
  }
  rec.snapshot_hash = snapshot(world.topo).hash();
  rec.expectation_met = ev.expect_error.empty()
                            ? rec.outcome == "ok"
                            : rec.outcome == "error:" + ev.expect_error;
  return rec;
}

// ---- reporting ------------------------------------------------------------

struct Counts {
  std::int64_t services = 0, slices = 0, splits = 0;
  std::int64_t lsps_active = 0, lsps_total = 0;
  std::int64_t vms_active = 0, vms_total = 0;
  std::int64_t vnfs_running = 0, vnfs_total = 0;
  std::int64_t graphs_deployed = 0;
  std::map<std::string, std::int64_t> bearers{
      {"active", 0}, {"recovering", 0}, {"released", 0}, {"lost", 0}};
};

Counts gather_counts(const World& world) {
  Counts c;
  c.services = static_cast<std::int64_t>(world.orch_state.services.size());
  c.slices = static_cast<std::int64_t>(world.orch_state.slices.size());
  c.splits = static_cast<std::int64_t>(world.uc_state.splits.size());
  for (const auto& [id, lsp] : world.optical_state.lsps) {
    (void)id;
    ++c.lsps_total;
    if (lsp.state == optical::LspState::Active) ++c.lsps_active;
  }
  for (const auto& [id, vm] : world.cloud_state.vms) {
    (void)id;
    ++c.vms_total;
    if (vm.state != cloud::VmState::Deleted) ++c.vms_active;
  }
  for (const auto& [id, inst] : world.nfv_state.instances) {
    (void)id;
    ++c.vnfs_total;
    if (inst.state == nfv::VnfState::Running) ++c.vnfs_running;
  }
  for (const auto& [id, dg] : world.nfv_state.graphs) {
    (void)id;
    if (dg.embedding.state == nfv::EmbeddingState::Deployed) ++c.graphs_deployed;
  }
  if (world.uc_state.epc)
    for (const auto& [id, bearer] : world.uc_state.epc->bearers) {
      (void)id;
      ++c.bearers[uc::bearer_state_name(bearer.state)];
    }
  return c;
}

int occupied_slots(const SpectrumGrid& grid) {
  int n = 0;
  for (std::uint8_t bit : grid.occupied) n += bit ? 1 : 0;
  return n;
}

std::string text_report(const RunContext& ctx) {
  const World& world = ctx.scenario.world;
  Counts c = gather_counts(world);
  std::ostringstream out;
  out << "report: " << ctx.scenario.name << "\n";
  out << "counts: services=" << c.services << " slices=" << c.slices
      << " lsps=" << c.lsps_active << "/" << c.lsps_total << " vms=" << c.vms_active << "/"
      << c.vms_total << " vnfs=" << c.vnfs_running << "/" << c.vnfs_total
      << " graphs=" << c.graphs_deployed << " splits=" << c.splits << "\n";
  out << "bearers: active=" << c.bearers.at("active")
      << " recovering=" << c.bearers.at("recovering")
      << " released=" << c.bearers.at("released") << " lost=" << c.bearers.at("lost") << "\n";

  out << "links:\n";
  for (const auto& [id, link] : world.topo.links) {
    out << "  " << id << " | ";
    if (link.is_packet())
      out << "packet " << format_mbps(link.packet().reserved_kbps) << "/"
          << format_mbps(link.packet().capacity_kbps) << " mbps";
    else
      out << "optical " << occupied_slots(link.optical().grid) << "/"
          << link.optical().grid.slot_count << " slots";
    out << " | " << (link.up ? "up" : "down") << "\n";
  }

  out << "datacenters:\n";
  for (const auto& [id, dc] : world.topo.dcs)
    out << "  " << id << " | cpu " << dc.cpu_used << "/" << dc.cpu_total << " | ram "
        << dc.ram_used << "/" << dc.ram_total << " MB | disk " << dc.disk_used << "/"
        << dc.disk_total << " GB\n";

  out << "flow tables:\n" << packet::dump_flow_tables(world);
  out << "lsp database:\n" << optical::dump_lsp_db(world);
  out << "vm inventory:\n" << cloud::dump_inventory(world);
  out << "embeddings:\n" << nfv::dump_embeddings(world);

  out << "recovery:\n";
  for (const LogRecord& rec : ctx.log)
    if (rec.action == "link_down" && rec.outcome == "ok")
      out << "  @" << rec.seq << " " << rec.detail << "\n";
  return out.str();
}

std::string structured_report(const RunContext& ctx) {
  const World& world = ctx.scenario.world;
  Counts c = gather_counts(world);
  json doc;
  doc["scenario"] = ctx.scenario.name;
  doc["counts"] = {{"services", c.services},
                   {"slices", c.slices},
                   {"lsps_active", c.lsps_active},
                   {"lsps_total", c.lsps_total},
                   {"vms_active", c.vms_active},
                   {"vms_total", c.vms_total},
                   {"vnfs_running", c.vnfs_running},
                   {"vnfs_total", c.vnfs_total},
                   {"graphs_deployed", c.graphs_deployed},
                   {"splits", c.splits}};
  doc["bearers"] = c.bearers;

  json util = json::object();
  json grids = json::object();
  for (const auto& [id, link] : world.topo.links) {
    if (link.is_packet())
      util[id] = {{"reserved_mbps", format_mbps(link.packet().reserved_kbps)},
                  {"capacity_mbps", format_mbps(link.packet().capacity_kbps)},
                  {"up", link.up}};
    else
      grids[id] = {{"occupied_slots", occupied_slots(link.optical().grid)},
                   {"slot_count", link.optical().grid.slot_count},
                   {"up", link.up}};
  }
  doc["link_utilization"] = std::move(util);
  doc["grid_occupancy"] = std::move(grids);

  json dcs = json::object();
  for (const auto& [id, dc] : world.topo.dcs)
    dcs[id] = {{"cpu_used", dc.cpu_used},   {"cpu_total", dc.cpu_total},
               {"ram_used", dc.ram_used},   {"ram_total", dc.ram_total},
               {"disk_used", dc.disk_used}, {"disk_total", dc.disk_total}};
  doc["dc_usage"] = std::move(dcs);

  json recovery = json::array();
  for (const LogRecord& rec : ctx.log)
    if (rec.action == "link_down" && rec.outcome == "ok")
      recovery.push_back({{"seq", rec.seq}, {"detail", rec.detail}});
  doc["recovery"] = std::move(recovery);
  return doc.dump(2) + "\n";
}

}  // namespace

std::string LogRecord::to_json_line() const {
  json j{{"seq", seq},
         {"action", action},
         {"outcome", outcome},
         {"detail", detail},
         {"snapshot_hash", hash_hex(snapshot_hash)},
         {"expectation_met", expectation_met}};
  return j.dump();
}

RunContext open_context(const json& document) {
  RunContext ctx;
  ctx.scenario = load_scenario(document);
  ctx.initial_hash = snapshot(ctx.scenario.world.topo).hash();
  for (const ScenarioEvent& ev : ctx.scenario.events)
    ctx.next_seq = std::max(ctx.next_seq, ev.seq + 1);
  return ctx;
}

RunContext run_scenario(const json& document) {
  RunContext ctx = open_context(document);
  for (const ScenarioEvent& ev : ctx.scenario.events) {
    LogRecord rec = execute_event(ctx, ev);
    if (!rec.expectation_met) ctx.any_mismatch = true;
    ctx.log.push_back(std::move(rec));
  }
  return ctx;
}

const LogRecord& inject_event(RunContext& ctx, const std::string& action, const json& payload,
                              const std::string& expect_error) {
  if (!known_action(action))
    throw OrchError(ErrorKind::SchemaError, "unknown event action '" + action + "'");
  validate_event_payload(action, payload);
  ScenarioEvent ev;
  ev.seq = ctx.next_seq;
  ev.action = action;
  ev.payload = payload;
  if (!expect_error.empty()) {
    ev.expect_error = normalize_expect(expect_error);
    ErrorKind kind;
    if (!parse_error_kind(ev.expect_error, kind))
      throw OrchError(ErrorKind::SchemaError,
                      "expect names unknown error kind '" + ev.expect_error + "'");
  }
  LogRecord rec = execute_event(ctx, ev);
  if (!rec.expectation_met) ctx.any_mismatch = true;
  ctx.next_seq = ev.seq + 1;
  ctx.log.push_back(std::move(rec));
  return ctx.log.back();
}

std::string emit_report(const RunContext& ctx, ReportFormat format) {
  return format == ReportFormat::Text ? text_report(ctx) : structured_report(ctx);
}

std::string render_log(const RunContext& ctx) {
  json header{{"log", "orch5g-event-log"},
              {"hash_algo", "fnv1a-64"},
              {"scenario", ctx.scenario.name},
              {"initial_hash", hash_hex(ctx.initial_hash)}};
  std::string out = header.dump() + "\n";
  for (const LogRecord& rec : ctx.log) out += rec.to_json_line() + "\n";
  return out;
}

int exit_status(const RunContext& ctx) {
  return ctx.any_mismatch ? kExitMismatch : kExitOk;
}

// ---- CLI ------------------------------------------------------------------

namespace {

namespace fs = std::filesystem;

json parse_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw OrchError(ErrorKind::SchemaError, "cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw OrchError(ErrorKind::SchemaError, "'" + path + "' is not valid JSON: " + e.what());
  }
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw OrchError(ErrorKind::SchemaError, "cannot write '" + path + "'");
  out << content;
}

// One injected event as stored/submitted: the payload object plus `action`
// and optional `expect`; seq is always assigned by the context.
struct PendingEvent {
  std::string action;
  json payload;
  std::string expect;
};

PendingEvent parse_injectable(const json& ej) {
  if (!ej.is_object() || !ej.contains("action") || !ej.at("action").is_string())
    throw OrchError(ErrorKind::SchemaError, "injected event must be an object with an action");
  PendingEvent ev;
  ev.action = ej.at("action").get<std::string>();
  if (!known_action(ev.action))
    throw OrchError(ErrorKind::SchemaError, "unknown event action '" + ev.action + "'");
  if (ej.contains("seq"))
    throw OrchError(ErrorKind::SchemaError, "injected events are assigned their seq");
  if (ej.contains("expect")) {
    if (!ej.at("expect").is_string())
      throw OrchError(ErrorKind::SchemaError, "expect must be a string");
    ev.expect = ej.at("expect").get<std::string>();
    ErrorKind kind;
    if (!parse_error_kind(normalize_expect(ev.expect), kind))
      throw OrchError(ErrorKind::SchemaError,
                      "expect names unknown error kind '" + ev.expect + "'");
  }
  ev.payload = ej;
  ev.payload.erase("action");
  ev.payload.erase("expect");
  validate_event_payload(ev.action, ev.payload);
  return ev;
}

void persist_context(const std::string& dir, const json& document, const RunContext& ctx) {
  fs::create_directories(dir);
  write_file(dir + "/scenario.json", document.dump(2) + "\n");
  write_file(dir + "/log.jsonl", render_log(ctx));
  if (!fs::exists(dir + "/injected-events.jsonl")) write_file(dir + "/injected-events.jsonl", "");
}

int cmd_run(const std::string& file, const std::string& report_path, const std::string& log_path,
            const std::string& format, const std::string& context_dir) {
  json document = parse_json_file(file);
  RunContext ctx = run_scenario(document);

  ReportFormat fmt = format == "structured" ? ReportFormat::Structured : ReportFormat::Text;
  std::string report = emit_report(ctx, fmt);
  if (report_path.empty())
    std::fputs(report.c_str(), stdout);
  else
    write_file(report_path, report);
  if (!log_path.empty()) write_file(log_path, render_log(ctx));
  if (!context_dir.empty()) {
    // A fresh run resets the context: injected events belong to the run they
    // were injected into.
    if (fs::exists(context_dir + "/injected-events.jsonl"))
      fs::remove(context_dir + "/injected-events.jsonl");
    persist_context(context_dir, document, ctx);
  }
  return exit_status(ctx);
}

int cmd_validate(const std::string& file) {
  json document = parse_json_file(file);
  Scenario sc = load_scenario(document);
  std::printf("valid: %s (%zu events)\n", sc.name.c_str(), sc.events.size());
  return kExitOk;
}

int cmd_inject(const std::string& context_dir, const std::string& event_file) {
  json document = parse_json_file(context_dir + "/scenario.json");

  // Replay: base scenario first, then every previously injected event, so the
  // context directory is the full, durable history of this run.
  std::vector<PendingEvent> replay;
  {
    std::ifstream in(context_dir + "/injected-events.jsonl");
    std::string line;
    while (in && std::getline(in, line)) {
      if (line.empty()) continue;
      replay.push_back(parse_injectable(json::parse(line)));
    }
  }

  json injected = parse_json_file(event_file);
  std::vector<json> fresh_raw;
  if (injected.is_array())
    for (const json& ej : injected) fresh_raw.push_back(ej);
  else
    fresh_raw.push_back(injected);
  // Validate everything before running anything: a malformed event leaves
  // both the log and the stored history untouched.
  std::vector<PendingEvent> fresh;
  for (const json& ej : fresh_raw) fresh.push_back(parse_injectable(ej));

  RunContext ctx = run_scenario(document);
  for (const PendingEvent& ev : replay) inject_event(ctx, ev.action, ev.payload, ev.expect);

  std::string appended;
  for (std::size_t i = 0; i < fresh.size(); ++i) {
    const LogRecord& rec = inject_event(ctx, fresh[i].action, fresh[i].payload, fresh[i].expect);
    std::printf("%s\n", rec.to_json_line().c_str());
    appended += fresh_raw[i].dump() + "\n";
  }

  std::ofstream out(context_dir + "/injected-events.jsonl", std::ios::binary | std::ios::app);
  out << appended;
  out.close();
  write_file(context_dir + "/log.jsonl", render_log(ctx));
  return exit_status(ctx);
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
  CLI::App app{"deterministic 5G transport/cloud orchestration emulator"};
  app.require_subcommand(1);

  std::string run_file, report_path, log_path, format = "text", context_dir;
  CLI::App* run = app.add_subcommand("run", "load a scenario and execute its events");
  run->add_option("scenario", run_file, "scenario file (JSON)")->required();
  run->add_option("--report", report_path, "write the report here instead of stdout");
  run->add_option("--log", log_path, "write the event log (JSONL) here");
  run->add_option("--format", format, "report format")
      ->check(CLI::IsMember({"text", "structured"}));
  run->add_option("--context", context_dir, "persist a context directory for later injection");

  std::string validate_file;
  CLI::App* validate = app.add_subcommand("validate", "check a scenario against the schema");
  validate->add_option("scenario", validate_file, "scenario file (JSON)")->required();

  std::string inj_context, inj_events;
  CLI::App* inject = app.add_subcommand("inject", "execute extra events against a saved context");
  inject->add_option("context", inj_context, "context directory from run --context")->required();
  inject->add_option("events", inj_events, "JSON file with one event object or an array")
      ->required();

  std::vector<const char*> argv;
  argv.push_back("orch5g");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (run->parsed()) return cmd_run(run_file, report_path, log_path, format, context_dir);
    if (validate->parsed()) return cmd_validate(validate_file);
    if (inject->parsed()) return cmd_inject(inj_context, inj_events);
  } catch (const OrchError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitInvalid;
  }
  return kExitInvalid;
}

}  // namespace orch5g::harness
