#include "orch5g/cloud_orch.hpp"

#include <sstream>

#include "orch5g/errors.hpp"
#include "orch5g/world.hpp"

namespace orch5g::cloud {

const char* vm_state_name(VmState s) {
  switch (s) {
    case VmState::Building: return "building";
    case VmState::Active: return "active";
    case VmState::Migrating: return "migrating";
    case VmState::Deleted: return "deleted";
  }
  return "?";
}

namespace {

bool fits(const DataCenter& dc, const VmSpec& spec) {
  return dc.cpu_used + spec.cpu <= dc.cpu_total && dc.ram_used + spec.ram_mb <= dc.ram_total &&
         dc.disk_used + spec.disk_gb <= dc.disk_total;
}

bool image_ok(const World& world, const DataCenter& dc, const Id& image_id) {
  return dc.images.count(image_id) || world.options.image_copy_allowed;
}

}  // namespace

Id place_vm(const World& world, const VmSpec& spec) {
  // Tier preference first, then most free CPU, then smallest id. The image
  // constraint dominates everything: a DC without the image (and with
  // copying disabled) is never a candidate.
  const DataCenter* best = nullptr;
  bool best_tier_match = false;
  bool any_image = false;
  for (const auto& [id, dc] : world.topo.dcs) {
    if (!image_ok(world, dc, spec.image_id)) continue;
    any_image = true;
    if (!fits(dc, spec)) continue;
    bool tier_match = spec.preferred_tier && dc.tier == *spec.preferred_tier;
    bool better;
    if (!best)
      better = true;
    else if (tier_match != best_tier_match)
      better = tier_match;
    else if (dc.cpu_free() != best->cpu_free())
      better = dc.cpu_free() > best->cpu_free();
    else
      better = false;  // ids ascend during iteration, so the first match stays
    if (better) {
      best = &dc;
      best_tier_match = tier_match;
    }
  }
  if (best) return best->id;
  if (!any_image)
    throw OrchError(ErrorKind::ImageUnavailable,
                    "image '" + spec.image_id + "' is stored in no data center");
  throw OrchError(ErrorKind::NoCapacity, "no data center can host " + std::to_string(spec.cpu) +
                                             " vcpu/" + std::to_string(spec.ram_mb) + " mb/" +
                                             std::to_string(spec.disk_gb) + " gb");
}

const Vm& create_vm(World& world, const VmSpec& spec) {
  Id dc_id = place_vm(world, spec);
  DataCenter& dc = world.topo.dc_mut(dc_id);
  if (!dc.images.count(spec.image_id)) dc.images.insert(spec.image_id);  // copy-on-demand

  Vm vm;
  vm.id = next_id(world, "vm");
  vm.dc_id = dc_id;
  vm.cpu = spec.cpu;
  vm.ram_mb = spec.ram_mb;
  vm.disk_gb = spec.disk_gb;
  vm.image_id = spec.image_id;
  vm.state = VmState::Building;
  debit_dc(world.topo, dc_id, spec.cpu, spec.ram_mb, spec.disk_gb);
  vm.state = VmState::Active;
  ++world.cloud_state.created_count;

  Id id = vm.id;
  world.cloud_state.vms[id] = std::move(vm);
  return world.cloud_state.vms[id];
}

void delete_vm(World& world, const Id& vm_id) {
  auto it = world.cloud_state.vms.find(vm_id);
  if (it == world.cloud_state.vms.end() || it->second.state == VmState::Deleted)
    throw OrchError(ErrorKind::UnknownVm, "VM '" + vm_id + "' does not exist");
  Vm& vm = it->second;
  credit_dc(world.topo, vm.dc_id, vm.cpu, vm.ram_mb, vm.disk_gb);
  vm.state = VmState::Deleted;
  ++world.cloud_state.deleted_count;
}

const Vm& migrate_vm(World& world, const Id& vm_id, const Id& target_dc) {
  auto it = world.cloud_state.vms.find(vm_id);
  if (it == world.cloud_state.vms.end() || it->second.state != VmState::Active)
    throw OrchError(ErrorKind::UnknownVm, "VM '" + vm_id + "' is not an active VM");
  Vm& vm = it->second;
  const DataCenter& target = world.topo.dc(target_dc);
  if (vm.dc_id == target_dc) return vm;  // already there

  if (!image_ok(world, target, vm.image_id))
    throw OrchError(ErrorKind::ImageUnavailable,
                    "image '" + vm.image_id + "' not available at '" + target_dc + "'");
  vm.state = VmState::Migrating;
  // Debit the target first: if it throws, the VM still holds its source
  // resources and nothing moved.
  try {
    debit_dc(world.topo, target_dc, vm.cpu, vm.ram_mb, vm.disk_gb);
  } catch (...) {
    vm.state = VmState::Active;
    throw;
  }
  credit_dc(world.topo, vm.dc_id, vm.cpu, vm.ram_mb, vm.disk_gb);
  if (!world.topo.dc(target_dc).images.count(vm.image_id))
    world.topo.dc_mut(target_dc).images.insert(vm.image_id);
  vm.dc_id = target_dc;
  vm.state = VmState::Active;
  return vm;
}

void register_image(World& world, const Id& image_id, const std::vector<Id>& dc_ids) {
  for (const Id& dc : dc_ids) world.topo.dc(dc);  // reference check first
  for (const Id& dc : dc_ids) world.topo.dc_mut(dc).images.insert(image_id);
}

std::string dump_inventory(const World& world) {
  std::ostringstream out;
  for (const auto& [vid, vm] : world.cloud_state.vms)
    out << vm.dc_id << " | " << vid << " | " << vm.cpu << "/" << vm.ram_mb << "/" << vm.disk_gb
        << " | " << vm_state_name(vm.state) << "\n";
  return out.str();
}

}  // namespace orch5g::cloud
