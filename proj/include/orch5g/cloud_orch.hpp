#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "orch5g/model.hpp"

namespace orch5g {

struct World;

namespace cloud {

enum class VmState { Building, Active, Migrating, Deleted };

const char* vm_state_name(VmState s);

struct VmSpec {
  std::int64_t cpu = 0;
  std::int64_t ram_mb = 0;
  std::int64_t disk_gb = 0;
  Id image_id;
  std::optional<DcTier> preferred_tier;
};

struct Vm {
  Id id;
  Id dc_id;
  std::int64_t cpu = 0;
  std::int64_t ram_mb = 0;
  std::int64_t disk_gb = 0;
  Id image_id;
  VmState state = VmState::Building;
};

struct State {
  std::map<Id, Vm> vms;
  std::int64_t created_count = 0;
  std::int64_t deleted_count = 0;
};

// Deterministic placement: among DCs holding the image (or allowed to copy
// it) with room for the spec, prefer the requested tier, then the most free
// CPU, then the smallest DC id.
Id place_vm(const World& world, const VmSpec& spec);

const Vm& create_vm(World& world, const VmSpec& spec);

void delete_vm(World& world, const Id& vm_id);

// Debits the target before crediting the source so a capacity failure leaves
// the VM untouched at its current DC. Migrating to the current DC is a no-op.
const Vm& migrate_vm(World& world, const Id& vm_id, const Id& target_dc);

void register_image(World& world, const Id& image_id, const std::vector<Id>& dc_ids);

std::string dump_inventory(const World& world);

}  // namespace cloud
}  // namespace orch5g
