#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "orch5g/world.hpp"

namespace orch5g {

struct ScenarioEvent {
  std::int64_t seq = 0;
  std::string action;
  nlohmann::json payload;          // action-specific fields, validated at load
  std::string expect_error;        // empty = success expected
};

struct Scenario {
  std::string name;
  World world;
  std::vector<ScenarioEvent> events;
};

// Validates the document against the scenario schema (unknown fields are
// SchemaErrors, dangling ids ReferenceErrors, invariant breaches
// ConsistencyErrors) and returns the ready-to-run world plus event list.
Scenario load_scenario(const nlohmann::json& document);

Scenario load_scenario_file(const std::string& path);

// Exact decimal readers shared with event payload parsing. Values may be
// JSON numbers or strings; either way they must land on the exact grid
// (mbps: 3 fractional digits, ms: 6, energy: 3).
BwKbps read_mbps(const nlohmann::json& value, const std::string& field);
LatencyNs read_ms(const nlohmann::json& value, const std::string& field);
std::int64_t read_milli(const nlohmann::json& value, const std::string& field);

// Rejects keys outside `allowed` with a SchemaError naming the offender.
void require_keys(const nlohmann::json& object, const std::vector<std::string>& required,
                  const std::vector<std::string>& optional, const std::string& where);

// String-enum readers (SchemaError on anything unknown).
DcTier parse_tier(const nlohmann::json& value, const std::string& where);
nfv::VnfRole parse_role(const std::string& text, const std::string& where);
uc::SplitBoundary parse_boundary(const std::string& text, const std::string& where);

bool known_action(const std::string& action);

// Structural validation of one event payload (keys, types, value grids);
// reference resolution happens at execution time. Used both by the loader
// and by `inject`.
void validate_event_payload(const std::string& action, const nlohmann::json& payload);

}  // namespace orch5g
