#pragma once

#include <string>
#include <vector>

#include "orch5g/scenario.hpp"

namespace orch5g::harness {

struct LogRecord {
  std::int64_t seq = 0;
  std::string action;
  std::string outcome;  // "ok", "error:<Kind>", "check-pass", "check-fail"
  std::string detail;
  std::uint64_t snapshot_hash = 0;
  bool expectation_met = true;

  std::string to_json_line() const;
};

struct RunContext {
  Scenario scenario;
  std::uint64_t initial_hash = 0;
  std::vector<LogRecord> log;
  std::int64_t next_seq = 1;
  bool any_mismatch = false;
};

// Exit codes shared by the library runner and the CLI.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitInvalid = 2;

// Loads the document and executes every event in seq order, each as one
// transaction. Events may declare an expected error kind; an event that
// deviates from its expectation marks the run as mismatched (exit 1).
RunContext run_scenario(const nlohmann::json& document);

// Starts a context without running any events (used by `inject`).
RunContext open_context(const nlohmann::json& document);

// Executes one more event exactly as run_scenario would, with the next seq.
const LogRecord& inject_event(RunContext& ctx, const std::string& action,
                              const nlohmann::json& payload, const std::string& expect_error = "");

enum class ReportFormat { Text, Structured };

// Deterministic rendering of the current state: counts, utilizations, DC
// usage, recovery outcomes, plus the per-module dump tables in text form.
std::string emit_report(const RunContext& ctx, ReportFormat format);

std::string render_log(const RunContext& ctx);

int exit_status(const RunContext& ctx);

// The CLI entry point (run / validate / inject). Defined here so tests can
// drive the real command surface in-process.
int run_cli(const std::vector<std::string>& args);

}  // namespace orch5g::harness
