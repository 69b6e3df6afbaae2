#pragma once

#include <stdexcept>
#include <string>

namespace orch5g {

enum class ErrorKind {
  // scenario / validation
  SchemaError,
  ReferenceError,
  ConsistencyError,
  // core accounting
  CapacityExceeded,
  UnderflowRelease,
  NotPacketLink,
  UnknownLink,
  AlreadyDown,
  AlreadyUp,
  // packet control
  NoFeasiblePath,
  DuplicateMatch,
  UnknownPath,
  // optical control
  NoRoute,
  NoSpectrum,
  AdmissionFailed,
  UnknownLsp,
  // network orchestration
  UnknownSlice,
  NoDomainSequence,
  SegmentProvisioningFailed,
  UnknownService,
  SliceNotEmpty,
  UnknownTenant,
  // cloud
  NoCapacity,
  ImageUnavailable,
  UnknownVm,
  UnknownDc,
  // nfv
  UnknownType,
  MissingConfigKey,
  InvalidTransition,
  PlacementFailed,
  ConnectivityFailed,
  UnknownGraph,
  UnknownVnf,
  // use cases
  TransportInfeasible,
  UnknownBearer,
  NoOptions,
  InvalidOption,
  NoFeasibleSplit,
  // test-only fault injection
  Injected,
};

const char* error_kind_name(ErrorKind kind);

// Reverse lookup for scenario `expect` clauses; returns false for names that
// are not error kinds.
bool parse_error_kind(const std::string& name, ErrorKind& out);

// All operations report failures by throwing OrchError. The kind is the
// machine-readable identity (scenario events match on it); detail carries
// human-readable context, e.g. which hop or segment failed.
class OrchError : public std::runtime_error {
 public:
  OrchError(ErrorKind kind, std::string detail)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + detail),
        kind_(kind),
        detail_(std::move(detail)) {}

  ErrorKind kind() const { return kind_; }
  const std::string& detail() const { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace orch5g
