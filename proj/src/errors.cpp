#include "orch5g/errors.hpp"

namespace orch5g {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SchemaError: return "SchemaError";
    case ErrorKind::ReferenceError: return "ReferenceError";
    case ErrorKind::ConsistencyError: return "ConsistencyError";
    case ErrorKind::CapacityExceeded: return "CapacityExceeded";
    case ErrorKind::UnderflowRelease: return "UnderflowRelease";
    case ErrorKind::NotPacketLink: return "NotPacketLink";
    case ErrorKind::UnknownLink: return "UnknownLink";
    case ErrorKind::AlreadyDown: return "AlreadyDown";
    case ErrorKind::AlreadyUp: return "AlreadyUp";
    case ErrorKind::NoFeasiblePath: return "NoFeasiblePath";
    case ErrorKind::DuplicateMatch: return "DuplicateMatch";
    case ErrorKind::UnknownPath: return "UnknownPath";
    case ErrorKind::NoRoute: return "NoRoute";
    case ErrorKind::NoSpectrum: return "NoSpectrum";
    case ErrorKind::AdmissionFailed: return "AdmissionFailed";
    case ErrorKind::UnknownLsp: return "UnknownLsp";
    case ErrorKind::UnknownSlice: return "UnknownSlice";
    case ErrorKind::NoDomainSequence: return "NoDomainSequence";
    case ErrorKind::SegmentProvisioningFailed: return "SegmentProvisioningFailed";
    case ErrorKind::UnknownService: return "UnknownService";
    case ErrorKind::SliceNotEmpty: return "SliceNotEmpty";
    case ErrorKind::UnknownTenant: return "UnknownTenant";
    case ErrorKind::NoCapacity: return "NoCapacity";
    case ErrorKind::ImageUnavailable: return "ImageUnavailable";
    case ErrorKind::UnknownVm: return "UnknownVm";
    case ErrorKind::UnknownDc: return "UnknownDc";
    case ErrorKind::UnknownType: return "UnknownType";
    case ErrorKind::MissingConfigKey: return "MissingConfigKey";
    case ErrorKind::InvalidTransition: return "InvalidTransition";
    case ErrorKind::PlacementFailed: return "PlacementFailed";
    case ErrorKind::ConnectivityFailed: return "ConnectivityFailed";
    case ErrorKind::UnknownGraph: return "UnknownGraph";
    case ErrorKind::UnknownVnf: return "UnknownVnf";
    case ErrorKind::TransportInfeasible: return "TransportInfeasible";
    case ErrorKind::UnknownBearer: return "UnknownBearer";
    case ErrorKind::NoOptions: return "NoOptions";
    case ErrorKind::InvalidOption: return "InvalidOption";
    case ErrorKind::NoFeasibleSplit: return "NoFeasibleSplit";
    case ErrorKind::Injected: return "Injected";
  }
  return "UnknownError";
}

bool parse_error_kind(const std::string& name, ErrorKind& out) {
  for (int k = 0; k <= static_cast<int>(ErrorKind::Injected); ++k) {
    auto kind = static_cast<ErrorKind>(k);
    if (name == error_kind_name(kind)) {
      out = kind;
      return true;
    }
  }
  return false;
}

}  // namespace orch5g
