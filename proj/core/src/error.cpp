#include "orthoglide/error.hpp"

namespace orthoglide {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Unreachable: return "Unreachable";
    case ErrorKind::SerialSingularity: return "SerialSingularity";
    case ErrorKind::ParallelSingularity: return "ParallelSingularity";
    case ErrorKind::NoAssemblyMode: return "NoAssemblyMode";
    case ErrorKind::DegenerateInput: return "DegenerateInput";
    case ErrorKind::InconsistentPair: return "InconsistentPair";
    case ErrorKind::RangeOutsideWorkspace: return "RangeOutsideWorkspace";
    case ErrorKind::DegenerateBounds: return "DegenerateBounds";
    case ErrorKind::NonMonotoneTime: return "NonMonotoneTime";
  }
  return "Unknown";
}

}  // namespace orthoglide
