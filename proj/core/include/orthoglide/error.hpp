#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace orthoglide {

enum class ErrorKind {
  InvalidArgument,
  Unreachable,
  SerialSingularity,
  ParallelSingularity,
  NoAssemblyMode,
  DegenerateInput,
  InconsistentPair,
  RangeOutsideWorkspace,
  DegenerateBounds,
  NonMonotoneTime,
};

std::string_view to_string(ErrorKind kind);

/// Failure raised by the kinematic and synthesis routines. Carries the
/// failing leg (0-based) or waypoint index when one applies.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what, std::optional<int> index = std::nullopt)
      : std::runtime_error(what), kind_(kind), index_(index) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::optional<int> index() const noexcept { return index_; }

 private:
  ErrorKind kind_;
  std::optional<int> index_;
};

}  // namespace orthoglide
