#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tgk {

enum class ErrorKind {
  MalformedTable,
  NotTrivalent,
  Disconnected,
  NotSphere,
  NotNice,
  NotUnimodular,
  InconsistentFacetVector,
  NoConnection,
  NotOrientable,
  InvalidTorusGraph,
  InadmissibleSite,
  NotACut,
  InvalidCap,
  NotSBShaped,
  NoMultipleEdge,
  Already3Connected,
  InvalidInput,
  InternalInvariantViolation,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace tgk
