#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace barrlab {

enum class ErrorKind {
  NonFinitePreserving,
  BlowUpGuard,
  DomainMismatch,
  MissingComponent,
  NotAGroup,
  DepthExceeded,
  ZeroObjectViolation,
  NotCauchy,
  BoundMismatch,
  NotBiproductCompatible,
  InvalidInput,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace barrlab
