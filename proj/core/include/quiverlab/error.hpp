#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qlab {

enum class ErrorCode {
  InvalidQuiver,
  InvalidVertex,
  MutationAtFrozenVertex,
  InvalidState,
  SignCoherenceViolation,
  NotGreen,
  InvalidPotential,
  InvalidRelation,
  ShapeError,
  NotAModulePoint,
  UnknownArrow,
  UnknownModule,
  InvalidBSpec,
  ParseError,
  SemanticError,
  CatalogTooLarge,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Exception carrying a machine-readable code next to the diagnostic text.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace qlab
