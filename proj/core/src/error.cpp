#include "quiverlab/error.hpp"

namespace qlab {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidQuiver: return "InvalidQuiver";
    case ErrorCode::InvalidVertex: return "InvalidVertex";
    case ErrorCode::MutationAtFrozenVertex: return "MutationAtFrozenVertex";
    case ErrorCode::InvalidState: return "InvalidState";
    case ErrorCode::SignCoherenceViolation: return "SignCoherenceViolation";
    case ErrorCode::NotGreen: return "NotGreen";
    case ErrorCode::InvalidPotential: return "InvalidPotential";
    case ErrorCode::InvalidRelation: return "InvalidRelation";
    case ErrorCode::ShapeError: return "ShapeError";
    case ErrorCode::NotAModulePoint: return "NotAModulePoint";
    case ErrorCode::UnknownArrow: return "UnknownArrow";
    case ErrorCode::UnknownModule: return "UnknownModule";
    case ErrorCode::InvalidBSpec: return "InvalidBSpec";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::SemanticError: return "SemanticError";
    case ErrorCode::CatalogTooLarge: return "CatalogTooLarge";
  }
  return "Unknown";
}

}  // namespace qlab
