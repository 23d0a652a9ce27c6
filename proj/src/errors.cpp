#include "stringchase/errors.hpp"

namespace stringchase {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::NotAString: return "NotAString";
    case Errc::DimensionExceeded: return "DimensionExceeded";
    case Errc::BoundaryFace: return "BoundaryFace";
    case Errc::MapEvaluationFailed: return "MapEvaluationFailed";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::StepLimitExceeded: return "StepLimitExceeded";
    case Errc::LabelingInvalid: return "LabelingInvalid";
    case Errc::ConfigInvalid: return "ConfigInvalid";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::ArityError: return "ArityError";
    case Errc::UnknownIdentifier: return "UnknownIdentifier";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::ComponentCountMismatch: return "ComponentCountMismatch";
    case Errc::UnknownBuiltin: return "UnknownBuiltin";
    case Errc::SvgUnsupportedDimension: return "SvgUnsupportedDimension";
  }
  return "Unknown";
}

}  // namespace stringchase
