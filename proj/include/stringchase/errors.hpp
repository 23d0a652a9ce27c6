#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace stringchase {

enum class Errc {
  InvalidArgument,
  NotAString,
  DimensionExceeded,
  BoundaryFace,
  MapEvaluationFailed,
  BudgetExceeded,
  StepLimitExceeded,
  LabelingInvalid,
  ConfigInvalid,
  SyntaxError,
  ArityError,
  UnknownIdentifier,
  IndexOutOfRange,
  ComponentCountMismatch,
  UnknownBuiltin,
  SvgUnsupportedDimension,
};

std::string_view to_string(Errc code);

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace stringchase
