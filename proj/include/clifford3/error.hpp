#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace clifford3 {

enum class ErrorCode {
  InvalidArgument,
  InvalidCurve,
  RankUnsupported,
  CongruenceViolation,
  NotHyperelliptic,
  OutOfModeledRange,
  IndexNegative,
  KrawtchoukDomain,
  OracleRangeExceeded,
  NotSemistable,
  NotUnstable,
  MissingS1F,
  InvalidQuery,
  HypothesisFailed,
  RangeUncovered,
  SlopeOutOfRange,
  HypothesisUnverifiable,
  ParamsOutOfRange,
  UnrealizableF,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library. `code()` is stable and is what the
/// CLI and the Python module report; `detail()` carries the offending index
/// where one exists (the r of a congruence violation).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<long long> detail = std::nullopt)
      : std::runtime_error(message), code_(code), detail_(detail) {}

  ErrorCode code() const noexcept { return code_; }
  std::optional<long long> detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::optional<long long> detail_;
};

}  // namespace clifford3
