#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace irtopo {

enum class Errc {
  NotATopology,
  ReachNotPreorder,
  EmptySubspace,
  InvalidPoint,
  TooManyPoints,
  DuplicateLabel,
  MapMismatch,
  NotContinuous,
  NoForwardPath,
  SearchBudgetExceeded,
  EmptySpace,
  NotMinimalCover,
  NotACover,
  InvalidModulus,
  NotAPartialOrder,
  OutOfRange,
  EmptySet,
  ArityMismatch,
  DuplicatePoint,
  HypothesisFails,
  ParseError,
  UnknownClaim,
  BudgetExceeded,
};

constexpr std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::NotATopology: return "NotATopology";
    case Errc::ReachNotPreorder: return "ReachNotPreorder";
    case Errc::EmptySubspace: return "EmptySubspace";
    case Errc::InvalidPoint: return "InvalidPoint";
    case Errc::TooManyPoints: return "TooManyPoints";
    case Errc::DuplicateLabel: return "DuplicateLabel";
    case Errc::MapMismatch: return "MapMismatch";
    case Errc::NotContinuous: return "NotContinuous";
    case Errc::NoForwardPath: return "NoForwardPath";
    case Errc::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case Errc::EmptySpace: return "EmptySpace";
    case Errc::NotMinimalCover: return "NotMinimalCover";
    case Errc::NotACover: return "NotACover";
    case Errc::InvalidModulus: return "InvalidModulus";
    case Errc::NotAPartialOrder: return "NotAPartialOrder";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::EmptySet: return "EmptySet";
    case Errc::ArityMismatch: return "ArityMismatch";
    case Errc::DuplicatePoint: return "DuplicatePoint";
    case Errc::HypothesisFails: return "HypothesisFails";
    case Errc::ParseError: return "ParseError";
    case Errc::UnknownClaim: return "UnknownClaim";
    case Errc::BudgetExceeded: return "BudgetExceeded";
  }
  return "Unknown";
}

/// Every failure raised by the library. `what()` is "<Code>: <detail>", where
/// the detail names the witness (offending pair, set, point) when there is one.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace irtopo
