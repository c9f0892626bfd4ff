#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fsb {

enum class ErrorCode {
  InvalidArgument,
  RingMismatch,
  NotAlternating,
  NotAMorphism,
  NotInvertible,
  NonFreeKernel,
  CapExceeded,
  BudgetExceeded,
  HypothesisFailed,
  UnsupportedRing,
  InfiniteRing,
  NotRealizable,
  NotAnArc,
  NotBSimplex,
  NotASimplex,
  NoPath,
  Internal,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

inline std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::RingMismatch: return "RingMismatch";
    case ErrorCode::NotAlternating: return "NotAlternating";
    case ErrorCode::NotAMorphism: return "NotAMorphism";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::NonFreeKernel: return "NonFreeKernel";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::HypothesisFailed: return "HypothesisFailed";
    case ErrorCode::UnsupportedRing: return "UnsupportedRing";
    case ErrorCode::InfiniteRing: return "InfiniteRing";
    case ErrorCode::NotRealizable: return "NotRealizable";
    case ErrorCode::NotAnArc: return "NotAnArc";
    case ErrorCode::NotBSimplex: return "NotBSimplex";
    case ErrorCode::NotASimplex: return "NotASimplex";
    case ErrorCode::NoPath: return "NoPath";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace fsb
