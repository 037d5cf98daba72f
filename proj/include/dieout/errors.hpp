#ifndef DIEOUT_ERRORS_HPP
#define DIEOUT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dieout {

enum class ErrorCode {
  DimensionMismatch,
  NonFinite,
  BadSignal,
  ZeroVector,
  Balanced,
  TooLarge,
  NotEnoughKernel,
  NotClosed,
  WrongOrientation,
  NoPositiveEntry,
  X0OutOfRange,
  AllBalanced,
  BetaMismatch,
  Empty,
  NotSquare,
  NotTrophic,
  BadLevels,
  NonPositiveStart,
  Blowup,
  ParseError,
};

const char* error_code_name(ErrorCode c);

struct Error : std::runtime_error {
  ErrorCode code;
  double when; // first-exit time for Blowup, unused otherwise
  Error(ErrorCode c, const std::string& msg, double t = 0.0)
      : std::runtime_error(std::string(error_code_name(c)) + ": " + msg),
        code(c), when(t) {}
};

} // namespace dieout

#endif
