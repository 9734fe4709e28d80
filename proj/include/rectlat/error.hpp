#pragma once

#include <stdexcept>
#include <string>

namespace rectlat {

enum class ErrorCode {
  NotALattice,
  NotHasse,
  Disconnected,
  NotPrime,
  NotRectangular,
  ChainLengthMismatch,
  NotBelowCorner,
  NotACoveringSquare,
  NotAnEye,
  NotSlim,
  PositionOutOfRange,
  WitnessMissing,
  NotJoinIrreducible,
  NotDistributive,
  SearchExhausted,
  SyntaxError,
  BadDiagram,
};

const char* error_code_name(ErrorCode code);

class LatticeError : public std::runtime_error {
 public:
  LatticeError(ErrorCode code, const std::string& message);
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

}  // namespace rectlat
