#include "rectlat/error.hpp"

namespace rectlat {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotALattice: return "NotALattice";
    case ErrorCode::NotHasse: return "NotHasse";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::NotRectangular: return "NotRectangular";
    case ErrorCode::ChainLengthMismatch: return "ChainLengthMismatch";
    case ErrorCode::NotBelowCorner: return "NotBelowCorner";
    case ErrorCode::NotACoveringSquare: return "NotACoveringSquare";
    case ErrorCode::NotAnEye: return "NotAnEye";
    case ErrorCode::NotSlim: return "NotSlim";
    case ErrorCode::PositionOutOfRange: return "PositionOutOfRange";
    case ErrorCode::WitnessMissing: return "WitnessMissing";
    case ErrorCode::NotJoinIrreducible: return "NotJoinIrreducible";
    case ErrorCode::NotDistributive: return "NotDistributive";
    case ErrorCode::SearchExhausted: return "SearchExhausted";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::BadDiagram: return "BadDiagram";
  }
  return "UnknownError";
}

LatticeError::LatticeError(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

void fail(ErrorCode code, const std::string& message) { throw LatticeError(code, message); }

}  // namespace rectlat
