#include "common.hpp"

namespace amenlab {

std::string to_string(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(text));
    BigInt p(text.substr(0, slash));
    BigInt q(text.substr(slash + 1));
    if (q == 0) throw Error(ErrorCode::kMalformedInput, "zero denominator");
    return Rational(p, q);
  } catch (const std::runtime_error&) {
    throw Error(ErrorCode::kMalformedInput, "malformed rational '" + text + "'");
  }
}

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kMalformedSpec: return "MALFORMED_SPEC";
    case ErrorCode::kMalformedInput: return "MALFORMED_INPUT";
    case ErrorCode::kEmptySet: return "EMPTY_SET";
    case ErrorCode::kEmptySupport: return "EMPTY_SUPPORT";
    case ErrorCode::kNoLevelSet: return "NO_LEVEL_SET";
    case ErrorCode::kInternalInfeasible: return "INTERNAL_INFEASIBLE";
    case ErrorCode::kKeyNotInK: return "KEY_NOT_IN_K";
    case ErrorCode::kUnsupportedFamily: return "UNSUPPORTED_FAMILY";
    case ErrorCode::kPreconditionFailed: return "PRECONDITION_FAILED";
    case ErrorCode::kWrongMode: return "WRONG_MODE";
    case ErrorCode::kOverflow: return "OVERFLOW";
  }
  return "UNKNOWN_ERROR";
}

}  // namespace amenlab
