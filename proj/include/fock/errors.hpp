// errors.hpp -- exception type carrying a stable error code.
#pragma once

#include <stdexcept>
#include <string>

namespace fock {

enum class ErrorCode {
  DanglingEndpoint,
  DuplicateId,
  NotComposable,
  UnknownPath,
  UnorientableRelation,
  NotExact,
  DimensionCap,
  UpstreamUnchecked,
  UndeclaredId,
  KindMismatch,
  SyntaxError,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DanglingEndpoint: return "DanglingEndpoint";
    case ErrorCode::DuplicateId: return "DuplicateId";
    case ErrorCode::NotComposable: return "NotComposable";
    case ErrorCode::UnknownPath: return "UnknownPath";
    case ErrorCode::UnorientableRelation: return "UnorientableRelation";
    case ErrorCode::NotExact: return "NotExact";
    case ErrorCode::DimensionCap: return "DimensionCap";
    case ErrorCode::UpstreamUnchecked: return "UpstreamUnchecked";
    case ErrorCode::UndeclaredId: return "UndeclaredId";
    case ErrorCode::KindMismatch: return "KindMismatch";
    case ErrorCode::SyntaxError: return "SyntaxError";
  }
  return "Error";
}

}  // namespace fock
