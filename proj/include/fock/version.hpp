#pragma once

namespace fock {

inline constexpr const char* kToolName = "fockspace";
inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kReportSchema = "v1";

}  // namespace fock
