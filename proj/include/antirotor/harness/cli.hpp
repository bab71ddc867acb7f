#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace antirotor::harness {

inline constexpr const char* kToolVersion = "antirotor 1.0.0";
// Overrides the default numeric tolerance of norm-eval and check.
inline constexpr const char* kToleranceEnv = "ANTIROTOR_TOL";

// Exit codes: 0 success, 1 domain error, 2 usage error, 3 verification failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace antirotor::harness
