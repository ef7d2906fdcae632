#pragma once

namespace forage {

// Full command-line front end (simulate / experiment / validate).
// Returns the process exit status: 0 success, 1 configuration error,
// 2 runtime or setup error.
int run_cli(int argc, const char* const* argv);

inline constexpr const char* kToolVersion = "forage 1.0.0";

}  // namespace forage
