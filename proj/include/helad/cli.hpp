// Copyright 2026 The helium-ladder Authors
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end.  run() parses the argument vector (without the
// program name) and executes one subcommand, writing results to `out` and
// diagnostics to `err`.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace helad::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitIdentityFailure = 1;
inline constexpr int kExitDegenerateModel = 2;
inline constexpr int kExitQuadratureFailure = 3;
inline constexpr int kExitUsage = 64;

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace helad::cli
