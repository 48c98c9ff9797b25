// Copyright 2026 The curvezeta authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace curvezeta::cli {

// Exit codes: 0 success, 1 usage or expression syntax error, 2 domain
// error (invalid prime power, length mismatch, budget, ...), 3
// verification failure (oracle mismatch; Weil/integrality under --strict).
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitDomain = 2;
inline constexpr int kExitVerification = 3;

/// Runs one curvezeta command. `args` excludes the program name. Results
/// go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace curvezeta::cli
