// Copyright (C) 2026 the galois-dsp authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gdsp::cli {

// Full command-line entry point, usable in-process: parses argv, writes data
// JSON to out and diagnostics to err. Returns 0 on success, 1 for domain
// errors (with {code, message} JSON on out), 2 for usage errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// Same, for args without the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace gdsp::cli
