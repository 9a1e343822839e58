// Copyright (C) 2026 the galois-dsp authors
// SPDX-License-Identifier: Apache-2.0

#include <iostream>

#include "gdsp/cli.hpp"

int main(int argc, char** argv) {
    return gdsp::cli::run(argc, argv, std::cout, std::cerr);
}
