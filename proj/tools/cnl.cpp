// Copyright (c) 2026 The cnl developers.
// Distributed under the Boost Software License, Version 1.0.
// (See https://www.boost.org/LICENSE_1_0.txt)

#include <iostream>

#include "cnl/cli.hpp"

int main(int argc, char** argv) {
  return cnl::cli::run(argc, argv, std::cout, std::cerr);
}
