// SPDX-License-Identifier: Apache-2.0
#include <iostream>

#include "sumrank/cli.hpp"

int main(int argc, char** argv) { return sumrank::cli::run(argc, argv, std::cout, std::cerr); }
