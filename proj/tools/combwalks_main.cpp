// SPDX-License-Identifier: Apache-2.0
#include "combwalks/cli.hpp"

int main(int argc, char** argv) { return combwalks::cli_main(argc, argv); }
