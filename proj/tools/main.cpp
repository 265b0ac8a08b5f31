// Copyright (c) the invogen contributors.
// Licensed under the Apache License, Version 2.0.
#include <iostream>
#include <string>
#include <vector>

#include "invogen/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return invogen::cli::run(args, std::cout, std::cerr);
}
