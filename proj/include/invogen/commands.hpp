// Copyright (c) the invogen contributors.
// Licensed under the Apache License, Version 2.0.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace invogen::cli {

// Exit codes shared by every command.
inline constexpr int exit_ok = 0;
inline constexpr int exit_not_certified = 1;
inline constexpr int exit_obstruction = 2;
inline constexpr int exit_bad_input = 3;
inline constexpr int exit_numeric = 4;

struct synthesize_options {
  std::string input_path;
  std::optional<std::uint64_t> seed;
  std::optional<int> retry_budget;
  std::optional<std::string> output_path;
};

int cmd_verify(const std::string& input_path, std::ostream& out,
               std::ostream& err);
int cmd_synthesize(const synthesize_options& opts, std::ostream& out,
                   std::ostream& err);
int cmd_certify(const std::string& input_path,
                const std::string& certificate_path, std::ostream& out,
                std::ostream& err);
int cmd_demo_counterexample(int n, std::uint64_t seed, std::ostream& out,
                            std::ostream& err);
int cmd_demo_tensor(int d, std::uint64_t seed, std::ostream& out,
                    std::ostream& err);

// Full argument-vector entry point (argv without the program name).
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace invogen::cli
