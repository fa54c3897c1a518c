#pragma once

#include <ostream>
#include <span>
#include <string>

namespace shc::cli {

/// Entry point for the `shc` tool; args exclude the program name.
/// Subcommands: gen, solve, bench, stats, oracle. Returns the process exit code.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace shc::cli
