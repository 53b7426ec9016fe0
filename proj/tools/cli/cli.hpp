#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fano3lab::cli {

// Exit codes
inline constexpr int kOk = 0;
inline constexpr int kDomainError = 1;
inline constexpr int kUsageError = 2;

// Runs one invocation; args exclude the program name. The JSON document (or
// text report) goes to out, help and usage diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// The documented verbs, in help order.
const std::vector<std::string>& verbs();

}  // namespace fano3lab::cli
