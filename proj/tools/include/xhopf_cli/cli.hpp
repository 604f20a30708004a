#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace xhopf::cli {

enum ExitCode : int { kPass = 0, kCheckFailed = 1, kInputError = 2 };

/// Runs one command line (without the program name). `in` is read when the
/// input is "-". Never throws.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

/// FNV-1a, 64 bit, as 16 lowercase hex digits.
std::string fnv1a64(std::string_view bytes);

} // namespace xhopf::cli
