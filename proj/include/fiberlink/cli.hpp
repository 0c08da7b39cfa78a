#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fiberlink {

inline constexpr const char* kVersion = "0.1.0";

namespace exit_code {
inline constexpr int kPositive = 0;
inline constexpr int kNegative = 1;
inline constexpr int kInvalid = 2;  // invalid input, syntax error or not applicable
inline constexpr int kIo = 3;
}  // namespace exit_code

/// Runs `fiberlink <command> <file|-> [options]`. args excludes the program
/// name. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

/// Like --batch but single-threaded; used to check the parallel runner.
int run_batch_serial(const std::string& command, const std::string& dir, const std::string& target,
                     bool json, std::ostream& out, std::ostream& err);

/// Hex SHA-256 of the canonical serialization of a diagram file's text.
/// Throws whatever parse_file throws.
std::string input_digest(const std::string& text);

}  // namespace fiberlink
