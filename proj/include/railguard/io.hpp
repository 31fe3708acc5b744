#pragma once

#include <string>
#include <vector>

namespace railguard {

// Shortest round-trip decimal representation (std::to_chars); "inf" for
// infinities. Used for every number the project writes, so reruns are
// byte-identical.
std::string fmt_double(double v);

// Writes via a temp file in the same directory and renames into place, so a
// reader never sees a partial file. Creates parent directories as needed.
void write_file_atomic(const std::string& path, const std::string& content);

std::string read_file(const std::string& path);

// n evenly spaced values from lo to hi inclusive (n >= 2; n == 1 gives {lo}).
std::vector<double> linspace(double lo, double hi, int n);

// Parses "lo:hi:n" into a linspace grid. Throws std::invalid_argument on
// malformed input.
std::vector<double> parse_grid(const std::string& spec);

}  // namespace railguard
