#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace plutus {

/// Shortest representation that round-trips to the same double. Output is locale-independent.
std::string format_double(double value);

/// Strict decimal parse of the whole field (surrounding blanks allowed). `inf`/`nan` are rejected.
std::optional<double> parse_double(std::string_view text);
std::optional<long long> parse_int(std::string_view text);

std::string_view trim(std::string_view text);
std::vector<std::string_view> split(std::string_view text, char sep);
std::string to_lower(std::string_view text);

/// Reads a text file into lines, stripping a trailing `\r` on each line.
/// Throws FileNotFound when the path does not name a readable regular file.
std::vector<std::string> read_lines(const std::filesystem::path& path);

/// Writes through a sibling temp file and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace plutus
