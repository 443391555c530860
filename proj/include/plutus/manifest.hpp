#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace plutus {

inline constexpr std::string_view kToolVersion = "0.1.0";

std::string sha256_hex(std::string_view bytes);
/// Throws FileNotFound.
std::string sha256_file(const std::filesystem::path& path);

/// What a run consumed and produced. `started_at` is kept out of to_text() so the manifest file
/// itself is byte-identical across reruns.
struct RunManifest {
    std::string command;
    std::string config_hash;
    std::vector<std::pair<std::string, std::string>> data_hashes;  // (input name, sha256)
    std::uint64_t seed = 0;
    std::string tool_version{kToolVersion};
    std::string started_at;
    std::vector<std::string> outputs;  // file names relative to the output directory
};

std::string to_text(const RunManifest& manifest);

}  // namespace plutus
