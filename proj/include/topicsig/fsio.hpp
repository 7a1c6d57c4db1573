#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace topicsig {

std::string read_file(const std::filesystem::path& path);

// Writes via a temp file in the same directory and renames into place, so a
// crash never leaves a partially written file at the final path.
void atomic_write_file(const std::filesystem::path& path,
                       std::string_view content);

std::string sha256_hex(std::string_view data);

// Regular files under root matching the extension (".txt", or "" for all),
// sorted by generic relative path. This is the deterministic corpus order.
std::vector<std::filesystem::path> list_files_sorted(
    const std::filesystem::path& root, std::string_view extension);

// "2026-01-02T03:04:05Z" for the current wall clock.
std::string utc_timestamp_now();

}  // namespace topicsig
