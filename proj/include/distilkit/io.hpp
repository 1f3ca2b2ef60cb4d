#pragma once

#include <filesystem>
#include <string>

namespace distilkit {

// Shortest-width decimal with 17 significant digits; round-trips any finite
// double exactly through strtod.
std::string format_g17(double x);

std::string read_file(const std::filesystem::path& path);

// Write-temp-then-rename so readers never observe a half-written file.
void atomic_write_file(const std::filesystem::path& path,
                       const std::string& content);

void ensure_dir(const std::filesystem::path& dir);

}  // namespace distilkit
