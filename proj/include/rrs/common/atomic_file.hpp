#pragma once

#include <filesystem>
#include <string_view>

namespace rrs {

// Writes to a sibling temp file, then renames over `path`. Throws Io.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace rrs
