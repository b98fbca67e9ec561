#pragma once

#include <filesystem>
#include <string>
#include <string_view>

namespace lexicov {

/// Reads a whole file; throws Error(kIo) naming the path on failure.
std::string read_file(const std::filesystem::path& path);

/// Writes through a sibling temp file and renames it over `path`, so readers
/// never observe a partially written output.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

/// 64-bit FNV-1a, hex encoded. Used to fingerprint source texts in provenance.
std::string fnv1a_hex(std::string_view data);

}  // namespace lexicov
