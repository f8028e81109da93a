#pragma once

#include <string>

namespace lattica {

/// Whole-file read; throws InputError if the file cannot be opened.
std::string read_file(const std::string& path);

/// Writes via a temporary sibling file and rename, so readers never observe
/// a partially written output.
void write_file_atomic(const std::string& path, const std::string& contents);

}  // namespace lattica
