#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "qutest/qasm/parser.hpp"

namespace qutest::qasm {

struct DiscoveredFile {
  std::filesystem::path path;
  std::string display_path;  // relative to the working directory when possible
  std::string source;
  ParseResult parse;
};

// All `.qasm` files under the given files/directories, sorted by path.
// Throws UsageError when a root does not exist.
std::vector<std::filesystem::path> find_qasm_files(
    const std::vector<std::filesystem::path>& roots);

std::vector<DiscoveredFile> discover(const std::vector<std::filesystem::path>& roots);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace qutest::qasm
