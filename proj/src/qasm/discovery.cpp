#include "qutest/qasm/discovery.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "qutest/diagnostic.hpp"

namespace qutest::qasm {

namespace fs = std::filesystem;

namespace {

std::string display_path(const fs::path& p) {
  std::error_code ec;
  fs::path rel = fs::relative(p, fs::current_path(ec), ec);
  if (ec || rel.empty() || rel.native().rfind("..", 0) == 0) return p.lexically_normal().generic_string();
  return rel.generic_string();
}

}  // namespace

std::string read_text_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  std::string text = ss.str();
  if (text.rfind("\xEF\xBB\xBF", 0) == 0) text.erase(0, 3);  // UTF-8 BOM
  return text;
}

std::vector<fs::path> find_qasm_files(const std::vector<fs::path>& roots) {
  std::vector<fs::path> files;
  for (const auto& root : roots) {
    std::error_code ec;
    auto status = fs::status(root, ec);
    if (ec || !fs::exists(status)) {
      throw UsageError("path does not exist: '" + root.string() + "'");
    }
    if (fs::is_directory(status)) {
      for (auto it = fs::recursive_directory_iterator(root, ec);
           !ec && it != fs::recursive_directory_iterator(); it.increment(ec)) {
        if (it->is_regular_file() && it->path().extension() == ".qasm") {
          files.push_back(it->path().lexically_normal());
        }
      }
    } else {
      files.push_back(root.lexically_normal());
    }
  }
  std::sort(files.begin(), files.end(), [](const fs::path& a, const fs::path& b) {
    return a.generic_string() < b.generic_string();
  });
  files.erase(std::unique(files.begin(), files.end()), files.end());
  return files;
}

std::vector<DiscoveredFile> discover(const std::vector<fs::path>& roots) {
  std::vector<DiscoveredFile> out;
  for (const auto& path : find_qasm_files(roots)) {
    DiscoveredFile file;
    file.path = path;
    file.display_path = display_path(path);
    file.source = read_text_file(path);
    file.parse = parse_program(file.source, path);
    out.push_back(std::move(file));
  }
  return out;
}

}  // namespace qutest::qasm
