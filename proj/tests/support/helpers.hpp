#pragma once

#include <filesystem>
#include <string>

#include "qutest/qasm/parser.hpp"
#include "qutest/sim/circuit.hpp"

namespace testing_support {

std::filesystem::path source_dir();
std::filesystem::path corpus_dir();
std::filesystem::path fixtures_dir();

// Parses `source` (which must be valid) and builds the inlined circuit of `test`.
qutest::sim::Circuit circuit_of(const std::string& source, const std::string& test);
qutest::qasm::Program program_of(const std::string& source);

// Fresh empty directory under the system temp dir.
std::filesystem::path temp_dir(const std::string& tag);

}  // namespace testing_support
