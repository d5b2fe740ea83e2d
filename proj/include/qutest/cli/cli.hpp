#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qutest::cli {

// `qutest lint <paths...>` and `qutest run <paths...> [options]`.
// Returns 0 on success, 1 on lint errors or failing tests, 2 on usage errors.
// `args` excludes the program name.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int cli_main(int argc, char** argv);

}  // namespace qutest::cli
