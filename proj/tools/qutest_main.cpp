#include "qutest/cli/cli.hpp"

int main(int argc, char** argv) { return qutest::cli::cli_main(argc, argv); }
