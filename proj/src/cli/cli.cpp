#include "qutest/cli/cli.hpp"

#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "qutest/pragma/lint.hpp"
#include "qutest/qasm/discovery.hpp"
#include "qutest/report/report.hpp"
#include "qutest/runner/runner.hpp"

namespace qutest::cli {

namespace {

int do_lint(const std::vector<std::string>& paths, std::ostream& out) {
  std::vector<std::filesystem::path> roots(paths.begin(), paths.end());
  const auto files = qasm::discover(roots);
  std::size_t errors = 0, warnings = 0;
  for (const auto& f : pragma::lint(files)) {
    for (const auto& d : f.diagnostics) {
      out << format_diagnostic(d, f.display_path) << "\n";
      (d.is_error() ? errors : warnings)++;
    }
  }
  out << files.size() << " file" << (files.size() == 1 ? "" : "s") << " checked: " << errors
      << " error" << (errors == 1 ? "" : "s") << ", " << warnings << " warning"
      << (warnings == 1 ? "" : "s") << "\n";
  return errors == 0 ? 0 : 1;
}

struct RunFlags {
  std::vector<std::string> paths;
  bool verbose = false;
  std::string junit_xml;
  std::optional<std::uint64_t> seed;
  unsigned jobs = 0;
  bool no_color = false;
};

int do_run(const RunFlags& flags, std::ostream& out, std::ostream& err, bool tty) {
  std::vector<std::filesystem::path> roots(flags.paths.begin(), flags.paths.end());
  auto tests = runner::collect_tests(qasm::discover(roots));

  std::ofstream xml;
  if (!flags.junit_xml.empty()) {
    xml.open(flags.junit_xml);
    if (!xml) {
      err << "qutest: cannot write JUnit XML to '" << flags.junit_xml << "'\n";
      return 2;
    }
  }

  runner::RunOptions options;
  options.seed = flags.seed;
  options.jobs = flags.jobs ? flags.jobs : std::max(1u, std::thread::hardware_concurrency());
  const auto report = runner::run_tests(tests, options);

  report::ConsoleOptions console;
  console.verbose = flags.verbose;
  console.color = tty && !flags.no_color && std::getenv("NO_COLOR") == nullptr;
  console.unicode = report::locale_supports_unicode();
  out << report::render_console(report, console);

  if (xml.is_open()) {
    xml << report::render_junit_xml(report);
    xml.close();
    if (!xml) {
      err << "qutest: failed writing '" << flags.junit_xml << "'\n";
      return 2;
    }
  }
  return report.exit_code();
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Unit testing for OpenQASM 3 programs", "qutest"};
  app.require_subcommand(1);

  std::vector<std::string> lint_paths;
  auto* lint = app.add_subcommand("lint", "Check test files without running them");
  lint->add_option("paths", lint_paths, "Files or directories")->required();

  RunFlags flags;
  auto* run = app.add_subcommand("run", "Run the tests in the given files or directories");
  run->add_option("paths", flags.paths, "Files or directories")->required();
  run->add_flag("--verbose,-v", flags.verbose, "Show every assertion");
  run->add_option("--junit-xml", flags.junit_xml, "Write a JUnit XML report to FILE");
  run->add_option("--seed", flags.seed, "Master seed for tests with 'seed: random'");
  run->add_option("--jobs,-j", flags.jobs, "Worker threads (default: hardware threads)")
      ->check(CLI::Range(1u, 1024u));
  run->add_flag("--no-color", flags.no_color, "Disable coloured output");

  // CLI11 wants argv order reversed when given a vector.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "qutest: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  const bool tty = &out == &std::cout && ::isatty(fileno(stdout));
  try {
    if (lint->parsed()) return do_lint(lint_paths, out);
    return do_run(flags, out, err, tty);
  } catch (const UsageError& e) {
    err << "qutest: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "qutest: internal error: " << e.what() << "\n";
    return 1;
  }
}

int cli_main(int argc, char** argv) {
  std::vector<std::string> args(argv + (argc > 0 ? 1 : 0), argv + argc);
  return cli_main(args, std::cout, std::cerr);
}

}  // namespace qutest::cli
