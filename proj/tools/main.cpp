// ncgeom: run scenario files or built-in suites and print the report.
//
// Exit codes: 0 when every check passes, 1 when a check fails, 2 for input
// problems (unreadable or malformed scenario, unknown suite, bad usage).

#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "ncgeom/errors.hpp"
#include "ncgeom/runner.hpp"

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic checks for groupoid convolution algebras"};
  app.require_subcommand(1);

  std::uint64_t seed = ncgeom::kDefaultSeed;
  bool parallel = false;
  std::string format = "text";
  app.add_option("--seed", seed, "seed for randomized batteries");
  app.add_flag("--parallel", parallel, "run scenario tasks concurrently");
  app.add_option("--format", format, "report format")
      ->check(CLI::IsMember({"text", "json"}));

  std::string scenario_path;
  CLI::App* run = app.add_subcommand("run", "execute a scenario file");
  run->add_option("scenario", scenario_path, "path to a .toy scenario")->required();
  run->fallthrough();

  std::string suite_name;
  CLI::App* suite = app.add_subcommand(
      "suite", "execute a built-in battery: algebra, representation, geometry, "
               "sheaf, appendixB");
  suite->add_option("name", suite_name, "suite name")->required();
  suite->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // --help exits cleanly; usage errors are input errors
  }

  try {
    ncgeom::RunOptions opts;
    opts.seed = seed;
    opts.parallel = parallel;
    ncgeom::Report report = run->parsed() ? ncgeom::run_scenario_file(scenario_path, opts)
                                          : ncgeom::run_suite(suite_name, opts);
    std::cout << (format == "json" ? report.to_json() : report.to_text());
    return report.all_passed() ? 0 : 1;
  } catch (const ncgeom::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
