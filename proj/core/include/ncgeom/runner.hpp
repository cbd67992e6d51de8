#pragma once

#include <cstdint>
#include <string>

#include "ncgeom/report.hpp"
#include "ncgeom/scenario.hpp"

namespace ncgeom {

// Fixed default seed for the randomized suites; every run agrees
// byte-for-byte (timing aside) until a caller overrides it.
inline constexpr std::uint64_t kDefaultSeed = 271828;

struct RunOptions {
  std::uint64_t seed = kDefaultSeed;
  bool parallel = false;
};

// Executes the scenario's tasks in order.  With `parallel` set, tasks run
// concurrently; rows still appear in task order and match a sequential run
// byte-for-byte, timing aside.  Trouble inside a task surfaces as TaskError
// naming the task.
Report run_scenario(const Scenario& sc, const RunOptions& opts = {});

// load_scenario followed by run_scenario.
Report run_scenario_file(const std::string& path, const RunOptions& opts = {});

// One of the built-in verification suites: algebra, representation,
// geometry, sheaf, appendixB.  Any other name raises UnknownSuite.
Report run_suite(const std::string& name, const RunOptions& opts = {});

}  // namespace ncgeom
