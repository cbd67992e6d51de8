#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ncgeom/box.hpp"
#include "ncgeom/grid.hpp"
#include "ncgeom/group.hpp"
#include "ncgeom/kernel.hpp"
#include "ncgeom/lie.hpp"
#include "ncgeom/matrix_field.hpp"
#include "ncgeom/metric.hpp"
#include "ncgeom/presheaf.hpp"
#include "ncgeom/topology.hpp"

namespace ncgeom {

// Named cover of a bounded box by bounded sub-boxes, the glue target of the
// symbolic regime.  Coverage itself is decided at task time, not here, so a
// scenario can deliberately declare a gappy cover to watch it rejected.
struct BoxCover {
  Box target;
  std::vector<Box> boxes;
};

// One line of the task list: the operation name, its arguments, the source
// line (for error reporting), and the canonical text used to label report
// rows.
struct Task {
  std::string name;
  std::vector<std::string> args;
  std::size_t line = 0;
  std::string text;
};

// A parsed scenario file: named immutable declarations plus the ordered task
// list.  Declarations are validated on the spot, so a live Scenario only
// holds lawful objects, and anything a task refers to by name exists.
//
// Move-only: metrics hold pointers into `lies`, which node-stable map moves
// preserve but copies would not.
struct Scenario {
  Scenario() = default;
  Scenario(const Scenario&) = delete;
  Scenario& operator=(const Scenario&) = delete;
  Scenario(Scenario&&) = default;
  Scenario& operator=(Scenario&&) = default;

  std::size_t base_dim = 1;

  std::map<std::string, FiniteGroup> groups;
  std::map<std::string, LieAlgebra> lies;
  std::map<std::string, BlockMetric> metrics;
  std::map<std::string, MatrixField> fields;
  std::map<std::string, FinSuppKernel> kernels;
  std::map<std::string, SampleGrid> grids;
  std::map<std::string, FiniteTopology> topologies;
  std::map<std::string, TabulatedPresheaf> presheaves;
  std::map<std::string, BoxCover> covers;

  std::vector<Task> tasks;
};

// Parses the structured scenario text: one section per declaration kind,
// `base_dim` first when a nondefault base is needed, a `tasks { ... }` block
// last.  Reports syntax trouble as ParseError with line and column and
// semantic trouble as ValidationError naming the declaration.
Scenario parse_scenario(std::string_view text);

// Reads and parses a scenario file; a missing or unreadable file is a
// ValidationError naming the path.
Scenario load_scenario(const std::string& path);

}  // namespace ncgeom
