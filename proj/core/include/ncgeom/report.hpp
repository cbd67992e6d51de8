#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace ncgeom {

// One executed check or computation.  `status` is "pass", "fail", or "value"
// (a pure computation with nothing to compare against); `anchor` spells out
// the identity or definition being exercised, so a failing row is readable
// on its own; `tolerance` is "exact" for decisions made in exact arithmetic
// and the numeric threshold otherwise.
struct ReportRow {
  std::string task;
  std::string anchor;
  std::string status;
  std::string value;
  std::string tolerance;
  double time_ms = 0.0;
};

// Ordered rows plus total wall time.  Everything except the timing fields is
// a deterministic function of the input and the seed, so two runs of the same
// work produce byte-identical bodies once timing is set aside.
struct Report {
  std::vector<ReportRow> rows;
  double wall_ms = 0.0;

  std::size_t passed() const;
  std::size_t failed() const;
  bool all_passed() const { return failed() == 0; }

  // Aligned columns.  Timing appears only in the final wall-time line, so
  // dropping that one line leaves the byte-stable body.
  std::string to_text() const;
  // Machine-readable form with fields {task, anchor, status, value,
  // tolerance, time_ms} per row; the "time_ms"/"wall_ms" entries are the
  // only nondeterministic parts.
  std::string to_json() const;
};

}  // namespace ncgeom
