#include "ncgeom/report.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "json.hpp"

namespace ncgeom {

std::size_t Report::passed() const {
  return static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(),
                    [](const ReportRow& r) { return r.status == "pass"; }));
}

std::size_t Report::failed() const {
  return static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(),
                    [](const ReportRow& r) { return r.status == "fail"; }));
}

namespace {

std::string pad(const std::string& s, std::size_t width) {
  std::string out = s;
  out.append(width > s.size() ? width - s.size() : 0, ' ');
  return out;
}

// Millisecond figure with a fixed, locale-independent rendering.
std::string ms_string(double ms) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os.precision(3);
  os << std::fixed << ms;
  return os.str();
}

}  // namespace

std::string Report::to_text() const {
  std::array<std::string, 5> head = {"status", "task", "anchor", "value", "tolerance"};
  std::array<std::size_t, 5> width;
  for (std::size_t c = 0; c < 5; ++c) width[c] = head[c].size();
  auto cells = [](const ReportRow& r) {
    return std::array<const std::string*, 5>{&r.status, &r.task, &r.anchor, &r.value,
                                             &r.tolerance};
  };
  for (const ReportRow& r : rows) {
    auto cs = cells(r);
    for (std::size_t c = 0; c < 5; ++c) width[c] = std::max(width[c], cs[c]->size());
  }

  std::ostringstream os;
  for (std::size_t c = 0; c < 5; ++c) os << pad(head[c], width[c]) << (c + 1 < 5 ? "  " : "");
  os << '\n';
  for (std::size_t c = 0; c < 5; ++c) {
    os << std::string(width[c], '-') << (c + 1 < 5 ? "  " : "");
  }
  os << '\n';
  for (const ReportRow& r : rows) {
    auto cs = cells(r);
    for (std::size_t c = 0; c < 5; ++c) os << pad(*cs[c], width[c]) << (c + 1 < 5 ? "  " : "");
    os << '\n';
  }
  std::size_t values = rows.size() - passed() - failed();
  os << rows.size() << " rows: " << passed() << " passed, " << failed() << " failed, "
     << values << " values\n";
  os << "wall " << ms_string(wall_ms) << " ms\n";
  return os.str();
}

std::string Report::to_json() const {
  nlohmann::ordered_json doc;
  doc["rows"] = nlohmann::ordered_json::array();
  for (const ReportRow& r : rows) {
    nlohmann::ordered_json row;
    row["task"] = r.task;
    row["anchor"] = r.anchor;
    row["status"] = r.status;
    row["value"] = r.value;
    row["tolerance"] = r.tolerance;
    row["time_ms"] = r.time_ms;
    doc["rows"].push_back(std::move(row));
  }
  doc["passed"] = passed();
  doc["failed"] = failed();
  doc["wall_ms"] = wall_ms;
  return doc.dump(2) + "\n";
}

}  // namespace ncgeom
