#include "doctest.h"

#include <algorithm>
#include <string>

#include "ncgeom/errors.hpp"
#include "ncgeom/report.hpp"
#include "ncgeom/runner.hpp"
#include "ncgeom/scenario.hpp"

using namespace ncgeom;

namespace {

const char* kSu2Scenario = R"(# su(2) under the Killing metric
base_dim 1

lie su2 {
  dim 3
  c 0 1 2  1
  c 1 0 2 -1
  c 1 2 0  1
  c 2 1 0 -1
  c 2 0 1  1
  c 0 2 1 -1
}

metric gk {
  lie su2
}

tasks {
  ricci_table gk
  scalar_curvature gk
}
)";

// The report text minus its trailing wall-clock line, which is the one
// nondeterministic part of the text rendering.
std::string body_of(const Report& r) {
  std::string text = r.to_text();
  std::size_t cut = text.rfind("wall ");
  REQUIRE(cut != std::string::npos);
  return text.substr(0, cut);
}

bool any_value(const Report& r, const std::string& needle) {
  return std::any_of(r.rows.begin(), r.rows.end(),
                     [&](const ReportRow& row) { return row.value == needle; });
}

}  // namespace

TEST_CASE("scenario declarations of every kind parse and validate") {
  Scenario sc = parse_scenario(R"(
base_dim 2

group c2 {
  0 1
  1 0
}

lie ab {
  dim 2
}

metric flat {
  base
  1, 0
  0, 1
}

field f {
  size 2
  x1, x2
  0, 1
  domain (0,1) (0,1)
}

kernel k {
  0 0 1 0
}

grid g {
  box (0,1) (0,1)
  counts 2 3
}

topology t {
  points 2
  open {}
  open {0}
  open {0, 1}
}

presheaf p {
  topology t
  functions
}

cover c {
  target (0,2) (0,2)
  box (0,1) (0,2)
  box (1,2) (0,2)
}

tasks {
  levi_civita flat
}
)");
  CHECK(sc.base_dim == 2);
  CHECK(sc.groups.at("c2").order() == 2);
  CHECK(sc.lies.at("ab").dim() == 2);
  CHECK(sc.metrics.at("flat").basis_count() == 2);
  CHECK(sc.fields.at("f").size() == 2);
  CHECK(sc.kernels.at("k").support_size() == 1);
  CHECK(sc.grids.at("g").size() == 6);
  CHECK(sc.topologies.at("t").opens().size() == 3);
  CHECK(sc.presheaves.at("p").dim(0b11u) == 2);
  CHECK(sc.covers.at("c").boxes.size() == 2);
  REQUIRE(sc.tasks.size() == 1);
  CHECK(sc.tasks[0].name == "levi_civita");
  CHECK(sc.tasks[0].args == std::vector<std::string>{"flat"});
  CHECK(sc.tasks[0].text == "levi_civita flat");
}

TEST_CASE("parse errors carry the offending position") {
  // Unclosed block: reported at the header.
  try {
    parse_scenario("base_dim 1\nfield f {\n  size 1\n  x1\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 1);
  }

  // Bad integer in a grid count, pointed at the token.
  try {
    parse_scenario("base_dim 1\ngrid g {\n  box (0,1)\n  counts 2x\n}\ntasks {\n}\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
    CHECK(e.column() == 10);
  }

  CHECK_THROWS_AS(parse_scenario("base_dim 0\ntasks {\n}\n"), ParseError);
  CHECK_THROWS_AS(parse_scenario("widget w {\n}\n"), ParseError);
  CHECK_THROWS_AS(parse_scenario("base_dim 1\nfield f {\n}\ntasks {\n}\n"), ParseError);
  CHECK_THROWS_AS(
      parse_scenario("field f {\n  size 1\n  x1\n}\nbase_dim 1\ntasks {\n}\n"),
      ParseError);
  // Interval with backwards endpoints.
  CHECK_THROWS_AS(parse_scenario("base_dim 1\ngrid g {\n  box (1,0)\n  counts 2\n}\n"),
                  ParseError);
}

TEST_CASE("validation failures name the offending declaration") {
  try {
    parse_scenario("base_dim 1\ngroup broken {\n  0 1\n  1 1\n}\ntasks {\n}\n");
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("group broken") != std::string::npos);
  }

  try {
    parse_scenario("base_dim 1\nmetric m {\n  lie nosuch\n}\ntasks {\n}\n");
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("metric m") != std::string::npos);
    CHECK(std::string(e.what()).find("nosuch") != std::string::npos);
  }

  // A lawless custom presheaf is rejected when declared: restriction by 2
  // fails to be multiplicative, since 2xy differs from (2x)(2y).
  try {
    parse_scenario(R"(
base_dim 1
topology chain {
  points 2
  open {}
  open {0}
  open {0,1}
}
presheaf bad {
  topology chain
  space {} 0
  space {0} 1
  space {0,1} 1
  restrict {0,1} {0}
  2
  restrict {0,1} {}
  restrict {0} {}
}
tasks {
}
)");
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("presheaf bad") != std::string::npos);
  }

  // Duplicate names collide within their kind.
  CHECK_THROWS_AS(
      parse_scenario("base_dim 1\nkernel k {\n  0 0 1 0\n}\nkernel k {\n  0 0 1 0\n}\n"),
      ValidationError);
}

TEST_CASE("task failures name the task and its line") {
  Scenario sc = parse_scenario("base_dim 1\ntasks {\n  frobnicate x\n}\n");
  try {
    run_scenario(sc);
    FAIL("expected TaskError");
  } catch (const TaskError& e) {
    CHECK(std::string(e.what()).find("frobnicate x") != std::string::npos);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }

  Scenario missing = parse_scenario("base_dim 1\ntasks {\n  scalar_curvature gm\n}\n");
  try {
    run_scenario(missing);
    FAIL("expected TaskError");
  } catch (const TaskError& e) {
    CHECK(std::string(e.what()).find("scalar_curvature gm") != std::string::npos);
    CHECK(std::string(e.what()).find("declared metric") != std::string::npos);
  }

  // An unknown suite inside a scenario surfaces as that task's failure.
  Scenario bad_suite = parse_scenario("base_dim 1\ntasks {\n  suite nosuch\n}\n");
  try {
    run_scenario(bad_suite);
    FAIL("expected TaskError");
  } catch (const TaskError& e) {
    CHECK(std::string(e.what()).find("unknown suite: nosuch") != std::string::npos);
  }
}

TEST_CASE("the su(2) Killing scenario reports the pinned invariants") {
  Scenario sc = parse_scenario(kSu2Scenario);
  Report r = run_scenario(sc);
  CHECK(r.all_passed());
  CHECK(r.rows.size() == 7);  // six Ricci pairs plus the scalar
  CHECK(any_value(r, "ric(e0, e0) = -1/2"));
  CHECK(any_value(r, "ric(e1, e1) = -1/2"));
  CHECK(any_value(r, "ric(e2, e2) = -1/2"));
  CHECK(any_value(r, "ric(e0, e1) = 0"));
  CHECK(any_value(r, "r = 3/4"));
}

TEST_CASE("an empty task list yields an empty passing report") {
  Scenario sc = parse_scenario("base_dim 1\ntasks {\n}\n");
  Report r = run_scenario(sc);
  CHECK(r.rows.empty());
  CHECK(r.all_passed());
  CHECK(r.failed() == 0);
}

TEST_CASE("reports are deterministic for a fixed seed, in both run modes") {
  const char* text = R"(
base_dim 1
kernel a {
  0 0 1 0
  2 0 0 1/3
}
tasks {
  suite appendixB
  center_witness a 0
  commutant_dim 0 1 0 1
}
)";
  RunOptions fixed;
  fixed.seed = 99;

  Scenario sc1 = parse_scenario(text);
  Scenario sc2 = parse_scenario(text);
  Report r1 = run_scenario(sc1, fixed);
  Report r2 = run_scenario(sc2, fixed);
  CHECK(body_of(r1) == body_of(r2));

  RunOptions par = fixed;
  par.parallel = true;
  Report r3 = run_scenario(sc1, par);
  CHECK(body_of(r1) == body_of(r3));

  // A different seed redraws the random instances but the identities hold.
  RunOptions other;
  other.seed = 5;
  Report r4 = run_scenario(sc1, other);
  CHECK(r4.all_passed());
}

TEST_CASE("every built-in suite passes under the default seed") {
  for (const std::string name :
       {"algebra", "representation", "geometry", "sheaf", "appendixB"}) {
    Report r = run_suite(name);
    CHECK_MESSAGE(r.all_passed(), name);
    CHECK(r.passed() + r.failed() > 0);
  }
  CHECK_THROWS_AS(run_suite("spectral"), UnknownSuite);
}

TEST_CASE("text and json renderings expose the same rows") {
  Report r;
  r.rows.push_back({"demo", "1 + 1 = 2", "pass", "ok", "exact", 0.25});
  r.rows.push_back({"demo2", "||f||", "value", "0.875", "1e-12", 0.5});
  r.wall_ms = 1.0;

  std::string text = r.to_text();
  CHECK(text.find("demo") != std::string::npos);
  CHECK(text.find("1 + 1 = 2") != std::string::npos);
  CHECK(text.find("2 rows: 1 passed, 0 failed, 1 values") != std::string::npos);

  std::string json = r.to_json();
  CHECK(json.find("\"task\": \"demo\"") != std::string::npos);
  CHECK(json.find("\"status\": \"value\"") != std::string::npos);
  CHECK(json.find("\"tolerance\": \"1e-12\"") != std::string::npos);
  CHECK(json.find("\"passed\": 1") != std::string::npos);
  CHECK(json.find("\"failed\": 0") != std::string::npos);
}

TEST_CASE("loading a missing scenario file is an input error") {
  CHECK_THROWS_AS(run_scenario_file("/nonexistent/path.toy", RunOptions{}),
                  ValidationError);
}
