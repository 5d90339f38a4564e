#include "doctest.h"
#include "json.hpp"
#include "tlcat/braid.hpp"
#include "tlcat/errors.hpp"
#include "tlcat/render.hpp"
#include "tlcat/suites.hpp"

using namespace tlcat;

TEST_CASE("reports are byte-stable") {
  SuiteOptions opt;
  opt.max_n = 4;
  const std::string a = run_suite("dilute", opt).to_json();
  const std::string b = run_suite("dilute", opt).to_json();
  CHECK(a == b);
  opt.run.jobs = 3;
  CHECK(run_suite("dilute", opt).to_json() == a);
}

TEST_CASE("report schema") {
  Report r("demo");
  r.add(check_true("always", {{"n", 3LL}}, true));
  r.add(check_equal("differs", {}, e(1, 2), identity(2)));
  const auto j = nlohmann::json::parse(r.to_json());
  CHECK(j["schema_version"] == kReportSchemaVersion);
  CHECK(j["suite"] == "demo");
  CHECK(j["summary"]["total"] == 2);
  CHECK(j["summary"]["failed"] == 1);
  CHECK(j["cases"][1]["status"] == "fail");
  CHECK_FALSE(j.contains("wall_time_ms"));
  // The failing witness is a parsable morphism.
  CHECK(Morphism::parse(j["cases"][1]["diff"].get<std::string>()) == e(1, 2) - identity(2));
  CHECK_FALSE(r.ok());
}

TEST_CASE("merged reports keep the sub-suite") {
  Report outer("outer");
  Report inner("inner");
  inner.add(check_true("x", {}, true));
  outer.append(inner);
  CHECK(outer.cases()[0].section == "inner");
}

TEST_CASE("exceptions inside a task become failing cases") {
  Report r("x");
  run_into(r, {[]() -> std::vector<CaseRecord> { throw Error("boom"); }}, 1);
  REQUIRE(r.cases().size() == 1);
  CHECK_FALSE(r.ok());
}

TEST_CASE("suite names") {
  CHECK(is_suite("all"));
  CHECK(is_suite("fusion"));
  CHECK_FALSE(is_suite("bogus"));
  CHECK_THROWS_AS(run_suite("bogus"), InvalidArgument);
}

TEST_CASE("rendering") {
  const Morphism eta = commutor(1, 1);
  const std::string ascii = render_ascii(eta);
  CHECK(ascii.find("2 terms") != std::string::npos);
  const std::string svg = render_svg(eta);
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(svg.find("href") == std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);
  const Diagram d = Diagram::parse("d5x4:[(1,9),(2,4),(3),(5,7),(6),(8)]");
  CHECK(render_ascii(d).find(d.str()) == 0);
  CHECK(parse_diagram_or_morphism(d.str()) == Morphism(d));
  CHECK_THROWS_AS(parse_diagram_or_morphism("nonsense"), ParseError);
}
