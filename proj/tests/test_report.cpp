#include <doctest.h>

#include "braidcong/report.hpp"

using namespace braidcong;

TEST_CASE("report cases stay sorted and stable") {
  Report a;
  a.suite = "demo";
  a.params["n"] = 3;
  a.add("zulu", true, "1", "1");
  a.add("alpha", false, "2", "3");
  a.check("mike", true);

  REQUIRE(a.cases.size() == 3);
  CHECK(a.cases[0].name == "alpha");
  CHECK(a.cases[1].name == "mike");
  CHECK(a.cases[2].name == "zulu");
  CHECK(!a.all_pass());
  CHECK(a.fail_count() == 1);

  Report b;
  b.suite = "demo";
  b.params["n"] = 3;
  b.check("mike", true);
  b.add("alpha", false, "2", "3");
  b.add("zulu", true, "1", "1");
  CHECK(a.to_json().dump(2) == b.to_json().dump(2));
}

TEST_CASE("report json schema") {
  Report r;
  r.suite = "demo";
  r.add("case-a", true, "24", "24");
  nlohmann::json j = r.to_json();
  CHECK(j["schema"] == 1);
  CHECK(j["suite"] == "demo");
  REQUIRE(j["cases"].is_array());
  CHECK(j["cases"][0]["name"] == "case-a");
  CHECK(j["cases"][0]["status"] == "pass");
  CHECK(j["cases"][0]["expected"] == "24");
  CHECK(j["cases"][0]["actual"] == "24");
  Report empty;
  empty.suite = "none";
  CHECK(empty.all_pass());
  CHECK(empty.fail_count() == 0);
}
