#include <cstdlib>

#include "doctest.h"
#include "json.hpp"
#include "nilrig/report.hpp"

using namespace nilrig;

TEST_SUITE("report") {
  TEST_CASE("claim catalog") {
    const auto ids = claim_ids();
    REQUIRE(ids.size() == 12);
    CHECK(ids.front() == "1");
    CHECK(ids.back() == "12");
    CHECK_THROWS_AS(run_claim("13"), std::out_of_range);
  }

  TEST_CASE("claims are deterministic and pass exactly when the strings match") {
    for (const char* id : {"1", "2", "10", "12"}) {
      const Claim a = run_claim(id), b = run_claim(id);
      CHECK(a.computed == b.computed);
      CHECK(a.notes == b.notes);
      CHECK(a.pass == (a.expected == a.computed));
      CHECK(a.pass);
    }
    const Claim c = run_claim("5");
    CHECK(c.pass == (c.expected == c.computed));
  }

  TEST_CASE("json document") {
    ReportDoc doc;
    doc.seed = 7;
    Claim c;
    c.id = "1";
    c.description = "d";
    c.expected = c.computed = "x";
    c.pass = true;
    doc.claims = {c};
    c.id = "2";
    c.computed = "y";
    c.pass = false;
    doc.claims.push_back(c);
    const auto j = nlohmann::json::parse(report_to_json(doc));
    CHECK(j["seed"] == 7);
    CHECK(j["claims"].size() == 2);
    CHECK(j["claims"][1]["pass"] == false);
    CHECK(j["summary"]["passed"] == 1);
    CHECK(j["summary"]["failed"] == 1);
    CHECK_FALSE(doc.all_pass());
    CHECK(report_to_text(doc).find("FAIL") != std::string::npos);
  }

  TEST_CASE("thread cap") {
    setenv("NILRIG_THREADS", "3", 1);
    CHECK(thread_cap() == 3);
    setenv("NILRIG_THREADS", "zero", 1);
    CHECK(thread_cap() >= 1);
    unsetenv("NILRIG_THREADS");
    CHECK(thread_cap() >= 1);
  }

  TEST_CASE("property fixtures") {
    const auto fx = property_fixtures();
    CHECK(fx.size() >= 20);
    for (const auto& [name, g] : fx) CHECK(g.dim() <= 8);
  }
}
