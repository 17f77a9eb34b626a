#include "doctest.h"

#include <grothkit/harness.hpp>

#include <set>

using namespace grothkit;

TEST_CASE("registry") {
  auto specs = registered_checks();
  CHECK(specs.size() >= 20);
  std::set<std::string> ids;
  for (const auto& s : specs) {
    CHECK_FALSE(s.statement.empty());
    ids.insert(s.id);
  }
  CHECK(ids.size() == specs.size());
  CHECK(find_check("delta-staircase").expected == Expectation::Pass);
  CHECK(find_check("dewitt-conjecture").expected == Expectation::Conjecture);
  CHECK_THROWS_AS(find_check("no-such-check"), Error);
}

TEST_CASE("running one check") {
  CheckReport r = run_check("delta-staircase", {{"max_n", 2}, {"max_deg", 4}});
  CHECK(r.passed());
  CHECK(r.instances > 0);
  CHECK_FALSE(r.counterexample.has_value());
  CHECK(r.params.at("max_n") == 2);
  CHECK_THROWS_AS(run_check("delta-staircase", {{"bogus", 1}}), Error);
}

TEST_CASE("reports are deterministic") {
  auto first = run_checks({"product-rules", "delta-staircase"}, {}, 2);
  auto second = run_checks({"product-rules", "delta-staircase"}, {}, 1);
  REQUIRE(first.size() == 2);
  CHECK(first[0].id == "product-rules");
  Json a = Json::array(), c = Json::array();
  for (const auto& r : first) a.push_back(to_json(r));
  for (const auto& r : second) c.push_back(to_json(r));
  CHECK(a.dump() == c.dump());
}

TEST_CASE("exit status") {
  CheckReport ok{.id = "a", .status = Status::Pass};
  CheckReport conj_fail{.id = "b", .status = Status::Fail, .expected = Expectation::Conjecture};
  CheckReport real_fail{.id = "c", .status = Status::Fail, .expected = Expectation::Pass};
  CHECK(exit_status({ok}) == 0);
  CHECK(exit_status({ok, conj_fail}) == 0);
  CHECK(exit_status({ok, real_fail}) == 1);
  CHECK(exit_status({}) == 0);
}

TEST_CASE("context records the first failure only") {
  CheckContext ctx({{"n", 1}});
  CHECK(ctx.param("n") == 1);
  CHECK_THROWS_AS(ctx.param("missing"), Error);
  ctx.expect(true, [] { return Json("unused"); });
  ctx.expect(false, [] { return Json("first"); });
  ctx.expect(false, [] { return Json("second"); });
  CHECK(ctx.instances() == 3);
  CHECK(ctx.failures() == 2);
  REQUIRE(ctx.counterexample().has_value());
  CHECK(ctx.counterexample()->dump().find("first") != std::string::npos);
}
