// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "towerlrc/errors.hpp"
#include "towerlrc/tower.hpp"
#include "towerlrc/verify.hpp"

using namespace towerlrc;

TEST_CASE("suite names round-trip") {
  for (const char* name : {"smoke", "partitions", "lemma", "corollary", "props", "recovery", "bounds", "genus", "all"})
    CHECK(std::string(to_string(parse_suite(name))) == name);
  CHECK_THROWS_AS(parse_suite("everything"), UsageError);
}

TEST_CASE("individual checks pass") {
  for (int q : {5, 7}) {
    CHECK(check_partitions(q).ok);
    CHECK(check_margins(q).ok);
    CHECK(check_half_pole_point(q).ok);
    CHECK(check_lines(q).ok);
    CHECK(check_genus(q).ok);
  }
  CHECK(check_zero_count_lemma(3, 4).ok);
  CHECK(check_zero_count_lemma(5, 4).ok);
  CHECK(check_zero_count_lemma(7, 4).ok);
  CHECK(check_common_zero(3, 1, 4).ok);
  CHECK(check_gv_curve(17, 16).ok);
  CHECK(check_figures().ok);
  CHECK_THROWS_AS(check_common_zero(5, 0, 2), UsageError);
}

TEST_CASE("witness checks skip below q = 5") {
  const CheckResult c = check_pole_q_distance(3);
  CHECK(c.ok);
  CHECK(c.skipped);
}

TEST_CASE("common zeros need the gap of three") {
  // With j = i + 2 some pairs have no common zero.
  const Tower tower{Field(5)};
  const PlaceTable places = tower.enumerate_split_places(2);
  std::set<std::pair<Element, Element>> pairs;
  for (std::size_t p = 0; p < places.size(); ++p) pairs.insert({places.coord(p, 0), places.coord(p, 2)});
  CHECK(pairs.size() < 400);
}

TEST_CASE("report is deterministic and names the suite") {
  VerifyOptions opt;
  opt.q = 5;
  opt.suite = Suite::Bounds;
  const VerifyReport a = run_verify(opt);
  opt.threads = 3;
  const VerifyReport b = run_verify(opt);
  CHECK(a.ok());
  CHECK(a.to_json().dump() == b.to_json().dump());
  CHECK(a.to_json()["suite"] == "bounds");
  CHECK(a.to_json()["failed"].is_null());
}

TEST_CASE("props suite reports exact distances") {
  VerifyOptions opt;
  opt.q = 5;
  opt.suite = Suite::Props;
  const auto j = run_verify(opt).to_json();
  REQUIRE(j["checks"].size() == 2);
  CHECK(j["checks"][0]["detail"]["params"]["d_exact"] == 200);
  CHECK(j["checks"][1]["detail"]["params"]["d_exact"] == 200);
  CHECK(j["checks"][1]["detail"]["params"]["l"] == 5);
}
