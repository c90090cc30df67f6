// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <sstream>

#include "oracle.hpp"
#include "towerlrc/errors.hpp"
#include "towerlrc/tower.hpp"

using namespace towerlrc;

TEST_CASE("enumeration matches brute force, order included") {
  for (auto [q, max_level] : {std::pair{3, 3}, std::pair{5, 2}, std::pair{7, 1}}) {
    const Tower tower{Field(q)};
    const oracle::Fq2 o(q);
    for (int level = 0; level <= max_level; ++level) {
      const auto expected = oracle::brute_places(o, level);
      const PlaceTable table = tower.enumerate_split_places(level);
      REQUIRE(table.size() == expected.size());
      CHECK(table.size() == split_place_count(q, level));
      for (std::size_t p = 0; p < table.size(); ++p)
        for (int j = 0; j <= level; ++j) REQUIRE(table.coord(p, j).index() == expected[p][j]);
    }
  }
}

TEST_CASE("split place counts") {
  CHECK(split_place_count(3, 0) == 6);
  CHECK(split_place_count(3, 1) == 18);
  CHECK(split_place_count(5, 2) == 500);
  CHECK(split_place_count(5, 3) == 2500);
  CHECK(split_place_count(7, 2) == 2058);
  CHECK(split_place_count(31, 40) == UINT64_MAX);
}

TEST_CASE("budget is enforced before enumeration") {
  const Tower tower{Field(5)};
  CHECK_THROWS_AS(tower.enumerate_split_places(2, 499), BudgetExceeded);
  CHECK(tower.enumerate_split_places(2, 500).size() == 500);
}

TEST_CASE("genus closed form") {
  // (q^((j+1)/2) - 1)^2 for odd j, (q^(j/2+1) - 1)(q^(j/2) - 1) for even j.
  CHECK(genus(3, 0) == 0);
  CHECK(genus(3, 1) == 4);
  CHECK(genus(3, 2) == 16);
  CHECK(genus(3, 3) == 64);
  CHECK(genus(5, 1) == 16);
  CHECK(genus(5, 2) == 96);
  CHECK(genus(5, 6) == (625 - 1) * (125 - 1));
  CHECK(genus(7, 5) == (343 - 1) * (343 - 1));
  CHECK_THROWS_AS(genus(31, 40), UsageError);
}

TEST_CASE("places extend to q children and stay valid") {
  oracle::Gen gen(11);
  for (int q : {3, 5, 7, 11}) {
    const Tower tower{Field(q)};
    const PlaceTable base = tower.enumerate_split_places(1);
    for (int trial = 0; trial < 50; ++trial) {
      const Place p = base.place(gen.below(static_cast<int>(base.size())));
      CHECK(tower.is_valid(p));
      const auto kids = tower.extend_place(p);
      REQUIRE(kids.size() == static_cast<std::size_t>(q));
      for (const Place& k : kids) {
        CHECK(tower.is_valid(k));
        CHECK(std::equal(p.coords.begin(), p.coords.end(), k.coords.begin()));
        CHECK(tower.field().trace(k.top()) == tower.field().make(tower.color(p.top())));
      }
      CHECK(std::is_sorted(kids.begin(), kids.end()));
    }
  }
}

TEST_CASE("invalid tuples are rejected") {
  const Tower tower{Field(3)};
  const Field& f = tower.field();
  CHECK_FALSE(tower.is_valid(Place{{f.zero()}}));
  CHECK_FALSE(tower.is_valid(Place{{Element(200)}}));
  CHECK_THROWS_AS(tower.extend_place(Place{{f.zero()}}), UsageError);
  CHECK_THROWS_AS(tower.rhs_step(f.zero()), DomainError);
}

TEST_CASE("split locus and trace classes") {
  for (int q : {3, 5, 7, 11, 13}) {
    const Tower tower{Field(q)};
    const oracle::Fq2 o(q);
    CHECK(tower.split_locus().size() == static_cast<std::size_t>(q * q - q));
    const auto part = tower.trace_class_partition();
    std::set<Element> all;
    for (int beta = 1; beta < q; ++beta) {
      for (Element a : part.s_class(beta)) {
        const auto r = o.rhs(o.from_index(a.index()));
        CHECK(r == oracle::Fq2::E{beta, 0});
        all.insert(a);
      }
      for (Element a : part.b_class(beta)) CHECK(o.trace(o.from_index(a.index())) == oracle::Fq2::E{beta, 0});
      CHECK(part.s_class(beta).size() == static_cast<std::size_t>(q));
    }
    CHECK(all.size() == tower.split_locus().size());
  }
}

TEST_CASE("coordinate zero counts") {
  const Tower tower{Field(5)};
  const PlaceTable t2 = tower.enumerate_split_places(2);
  for (Element a : tower.field().elements())
    for (int j = 0; j <= 2; ++j) CHECK(zero_count_coordinate(t2, j, a) == (tower.in_split_locus(a) ? 25u : 0u));
}

TEST_CASE("places csv") {
  const Tower tower{Field(3)};
  std::ostringstream os;
  write_places_csv(os, tower.enumerate_split_places(1));
  std::istringstream in(os.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == "place_id,alpha_0,alpha_1");
  int rows = 0;
  while (std::getline(in, line)) {
    CHECK(line.rfind(std::to_string(rows) + ",", 0) == 0);
    ++rows;
  }
  CHECK(rows == 18);
}
