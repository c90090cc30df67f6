// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "towerlrc/errors.hpp"
#include "towerlrc/witness.hpp"

using namespace towerlrc;

namespace {

// Zero count of the witness recomputed place by place from its root lists.
std::uint64_t zeros_from_roots(const Witness& w, const PlaceTable& places) {
  const std::set<Element> r0(w.h0_roots.begin(), w.h0_roots.end());
  const std::set<Element> r1(w.h1_roots.begin(), w.h1_roots.end());
  const std::set<Element> r2(w.h2_roots.begin(), w.h2_roots.end());
  std::uint64_t zeros = 0;
  for (std::size_t p = 0; p < places.size(); ++p)
    zeros += r0.count(places.coord(p, 0)) || r1.count(places.coord(p, 1)) || r2.count(places.coord(p, 2));
  return zeros;
}

}  // namespace

TEST_CASE("pole order q witness") {
  for (auto [q, d] : {std::pair{5, 200}, std::pair{7, 1176}, std::pair{11, 9680}}) {
    const Tower tower{Field(q)};
    const PlaceTable places = tower.enumerate_split_places(2);
    const Witness w = pole_q_witness(tower, places);
    CHECK(w.expected_weight == static_cast<std::uint64_t>(d));
    CHECK(w.weight == static_cast<std::uint64_t>(d));
    CHECK(w.attains_designed());
    CHECK(w.factors_disjoint());
    CHECK(w.h0_roots.size() == static_cast<std::size_t>(q));
    CHECK(w.h1_roots.size() == static_cast<std::size_t>(q - 1));
    CHECK(w.h2_roots.size() == static_cast<std::size_t>(q - 2));
    CHECK(w.f.in_space(w.spec));
    CHECK(places.size() - zeros_from_roots(w, places) == w.weight);
  }
}

TEST_CASE("half pole witness") {
  for (auto [q, d] : {std::pair{5, 200}, std::pair{7, 833}, std::pair{11, 5687}}) {
    const Tower tower{Field(q)};
    const PlaceTable places = tower.enumerate_split_places(2);
    const Witness w = half_pole_witness(tower, places);
    CHECK(w.spec.pole_order == q * ((q - 1) / 2 - 1));
    CHECK(2 * w.expected_weight == static_cast<std::uint64_t>(q * q * (q * q - 3 * q + 6)));
    CHECK(w.weight == static_cast<std::uint64_t>(d));
    CHECK(w.attains_designed());
    CHECK(w.factors_disjoint());
    CHECK(w.f.in_space(w.spec));
    CHECK(places.size() - zeros_from_roots(w, places) == w.weight);
  }
}

TEST_CASE("witnesses need q >= 5 and a level-2 table") {
  const Tower t3{Field(3)};
  CHECK_THROWS_AS(pole_q_witness(t3, t3.enumerate_split_places(2)), UsageError);
  const Tower t5{Field(5)};
  CHECK_THROWS_AS(half_pole_witness(t5, t5.enumerate_split_places(1)), UsageError);
}

TEST_CASE("conjecture explorer") {
  const Tower tower{Field(5)};
  const CodeSpec spec{5, 3, 2};
  const ConjectureReport a = explore_conjecture(tower, spec, 8, 42);
  const ConjectureReport b = explore_conjecture(tower, spec, 8, 42);
  CHECK(a.best_zero_count == b.best_zero_count);
  CHECK(a.best_roots == b.best_roots);
  CHECK(a.verified_zero_count == a.best_zero_count);
  CHECK(a.zero_bound == spec.max_zero_count());
  CHECK(static_cast<std::int64_t>(a.best_zero_count) <= a.zero_bound);
  CHECK(a.reaches_bound == (static_cast<std::int64_t>(a.best_zero_count) == a.zero_bound));
  // More rounds never lose the greedy start.
  const ConjectureReport c = explore_conjecture(tower, spec, 1, 42);
  CHECK(a.best_zero_count >= c.best_zero_count);
  CHECK_THROWS_AS(explore_conjecture(tower, spec, 0, 42), BudgetExceeded);
  CHECK_THROWS_AS(explore_conjecture(tower, CodeSpec{5, 2, 5}, 4, 42), UsageError);
}
