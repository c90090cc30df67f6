// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "oracle.hpp"
#include "towerlrc/errors.hpp"
#include "towerlrc/gf.hpp"

using namespace towerlrc;

namespace {
const int kPrimes[] = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31};
}

TEST_CASE("smallest non-residues") {
  const std::pair<int, int> frozen[] = {{3, 2},  {5, 2},  {7, 3},  {11, 2}, {13, 2},
                                        {17, 3}, {19, 2}, {23, 5}, {29, 2}, {31, 3}};
  for (auto [q, c] : frozen) {
    CHECK(smallest_nonresidue(q) == c);
    CHECK(Field(q).nonresidue() == oracle::Fq2(q).c);
  }
}

TEST_CASE("invalid q is rejected") {
  for (int q : {-3, 0, 1, 2, 4, 9, 15, 21, 25, 27, 33, 37, 64})
    CHECK_THROWS_AS(Field{q}, UsageError);
}

TEST_CASE("tables agree with hand-reduced arithmetic for every pair") {
  for (int q : {3, 5, 7}) {
    const Field f(q);
    const oracle::Fq2 o(q);
    for (int i = 0; i < f.size(); ++i) {
      const Element x = f.at(i);
      const auto ox = o.from_index(i);
      CHECK(f.frobenius(x).index() == o.index(o.pow(ox, q)));
      CHECK(f.trace(x).index() == o.index(o.trace(ox)));
      CHECK(f.norm(x).index() == o.index(o.norm(ox)));
      CHECK(f.in_base(f.trace(x)));
      CHECK(f.in_base(f.norm(x)));
      if (i != 0) CHECK(f.inv(x).index() == o.index(o.inv(ox)));
      for (int j = 0; j < f.size(); ++j) {
        const auto oy = o.from_index(j);
        REQUIRE(f.add(x, f.at(j)).index() == o.index(o.add(ox, oy)));
        REQUIRE(f.mul(x, f.at(j)).index() == o.index(o.mul(ox, oy)));
      }
    }
  }
}

TEST_CASE("field axioms on random triples") {
  oracle::Gen gen(7);
  for (int q : kPrimes) {
    const Field f(q);
    for (int trial = 0; trial < 500; ++trial) {
      const Element x = f.at(gen.below(f.size()));
      const Element y = f.at(gen.below(f.size()));
      const Element z = f.at(gen.below(f.size()));
      CHECK(f.mul(x, f.add(y, z)) == f.add(f.mul(x, y), f.mul(x, z)));
      CHECK(f.mul(f.mul(x, y), z) == f.mul(x, f.mul(y, z)));
      CHECK(f.add(x, f.neg(x)) == f.zero());
      CHECK(f.sub(f.add(x, y), y) == x);
      CHECK(f.frobenius(f.mul(x, y)) == f.mul(f.frobenius(x), f.frobenius(y)));
      CHECK(f.frobenius(f.frobenius(x)) == x);
      CHECK(f.pow(x, static_cast<std::uint64_t>(q) * q) == x);
      if (x != f.zero()) {
        CHECK(f.mul(x, f.inv(x)) == f.one());
        CHECK(f.div(y, x) == f.mul(y, f.inv(x)));
        CHECK(f.pow(x, static_cast<std::uint64_t>(q) * q - 1) == f.one());
      }
    }
  }
}

TEST_CASE("t squares to the non-residue") {
  for (int q : kPrimes) {
    const Field f(q);
    CHECK(f.mul(f.t(), f.t()) == f.make(f.nonresidue()));
    CHECK(f.make(-1) == f.make(q - 1));
    CHECK(f.make(2, 1).index() == 2 + q);
    CHECK(f.make(2, q + 1) == f.make(2, 1));
  }
}

TEST_CASE("inverse of zero is a domain error") {
  const Field f(5);
  CHECK_THROWS_AS(f.inv(f.zero()), DomainError);
  CHECK_THROWS_AS(f.at(25), UsageError);
}

TEST_CASE("trace fibres") {
  for (int q : kPrimes) {
    const Field f(q);
    std::set<Element> seen;
    for (int beta = 0; beta < q; ++beta) {
      const auto ys = f.solve_trace(f.make(beta));
      REQUIRE(ys.size() == static_cast<std::size_t>(q));
      CHECK(std::is_sorted(ys.begin(), ys.end()));
      int base = 0;
      for (Element y : ys) {
        CHECK(f.trace(y) == f.make(beta));
        base += f.in_base(y);
        seen.insert(y);
      }
      CHECK(base == 1);
    }
    CHECK(seen.size() == static_cast<std::size_t>(f.size()));
    CHECK_THROWS_AS(f.solve_trace(f.t()), DomainError);
  }
}

TEST_CASE("axpy") {
  const Field f(7);
  std::vector<Element> y = {f.make(1), f.make(2, 3), f.zero()};
  const std::vector<Element> x = {f.make(4), f.make(0, 1), f.make(5, 5)};
  const Element a = f.make(3, 2);
  auto expected = y;
  for (std::size_t k = 0; k < y.size(); ++k) expected[k] = f.add(y[k], f.mul(a, x[k]));
  f.axpy(y, a, x);
  CHECK(y == expected);
}
