// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "oracle.hpp"
#include "towerlrc/errors.hpp"
#include "towerlrc/lrc.hpp"

using namespace towerlrc;

TEST_CASE("parameter formulas") {
  const CodeSpec a{3, 1, 1};
  CHECK(a.length() == 18);
  CHECK(a.dimension_formula() == 4);
  CHECK(a.designed_distance() == 12);
  CHECK(a.locality() == 2);
  const CodeSpec b{5, 2, 5};
  CHECK(b.length() == 500);
  CHECK(b.dimension_formula() == 120);
  CHECK(b.designed_distance() == 200);
  CHECK(b.max_zero_count() == 300);
  CHECK(b.in_positive_window());
  const CodeSpec c{7, 2, 14};
  CHECK(c.dimension_formula() == 630);
  CHECK(c.designed_distance() == 833);
  CHECK_FALSE(CodeSpec{5, 2, 13}.in_positive_window());
  CHECK_THROWS_AS((CodeSpec{4, 1, 1}.validate()), UsageError);
  CHECK_THROWS_AS((CodeSpec{5, 0, 1}.validate()), UsageError);
}

TEST_CASE("designed distance plus max zeros equals length") {
  for (int q : {3, 5, 7})
    for (int i = 1; i <= 3; ++i)
      for (int l = 0; l <= (q - 1) * (q - 1); ++l) {
        const CodeSpec s{q, i, l};
        CHECK(s.designed_distance() + s.max_zero_count() == static_cast<std::int64_t>(s.length()));
      }
}

TEST_CASE("monomial basis is the exponent box in lexicographic order") {
  const CodeSpec s{5, 2, 3};
  const auto basis = monomial_basis(s);
  CHECK(basis.size() == s.dimension_formula());
  CHECK(std::is_sorted(basis.begin(), basis.end()));
  for (const auto& e : basis) {
    CHECK(in_exponent_box(s, e));
    CHECK(e[0] <= 3);
    CHECK(e[1] <= 4);
    CHECK(e[2] <= 3);
  }
  CHECK_FALSE(in_exponent_box(s, {0, 0, 4}));
  CHECK_FALSE(in_exponent_box(s, {4, 0, 0}));
}

TEST_CASE("generator entries are monomial values") {
  const CodeInstance code = build_code({3, 2, 2});
  const oracle::Fq2 o(3);
  for (std::size_t r = 0; r < code.gm.rows; ++r)
    for (std::size_t c = 0; c < code.gm.cols; ++c) {
      oracle::Fq2::E v{1, 0};
      for (int j = 0; j <= 2; ++j) v = o.mul(v, o.pow(o.from_index(code.places.coord(c, j).index()), code.gm.monomials[r][j]));
      REQUIRE(code.gm.at(r, c).index() == o.index(v));
    }
}

TEST_CASE("rank equals the dimension formula") {
  for (auto spec : {CodeSpec{3, 1, 1}, CodeSpec{3, 1, 3}, CodeSpec{3, 2, 1}, CodeSpec{5, 1, 4}, CodeSpec{5, 2, 5},
                    CodeSpec{5, 3, 2}, CodeSpec{7, 2, 7}}) {
    const CodeInstance code = build_code(spec);
    CHECK(dimension_rank(code.field(), code.gm) == spec.dimension_formula());
    CHECK(dimension_rank(code.field(), code.gm, 3) == spec.dimension_formula());
  }
}

TEST_CASE("exhaustive distance of the smallest code") {
  const CodeInstance code = build_code({3, 1, 1});
  const MinDistanceResult r1 = exhaustive_min_distance(code.field(), code.gm);
  const MinDistanceResult r4 = exhaustive_min_distance(code.field(), code.gm, kDefaultSearchBudget, 4);
  CHECK(r1.codewords_searched == 6560);
  CHECK(r1.rank == 4);
  CHECK(r1.distance == 12);
  CHECK(r4.distance == r1.distance);

  // Brute force over every message as an independent route.
  std::uint64_t best = UINT64_MAX;
  std::vector<Element> msg(4);
  for (int m = 1; m < 6561; ++m) {
    int v = m;
    for (auto& e : msg) {
      e = Element(static_cast<std::uint16_t>(v % 9));
      v /= 9;
    }
    best = std::min<std::uint64_t>(best, hamming_weight(code.field(), encode(code.field(), code.gm, msg)));
  }
  CHECK(best == r1.distance);
  CHECK_THROWS_AS(exhaustive_min_distance(code.field(), code.gm, 6559), BudgetExceeded);
}

TEST_CASE("encoding is linear and weights respect the designed distance") {
  oracle::Gen gen(5);
  const CodeInstance code = build_code({5, 2, 5});
  const Field& f = code.field();
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Element> m1(code.gm.rows), m2(code.gm.rows), sum(code.gm.rows);
    for (std::size_t k = 0; k < m1.size(); ++k) {
      m1[k] = f.at(gen.below(25));
      m2[k] = f.at(gen.below(25));
      sum[k] = f.add(m1[k], m2[k]);
    }
    const auto c1 = encode(f, code.gm, m1), c2 = encode(f, code.gm, m2), cs = encode(f, code.gm, sum);
    for (std::size_t k = 0; k < cs.size(); ++k) REQUIRE(cs[k] == f.add(c1[k], c2[k]));
    CHECK(hamming_weight(f, c1) >= 200);
  }
  CHECK_THROWS_AS(encode(f, code.gm, std::vector<Element>(3)), UsageError);
}

TEST_CASE("poly functions") {
  const Field f(5);
  const CodeSpec spec{5, 2, 5};
  const std::vector<Element> roots = {f.make(1), f.make(2, 1)};
  const PolyFunction h = PolyFunction::product_of_linear(f, 2, 1, roots);
  CHECK(h.degree_in(1) == 2);
  CHECK(h.in_space(spec));
  const PolyFunction g = h.times(f, PolyFunction::linear(f, 2, 0, f.make(3)));
  CHECK(g.degree_in(0) == 1);
  const std::vector<Element> pt = {f.make(3), f.make(4), f.make(0)};
  CHECK(g.evaluate(f, pt) == f.zero());
  const std::vector<Element> pt2 = {f.make(2), f.make(2, 1), f.make(1)};
  CHECK(g.evaluate(f, pt2) == f.zero());
  const std::vector<Element> pt3 = {f.make(2), f.make(3), f.make(1)};
  CHECK(g.evaluate(f, pt3) == f.mul(f.mul(f.sub(f.make(3), f.make(1)), f.sub(f.make(3), f.make(2, 1))), f.sub(f.make(2), f.make(3))));
  const PolyFunction big = PolyFunction::product_of_linear(f, 2, 2, std::vector<Element>(4, f.one()));
  CHECK_FALSE(big.in_space(spec));
}

TEST_CASE("poly_zero_count agrees with direct evaluation") {
  const CodeInstance code = build_code({5, 2, 5});
  const Field& f = code.field();
  oracle::Gen gen(9);
  for (int trial = 0; trial < 20; ++trial) {
    PolyFunction p(2);
    for (int t = 0; t < 4; ++t)
      p.add_term(f, {gen.below(6), gen.below(5), gen.below(4)}, f.at(gen.below(25)));
    std::uint64_t zeros = 0;
    for (std::size_t c = 0; c < code.places.size(); ++c) zeros += p.evaluate(f, code.places[c]) == f.zero();
    CHECK(poly_zero_count(f, code.spec, p, code.places) == zeros);
  }
  CHECK_THROWS_AS(poly_zero_count(f, code.spec, PolyFunction::linear(f, 2, 2, f.one()).times(f, PolyFunction::product_of_linear(f, 2, 2, std::vector<Element>(3, f.one()))), code.places),
                  UsageError);
}

TEST_CASE("code params json uses null for unknown values") {
  CodeParams p = CodeParams::from_spec({3, 1, 1});
  p.k_rank = 4;
  CHECK(p.to_json().dump() ==
        R"({"q":3,"i":1,"l":1,"n":18,"k_formula":4,"k_rank":4,"d_designed":12,"d_exact":null,"d_witness":null,"locality":2})");
}

TEST_CASE("generator csv") {
  const CodeInstance code = build_code({3, 1, 1});
  std::ostringstream os;
  write_generator_csv(os, code.gm, 1);
  std::istringstream in(os.str());
  std::string header, first;
  std::getline(in, header);
  std::getline(in, first);
  CHECK(header.rfind("e_0,e_1,v_1,v_2,", 0) == 0);
  CHECK(header.size() > 8);
  CHECK(header.substr(header.rfind(',') + 1) == "v_18");
  CHECK(first.rfind("0,0,1,1,1,", 0) == 0);
}
