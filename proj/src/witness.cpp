// SPDX-License-Identifier: Apache-2.0

#include "towerlrc/witness.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <string>

#include "towerlrc/errors.hpp"
#include "towerlrc/rng.hpp"

namespace towerlrc {

namespace {

void require_witness_q(int q) {
  if (q < 5)
    throw UsageError("the sharp-distance witnesses need odd q >= 5, got q = " + std::to_string(q));
}

bool contains(const std::vector<Element>& sorted, Element x) {
  return std::binary_search(sorted.begin(), sorted.end(), x);
}

std::uint64_t count_coordinate_in(const PlaceTable& places, int j, const std::vector<Element>& roots) {
  std::uint64_t n = 0;
  for (std::size_t p = 0; p < places.size(); ++p)
    if (contains(roots, places.coord(p, j))) ++n;
  return n;
}

void finish(Witness& w, const Tower& tower, const PlaceTable& level2) {
  const Field& field = tower.field();
  w.f = PolyFunction::product_of_linear(field, 2, 0, w.h0_roots)
            .times(field, PolyFunction::product_of_linear(field, 2, 1, w.h1_roots))
            .times(field, PolyFunction::product_of_linear(field, 2, 2, w.h2_roots));
  if (!w.f.in_space(w.spec))
    throw ConstructionFailure("witness polynomial leaves the function space: degrees " +
                              std::to_string(w.f.degree_in(0)) + "," +
                              std::to_string(w.f.degree_in(1)) + "," +
                              std::to_string(w.f.degree_in(2)));
  w.zeros = poly_zero_count(field, w.spec, w.f, level2);
  w.zeros_h0 = count_coordinate_in(level2, 0, w.h0_roots);
  w.zeros_h1 = count_coordinate_in(level2, 1, w.h1_roots);
  w.zeros_h2 = count_coordinate_in(level2, 2, w.h2_roots);
  w.weight = level2.size() - w.zeros;
}

void check_level2(const PlaceTable& places) {
  if (places.level() != 2) throw UsageError("witness construction needs the level-2 place table");
}

}  // namespace

CodeSpec pole_q_spec(int q) { return CodeSpec{q, 2, q}; }

CodeSpec half_pole_spec(int q) { return CodeSpec{q, 2, q * ((q - 1) / 2 - 1)}; }

Witness pole_q_witness(const Tower& tower, const PlaceTable& level2) {
  const int q = tower.q();
  require_witness_q(q);
  check_level2(level2);
  const TraceClassPartition part = tower.trace_class_partition();

  Witness w;
  w.spec = pole_q_spec(q);
  const std::uint64_t qq = q;
  w.expected_weight = qq * qq * (qq * qq - 4 * qq + 3);

  constexpr int beta1 = 1;
  w.h0_roots = part.s_class(beta1);
  const auto& b1 = part.b_class(beta1);

  int beta_star = 0;
  for (int beta = 1; beta < q && beta_star == 0; ++beta) {
    const auto& s = part.s_class(beta);
    const auto meet = std::count_if(s.begin(), s.end(), [&](Element a) { return contains(b1, a); });
    if (meet == 1) beta_star = beta;
  }
  if (beta_star == 0)
    throw ConstructionFailure("no class meets B_1 in exactly one element at q = " + std::to_string(q));
  for (Element a : part.s_class(beta_star))
    if (!contains(b1, a)) w.h1_roots.push_back(a);

  std::set<Element> forbidden;
  for (std::size_t p = 0; p < level2.size(); ++p)
    if (contains(w.h0_roots, level2.coord(p, 0)) || contains(w.h1_roots, level2.coord(p, 1)))
      forbidden.insert(level2.coord(p, 2));
  for (Element g : tower.split_locus()) {
    if (static_cast<int>(w.h2_roots.size()) == q - 2) break;
    if (!forbidden.count(g)) w.h2_roots.push_back(g);
  }
  if (static_cast<int>(w.h2_roots.size()) != q - 2)
    throw ConstructionFailure("only " + std::to_string(w.h2_roots.size()) +
                              " unreached level-2 values available, need " + std::to_string(q - 2));

  finish(w, tower, level2);
  return w;
}

Witness half_pole_witness(const Tower& tower, const PlaceTable& level2) {
  const int q = tower.q();
  require_witness_q(q);
  check_level2(level2);
  const TraceClassPartition part = tower.trace_class_partition();
  const Field& field = tower.field();

  Witness w;
  w.spec = half_pole_spec(q);
  const std::uint64_t qq = q;
  w.expected_weight = qq * qq * (qq * qq - 3 * qq + 6) / 2;

  constexpr int beta1 = 1;
  const auto& s1 = part.s_class(beta1);

  // x_0 values none of whose children land in S_1.
  for (Element a : tower.split_locus()) {
    const auto children = tower.extend_place(Place{{a}});
    const bool hits = std::any_of(children.begin(), children.end(),
                                  [&](const Place& c) { return contains(s1, c.top()); });
    if (!hits) w.h0_roots.push_back(a);
  }
  if (static_cast<int>(w.h0_roots.size()) != q * ((q - 1) / 2 - 1))
    throw ConstructionFailure("expected " + std::to_string(q * ((q - 1) / 2 - 1)) +
                              " x_0 values avoiding S_1, found " + std::to_string(w.h0_roots.size()));

  // x_1 values reached from the h0 roots are excluded, as is S_1.
  std::set<Element> reached;
  for (Element a : w.h0_roots)
    for (Element y : field.solve_trace(tower.rhs_step(a))) reached.insert(y);
  for (Element a : tower.split_locus()) {
    if (static_cast<int>(w.h1_roots.size()) == q - 1) break;
    if (!contains(s1, a) && !reached.count(a)) w.h1_roots.push_back(a);
  }
  if (static_cast<int>(w.h1_roots.size()) != q - 1)
    throw ConstructionFailure("not enough x_1 values outside S_1 and the h0 descendants");

  const auto& b1 = part.b_class(beta1);
  if (static_cast<int>(b1.size()) < q - 2) throw ConstructionFailure("B_1 smaller than q - 2");
  w.h2_roots.assign(b1.begin(), b1.begin() + (q - 2));

  finish(w, tower, level2);
  return w;
}

ConjectureReport explore_conjecture(const Tower& tower, const CodeSpec& spec, std::uint64_t rounds,
                                    std::uint64_t seed, std::uint64_t place_budget) {
  spec.validate();
  if (spec.level < 3)
    throw UsageError("the conjecture explorer needs level >= 3, got " + std::to_string(spec.level));
  if (spec.q != tower.q()) throw UsageError("code and tower disagree on q");
  if (rounds == 0) throw BudgetExceeded("conjecture search", 1, 0);

  const Field& field = tower.field();
  const PlaceTable places = tower.enumerate_split_places(spec.level, place_budget);
  const int level = spec.level;
  const std::size_t n = places.size();
  const std::size_t words = (n + 63) / 64;
  const auto& locus = tower.split_locus();
  const std::size_t values = locus.size();

  // zero_sets[j * values + v] = places whose coordinate j equals locus[v].
  std::vector<std::uint64_t> zero_sets((level + 1) * values * words, 0);
  std::vector<int> value_of(field.size(), -1);
  for (std::size_t v = 0; v < values; ++v) value_of[locus[v].index()] = static_cast<int>(v);
  for (std::size_t p = 0; p < n; ++p)
    for (int j = 0; j <= level; ++j) {
      const int v = value_of[places.coord(p, j).index()];
      zero_sets[(j * values + v) * words + p / 64] |= std::uint64_t{1} << (p % 64);
    }

  std::vector<int> caps(level + 1, spec.q - 1);
  caps[0] = spec.pole_order;
  caps[level] = spec.q - 2;
  for (auto& c : caps) c = std::min<int>(c, static_cast<int>(values));

  ConjectureReport report;
  report.spec = spec;
  report.zero_bound = spec.max_zero_count();
  report.rounds = rounds;
  report.seed = seed;
  Rng rng(seed);

  std::vector<std::uint64_t> covered(words);
  for (std::uint64_t round = 0; round < rounds; ++round) {
    std::fill(covered.begin(), covered.end(), 0);
    std::vector<std::vector<int>> chosen(level + 1);
    std::vector<int> left = caps;

    auto take = [&](int j, int v) {
      chosen[j].push_back(v);
      --left[j];
      const std::uint64_t* z = &zero_sets[(j * values + v) * words];
      for (std::size_t k = 0; k < words; ++k) covered[k] |= z[k];
    };

    if (round > 0) {
      std::vector<int> open;
      for (int j = 0; j <= level; ++j)
        if (left[j] > 0) open.push_back(j);
      if (!open.empty()) {
        const int j = open[rng.below(open.size())];
        take(j, static_cast<int>(rng.below(values)));
      }
    }

    while (true) {
      std::size_t best_gain = 0;
      std::vector<std::pair<int, int>> ties;
      for (int j = 0; j <= level; ++j) {
        if (left[j] == 0) continue;
        for (std::size_t v = 0; v < values; ++v) {
          if (std::find(chosen[j].begin(), chosen[j].end(), static_cast<int>(v)) != chosen[j].end())
            continue;
          const std::uint64_t* z = &zero_sets[(j * values + v) * words];
          std::size_t gain = 0;
          for (std::size_t k = 0; k < words; ++k) gain += std::popcount(z[k] & ~covered[k]);
          if (gain > best_gain) {
            best_gain = gain;
            ties.clear();
          }
          if (gain == best_gain && gain > 0) ties.emplace_back(j, static_cast<int>(v));
        }
      }
      if (best_gain == 0) break;
      const auto pick = round == 0 ? ties.front() : ties[rng.below(ties.size())];
      take(pick.first, pick.second);
    }

    std::uint64_t count = 0;
    for (auto word : covered) count += std::popcount(word);
    if (count > report.best_zero_count || report.best_roots.empty()) {
      report.best_zero_count = count;
      report.best_roots.assign(level + 1, {});
      for (int j = 0; j <= level; ++j) {
        for (int v : chosen[j]) report.best_roots[j].push_back(locus[v]);
        std::sort(report.best_roots[j].begin(), report.best_roots[j].end());
      }
    }
  }

  PolyFunction f = PolyFunction::constant(level, field.one());
  for (int j = 0; j <= level; ++j)
    f = f.times(field, PolyFunction::product_of_linear(field, level, j, report.best_roots[j]));
  if (!f.in_space(spec)) throw ConstructionFailure("explorer produced a function outside the space");
  report.verified_zero_count = poly_zero_count(field, spec, f, places);
  if (report.verified_zero_count != report.best_zero_count)
    throw ConstructionFailure("explorer zero count disagrees with direct evaluation");
  report.reaches_bound = static_cast<std::int64_t>(report.best_zero_count) >= report.zero_bound;
  return report;
}

}  // namespace towerlrc
