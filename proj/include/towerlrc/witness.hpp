// SPDX-License-Identifier: Apache-2.0

#ifndef TOWERLRC_WITNESS_HPP
#define TOWERLRC_WITNESS_HPP

#include <cstdint>
#include <vector>

#include "towerlrc/lrc.hpp"

namespace towerlrc {

/// A function f = h0(x_0) h1(x_1) h2(x_2) in the level-2 function space
/// whose zero count meets the degree bound, making the designed distance
/// exact. Each h_j is a product of linear factors with the listed roots.
struct Witness {
  CodeSpec spec;
  std::vector<Element> h0_roots, h1_roots, h2_roots;
  PolyFunction f{2};
  std::uint64_t zeros = 0;
  /// Zero counts of h0, h1, h2 taken separately.
  std::uint64_t zeros_h0 = 0, zeros_h1 = 0, zeros_h2 = 0;
  std::uint64_t weight = 0;
  /// Closed-form distance the construction is expected to reach.
  std::uint64_t expected_weight = 0;

  bool attains_designed() const {
    return static_cast<std::int64_t>(weight) == spec.designed_distance();
  }
  bool factors_disjoint() const { return zeros == zeros_h0 + zeros_h1 + zeros_h2; }
};

/// (q, 2, q), the first code of the tower with pole order q.
CodeSpec pole_q_spec(int q);
/// (q, 2, q((q-1)/2 - 1)).
CodeSpec half_pole_spec(int q);

/// Witness at pole order q: h0 vanishes on the class S_1, h1 on S_b \ B_1
/// where S_b is the first class meeting B_1 in a single element, and h2 on
/// the first q - 2 split values not yet reached at level 2.
/// Expected weight q^2 (q^2 - 4q + 3). Requires odd q >= 5.
/// Throws ConstructionFailure if a selection step has no candidates or f
/// leaves the function space.
Witness pole_q_witness(const Tower& tower, const PlaceTable& level2);

/// Witness at pole order q((q-1)/2 - 1): h0 vanishes on every x_0 value none
/// of whose children lie in S_1, h1 on q - 1 values outside S_1 and outside
/// the children of those, h2 on q - 2 values of B_1.
/// Expected weight q^2 (q^2 - 3q + 6) / 2. Requires odd q >= 5.
Witness half_pole_witness(const Tower& tower, const PlaceTable& level2);

struct ConjectureReport {
  CodeSpec spec;
  std::uint64_t best_zero_count = 0;
  /// (l + (i - 1)(q - 1) + (q - 2)) q^i, the degree bound on zeros.
  std::int64_t zero_bound = 0;
  bool reaches_bound = false;
  std::uint64_t rounds = 0;
  std::uint64_t seed = 0;
  /// Chosen roots per coordinate for the best function found.
  std::vector<std::vector<Element>> best_roots;
  /// Zero count of the expanded best function, recomputed by evaluation.
  std::uint64_t verified_zero_count = 0;
};

/// Greedy plus seeded randomized search over products of linear factors in
/// the function space of a level >= 3 code, maximizing the zero count.
/// The first round is deterministic greedy; later rounds randomize ties and
/// seed a random first factor. rounds == 0 throws BudgetExceeded.
ConjectureReport explore_conjecture(const Tower& tower, const CodeSpec& spec,
                                    std::uint64_t rounds, std::uint64_t seed,
                                    std::uint64_t place_budget = kDefaultPlaceBudget);

}  // namespace towerlrc

#endif  // TOWERLRC_WITNESS_HPP
