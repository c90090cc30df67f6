// SPDX-License-Identifier: Apache-2.0

#ifndef TOWERLRC_RECOVERY_HPP
#define TOWERLRC_RECOVERY_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "towerlrc/gf.hpp"
#include "towerlrc/tower.hpp"

namespace towerlrc {

/// The q columns whose places share a level-(i-1) prefix. On such a set
/// every function of the code restricts to a polynomial of degree <= q - 2
/// in the top coordinate.
struct RecoverySet {
  std::vector<std::size_t> positions;
  std::vector<Element> prefix;
  std::vector<Element> top;  // top coordinate of each member, aligned with positions
};

/// Partition of the columns of a code into recovery sets, with the inverse
/// column -> set map.
class RecoveryIndex {
 public:
  explicit RecoveryIndex(const PlaceTable& places);

  const std::vector<RecoverySet>& sets() const { return sets_; }
  std::size_t set_of(std::size_t column) const;
  std::size_t columns() const { return set_of_.size(); }

 private:
  std::vector<RecoverySet> sets_;
  std::vector<std::size_t> set_of_;
};

std::vector<RecoverySet> recovery_sets(const PlaceTable& places);

/// Value at x of the unique polynomial of degree < xs.size() through the
/// points (xs[k], ys[k]). The xs must be pairwise distinct.
Element lagrange_eval(const Field& field, std::span<const Element> xs, std::span<const Element> ys,
                      Element x);

struct Repair {
  Element value;
  std::size_t set_id = 0;
  /// Positions read to compute the value; always the q - 1 siblings.
  std::vector<std::size_t> used;
};

/// Rebuilds received[erased] from the other members of its recovery set by
/// interpolation. received[erased] is ignored. Throws UnrecoverableErasure
/// when another member of the set is also missing and std::out_of_range when
/// erased is not a column of the code.
Repair recover_erasure(const Field& field, const RecoveryIndex& index,
                       std::span<const std::optional<Element>> received, std::size_t erased);

}  // namespace towerlrc

#endif  // TOWERLRC_RECOVERY_HPP
