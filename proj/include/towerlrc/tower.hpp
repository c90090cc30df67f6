// SPDX-License-Identifier: Apache-2.0

#ifndef TOWERLRC_TOWER_HPP
#define TOWERLRC_TOWER_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "towerlrc/gf.hpp"

namespace towerlrc {

/// Default cap on the number of places materialized by one enumeration.
inline constexpr std::uint64_t kDefaultPlaceBudget = 1'000'000;

/// A rational place of F_i lying over the splitting locus, identified by
/// its coordinates (x_0(Q), ..., x_i(Q)).
struct Place {
  std::vector<Element> coords;

  int level() const { return static_cast<int>(coords.size()) - 1; }
  Element top() const { return coords.back(); }

  friend bool operator==(const Place&, const Place&) = default;
  friend auto operator<=>(const Place&, const Place&) = default;
};

/// The places of one tower level in canonical (lexicographic) order, stored
/// flat. Position in the table is the code column index.
class PlaceTable {
 public:
  PlaceTable(int level, std::vector<Element> coords);

  int level() const { return level_; }
  std::size_t width() const { return static_cast<std::size_t>(level_) + 1; }
  std::size_t size() const { return coords_.size() / width(); }

  std::span<const Element> operator[](std::size_t pos) const {
    return {coords_.data() + pos * width(), width()};
  }
  Element coord(std::size_t pos, int j) const { return coords_[pos * width() + j]; }
  Place place(std::size_t pos) const;

 private:
  int level_;
  std::vector<Element> coords_;
};

/// The sets S_beta = {alpha in S_0 : N(alpha)/Tr(alpha) = beta} and
/// B_beta = {alpha : Tr(alpha) = beta} for beta in F_q^*, each stored
/// ascending and indexed by the integer value of beta (1..q-1).
struct TraceClassPartition {
  int q = 0;
  std::vector<std::vector<Element>> s_classes;  // [beta - 1]
  std::vector<std::vector<Element>> b_classes;  // [beta - 1]

  const std::vector<Element>& s_class(int beta) const { return s_classes.at(beta - 1); }
  const std::vector<Element>& b_class(int beta) const { return b_classes.at(beta - 1); }
};

/// The Garcia-Stichtenoth tower y^q + y = x^q / (x^(q-1) + 1) over F_{q^2},
/// restricted to the places above S_0 = {alpha : alpha^q + alpha != 0}.
class Tower {
 public:
  explicit Tower(Field field);

  const Field& field() const { return field_; }
  int q() const { return field_.q(); }

  bool in_split_locus(Element alpha) const { return field_.trace(alpha) != field_.zero(); }
  /// S_0 ascending; q^2 - q elements.
  const std::vector<Element>& split_locus() const { return split_locus_; }

  /// alpha^q / (alpha^(q-1) + 1) = N(alpha)/Tr(alpha), in F_q^*.
  /// Throws DomainError when Tr(alpha) = 0.
  Element rhs_step(Element alpha) const;

  /// The class beta (as an integer in 1..q-1) with alpha in S_beta.
  int color(Element alpha) const { return field_.a(rhs_step(alpha)); }
  int color_of(const Place& p, int j) const;

  bool is_valid(std::span<const Element> coords) const;
  bool is_valid(const Place& p) const { return is_valid(std::span<const Element>(p.coords)); }

  /// The q places above p, ascending in the new coordinate.
  std::vector<Place> extend_place(const Place& p) const;

  /// All q^level (q^2 - q) places of the given level in lexicographic order.
  /// Throws BudgetExceeded when that count exceeds budget.
  PlaceTable enumerate_split_places(int level, std::uint64_t budget = kDefaultPlaceBudget) const;

  TraceClassPartition trace_class_partition() const;

 private:
  Field field_;
  std::vector<Element> split_locus_;
  std::vector<Element> rhs_;  // rhs_step by index, zero where undefined
  std::vector<std::vector<Element>> fibers_;  // solve_trace by base value
};

/// q^level (q^2 - q), saturating at UINT64_MAX.
std::uint64_t split_place_count(int q, int level);

/// Genus of F_j: (q^((j+1)/2) - 1)^2 for odd j, (q^(j/2+1) - 1)(q^(j/2) - 1)
/// for even j. Throws UsageError on 64-bit overflow.
std::uint64_t genus(int q, int j);

/// Number of places in the table whose coordinate j equals alpha.
std::uint64_t zero_count_coordinate(const PlaceTable& places, int j, Element alpha);

/// `place_id,alpha_0,...,alpha_i` with coordinates as canonical indices.
void write_places_csv(std::ostream& os, const PlaceTable& places);

}  // namespace towerlrc

#endif  // TOWERLRC_TOWER_HPP
