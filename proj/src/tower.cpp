// SPDX-License-Identifier: Apache-2.0

#include "towerlrc/tower.hpp"

#include <limits>
#include <ostream>
#include <string>

#include "towerlrc/errors.hpp"

namespace towerlrc {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
    return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

std::uint64_t ipow(std::uint64_t base, int e) {
  std::uint64_t r = 1;
  for (int k = 0; k < e; ++k) r = checked_mul(r, base);
  return r;
}

}  // namespace

PlaceTable::PlaceTable(int level, std::vector<Element> coords)
    : level_(level), coords_(std::move(coords)) {
  if (level < 0) throw UsageError("negative tower level");
  if (coords_.size() % width() != 0) throw UsageError("ragged place table");
}

Place PlaceTable::place(std::size_t pos) const {
  auto c = (*this)[pos];
  return Place{std::vector<Element>(c.begin(), c.end())};
}

Tower::Tower(Field field) : field_(std::move(field)) {
  const int n = field_.size();
  rhs_.assign(n, field_.zero());
  for (Element a : field_.elements()) {
    if (!in_split_locus(a)) continue;
    split_locus_.push_back(a);
    rhs_[a.index()] = field_.div(field_.norm(a), field_.trace(a));
  }
  fibers_.resize(field_.q());
  for (int beta = 0; beta < field_.q(); ++beta) fibers_[beta] = field_.solve_trace(field_.make(beta));
}

Element Tower::rhs_step(Element alpha) const {
  if (!in_split_locus(alpha))
    throw DomainError("element " + std::to_string(alpha.index()) +
                      " has zero trace; the tower recursion is undefined there");
  return rhs_[alpha.index()];
}

int Tower::color_of(const Place& p, int j) const {
  if (j < 0 || j > p.level())
    throw UsageError("coordinate " + std::to_string(j) + " outside place of level " +
                     std::to_string(p.level()));
  return color(p.coords[j]);
}

bool Tower::is_valid(std::span<const Element> coords) const {
  if (coords.empty()) return false;
  for (Element c : coords)
    if (static_cast<int>(c.index()) >= field_.size()) return false;
  if (!in_split_locus(coords[0])) return false;
  for (std::size_t k = 1; k < coords.size(); ++k)
    if (field_.trace(coords[k]) != rhs_step(coords[k - 1])) return false;
  return true;
}

std::vector<Place> Tower::extend_place(const Place& p) const {
  if (!is_valid(p)) throw UsageError("extend_place: not a place above the splitting locus");
  const auto& fiber = fibers_[field_.a(rhs_step(p.top()))];
  std::vector<Place> out;
  out.reserve(fiber.size());
  for (Element y : fiber) {
    Place child = p;
    child.coords.push_back(y);
    out.push_back(std::move(child));
  }
  return out;
}

PlaceTable Tower::enumerate_split_places(int level, std::uint64_t budget) const {
  if (level < 0) throw UsageError("tower level must be nonnegative");
  const std::uint64_t count = split_place_count(q(), level);
  if (count > budget)
    throw BudgetExceeded("enumerating level-" + std::to_string(level) + " places", count, budget);

  // Depth-first in ascending order yields lexicographic order directly.
  std::vector<Element> coords;
  coords.reserve(count * (level + 1));
  std::vector<Element> stack(level + 1);
  auto descend = [&](auto&& self, int depth) -> void {
    if (depth == level) {
      coords.insert(coords.end(), stack.begin(), stack.end());
      return;
    }
    for (Element y : fibers_[field_.a(rhs_[stack[depth].index()])]) {
      stack[depth + 1] = y;
      self(self, depth + 1);
    }
  };
  for (Element a : split_locus_) {
    stack[0] = a;
    descend(descend, 0);
  }
  return PlaceTable(level, std::move(coords));
}

TraceClassPartition Tower::trace_class_partition() const {
  TraceClassPartition part;
  part.q = q();
  part.s_classes.resize(q() - 1);
  part.b_classes.resize(q() - 1);
  for (Element a : split_locus_) part.s_classes[color(a) - 1].push_back(a);
  for (int beta = 1; beta < q(); ++beta) part.b_classes[beta - 1] = fibers_[beta];
  return part;
}

std::uint64_t split_place_count(int q, int level) {
  return checked_mul(ipow(q, level), static_cast<std::uint64_t>(q) * q - q);
}

std::uint64_t genus(int q, int j) {
  if (j < 0) throw UsageError("genus: level must be nonnegative");
  const std::uint64_t big = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t g;
  if (j % 2 == 1) {
    const std::uint64_t a = ipow(q, (j + 1) / 2);
    g = (a == big) ? big : checked_mul(a - 1, a - 1);
  } else {
    const std::uint64_t a = ipow(q, j / 2 + 1);
    const std::uint64_t b = ipow(q, j / 2);
    g = (a == big || b == big) ? big : checked_mul(a - 1, b - 1);
  }
  if (g == big)
    throw UsageError("genus of level " + std::to_string(j) + " overflows 64 bits at q = " +
                     std::to_string(q));
  return g;
}

std::uint64_t zero_count_coordinate(const PlaceTable& places, int j, Element alpha) {
  if (j < 0 || j > places.level())
    throw UsageError("coordinate " + std::to_string(j) + " outside level " +
                     std::to_string(places.level()));
  std::uint64_t count = 0;
  for (std::size_t p = 0; p < places.size(); ++p)
    if (places.coord(p, j) == alpha) ++count;
  return count;
}

void write_places_csv(std::ostream& os, const PlaceTable& places) {
  os << "place_id";
  for (int j = 0; j <= places.level(); ++j) os << ",alpha_" << j;
  os << '\n';
  for (std::size_t p = 0; p < places.size(); ++p) {
    os << p;
    for (Element e : places[p]) os << ',' << e.index();
    os << '\n';
  }
}

}  // namespace towerlrc
