// SPDX-License-Identifier: Apache-2.0

#include "towerlrc/recovery.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "towerlrc/errors.hpp"

namespace towerlrc {

RecoveryIndex::RecoveryIndex(const PlaceTable& places) {
  if (places.level() < 1) throw UsageError("recovery sets need a level >= 1 place table");
  const int top = places.level();
  set_of_.resize(places.size());
  // Lexicographic order keeps each prefix group contiguous.
  for (std::size_t p = 0; p < places.size(); ++p) {
    auto coords = places[p];
    auto prefix = coords.first(top);
    if (sets_.empty() || !std::equal(prefix.begin(), prefix.end(), sets_.back().prefix.begin(),
                                     sets_.back().prefix.end())) {
      RecoverySet s;
      s.prefix.assign(prefix.begin(), prefix.end());
      sets_.push_back(std::move(s));
    }
    sets_.back().positions.push_back(p);
    sets_.back().top.push_back(coords[top]);
    set_of_[p] = sets_.size() - 1;
  }
}

std::size_t RecoveryIndex::set_of(std::size_t column) const {
  if (column >= set_of_.size())
    throw std::out_of_range("column " + std::to_string(column) + " is not a code position");
  return set_of_[column];
}

std::vector<RecoverySet> recovery_sets(const PlaceTable& places) {
  return RecoveryIndex(places).sets();
}

Element lagrange_eval(const Field& field, std::span<const Element> xs, std::span<const Element> ys,
                      Element x) {
  Element acc = field.zero();
  for (std::size_t k = 0; k < xs.size(); ++k) {
    Element num = field.one();
    Element den = field.one();
    for (std::size_t m = 0; m < xs.size(); ++m) {
      if (m == k) continue;
      num = field.mul(num, field.sub(x, xs[m]));
      den = field.mul(den, field.sub(xs[k], xs[m]));
    }
    acc = field.add(acc, field.mul(ys[k], field.div(num, den)));
  }
  return acc;
}

Repair recover_erasure(const Field& field, const RecoveryIndex& index,
                       std::span<const std::optional<Element>> received, std::size_t erased) {
  if (received.size() != index.columns())
    throw UsageError("received word has length " + std::to_string(received.size()) +
                     ", code length is " + std::to_string(index.columns()));
  Repair out;
  out.set_id = index.set_of(erased);
  const RecoverySet& set = index.sets()[out.set_id];

  std::vector<Element> xs, ys;
  Element target{};
  for (std::size_t m = 0; m < set.positions.size(); ++m) {
    const std::size_t pos = set.positions[m];
    if (pos == erased) {
      target = set.top[m];
      continue;
    }
    if (!received[pos])
      throw UnrecoverableErasure("positions " + std::to_string(erased) + " and " +
                                 std::to_string(pos) + " of recovery set " +
                                 std::to_string(out.set_id) + " are both missing");
    xs.push_back(set.top[m]);
    ys.push_back(*received[pos]);
    out.used.push_back(pos);
  }
  out.value = lagrange_eval(field, xs, ys, target);
  return out;
}

}  // namespace towerlrc
