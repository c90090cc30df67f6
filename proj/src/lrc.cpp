// SPDX-License-Identifier: Apache-2.0

#include "towerlrc/lrc.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <string>

#include "towerlrc/errors.hpp"
#include "towerlrc/parallel.hpp"

namespace towerlrc {

namespace {

std::int64_t ipow(std::int64_t base, int e) {
  std::int64_t r = 1;
  for (int k = 0; k < e; ++k) r *= base;
  return r;
}

std::uint64_t saturating_pow(std::uint64_t base, std::size_t e) {
  std::uint64_t r = 1;
  for (std::size_t k = 0; k < e; ++k) {
    if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base)
      return std::numeric_limits<std::uint64_t>::max();
    r *= base;
  }
  return r;
}

}  // namespace

void CodeSpec::validate() const {
  validate_q(q);
  if (level < 1) throw UsageError("code level must be at least 1, got " + std::to_string(level));
  if (pole_order < 0)
    throw UsageError("pole order must be nonnegative, got " + std::to_string(pole_order));
}

std::uint64_t CodeSpec::dimension_formula() const {
  return static_cast<std::uint64_t>(pole_order + 1) * (q - 1) * ipow(q, level - 1);
}

std::int64_t CodeSpec::designed_distance() const {
  const std::int64_t qq = q;
  return ipow(q, level) * (qq * qq - 2 * qq + 2 - pole_order - (qq - 1) * (level - 1));
}

std::int64_t CodeSpec::max_zero_count() const {
  const std::int64_t qq = q;
  return (pole_order + (level - 1) * (qq - 1) + (qq - 2)) * ipow(q, level);
}

bool CodeSpec::in_positive_window() const {
  return level > 1 && level <= q - 1 && pole_order >= 1 && pole_order <= (q - 1) * (q - level);
}

bool in_exponent_box(const CodeSpec& spec, const Exponents& e) {
  if (static_cast<int>(e.size()) != spec.level + 1) return false;
  for (int j = 0; j <= spec.level; ++j) {
    const int cap = j == 0 ? spec.pole_order : (j == spec.level ? spec.q - 2 : spec.q - 1);
    if (e[j] < 0 || e[j] > cap) return false;
  }
  return true;
}

PolyFunction PolyFunction::constant(int level, Element c) {
  PolyFunction f(level);
  if (c != Element(0)) f.terms_[Exponents(level + 1, 0)] = c;
  return f;
}

PolyFunction PolyFunction::linear(const Field& field, int level, int var, Element root) {
  if (var < 0 || var > level) throw UsageError("linear factor variable outside level");
  PolyFunction f(level);
  Exponents e(level + 1, 0);
  e[var] = 1;
  f.add_term(field, e, field.one());
  f.add_term(field, Exponents(level + 1, 0), field.neg(root));
  return f;
}

PolyFunction PolyFunction::product_of_linear(const Field& field, int level, int var,
                                             std::span<const Element> roots) {
  PolyFunction f = constant(level, field.one());
  for (Element r : roots) f = f.times(field, linear(field, level, var, r));
  return f;
}

void PolyFunction::add_term(const Field& field, const Exponents& e, Element c) {
  if (static_cast<int>(e.size()) != level_ + 1) throw UsageError("exponent tuple has wrong level");
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) it->second = field.add(it->second, c);
  if (it->second == field.zero()) terms_.erase(it);
}

PolyFunction PolyFunction::times(const Field& field, const PolyFunction& other) const {
  if (other.level_ != level_) throw UsageError("multiplying polynomials of different levels");
  PolyFunction out(level_);
  Exponents e(level_ + 1);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : other.terms_) {
      for (int j = 0; j <= level_; ++j) e[j] = ea[j] + eb[j];
      out.add_term(field, e, field.mul(ca, cb));
    }
  return out;
}

int PolyFunction::degree_in(int var) const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.at(var));
  return d;
}

bool PolyFunction::in_space(const CodeSpec& spec) const {
  if (level_ != spec.level) return false;
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const auto& t) { return in_exponent_box(spec, t.first); });
}

Element PolyFunction::evaluate(const Field& field, std::span<const Element> coords) const {
  Element acc = field.zero();
  for (const auto& [e, c] : terms_) acc = field.add(acc, field.mul(c, eval_monomial(field, e, coords)));
  return acc;
}

std::vector<Exponents> monomial_basis(const CodeSpec& spec) {
  spec.validate();
  std::vector<Exponents> out;
  out.reserve(spec.dimension_formula());
  Exponents e(spec.level + 1, 0);
  auto cap = [&](int j) {
    return j == 0 ? spec.pole_order : (j == spec.level ? spec.q - 2 : spec.q - 1);
  };
  if (spec.q < 2) return out;
  // Odometer with the last exponent fastest gives lexicographic order.
  while (true) {
    out.push_back(e);
    int j = spec.level;
    while (j >= 0 && e[j] == cap(j)) e[j--] = 0;
    if (j < 0) break;
    ++e[j];
  }
  return out;
}

Element eval_monomial(const Field& field, const Exponents& e, std::span<const Element> place) {
  if (e.size() != place.size())
    throw UsageError("monomial of level " + std::to_string(static_cast<int>(e.size()) - 1) +
                     " evaluated at place of level " +
                     std::to_string(static_cast<int>(place.size()) - 1));
  Element acc = field.one();
  for (std::size_t j = 0; j < e.size(); ++j)
    if (e[j] != 0) acc = field.mul(acc, field.pow(place[j], e[j]));
  return acc;
}

GeneratorMatrix generator_matrix(const Field& field, const CodeSpec& spec,
                                 const PlaceTable& places, int threads) {
  if (places.level() != spec.level) throw UsageError("place table level does not match code level");
  GeneratorMatrix gm;
  gm.monomials = monomial_basis(spec);
  gm.rows = gm.monomials.size();
  gm.cols = places.size();
  gm.entries.assign(gm.rows * gm.cols, field.zero());

  // Powers of every coordinate value are shared by all monomials.
  const int max_exp = std::max(spec.pole_order, spec.q - 1);
  std::vector<Element> powers(static_cast<std::size_t>(field.size()) * (max_exp + 1));
  for (Element x : field.elements()) {
    Element p = field.one();
    for (int e = 0; e <= max_exp; ++e) {
      powers[static_cast<std::size_t>(x.index()) * (max_exp + 1) + e] = p;
      p = field.mul(p, x);
    }
  }
  parallel_chunks(gm.cols, threads, [&](std::size_t begin, std::size_t end, std::size_t) {
    for (std::size_t c = begin; c < end; ++c) {
      auto place = places[c];
      for (std::size_t r = 0; r < gm.rows; ++r) {
        Element acc = field.one();
        const Exponents& e = gm.monomials[r];
        for (std::size_t j = 0; j < e.size(); ++j)
          acc = field.mul(acc, powers[static_cast<std::size_t>(place[j].index()) * (max_exp + 1) + e[j]]);
        gm.entries[r * gm.cols + c] = acc;
      }
    }
  });
  return gm;
}

GeneratorMatrix row_echelon(const Field& field, const GeneratorMatrix& gm, int threads) {
  GeneratorMatrix m = gm;
  m.monomials.clear();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows && m.at(pivot, col) == field.zero()) ++pivot;
    if (pivot == m.rows) continue;
    if (pivot != rank)
      std::swap_ranges(m.row(pivot).begin(), m.row(pivot).end(), m.row(rank).begin());
    const Element scale = field.inv(m.at(rank, col));
    for (auto& x : m.row(rank)) x = field.mul(x, scale);

    const auto prow = m.row(rank).subspan(col);
    const std::size_t below = m.rows - rank - 1;
    parallel_chunks(below, threads, [&](std::size_t begin, std::size_t end, std::size_t) {
      for (std::size_t r = rank + 1 + begin; r < rank + 1 + end; ++r) {
        const Element f = m.at(r, col);
        if (f != field.zero())
          field.axpy(m.row(r).subspan(col), field.neg(f), std::span<const Element>(prow));
      }
    });
    ++rank;
  }
  m.rows = rank;
  m.entries.resize(rank * m.cols);
  return m;
}

std::size_t dimension_rank(const Field& field, const GeneratorMatrix& gm, int threads) {
  return row_echelon(field, gm, threads).rows;
}

std::vector<Element> encode(const Field& field, const GeneratorMatrix& gm,
                            std::span<const Element> message) {
  if (message.size() != gm.rows)
    throw UsageError("message length " + std::to_string(message.size()) +
                     " does not match code dimension " + std::to_string(gm.rows));
  std::vector<Element> word(gm.cols, field.zero());
  for (std::size_t r = 0; r < gm.rows; ++r) field.axpy(word, message[r], gm.row(r));
  return word;
}

std::size_t hamming_weight(const Field& field, std::span<const Element> word) {
  return static_cast<std::size_t>(
      std::count_if(word.begin(), word.end(), [&](Element x) { return x != field.zero(); }));
}

std::uint64_t poly_zero_count(const Field& field, const CodeSpec& spec, const PolyFunction& f,
                              const PlaceTable& places) {
  if (!f.in_space(spec))
    throw UsageError("polynomial is not in the code's function space (exponent box violated)");
  if (places.level() != spec.level) throw UsageError("place table level does not match code level");
  std::uint64_t zeros = 0;
  for (std::size_t p = 0; p < places.size(); ++p)
    if (f.evaluate(field, places[p]) == field.zero()) ++zeros;
  return zeros;
}

MinDistanceResult exhaustive_min_distance(const Field& field, const GeneratorMatrix& gm,
                                          std::uint64_t budget, int threads) {
  const GeneratorMatrix basis = row_echelon(field, gm, threads);
  const std::size_t k = basis.rows;
  const std::uint64_t alphabet = field.size();
  const std::uint64_t required = saturating_pow(alphabet, k);
  if (required > budget) throw BudgetExceeded("exhaustive minimum distance search", required, budget);

  MinDistanceResult result;
  result.rank = k;
  if (k == 0) return result;
  result.codewords_searched = required - 1;

  // Each chunk owns a range of leading-digit values; the remaining digits
  // run as an odometer, updating the codeword by one axpy per digit change.
  std::vector<std::size_t> chunk_best(chunk_count(alphabet, threads), basis.cols + 1);
  parallel_chunks(alphabet, threads, [&](std::size_t begin, std::size_t end, std::size_t w) {
    std::size_t best = basis.cols + 1;
    std::vector<Element> word(basis.cols);
    std::vector<int> digits(k);
    for (std::size_t lead = begin; lead < end; ++lead) {
      std::fill(word.begin(), word.end(), field.zero());
      std::fill(digits.begin(), digits.end(), 0);
      digits[0] = static_cast<int>(lead);
      field.axpy(word, Element(static_cast<std::uint16_t>(lead)), basis.row(0));
      while (true) {
        if (lead != 0 || std::any_of(digits.begin() + 1, digits.end(), [](int d) { return d != 0; })) {
          std::size_t weight = 0;
          for (std::size_t c = 0; c < word.size() && weight < best; ++c)
            if (word[c] != field.zero()) ++weight;
          best = std::min(best, weight);
        }
        std::size_t j = k - 1;
        while (j >= 1) {
          const Element old_digit(static_cast<std::uint16_t>(digits[j]));
          digits[j] = (digits[j] + 1) % static_cast<int>(alphabet);
          const Element new_digit(static_cast<std::uint16_t>(digits[j]));
          field.axpy(word, field.sub(new_digit, old_digit), basis.row(j));
          if (digits[j] != 0) break;
          --j;
        }
        if (j == 0) break;
      }
    }
    chunk_best[w] = best;
  });
  result.distance = *std::min_element(chunk_best.begin(), chunk_best.end());
  return result;
}

CodeInstance build_code(const CodeSpec& spec, std::uint64_t place_budget, int threads) {
  spec.validate();
  Tower tower{Field(spec.q)};
  PlaceTable places = tower.enumerate_split_places(spec.level, place_budget);
  GeneratorMatrix gm = generator_matrix(tower.field(), spec, places, threads);
  return CodeInstance{std::move(tower), spec, std::move(places), std::move(gm)};
}

CodeParams CodeParams::from_spec(const CodeSpec& spec) {
  CodeParams p;
  p.q = spec.q;
  p.i = spec.level;
  p.l = spec.pole_order;
  p.n = spec.length();
  p.k_formula = spec.dimension_formula();
  p.d_designed = spec.designed_distance();
  p.locality = spec.locality();
  return p;
}

nlohmann::ordered_json CodeParams::to_json() const {
  auto opt = [](const std::optional<std::uint64_t>& v) -> nlohmann::ordered_json {
    return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
  };
  nlohmann::ordered_json j;
  j["q"] = q;
  j["i"] = i;
  j["l"] = l;
  j["n"] = n;
  j["k_formula"] = k_formula;
  j["k_rank"] = opt(k_rank);
  j["d_designed"] = d_designed;
  j["d_exact"] = opt(d_exact);
  j["d_witness"] = opt(d_witness);
  j["locality"] = locality;
  return j;
}

void write_generator_csv(std::ostream& os, const GeneratorMatrix& gm, int level) {
  for (int j = 0; j <= level; ++j) os << (j ? "," : "") << "e_" << j;
  for (std::size_t c = 1; c <= gm.cols; ++c) os << ",v_" << c;
  os << '\n';
  for (std::size_t r = 0; r < gm.rows; ++r) {
    for (int j = 0; j <= level; ++j) {
      if (j) os << ',';
      if (r < gm.monomials.size()) os << gm.monomials[r][j];
    }
    for (Element x : gm.row(r)) os << ',' << x.index();
    os << '\n';
  }
}

}  // namespace towerlrc
