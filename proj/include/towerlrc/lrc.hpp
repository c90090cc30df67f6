// SPDX-License-Identifier: Apache-2.0

#ifndef TOWERLRC_LRC_HPP
#define TOWERLRC_LRC_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "json.hpp"

#include "towerlrc/gf.hpp"
#include "towerlrc/tower.hpp"

namespace towerlrc {

inline constexpr std::uint64_t kDefaultSearchBudget = 100'000'000;

/// Parameters (q, level i, pole order l) of the evaluation code C_i(S, l P_inf).
struct CodeSpec {
  int q = 0;
  int level = 0;
  int pole_order = 0;

  /// Throws UsageError for level < 1 or negative pole order. q itself is
  /// validated when the field is built.
  void validate() const;

  std::uint64_t length() const { return split_place_count(q, level); }
  /// (l + 1)(q - 1) q^(i-1), the dimension of the evaluated function space.
  std::uint64_t dimension_formula() const;
  int locality() const { return q - 1; }
  /// q^i (q^2 - 2q + 2 - l - (q - 1)(i - 1)); may be <= 0 (vacuous).
  std::int64_t designed_distance() const;
  /// Largest zero count the degree argument allows: n - designed distance.
  std::int64_t max_zero_count() const;
  /// 1 < i <= q - 1 and 1 <= l <= (q - 1)(q - i): the designed distance is positive.
  bool in_positive_window() const;
};

/// Exponent tuple (e_0, ..., e_i) of the monomial x_0^e_0 ... x_i^e_i.
using Exponents = std::vector<int>;

/// Whether e lies in the exponent box of the code: e_0 <= l,
/// e_j <= q - 1 for 0 < j < i, e_i <= q - 2.
bool in_exponent_box(const CodeSpec& spec, const Exponents& e);

/// Sparse polynomial in x_0, ..., x_level with coefficients in F_{q^2}.
/// Exponents are not reduced; membership in the code's function space is
/// checked explicitly with in_space().
class PolyFunction {
 public:
  explicit PolyFunction(int level) : level_(level) {}

  static PolyFunction constant(int level, Element c);
  /// x_var - root.
  static PolyFunction linear(const Field& field, int level, int var, Element root);
  /// prod over roots of (x_var - root).
  static PolyFunction product_of_linear(const Field& field, int level, int var,
                                        std::span<const Element> roots);

  int level() const { return level_; }
  const std::map<Exponents, Element>& terms() const { return terms_; }

  void add_term(const Field& field, const Exponents& e, Element c);
  PolyFunction times(const Field& field, const PolyFunction& other) const;

  int degree_in(int var) const;
  bool in_space(const CodeSpec& spec) const;
  Element evaluate(const Field& field, std::span<const Element> coords) const;

 private:
  int level_;
  std::map<Exponents, Element> terms_;
};

/// All exponent tuples of the function space, lexicographic.
std::vector<Exponents> monomial_basis(const CodeSpec& spec);

/// prod_j alpha_j^e_j. Throws UsageError when the levels differ.
Element eval_monomial(const Field& field, const Exponents& e, std::span<const Element> place);

/// k x n matrix over F_{q^2}, row-major.
struct GeneratorMatrix {
  std::vector<Exponents> monomials;  // one per row; may be empty for ad hoc matrices
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Element> entries;

  std::span<const Element> row(std::size_t r) const { return {entries.data() + r * cols, cols}; }
  std::span<Element> row(std::size_t r) { return {entries.data() + r * cols, cols}; }
  Element at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }
};

GeneratorMatrix generator_matrix(const Field& field, const CodeSpec& spec,
                                 const PlaceTable& places, int threads = 1);

/// Row echelon form of the matrix; the returned rows span the same code.
GeneratorMatrix row_echelon(const Field& field, const GeneratorMatrix& gm, int threads = 1);
std::size_t dimension_rank(const Field& field, const GeneratorMatrix& gm, int threads = 1);

/// message . G. Throws UsageError on a length mismatch.
std::vector<Element> encode(const Field& field, const GeneratorMatrix& gm,
                            std::span<const Element> message);

std::size_t hamming_weight(const Field& field, std::span<const Element> word);

/// Number of places at which f vanishes. Throws UsageError if f is not in
/// the code's function space or its level differs from the table.
std::uint64_t poly_zero_count(const Field& field, const CodeSpec& spec, const PolyFunction& f,
                              const PlaceTable& places);

struct MinDistanceResult {
  std::uint64_t distance = 0;
  std::uint64_t codewords_searched = 0;
  std::size_t rank = 0;
};

/// Exact minimum distance by enumerating every nonzero message over a row
/// basis. Requires (q^2)^rank <= budget, else BudgetExceeded.
MinDistanceResult exhaustive_min_distance(const Field& field, const GeneratorMatrix& gm,
                                          std::uint64_t budget = kDefaultSearchBudget,
                                          int threads = 1);

/// Everything needed to work with one concrete code.
struct CodeInstance {
  Tower tower;
  CodeSpec spec;
  PlaceTable places;
  GeneratorMatrix gm;

  const Field& field() const { return tower.field(); }
};

CodeInstance build_code(const CodeSpec& spec, std::uint64_t place_budget = kDefaultPlaceBudget,
                        int threads = 1);

struct CodeParams {
  int q = 0;
  int i = 0;
  int l = 0;
  std::uint64_t n = 0;
  std::uint64_t k_formula = 0;
  std::optional<std::uint64_t> k_rank;
  std::int64_t d_designed = 0;
  std::optional<std::uint64_t> d_exact;
  std::optional<std::uint64_t> d_witness;
  int locality = 0;

  static CodeParams from_spec(const CodeSpec& spec);
  nlohmann::ordered_json to_json() const;
};

/// Header `e_0,...,e_i,v_1,...,v_n`, one row per monomial.
void write_generator_csv(std::ostream& os, const GeneratorMatrix& gm, int level);

}  // namespace towerlrc

#endif  // TOWERLRC_LRC_HPP
