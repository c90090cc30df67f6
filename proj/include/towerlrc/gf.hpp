// SPDX-License-Identifier: Apache-2.0

#ifndef TOWERLRC_GF_HPP
#define TOWERLRC_GF_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <utility>
#include <vector>

namespace towerlrc {

/// Element of F_{q^2} = F_q[t]/(t^2 - c), stored by its canonical index
/// a + b*q for the element a + b*t. The index order is the global
/// tie-breaking order used throughout the library.
class Element {
 public:
  constexpr Element() = default;
  constexpr explicit Element(std::uint16_t index) : index_(index) {}

  constexpr std::uint16_t index() const { return index_; }

  friend constexpr bool operator==(Element, Element) = default;
  friend constexpr auto operator<=>(Element, Element) = default;

 private:
  std::uint16_t index_ = 0;
};

/// Arithmetic in F_q and F_{q^2} for an odd prime 3 <= q <= 31.
///
/// The modulus is t^2 - c with c the smallest quadratic non-residue in
/// {1, ..., q-1}. All binary operations are table lookups built once at
/// construction; copies share the immutable tables.
class Field {
 public:
  static constexpr int kMinQ = 3;
  static constexpr int kMaxQ = 31;

  /// Throws UsageError for even, composite or out-of-range q.
  explicit Field(int q);

  int q() const { return q_; }
  int nonresidue() const { return c_; }
  int size() const { return q_ * q_; }

  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }
  /// The adjoined square root of c.
  Element t() const { return Element(static_cast<std::uint16_t>(q_)); }

  /// a + b*t with a, b reduced mod q.
  Element make(long long a, long long b = 0) const;
  Element at(int index) const;  // throws UsageError when out of range

  int a(Element x) const { return x.index() % q_; }
  int b(Element x) const { return x.index() / q_; }
  bool in_base(Element x) const { return x.index() < q_; }

  Element add(Element x, Element y) const { return table(tables_->add, x, y); }
  Element sub(Element x, Element y) const { return add(x, neg(y)); }
  Element mul(Element x, Element y) const { return table(tables_->mul, x, y); }
  Element neg(Element x) const { return tables_->neg[x.index()]; }
  /// Throws DomainError for x == 0.
  Element inv(Element x) const;
  Element div(Element x, Element y) const { return mul(x, inv(y)); }
  Element pow(Element x, std::uint64_t e) const;

  /// x^q, the non-trivial automorphism of F_{q^2}/F_q.
  Element frobenius(Element x) const { return tables_->frob[x.index()]; }
  /// x^q + x, always in F_q.
  Element trace(Element x) const { return tables_->trace[x.index()]; }
  /// x^(q+1), always in F_q.
  Element norm(Element x) const { return tables_->norm[x.index()]; }
  std::pair<Element, Element> trace_norm(Element x) const { return {trace(x), norm(x)}; }

  /// All y with y^q + y = beta, ascending. beta must lie in F_q.
  std::vector<Element> solve_trace(Element beta) const;

  /// All q^2 elements in canonical index order.
  std::vector<Element> elements() const;

  /// y[k] += a * x[k] for all k.
  void axpy(std::span<Element> y, Element a, std::span<const Element> x) const;

 private:
  struct Tables {
    std::vector<Element> add, mul;  // size^2, row-major
    std::vector<Element> neg, inv, frob, trace, norm;
  };

  Element table(const std::vector<Element>& t, Element x, Element y) const {
    return t[static_cast<std::size_t>(x.index()) * size() + y.index()];
  }

  int q_;
  int c_;
  std::shared_ptr<const Tables> tables_;
};

/// Throws UsageError unless q is an odd prime in [Field::kMinQ, Field::kMaxQ].
void validate_q(int q);

/// Smallest quadratic non-residue modulo the odd prime q.
int smallest_nonresidue(int q);

}  // namespace towerlrc

#endif  // TOWERLRC_GF_HPP
