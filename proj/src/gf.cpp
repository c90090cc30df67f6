// SPDX-License-Identifier: Apache-2.0

#include "towerlrc/gf.hpp"

#include <string>

#include "towerlrc/errors.hpp"

namespace towerlrc {

namespace {

int mod(long long v, int q) {
  const long long r = v % q;
  return static_cast<int>(r < 0 ? r + q : r);
}

}  // namespace

int smallest_nonresidue(int q) {
  std::vector<bool> square(q, false);
  for (int x = 1; x < q; ++x) square[(x * x) % q] = true;
  for (int c = 1; c < q; ++c)
    if (!square[c]) return c;
  throw DomainError("no quadratic non-residue modulo " + std::to_string(q));
}

void validate_q(int q) {
  if (q % 2 == 0)
    throw UsageError("q = " + std::to_string(q) + " is not an odd prime (it is even)");
  if (q < Field::kMinQ || q > Field::kMaxQ)
    throw UsageError("q = " + std::to_string(q) + " is outside the supported range " +
                     std::to_string(Field::kMinQ) + ".." + std::to_string(Field::kMaxQ));
  for (int p = 3; p * p <= q; p += 2)
    if (q % p == 0)
      throw UsageError("q = " + std::to_string(q) + " is not an odd prime (divisible by " +
                       std::to_string(p) + ")");
}

Field::Field(int q) : q_(q) {
  validate_q(q);
  c_ = smallest_nonresidue(q);

  const int n = q * q;
  auto tables = std::make_shared<Tables>();
  auto idx = [q](int a, int b) { return Element(static_cast<std::uint16_t>(a + b * q)); };

  tables->add.resize(static_cast<std::size_t>(n) * n);
  tables->mul.resize(static_cast<std::size_t>(n) * n);
  tables->neg.resize(n);
  for (int x = 0; x < n; ++x) {
    const int xa = x % q, xb = x / q;
    tables->neg[x] = idx(mod(-xa, q), mod(-xb, q));
    for (int y = 0; y < n; ++y) {
      const int ya = y % q, yb = y / q;
      const std::size_t k = static_cast<std::size_t>(x) * n + y;
      tables->add[k] = idx((xa + ya) % q, (xb + yb) % q);
      // (xa + xb t)(ya + yb t) = xa ya + c xb yb + (xa yb + xb ya) t
      tables->mul[k] = idx(mod(xa * ya + c_ * xb * yb, q), mod(xa * yb + xb * ya, q));
    }
  }
  tables_ = tables;

  tables->inv.assign(n, Element(0));
  for (int x = 1; x < n; ++x)
    for (int y = 1; y < n; ++y)
      if (mul(Element(x), Element(y)) == one()) {
        tables->inv[x] = Element(y);
        break;
      }

  tables->frob.resize(n);
  tables->trace.resize(n);
  tables->norm.resize(n);
  for (int x = 0; x < n; ++x) {
    const Element fx = pow(Element(x), q);
    tables->frob[x] = fx;
    tables->trace[x] = add(fx, Element(x));
    tables->norm[x] = mul(fx, Element(x));
  }
}

Element Field::make(long long a, long long b) const {
  return Element(static_cast<std::uint16_t>(mod(a, q_) + mod(b, q_) * q_));
}

Element Field::at(int index) const {
  if (index < 0 || index >= size())
    throw UsageError("field index " + std::to_string(index) + " outside [0, " +
                     std::to_string(size()) + ")");
  return Element(static_cast<std::uint16_t>(index));
}

Element Field::inv(Element x) const {
  if (x == zero()) throw DomainError("inverse of zero in F_" + std::to_string(size()));
  return tables_->inv[x.index()];
}

Element Field::pow(Element x, std::uint64_t e) const {
  Element result = one();
  while (e > 0) {
    if (e & 1) result = mul(result, x);
    x = mul(x, x);
    e >>= 1;
  }
  return result;
}

std::vector<Element> Field::solve_trace(Element beta) const {
  if (!in_base(beta))
    throw DomainError("trace equation right-hand side " + std::to_string(beta.index()) +
                      " is not in F_" + std::to_string(q_));
  std::vector<Element> out;
  out.reserve(q_);
  for (int x = 0; x < size(); ++x)
    if (trace(Element(x)) == beta) out.push_back(Element(x));
  return out;
}

std::vector<Element> Field::elements() const {
  std::vector<Element> out(size());
  for (int x = 0; x < size(); ++x) out[x] = Element(static_cast<std::uint16_t>(x));
  return out;
}

void Field::axpy(std::span<Element> y, Element a, std::span<const Element> x) const {
  if (a == zero()) return;
  const int n = size();
  const Element* mrow = tables_->mul.data() + static_cast<std::size_t>(a.index()) * n;
  const Element* add = tables_->add.data();
  for (std::size_t k = 0; k < y.size(); ++k)
    y[k] = add[static_cast<std::size_t>(y[k].index()) * n + mrow[x[k].index()].index()];
}

}  // namespace towerlrc
