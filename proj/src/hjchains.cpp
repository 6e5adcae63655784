#include "fourlines/hjchains.hpp"

#include <stdexcept>

#include "fourlines/errors.hpp"

namespace fourlines {

Chain fraction_to_chain(const Rational& x) {
  if (x.sign() <= 0) throw std::invalid_argument("fraction_to_chain: needs x > 0, got " + x.str());
  Chain out;
  Rational rest = x;
  for (;;) {
    if (rest.is_integer()) {
      out.push_back(rest);
      return out;
    }
    const Rational head(rest.ceil());
    out.push_back(head);
    rest = (head - rest).reciprocal();
  }
}

Rational chain_to_fraction(std::span<const Rational> chain) {
  if (chain.empty()) throw std::invalid_argument("chain_to_fraction: empty chain");
  Rational value = chain.back();
  for (std::size_t i = chain.size() - 1; i-- > 0;) {
    if (value.is_zero()) throw DegenerateChain("chain_to_fraction: zero denominator");
    value = chain[i] - value.reciprocal();
  }
  return value;
}

Rational chain_det(std::span<const Rational> chain) {
  // d_k = n_k d_{k-1} - d_{k-2}, reading left to right
  Rational prev(1);
  Rational cur = chain.empty() ? Rational(1) : chain[0];
  if (chain.empty()) return cur;
  for (std::size_t i = 1; i < chain.size(); ++i) {
    Rational next = chain[i] * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Rational cycle_det(std::span<const Rational> cycle) {
  const std::size_t k = cycle.size();
  if (k < 3) throw std::invalid_argument("cycle_det: a cycle needs at least 3 vertices");
  return cycle[0] * chain_det(cycle.subspan(1)) - chain_det(cycle.subspan(2)) -
         chain_det(cycle.subspan(1, k - 2)) - Rational(2);
}

Chain make_chain(std::initializer_list<std::int64_t> marks) {
  Chain out;
  out.reserve(marks.size());
  for (auto m : marks) out.emplace_back(m);
  return out;
}

}  // namespace fourlines
