#pragma once

// Hirzebruch-Jung continued fractions and the determinants of chains and
// cycles of marked curves.
//
// A chain [n_1, ..., n_k] stands both for the continued fraction
//   n_1 - 1/(n_2 - 1/(n_3 - ...))
// and for the tridiagonal form with diagonal n_i and -1 next to it. Marks are
// rational so that the same code evaluates "core" graphs whose marks absorb
// whole chains.
//
// Note on direction: the classical labelling attaches to a chain the
// *reciprocal* of its continued-fraction value (the chain [2,2,2,3,2] is
// "the chain of 11/14"). Everything here works with the value itself:
// fraction_to_chain(14/11) == [2,2,2,3,2].

#include <span>
#include <vector>

#include "fourlines/rational.hpp"

namespace fourlines {

using Chain = std::vector<Rational>;

/// Expands x > 0 as n_1 - 1/(n_2 - ...), with n_1 >= 1 and n_i >= 2 after.
Chain fraction_to_chain(const Rational& x);

/// Evaluates a nonempty chain as a continued fraction. Throws DegenerateChain
/// if an intermediate denominator vanishes.
Rational chain_to_fraction(std::span<const Rational> chain);

/// Determinant |n_1, ..., n_k| of the tridiagonal form. The empty chain has
/// determinant 1.
Rational chain_det(std::span<const Rational> chain);

/// Determinant |n_1, ..., n_k, cyc| of a cycle, k >= 3.
Rational cycle_det(std::span<const Rational> cycle);

/// Convenience for integer marks.
Chain make_chain(std::initializer_list<std::int64_t> marks);

}  // namespace fourlines
