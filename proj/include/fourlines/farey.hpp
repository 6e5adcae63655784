#pragma once

// Infinitely near points over a node L_i ∩ L_j. Every exceptional curve over
// the node has a coprime weight pair (w_i, w_j) (its coefficients in f^*L_i and
// f^*L_j) and sits at the fraction w_j / w_i along the edge, with v_i at 0 and
// v_j at infinity. Blowing up the point between two adjacent curves produces
// the mediant, so the curves are the nodes of the Stern-Brocot tree and a
// blowup history is a word over {L, R}.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fourlines/markedgraph.hpp"

namespace fourlines {

struct WeightPair {
  std::int64_t wi = 1;
  std::int64_t wj = 1;

  /// Throws std::invalid_argument unless both entries are positive and coprime.
  static WeightPair make(std::int64_t wi, std::int64_t wj);
  /// Parses "a,b".
  static WeightPair parse(std::string_view text);

  WeightPair swapped() const { return {wj, wi}; }
  Rational fraction() const { return Rational(wj, wi); }
  std::string str() const { return std::to_string(wi) + "," + std::to_string(wj); }

  friend bool operator==(const WeightPair&, const WeightPair&) = default;
  friend auto operator<=>(const WeightPair&, const WeightPair&) = default;
};

/// Strict comparison of the fractions w_j / w_i.
bool fraction_less(const WeightPair& a, const WeightPair& b);

/// The weight pair reached from (1,1) by the word: L takes the mediant with
/// the left neighbour, R with the right one.
WeightPair lr_to_weight(std::string_view word);
std::string weight_to_lr(const WeightPair& p);

/// All Stern-Brocot ancestors of p, from (1,1) down to p itself.
std::vector<WeightPair> sb_path_nodes(const WeightPair& p);

struct EdgeChain {
  MarkedGraph chain;                 // a path from end_i to end_j
  VertexId end_i = 0;
  VertexId end_j = 0;
  std::vector<VertexId> survivors;   // in increasing fraction order
  /// (w_i, w_j) for every vertex; the ends carry (1,0) and (0,1).
  std::vector<std::pair<std::int64_t, std::int64_t>> weights;
  /// Vertex ids along the path, from end_i to end_j.
  std::vector<VertexId> order;
};

/// Blows up exactly the union of the survivors' Stern-Brocot paths. Each new
/// curve is born with mark 1 and bumps its two neighbours by 1; the ends start
/// at the given base marks.
EdgeChain build_edge_chain(std::vector<WeightPair> survivors, const Rational& base_i,
                           const Rational& base_j);

/// det of the chain strictly between two curves on the same edge with
/// fraction(p) < fraction(q): w_i w'_j - w_j w'_i.
Rational edge_pair_det(const WeightPair& p, const WeightPair& q);

}  // namespace fourlines
