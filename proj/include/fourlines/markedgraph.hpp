#pragma once

// Marked multigraphs: dual graphs of curve configurations on a smooth
// surface. A vertex is a curve E with mark n = -E^2; u and v are joined by
// E_u.E_v edges. The associated matrix is the negated intersection form.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fourlines/hjchains.hpp"
#include "fourlines/matrix.hpp"
#include "fourlines/rational.hpp"

namespace fourlines {

using VertexId = std::size_t;

class MarkedGraph {
 public:
  VertexId add_vertex(Rational mark, std::string label = {});
  /// Adds one edge; parallel edges accumulate. Self-loops are rejected.
  void add_edge(VertexId u, VertexId v);

  std::size_t size() const { return marks_.size(); }
  bool empty() const { return marks_.empty(); }
  const Rational& mark(VertexId v) const { return marks_.at(v); }
  void set_mark(VertexId v, Rational m) { marks_.at(v) = std::move(m); }
  const std::string& label(VertexId v) const { return labels_.at(v); }
  /// Neighbours with multiplicity.
  const std::vector<VertexId>& neighbors(VertexId v) const { return adj_.at(v); }
  std::size_t degree(VertexId v) const { return adj_.at(v).size(); }
  int multiplicity(VertexId u, VertexId v) const;
  std::size_t edge_count() const;
  std::optional<VertexId> find(const std::string& label) const;

  /// Negated intersection matrix: mark on the diagonal, -multiplicity off it.
  RationalMatrix form() const;

  /// Induced subgraph on `keep`, in that order.
  MarkedGraph induced(std::span<const VertexId> keep) const;
  /// Induced subgraph on the complement of `drop`.
  MarkedGraph without(std::span<const VertexId> drop) const;
  std::vector<std::vector<VertexId>> components() const;
  bool is_connected() const { return components().size() <= 1; }
  bool is_forest() const;

  /// Debug dump, one vertex per line: `id mark: neighbor,neighbor,...`
  std::string dump() const;

 private:
  std::vector<Rational> marks_;
  std::vector<std::string> labels_;
  std::vector<std::vector<VertexId>> adj_;
};

MarkedGraph chain_graph(std::span<const Rational> marks);
MarkedGraph cycle_graph(std::span<const Rational> marks);

/// A chain grafted on top of a core vertex. `value` is the continued-fraction
/// value p/q of the grafted chain: its head is merged into the anchor and the
/// remaining leg has determinant q.
struct Hair {
  VertexId anchor;
  Rational value;
};

enum class LcClass { klt, lc_not_klt, not_lc };
const char* to_string(LcClass c);
/// The worse of two classes (not_lc < lc_not_klt < klt).
LcClass worst(LcClass a, LcClass b);

Rational graph_det(const MarkedGraph& g);
bool is_positive_definite(const MarkedGraph& g);

/// det g via the expansion over collections of edges crossing the split.
/// `part1` and `part2` must partition the vertices and no cycle of g may use
/// vertices of both (std::invalid_argument otherwise).
Rational split_det(const MarkedGraph& g, std::span<const VertexId> part1,
                   std::span<const VertexId> part2);

/// Materialises the hairy graph: each anchor's mark grows by the head of the
/// chain for `value` and the rest of the chain is attached as a leg.
MarkedGraph graft(const MarkedGraph& core, std::span<const Hair> hairs);
/// det of the hairy graph: core with marks n_i + sum p/q, times prod q.
Rational hairy_det_core(const MarkedGraph& core, std::span<const Hair> hairs);
/// det of the hairy graph: core plus one vertex of mark -q/p per hair, times
/// prod (-p).
Rational hairy_det_tilde(const MarkedGraph& core, std::span<const Hair> hairs);

/// Log discrepancy of u when the whole tree g is contracted with no boundary:
///   c(u) = (1/det g) * sum_v (2 - deg v) * det(g - path(u, v)).
Rational corner_log_discrepancy(const MarkedGraph& g, VertexId u);

/// Solves form(g) * beta = rhs exactly. Throws NotPositiveDefinite unless g
/// is positive definite.
std::vector<Rational> solve_codiscrepancies(const MarkedGraph& g, std::span<const Rational> rhs);

/// Shape classification of a positive definite graph with no boundary:
/// chains are klt; a single fork is klt/lc by 1/q1+1/q2+1/q3 against 1; the
/// two-fork graph with legs (2,2,2,2) and cycles of length >= 3 are lc but not
/// klt; anything else is not lc. Disconnected graphs take the worst class.
LcClass classify_lc_graph(const MarkedGraph& g);

}  // namespace fourlines
