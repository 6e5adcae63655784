#include "fourlines/markedgraph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "fourlines/errors.hpp"

namespace fourlines {

VertexId MarkedGraph::add_vertex(Rational mark, std::string label) {
  const VertexId id = marks_.size();
  marks_.push_back(std::move(mark));
  labels_.push_back(label.empty() ? std::to_string(id) : std::move(label));
  adj_.emplace_back();
  return id;
}

void MarkedGraph::add_edge(VertexId u, VertexId v) {
  if (u >= size() || v >= size()) throw std::out_of_range("add_edge: unknown vertex");
  if (u == v) throw std::invalid_argument("add_edge: self-loops are not allowed");
  adj_[u].push_back(v);
  adj_[v].push_back(u);
}

int MarkedGraph::multiplicity(VertexId u, VertexId v) const {
  return static_cast<int>(std::count(adj_.at(u).begin(), adj_.at(u).end(), v));
}

std::size_t MarkedGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& a : adj_) twice += a.size();
  return twice / 2;
}

std::optional<VertexId> MarkedGraph::find(const std::string& label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<VertexId>(it - labels_.begin());
}

RationalMatrix MarkedGraph::form() const {
  RationalMatrix m(size(), size());
  for (VertexId v = 0; v < size(); ++v) {
    m(v, v) = marks_[v];
    for (VertexId u : adj_[v]) m(v, u) -= Rational(1);
  }
  return m;
}

MarkedGraph MarkedGraph::induced(std::span<const VertexId> keep) const {
  std::vector<std::ptrdiff_t> where(size(), -1);
  MarkedGraph out;
  for (VertexId v : keep) {
    where.at(v) = static_cast<std::ptrdiff_t>(out.add_vertex(marks_[v], labels_[v]));
  }
  for (VertexId v : keep) {
    for (VertexId u : adj_[v]) {
      if (where[u] >= 0 && u > v) {
        out.add_edge(static_cast<VertexId>(where[v]), static_cast<VertexId>(where[u]));
      }
    }
  }
  return out;
}

MarkedGraph MarkedGraph::without(std::span<const VertexId> drop) const {
  std::vector<bool> dropped(size(), false);
  for (VertexId v : drop) dropped.at(v) = true;
  std::vector<VertexId> keep;
  for (VertexId v = 0; v < size(); ++v) {
    if (!dropped[v]) keep.push_back(v);
  }
  return induced(keep);
}

std::vector<std::vector<VertexId>> MarkedGraph::components() const {
  std::vector<std::vector<VertexId>> out;
  std::vector<bool> seen(size(), false);
  for (VertexId s = 0; s < size(); ++s) {
    if (seen[s]) continue;
    std::vector<VertexId> comp{s};
    seen[s] = true;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (VertexId u : adj_[comp[i]]) {
        if (!seen[u]) {
          seen[u] = true;
          comp.push_back(u);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool MarkedGraph::is_forest() const { return edge_count() + components().size() == size(); }

std::string MarkedGraph::dump() const {
  std::ostringstream os;
  for (VertexId v = 0; v < size(); ++v) {
    os << labels_[v] << ' ' << marks_[v] << ':';
    for (std::size_t i = 0; i < adj_[v].size(); ++i) {
      os << (i == 0 ? " " : ",") << labels_[adj_[v][i]];
    }
    os << '\n';
  }
  return os.str();
}

MarkedGraph chain_graph(std::span<const Rational> marks) {
  MarkedGraph g;
  for (std::size_t i = 0; i < marks.size(); ++i) {
    g.add_vertex(marks[i]);
    if (i > 0) g.add_edge(i - 1, i);
  }
  return g;
}

MarkedGraph cycle_graph(std::span<const Rational> marks) {
  if (marks.size() < 3) throw std::invalid_argument("cycle_graph: need at least 3 vertices");
  MarkedGraph g = chain_graph(marks);
  g.add_edge(marks.size() - 1, 0);
  return g;
}

const char* to_string(LcClass c) {
  switch (c) {
    case LcClass::klt: return "klt";
    case LcClass::lc_not_klt: return "lc-not-klt";
    case LcClass::not_lc: return "not-lc";
  }
  return "?";
}

LcClass worst(LcClass a, LcClass b) {
  auto rank = [](LcClass c) { return c == LcClass::not_lc ? 0 : (c == LcClass::lc_not_klt ? 1 : 2); };
  return rank(a) <= rank(b) ? a : b;
}

Rational graph_det(const MarkedGraph& g) { return determinant(g.form()); }

bool is_positive_definite(const MarkedGraph& g) { return leading_minors_positive(g.form()); }

namespace {

std::size_t cyclomatic(const MarkedGraph& g) {
  return g.edge_count() + g.components().size() - g.size();
}

}  // namespace

Rational split_det(const MarkedGraph& g, std::span<const VertexId> part1,
                   std::span<const VertexId> part2) {
  std::vector<int> side(g.size(), -1);
  for (VertexId v : part1) side.at(v) = 1;
  for (VertexId v : part2) {
    if (side.at(v) != -1) throw std::invalid_argument("split_det: parts overlap");
    side[v] = 2;
  }
  if (std::count(side.begin(), side.end(), -1) != 0) {
    throw std::invalid_argument("split_det: parts do not cover the graph");
  }
  const MarkedGraph g1 = g.induced(part1);
  const MarkedGraph g2 = g.induced(part2);
  if (cyclomatic(g) != cyclomatic(g1) + cyclomatic(g2)) {
    throw std::invalid_argument("split_det: a cycle crosses the split");
  }

  // local indices inside g1 / g2
  std::vector<VertexId> local(g.size());
  for (std::size_t i = 0; i < part1.size(); ++i) local[part1[i]] = i;
  for (std::size_t i = 0; i < part2.size(); ++i) local[part2[i]] = i;

  std::vector<std::pair<VertexId, VertexId>> cross;
  for (VertexId u : part1) {
    for (VertexId v : g.neighbors(u)) {
      if (side[v] == 2) cross.emplace_back(local[u], local[v]);
    }
  }

  Rational total(0);
  std::vector<VertexId> drop1, drop2;
  std::vector<bool> used1(part1.size(), false), used2(part2.size(), false);
  std::function<void(std::size_t)> walk = [&](std::size_t next) {
    if (next == cross.size()) {
      Rational term = graph_det(g1.without(drop1)) * graph_det(g2.without(drop2));
      total += (drop1.size() % 2 == 0) ? term : -term;
      return;
    }
    walk(next + 1);
    const auto [u, v] = cross[next];
    if (used1[u] || used2[v]) return;
    used1[u] = used2[v] = true;
    drop1.push_back(u);
    drop2.push_back(v);
    walk(next + 1);
    drop1.pop_back();
    drop2.pop_back();
    used1[u] = used2[v] = false;
  };
  walk(0);
  return total;
}

MarkedGraph graft(const MarkedGraph& core, std::span<const Hair> hairs) {
  MarkedGraph g = core;
  std::size_t k = 0;
  for (const Hair& h : hairs) {
    if (h.anchor >= core.size()) throw std::out_of_range("graft: anchor not in core");
    const Chain c = fraction_to_chain(h.value);
    g.set_mark(h.anchor, g.mark(h.anchor) + c.front());
    VertexId prev = h.anchor;
    for (std::size_t i = 1; i < c.size(); ++i) {
      const VertexId v = g.add_vertex(c[i], "h" + std::to_string(k) + "." + std::to_string(i));
      g.add_edge(prev, v);
      prev = v;
    }
    ++k;
  }
  return g;
}

Rational hairy_det_core(const MarkedGraph& core, std::span<const Hair> hairs) {
  MarkedGraph g = core;
  Rational factor(1);
  for (const Hair& h : hairs) {
    if (h.anchor >= core.size()) throw std::out_of_range("hairy_det_core: anchor not in core");
    g.set_mark(h.anchor, g.mark(h.anchor) + h.value);
    factor *= Rational(h.value.denominator());
  }
  return graph_det(g) * factor;
}

Rational hairy_det_tilde(const MarkedGraph& core, std::span<const Hair> hairs) {
  MarkedGraph g = core;
  Rational factor(1);
  for (const Hair& h : hairs) {
    if (h.anchor >= core.size()) throw std::out_of_range("hairy_det_tilde: anchor not in core");
    const VertexId v = g.add_vertex(-h.value.reciprocal());
    g.add_edge(h.anchor, v);
    factor *= -Rational(h.value.numerator());
  }
  return graph_det(g) * factor;
}

Rational corner_log_discrepancy(const MarkedGraph& g, VertexId u) {
  if (u >= g.size()) throw std::out_of_range("corner_log_discrepancy: unknown vertex");
  if (!g.is_connected() || !g.is_forest()) {
    throw std::invalid_argument("corner_log_discrepancy: graph must be a tree");
  }
  const Rational det = graph_det(g);
  if (det.is_zero()) throw NotPositiveDefinite("corner_log_discrepancy: singular form");

  // BFS parents from u give every path(u, v).
  std::vector<VertexId> parent(g.size(), g.size());
  std::vector<VertexId> order{u};
  parent[u] = u;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (VertexId w : g.neighbors(order[i])) {
      if (parent[w] == g.size()) {
        parent[w] = order[i];
        order.push_back(w);
      }
    }
  }
  Rational sum(0);
  for (VertexId v = 0; v < g.size(); ++v) {
    const auto weight = 2 - static_cast<std::int64_t>(g.degree(v));
    if (weight == 0) continue;
    std::vector<VertexId> path{v};
    while (path.back() != u) path.push_back(parent[path.back()]);
    sum += Rational(weight) * graph_det(g.without(path));
  }
  return sum / det;
}

std::vector<Rational> solve_codiscrepancies(const MarkedGraph& g, std::span<const Rational> rhs) {
  if (rhs.size() != g.size()) throw std::invalid_argument("solve_codiscrepancies: rhs size");
  if (!is_positive_definite(g)) {
    throw NotPositiveDefinite("solve_codiscrepancies: form is not positive definite");
  }
  auto x = solve(g.form(), std::vector<Rational>(rhs.begin(), rhs.end()));
  return std::move(*x);
}

namespace {

// Vertices reachable from `start` without passing through any of `blocked`.
std::vector<VertexId> branch(const MarkedGraph& g, VertexId start, const std::vector<bool>& blocked) {
  std::vector<VertexId> out{start};
  std::vector<bool> seen = blocked;
  seen[start] = true;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (VertexId w : g.neighbors(out[i])) {
      if (!seen[w]) {
        seen[w] = true;
        out.push_back(w);
      }
    }
  }
  return out;
}

LcClass classify_connected(const MarkedGraph& g) {
  const std::size_t n = g.size();
  const std::size_t e = g.edge_count();
  std::vector<VertexId> forks;
  for (VertexId v = 0; v < n; ++v) {
    if (g.degree(v) >= 4) return LcClass::not_lc;
    if (g.degree(v) == 3) forks.push_back(v);
  }
  if (e == n) {
    // unicyclic; lc only if it is the cycle itself, of length >= 3
    if (!forks.empty()) return LcClass::not_lc;
    return n >= 3 ? LcClass::lc_not_klt : LcClass::not_lc;
  }
  if (e != n - 1) return LcClass::not_lc;
  if (forks.empty()) return LcClass::klt;

  std::vector<bool> blocked(n, false);
  for (VertexId f : forks) blocked[f] = true;
  if (forks.size() == 1) {
    const VertexId f = forks[0];
    Rational sum(0);
    for (VertexId w : g.neighbors(f)) sum += graph_det(g.induced(branch(g, w, blocked))).reciprocal();
    if (sum > Rational(1)) return LcClass::klt;
    if (sum == Rational(1)) return LcClass::lc_not_klt;
    return LcClass::not_lc;
  }
  if (forks.size() == 2) {
    int legs = 0;
    for (VertexId f : forks) {
      for (VertexId w : g.neighbors(f)) {
        const auto b = branch(g, w, blocked);
        const bool touches_other = std::any_of(b.begin(), b.end(), [&](VertexId x) {
          for (VertexId y : g.neighbors(x)) {
            if (y != f && blocked[y]) return true;
          }
          return false;
        });
        if (w == forks[0] || w == forks[1] || touches_other) continue;
        if (graph_det(g.induced(b)) != Rational(2)) return LcClass::not_lc;
        ++legs;
      }
    }
    return legs == 4 ? LcClass::lc_not_klt : LcClass::not_lc;
  }
  return LcClass::not_lc;
}

}  // namespace

LcClass classify_lc_graph(const MarkedGraph& g) {
  if (!is_positive_definite(g)) throw NotPositiveDefinite("classify_lc_graph: form is not positive definite");
  LcClass out = LcClass::klt;
  for (const auto& comp : g.components()) out = worst(out, classify_connected(g.induced(comp)));
  return out;
}

}  // namespace fourlines
