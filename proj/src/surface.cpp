#include "fourlines/surface.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "fourlines/errors.hpp"
#include "fourlines/matrix.hpp"

namespace fourlines {

// ---------------------------------------------------------------- Survivor

Survivor Survivor::corner(int line) {
  if (line < 0 || line > 3) throw std::invalid_argument("line index out of range");
  return Survivor{line, -1, {1, 1}};
}

Survivor Survivor::on_edge(int i, int j, WeightPair w) {
  if (i < 0 || i > 3 || j < 0 || j > 3 || i == j) throw std::invalid_argument("bad edge");
  w = WeightPair::make(w.wi, w.wj);
  if (i > j) return Survivor{j, i, w.swapped()};
  return Survivor{i, j, w};
}

Survivor Survivor::from_row(const IntRow& row) {
  std::vector<int> support;
  for (int k = 0; k < 4; ++k) {
    if (row[k] < 0) throw std::invalid_argument("negative entry");
    if (row[k] != 0) support.push_back(k);
  }
  if (support.size() == 1) {
    if (row[support[0]] != 1) throw std::invalid_argument("not a weight vector (corner entry must be 1)");
    return corner(support[0]);
  }
  if (support.size() != 2) throw std::invalid_argument("not a weight vector (needs one or two nonzero entries)");
  const auto a = row[support[0]];
  const auto b = row[support[1]];
  if (std::gcd(a, b) != 1) throw std::invalid_argument("not coprime");
  return Survivor{support[0], support[1], {a, b}};
}

IntRow Survivor::weight_vector() const {
  IntRow r{0, 0, 0, 0};
  if (is_corner()) {
    r[i] = 1;
  } else {
    r[i] = w.wi;
    r[j] = w.wj;
  }
  return r;
}

std::string Survivor::str() const {
  if (is_corner()) return "L" + std::to_string(i + 1);
  return "E" + std::to_string(i + 1) + std::to_string(j + 1) + ":" + w.str();
}

// ----------------------------------------------------------- SurfaceConfig

SurfaceConfig SurfaceConfig::make(std::array<Survivor, 4> survivors, std::array<Rational, 4> b) {
  for (std::size_t a = 0; a < 4; ++a) {
    if (b[a] < Rational(0) || b[a] > Rational(1)) {
      throw std::invalid_argument("coefficient b" + std::to_string(a + 1) + " outside [0,1]");
    }
    for (std::size_t c = 0; c < a; ++c) {
      if (survivors[a] == survivors[c]) {
        throw std::invalid_argument("duplicate survivor " + survivors[a].str());
      }
    }
  }
  return SurfaceConfig{survivors, b};
}

SurfaceConfig SurfaceConfig::from_matrix(const IntMatrix4& rows, std::array<Rational, 4> b) {
  std::array<Survivor, 4> s;
  for (std::size_t r = 0; r < 4; ++r) {
    try {
      s[r] = Survivor::from_row(rows[r]);
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("row " + std::to_string(r + 1) + " " + e.what());
    }
  }
  return make(s, b);
}

SurfaceConfig SurfaceConfig::from_matrix(const IntMatrix4& rows) {
  return from_matrix(rows, {Rational(0), Rational(0), Rational(0), Rational(0)});
}

bool SurfaceConfig::corner_survives(int line) const {
  return std::any_of(survivors.begin(), survivors.end(),
                     [&](const Survivor& s) { return s.is_corner() && s.i == line; });
}

std::vector<std::size_t> SurfaceConfig::edge_survivors(int i, int j) const {
  if (i > j) std::swap(i, j);
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < 4; ++k) {
    if (!survivors[k].is_corner() && survivors[k].i == i && survivors[k].j == j) out.push_back(k);
  }
  std::sort(out.begin(), out.end(), [&](std::size_t a, std::size_t b) {
    return fraction_less(survivors[a].w, survivors[b].w);
  });
  return out;
}

IntMatrix4 SurfaceConfig::matrix() const {
  IntMatrix4 m{};
  for (std::size_t r = 0; r < 4; ++r) m[r] = survivors[r].weight_vector();
  return m;
}

std::array<Rational, 4> SurfaceConfig::log_discrepancies() const {
  std::array<Rational, 4> c;
  for (std::size_t k = 0; k < 4; ++k) c[k] = Rational(1) - coefficients[k];
  return c;
}

// ----------------------------------------------------------- weight matrix

namespace {

Rational raw_det(const IntMatrix4& rows) {
  RationalMatrix m(4, 4);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) m(r, c) = Rational(rows[r][c]);
  return determinant(std::move(m));
}

std::array<Rational, 4> raw_cofactors(const IntMatrix4& rows) {
  std::array<Rational, 4> out;
  for (std::size_t drop = 0; drop < 4; ++drop) {
    RationalMatrix m(3, 3);
    std::size_t rr = 0;
    for (std::size_t r = 0; r < 4; ++r) {
      if (r == drop) continue;
      for (std::size_t c = 0; c < 3; ++c) m(rr, c) = Rational(rows[r][c] - rows[r][3]);
      ++rr;
    }
    const Rational d = determinant(std::move(m));
    out[drop] = (drop % 2 == 0) ? -d : d;  // (-1)^i with 1-based i
  }
  return out;
}

}  // namespace

WeightMatrix weight_matrix(const SurfaceConfig& cfg) {
  WeightMatrix w;
  w.rows = cfg.matrix();
  w.det_raw = raw_det(w.rows);
  if (w.det_raw.is_zero()) throw InvalidConfiguration("det W = 0");
  w.sign = w.det_raw.sign();
  w.cofactors_raw = raw_cofactors(w.rows);
  return w;
}

Rational det_w_hat_raw(const SurfaceConfig& cfg) {
  const auto rows = cfg.matrix();
  const auto c = cfg.log_discrepancies();
  RationalMatrix m(4, 4);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t k = 0; k < 4; ++k) m(r, k) = Rational(rows[r][k]) - c[r];
  return determinant(std::move(m));
}

// ----------------------------------------------------------------- Y graph

YGraph build_Y_graph(const SurfaceConfig& cfg) {
  YGraph y;
  for (int k = 0; k < 4; ++k) {
    y.graph.add_vertex(Rational(-1), "L" + std::to_string(k + 1));
    IntRow e{0, 0, 0, 0};
    e[k] = 1;
    y.weights.push_back(e);
  }
  for (std::size_t k = 0; k < 4; ++k) {
    if (cfg.survivors[k].is_corner()) y.survivor_vertex[k] = static_cast<VertexId>(cfg.survivors[k].i);
  }
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      const auto idx = cfg.edge_survivors(i, j);
      if (idx.empty()) {
        y.graph.add_edge(i, j);
        continue;
      }
      std::vector<WeightPair> pairs;
      for (auto k : idx) pairs.push_back(cfg.survivors[k].w);
      const EdgeChain ec = build_edge_chain(pairs, Rational(0), Rational(0));
      std::vector<VertexId> global(ec.chain.size());
      global[ec.end_i] = static_cast<VertexId>(i);
      global[ec.end_j] = static_cast<VertexId>(j);
      for (VertexId v : ec.order) {
        if (v == ec.end_i || v == ec.end_j) continue;
        const auto [wi, wj] = ec.weights[v];
        const std::string label = "E" + std::to_string(i + 1) + std::to_string(j + 1) + ":" +
                                  std::to_string(wi) + "," + std::to_string(wj);
        global[v] = y.graph.add_vertex(ec.chain.mark(v), label);
        IntRow wv{0, 0, 0, 0};
        wv[i] = wi;
        wv[j] = wj;
        y.weights.push_back(wv);
        ++y.blowups;
      }
      y.graph.set_mark(i, y.graph.mark(i) + ec.chain.mark(ec.end_i));
      y.graph.set_mark(j, y.graph.mark(j) + ec.chain.mark(ec.end_j));
      for (std::size_t p = 1; p < ec.order.size(); ++p) {
        y.graph.add_edge(global[ec.order[p - 1]], global[ec.order[p]]);
      }
      for (std::size_t s = 0; s < idx.size(); ++s) y.survivor_vertex[idx[s]] = global[ec.survivors[s]];
    }
  }
  return y;
}

namespace {

struct Contracted {
  YGraph y;
  std::vector<VertexId> kept;                 // contracted vertices of Y, ascending
  MarkedGraph graph;                          // Y restricted to `kept`
  std::vector<std::vector<VertexId>> comps;   // local ids into `graph`
};

Contracted contract(const SurfaceConfig& cfg) {
  Contracted c{build_Y_graph(cfg), {}, {}, {}};
  std::vector<bool> is_surv(c.y.graph.size(), false);
  for (auto v : c.y.survivor_vertex) is_surv[v] = true;
  for (VertexId v = 0; v < c.y.graph.size(); ++v)
    if (!is_surv[v]) c.kept.push_back(v);
  c.graph = c.y.graph.induced(c.kept);
  c.comps = c.graph.components();
  return c;
}

}  // namespace

std::vector<MarkedGraph> singularity_graph(const SurfaceConfig& cfg) {
  const Contracted c = contract(cfg);
  std::vector<MarkedGraph> out;
  for (const auto& comp : c.comps) out.push_back(c.graph.induced(comp));
  return out;
}

Rational delta(const SurfaceConfig& cfg) {
  Rational d(1);
  for (const auto& g : singularity_graph(cfg)) {
    if (!is_positive_definite(g)) throw NotPositiveDefinite("contracted curves are not contractible");
    d *= graph_det(g);
  }
  return d;
}

Rational delta_fast(const SurfaceConfig& cfg) {
  MarkedGraph core;
  std::array<std::optional<VertexId>, 4> at;
  for (int k = 0; k < 4; ++k) {
    if (!cfg.corner_survives(k)) at[k] = core.add_vertex(Rational(-1), "L" + std::to_string(k + 1));
  }
  std::vector<Hair> hairs;
  Rational edge_factor(1);
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      const auto idx = cfg.edge_survivors(i, j);
      if (idx.empty()) {
        if (at[i] && at[j]) core.add_edge(*at[i], *at[j]);
        continue;
      }
      const WeightPair first = cfg.survivors[idx.front()].w;
      const WeightPair last = cfg.survivors[idx.back()].w;
      if (at[i]) hairs.push_back({*at[i], Rational(first.wi, first.wj)});
      else edge_factor *= Rational(first.wj);
      if (at[j]) hairs.push_back({*at[j], Rational(last.wj, last.wi)});
      else edge_factor *= Rational(last.wi);
      for (std::size_t s = 1; s < idx.size(); ++s) {
        edge_factor *= edge_pair_det(cfg.survivors[idx[s - 1]].w, cfg.survivors[idx[s]].w);
      }
    }
  }
  // Legs and edge chains are always definite, so the whole form is definite
  // iff the core with absorbed marks is.
  MarkedGraph bold = core;
  for (const auto& h : hairs) bold.set_mark(h.anchor, bold.mark(h.anchor) + h.value);
  if (!is_positive_definite(bold)) throw NotPositiveDefinite("contracted curves are not contractible");
  return hairy_det_core(core, hairs) * edge_factor;
}

Rational delta_twelve(const SurfaceConfig& cfg) {
  for (const auto& s : cfg.survivors) {
    if (s.is_corner()) throw std::invalid_argument("delta_twelve needs four edge survivors");
  }
  MarkedGraph g;
  for (int k = 0; k < 4; ++k) g.add_vertex(Rational(-1), "L" + std::to_string(k + 1));
  Rational factor(1);
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      const auto idx = cfg.edge_survivors(i, j);
      if (idx.empty()) {
        g.add_edge(i, j);
        continue;
      }
      VertexId prev = static_cast<VertexId>(i);
      for (auto k : idx) {
        const WeightPair w = cfg.survivors[k].w;
        const VertexId a = g.add_vertex(-Rational(w.wj, w.wi));
        const VertexId b = g.add_vertex(-Rational(w.wi, w.wj));
        g.add_edge(prev, a);
        prev = b;
        factor *= Rational(w.wi) * Rational(w.wj);
      }
      g.add_edge(prev, static_cast<VertexId>(j));
    }
  }
  return graph_det(g) * factor;
}

// --------------------------------------------------------------- invariants

const char* to_string(AmpleSign s) {
  switch (s) {
    case AmpleSign::ample: return "ample";
    case AmpleSign::numerically_zero: return "numerically-zero";
    case AmpleSign::antiample: return "antiample";
  }
  return "?";
}

const char* to_string(Context c) {
  switch (c) {
    case Context::general: return "general";
    case Context::S0: return "S0";
    case Context::S1: return "S1";
  }
  return "?";
}

Context parse_context(const std::string& text) {
  if (text == "general") return Context::general;
  if (text == "S0") return Context::S0;
  if (text == "S1") return Context::S1;
  throw std::invalid_argument("unknown context " + text);
}

namespace {

void context_checks(const SurfaceConfig& cfg, const YGraph& y, Context ctx,
                    std::vector<Diagnostic>& out) {
  if (ctx == Context::general) return;
  for (std::size_t k = 0; k < 4; ++k) {
    const auto& s = cfg.survivors[k];
    const auto& b = cfg.coefficients[k];
    const bool allowed = b.is_zero() || (ctx == Context::S1 && b == Rational(1));
    if (!allowed) {
      out.push_back({"coefficient-set", "b" + std::to_string(k + 1) + " = " + b.str() +
                                            " is not in the coefficient set of " + to_string(ctx)});
    }
    if (ctx == Context::S0 && s.is_corner()) {
      out.push_back({"corner-survivor", "survivor " + s.str() + " is a line"});
    }
    if (ctx == Context::S0 && !s.is_corner() && y.graph.mark(y.survivor_vertex[k]) != Rational(1)) {
      out.push_back({"non-leaf-survivor", "survivor " + s.str() + " is not a (-1)-curve on Y"});
    }
    if (ctx == Context::S1 && !s.is_corner() && b == Rational(1)) {
      out.push_back({"corner-rule", "survivor " + s.str() + " has coefficient 1 but is not a line"});
    }
  }
  if (ctx == Context::S0) {
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (cfg.edge_survivors(i, j).size() > 2) {
          out.push_back({"three-per-edge", "more than two survivors on edge " + std::to_string(i + 1) +
                                               std::to_string(j + 1)});
        }
  }
}

}  // namespace

InvariantReport evaluate(const SurfaceConfig& cfg, Context ctx) {
  InvariantReport rep;
  rep.matrix = cfg.matrix();
  rep.coefficients = cfg.coefficients;

  const Rational det_raw = raw_det(rep.matrix);
  if (det_raw.is_zero()) {
    rep.diagnostics.push_back({"det-w-zero", "det W = 0"});
  } else {
    const Rational s(det_raw.sign());
    rep.det_w = det_raw * s;
    auto cof = raw_cofactors(rep.matrix);
    bool coherent = true;
    for (auto& x : cof) {
      x *= s;
      coherent = coherent && x.sign() > 0;
    }
    rep.cofactors = cof;
    rep.survivor_degrees = cof;
    rep.det_w_hat = det_w_hat_raw(cfg) * s;
    rep.ample_sign = rep.det_w_hat->sign() > 0   ? AmpleSign::ample
                     : rep.det_w_hat->is_zero() ? AmpleSign::numerically_zero
                                                : AmpleSign::antiample;
    if (!coherent) {
      rep.diagnostics.push_back({"cofactor-sign", "the cofactors do not all have the sign of det W"});
    }
  }

  const Contracted c = contract(cfg);
  bool definite = true;
  Rational d(1);
  for (const auto& comp : c.comps) {
    const MarkedGraph g = c.graph.induced(comp);
    SingularityComponent sc;
    for (VertexId v = 0; v < g.size(); ++v) {
      sc.labels.push_back(g.label(v));
      sc.marks.push_back(g.mark(v));
    }
    sc.det = graph_det(g);
    sc.positive_definite = is_positive_definite(g);
    definite = definite && sc.positive_definite;
    d *= sc.det;
    rep.delta_components.push_back(std::move(sc));
  }
  if (!definite) {
    rep.diagnostics.push_back({"not-contractible", "the contracted curves do not form a definite configuration"});
  } else {
    rep.delta = d;
    rep.h_square = d.reciprocal();
    if (rep.det_w_hat) rep.volume = *rep.det_w_hat * *rep.det_w_hat / d;

    // codiscrepancies: M beta = mark - 2 + sum of adjacent survivor coefficients
    std::vector<Rational> boundary(c.y.graph.size(), Rational(0));
    for (std::size_t k = 0; k < 4; ++k) boundary[c.y.survivor_vertex[k]] = cfg.coefficients[k];
    LcClass cls = LcClass::klt;
    for (const auto& b : cfg.coefficients) {
      if (b == Rational(1)) cls = LcClass::lc_not_klt;
    }
    for (const auto& comp : c.comps) {
      const MarkedGraph g = c.graph.induced(comp);
      std::vector<Rational> rhs;
      for (VertexId local : comp) {
        const VertexId v = c.kept[local];
        Rational r = c.y.graph.mark(v) - Rational(2);
        for (VertexId u : c.y.graph.neighbors(v)) r += boundary[u];
        rhs.push_back(r);
      }
      const auto beta = solve_codiscrepancies(g, rhs);
      for (std::size_t t = 0; t < beta.size(); ++t) {
        rep.codiscrepancies.emplace_back(g.label(t), beta[t]);
        if (beta[t] > Rational(1)) cls = LcClass::not_lc;
        else if (beta[t] == Rational(1)) cls = worst(cls, LcClass::lc_not_klt);
      }
    }
    rep.lc_class = cls;
  }
  context_checks(cfg, c.y, ctx, rep.diagnostics);
  return rep;
}

InvariantReport invariants(const SurfaceConfig& cfg) {
  InvariantReport rep = evaluate(cfg, Context::general);
  for (const auto& d : rep.diagnostics) {
    if (d.code == "not-contractible") throw NotPositiveDefinite(d.message);
  }
  if (!rep.diagnostics.empty()) throw InvalidConfiguration(rep.diagnostics.front().message);
  return rep;
}

std::vector<Diagnostic> validate(const SurfaceConfig& cfg, Context ctx) {
  return evaluate(cfg, ctx).diagnostics;
}

// ------------------------------------------------------------------ oracles

namespace {

// beta for the contracted curves of D = K_Y + B~ + sum beta F, placed into a
// full coefficient vector over the vertices of Y.
std::vector<Rational> pullback_coefficients(const Contracted& c, const std::vector<Rational>& fixed,
                                            const std::vector<Rational>& rhs_base) {
  std::vector<Rational> coef = fixed;
  if (c.kept.empty()) return coef;
  std::vector<Rational> rhs;
  for (VertexId v : c.kept) {
    Rational r = rhs_base[v];
    for (VertexId u : c.y.graph.neighbors(v)) r += fixed[u];
    rhs.push_back(r);
  }
  const auto beta = solve_codiscrepancies(c.graph, rhs);
  for (std::size_t t = 0; t < c.kept.size(); ++t) coef[c.kept[t]] = beta[t];
  return coef;
}

}  // namespace

OracleResult volume_oracle(const SurfaceConfig& cfg) {
  const Contracted c = contract(cfg);
  const MarkedGraph& y = c.y.graph;
  const RationalMatrix m = y.form();
  const std::size_t n = y.size();

  std::vector<Rational> fixed(n, Rational(0));
  for (std::size_t k = 0; k < 4; ++k) fixed[c.y.survivor_vertex[k]] = cfg.coefficients[k];
  std::vector<Rational> canonical(n);  // K_Y . E = mark - 2
  for (VertexId v = 0; v < n; ++v) canonical[v] = y.mark(v) - Rational(2);
  const auto coef = pullback_coefficients(c, fixed, canonical);

  // D . E_v = K.E_v - (M coef)_v
  std::vector<Rational> d_dot(n);
  for (VertexId v = 0; v < n; ++v) {
    Rational acc = canonical[v];
    for (VertexId u = 0; u < n; ++u) acc -= m(v, u) * coef[u];
    d_dot[v] = acc;
  }
  // D^2 = K^2 + 2 K.C + C^2 with C = sum coef E
  Rational k_dot_c(0), c_sq(0);
  for (VertexId v = 0; v < n; ++v) {
    k_dot_c += canonical[v] * coef[v];
    for (VertexId u = 0; u < n; ++u) c_sq -= coef[v] * m(v, u) * coef[u];
  }
  OracleResult out;
  out.volume = Rational(9 - static_cast<std::int64_t>(c.y.blowups)) + Rational(2) * k_dot_c + c_sq;
  for (std::size_t k = 0; k < 4; ++k) out.degrees[k] = d_dot[c.y.survivor_vertex[k]];
  return out;
}

Rational pullback_square_oracle(const SurfaceConfig& cfg, int line) {
  if (line < 0 || line > 3) throw std::invalid_argument("line index out of range");
  const Contracted c = contract(cfg);
  // f^*L . E is 1 on the strict transforms of the four lines, 0 on exceptional curves
  std::vector<Rational> r;
  for (VertexId v : c.kept) r.push_back(v < 4 ? Rational(1) : Rational(0));
  if (c.kept.empty()) return Rational(1);
  const auto gamma = solve_codiscrepancies(c.graph, r);
  // G = f^*L + sum gamma F with G.F = 0, so G^2 = (f^*L)^2 + gamma . r
  Rational sq(1);
  for (std::size_t t = 0; t < r.size(); ++t) sq += gamma[t] * r[t];
  return sq;
}

}  // namespace fourlines
